#include "gtrib/checks.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gtrib/binet.hpp"
#include "gtrib/mat3.hpp"
#include "gtrib/quaternion.hpp"
#include "gtrib/seq.hpp"

namespace gtrib {

std::string_view to_string(identity_id id) {
    switch (id) {
        case identity_id::cassini_u: return "cassini_u";
        case identity_id::cassini_v: return "cassini_v";
        case identity_id::matrix_form_12: return "matrix_form_12";
        case identity_id::matrix_form_14: return "matrix_form_14";
        case identity_id::quad_approx: return "quad_approx";
        case identity_id::binet_v: return "binet_v";
        case identity_id::binet_quaternion: return "binet_quaternion";
        case identity_id::lemma_9: return "lemma_9";
    }
    return "unknown";
}

std::optional<identity_id> identity_from_string(std::string_view name) {
    for (identity_id id : all_identities)
        if (to_string(id) == name) return id;
    return std::nullopt;
}

namespace {

std::string eq_detail(const std::string& what, const exact_int& lhs,
                      const exact_int& rhs) {
    return what + ": lhs=" + lhs.get_str() + " rhs=" + rhs.get_str();
}

/// Bookkeeping for the floating checks: raw residual against the
/// tol.abs + tol.rel * max(1, scale) budget; worst_residual keeps the
/// largest normalized value.
struct residual_acc {
    tolerance tol;
    check_report* rep;

    void add(std::uint64_t n, double raw, double scale,
             const std::string& what) {
        const double denom = std::max(1.0, scale);
        const double normalized = raw / denom;
        if (normalized > rep->worst_residual) rep->worst_residual = normalized;
        if (!(raw <= tol.abs + tol.rel * denom)) {
            std::ostringstream os;
            os << what << ": residual " << raw << " (normalized "
               << normalized << ") exceeds tolerance";
            rep->failures.push_back({n, os.str()});
        }
    }
};

check_report make_report(identity_id id, sequence_params p, index_range rng) {
    check_report rep;
    rep.id = id;
    rep.params = std::move(p);
    rep.range = rng;
    return rep;
}

void finish(check_report& rep) { rep.pass = rep.failures.empty(); }

check_report check_matrix_form_12(const sequence_params& p, index_range rng) {
    const std::uint64_t lo = std::max<std::uint64_t>(rng.lo, 2);
    check_report rep = make_report(identity_id::matrix_form_12,
                                   fundamental(p.r, p.s, p.t), {lo, rng.hi});
    if (rng.hi < 2) {
        rep.notes.push_back("skipped: needs n >= 2");
        return rep;
    }
    const mat3 m = companion(p);
    for (std::uint64_t n = lo; n <= rng.hi; ++n) {
        const mat3 lhs = mat_pow(m, n);
        const mat3 rhs = u_form(p.r, p.s, p.t, n);
        if (!(lhs == rhs))
            rep.failures.push_back({n, "mat_pow and u_form matrices differ"});
    }
    finish(rep);
    return rep;
}

check_report check_matrix_form_14(const sequence_params& p, index_range rng) {
    check_report rep = make_report(identity_id::matrix_form_14, p, rng);
    const mat3 m = companion(p);
    const bool t_zero = (p.t == 0);
    if (t_zero)
        rep.notes.push_back("sum-form skipped (t = 0): factor matrix "
                            "[[1,0,0],[0,t,0],[0,s-t,t]] is singular");
    const mat3 sum0 = v_shift_matrix(p, 0);
    const mat3 st0 = st_form_matrix(p, 0);
    for (std::uint64_t n = rng.lo; n <= rng.hi; ++n) {
        const mat3 mn = mat_pow(m, n);
        if (!(mat_mul(mn, st0) == st_form_matrix(p, n)))
            rep.failures.push_back(
                {n, "M^n * st_form(0) differs from st_form(n)"});
        if (!t_zero && !(mat_mul(mn, sum0) == v_shift_matrix(p, n)))
            rep.failures.push_back(
                {n, "M^n * v_shift(0) differs from v_shift(n)"});
    }
    finish(rep);
    return rep;
}

}  // namespace

check_report check_cassini_u(const exact_int& r, const exact_int& s,
                             const exact_int& t, index_range rng) {
    if (rng.lo < 2)
        throw std::invalid_argument("check_cassini_u: range must start at n >= 2");
    if (rng.lo > rng.hi)
        throw std::invalid_argument("check_cassini_u: empty range");
    check_report rep =
        make_report(identity_id::cassini_u, fundamental(r, s, t), rng);
    const auto u = terms_range(rep.params, rng.lo - 2, rng.hi + 2);
    for (std::uint64_t n = rng.lo; n <= rng.hi; ++n) {
        const std::size_t i = static_cast<std::size_t>(n - rng.lo);
        // u[i] = U_{n-2} ... u[i+4] = U_{n+2}
        const exact_int lhs = u[i + 2] * u[i + 2] * u[i + 2] +
                              u[i + 1] * u[i + 1] * u[i + 4] +
                              u[i] * u[i + 3] * u[i + 3] -
                              2 * u[i + 1] * u[i + 2] * u[i + 3] -
                              u[i] * u[i + 2] * u[i + 4];
        const exact_int rhs = pow_int(t, static_cast<unsigned long>(n - 2));
        if (lhs != rhs)
            rep.failures.push_back({n, eq_detail("U-Cassini", lhs, rhs)});
    }
    finish(rep);
    return rep;
}

check_report check_cassini_v(const sequence_params& p, index_range rng) {
    if (rng.lo > rng.hi)
        throw std::invalid_argument("check_cassini_v: empty range");
    check_report rep = make_report(identity_id::cassini_v, p, rng);
    const exact_int g0 = cassini_seed(p);
    const auto v = terms_range(p, rng.lo, rng.hi + 4);
    for (std::uint64_t n = rng.lo; n <= rng.hi; ++n) {
        const std::size_t i = static_cast<std::size_t>(n - rng.lo);
        const exact_int lhs =
            v[i + 2] * v[i + 2] * v[i + 2] + v[i + 1] * v[i + 1] * v[i + 4] +
            v[i] * v[i + 3] * v[i + 3] -
            v[i + 2] * (2 * v[i + 1] * v[i + 3] + v[i] * v[i + 4]);
        const exact_int rhs =
            pow_int(p.t, static_cast<unsigned long>(n)) * g0;
        if (lhs != rhs)
            rep.failures.push_back({n, eq_detail("V-Cassini", lhs, rhs)});
    }
    finish(rep);
    return rep;
}

std::array<check_report, 2> check_matrix_forms(const sequence_params& p,
                                               index_range rng) {
    return {check_matrix_form_12(p, rng), check_matrix_form_14(p, rng)};
}

check_report check_quad_approx(const sequence_params& p, index_range rng,
                               tolerance tol) {
    check_report rep = make_report(identity_id::quad_approx, p, rng);
    const cubic_roots roots = roots_of(p);
    const binet_constants c = binet_constants_for(p, roots);
    const auto v = terms_range(p, rng.lo, rng.hi + 2);
    residual_acc acc{tol, &rep};
    for (std::uint64_t n = rng.lo; n <= rng.hi; ++n) {
        const std::size_t i = static_cast<std::size_t>(n - rng.lo);
        const quad_residuals qr = quad_approx_residuals(
            roots, c, v[i].get_d(), v[i + 1].get_d(), v[i + 2].get_d(), n);
        acc.add(n, qr.alpha_res, qr.scale, "quad-approx alpha");
        acc.add(n, qr.omega1_res, qr.scale, "quad-approx omega1");
        acc.add(n, qr.omega2_res, qr.scale, "quad-approx omega2");
    }
    finish(rep);
    return rep;
}

check_report check_binet(const sequence_params& p, index_range rng,
                         tolerance tol) {
    check_report rep = make_report(identity_id::binet_v, p, rng);
    const cubic_roots roots = roots_of(p);
    const binet_constants c = binet_constants_for(p, roots);
    const auto v = terms_range(p, rng.lo, rng.hi);
    const auto u = terms_range(fundamental(p.r, p.s, p.t), rng.lo, rng.hi);
    residual_acc acc{tol, &rep};
    for (std::uint64_t n = rng.lo; n <= rng.hi; ++n) {
        const std::size_t i = static_cast<std::size_t>(n - rng.lo);
        const double v_exact = v[i].get_d();
        const double u_exact = u[i].get_d();
        acc.add(n, std::abs(binet_eval(roots, c, n).value - v_exact),
                std::abs(v_exact), "v_binet");
        acc.add(n, std::abs(u_binet(roots, n).value - u_exact),
                std::abs(u_exact), "u_binet");
    }
    finish(rep);
    return rep;
}

check_report check_quaternion_binet(const sequence_params& p, index_range rng,
                                    tolerance tol) {
    check_report rep = make_report(identity_id::binet_quaternion, p, rng);
    const cubic_roots roots = roots_of(p);
    const binet_constants c = binet_constants_for(p, roots);
    const auto v = terms_range(p, rng.lo, rng.hi + 3);
    residual_acc acc{tol, &rep};
    static constexpr const char* comp_names[4] = {"w", "x", "y", "z"};
    for (std::uint64_t n = rng.lo; n <= rng.hi; ++n) {
        const std::size_t i = static_cast<std::size_t>(n - rng.lo);
        const complex_quaternion qb = quaternion_binet_eval(roots, c, n);
        const std::complex<double> comps[4] = {qb.w, qb.x, qb.y, qb.z};
        for (int k = 0; k < 4; ++k) {
            const double exact = v[i + static_cast<std::size_t>(k)].get_d();
            acc.add(n, std::abs(comps[k].real() - exact), std::abs(exact),
                    std::string("quaternion component ") + comp_names[k]);
        }
    }
    finish(rep);
    return rep;
}

check_report check_lemma9(const sequence_params& p, index_range rng) {
    if (rng.lo < 2)
        throw std::invalid_argument("check_lemma9: range must start at n >= 2");
    if (rng.lo > rng.hi)
        throw std::invalid_argument("check_lemma9: empty range");
    check_report rep = make_report(identity_id::lemma_9, p, rng);
    const auto u = terms_range(fundamental(p.r, p.s, p.t), rng.lo - 2, rng.hi);
    const auto v = terms_range(p, rng.lo, rng.hi);
    const exact_int mid = p.s * p.v1 + p.t * p.v0;
    for (std::uint64_t n = rng.lo; n <= rng.hi; ++n) {
        const std::size_t i = static_cast<std::size_t>(n - rng.lo);
        const exact_int lhs =
            p.v2 * u[i + 2] + mid * u[i + 1] + p.t * p.v1 * u[i];
        if (lhs != v[i])
            rep.failures.push_back({n, eq_detail("lemma-9", lhs, v[i])});
    }
    finish(rep);
    return rep;
}

// --- pools and suite ---------------------------------------------------------

namespace {

long draw_in(std::mt19937_64& rng, long bound) {
    if (bound == 0) return 0;
    const unsigned long span = 2ul * static_cast<unsigned long>(bound) + 1ul;
    return static_cast<long>(rng() % span) - bound;
}

sequence_params draw_params(std::mt19937_64& rng, const pool_config& cfg) {
    return make_params(draw_in(rng, cfg.init_bound),
                       draw_in(rng, cfg.init_bound),
                       draw_in(rng, cfg.init_bound),
                       draw_in(rng, cfg.coeff_bound),
                       draw_in(rng, cfg.coeff_bound),
                       draw_in(rng, cfg.coeff_bound));
}

void validate(const pool_config& cfg) {
    if (cfg.coeff_bound < 0 || cfg.init_bound < 0)
        throw std::invalid_argument("pool bounds must be nonnegative");
}

/// Acceptance test for the floating pool: the Binet sum is numerically
/// meaningful only when the real root strictly dominates the conjugate
/// pair and the leading projection P is not degenerate.
bool well_conditioned(const sequence_params& p) {
    if (sgn(discriminant(p.r, p.s, p.t)) <= 0) return false;
    const cubic_roots roots =
        solve_cubic(p.r.get_d(), p.s.get_d(), p.t.get_d());
    if (!(std::abs(roots.alpha) >= 1.05 * std::abs(roots.omega1)))
        return false;
    if (p.v0 == 0 && p.v1 == 0 && p.v2 == 0) return true;
    const binet_constants c = binet_constants_for(p, roots);
    const double v_scale =
        std::max({1.0, std::abs(p.v0.get_d()), std::abs(p.v1.get_d()),
                  std::abs(p.v2.get_d())});
    return std::abs(c.p_c) >= 1e-4 * v_scale;
}

}  // namespace

std::vector<sequence_params> sample_exact_pool(const pool_config& cfg) {
    validate(cfg);
    std::mt19937_64 rng(cfg.seed);
    std::vector<sequence_params> pool;
    pool.reserve(cfg.count);
    for (std::size_t i = 0; i < cfg.count; ++i)
        pool.push_back(draw_params(rng, cfg));
    // The exact identities must be exercised at t = 0 and t < 0.
    bool has_zero_t = false, has_neg_t = false;
    for (const auto& p : pool) {
        has_zero_t = has_zero_t || p.t == 0;
        has_neg_t = has_neg_t || p.t < 0;
    }
    if (!has_zero_t && pool.size() >= 1) pool[0].t = 0;
    if (!has_neg_t && pool.size() >= 2 && cfg.coeff_bound > 0) pool[1].t = -1;
    return pool;
}

std::vector<sequence_params> sample_analytic_pool(const pool_config& cfg) {
    validate(cfg);
    std::mt19937_64 rng(cfg.seed);
    std::vector<sequence_params> pool;
    pool.reserve(cfg.count);
    const std::size_t max_attempts = 100000 * (cfg.count + 1);
    std::size_t attempts = 0;
    while (pool.size() < cfg.count) {
        if (++attempts > max_attempts)
            throw std::invalid_argument(
                "sample_analytic_pool: bounds admit no well-conditioned "
                "Delta > 0 parameters");
        sequence_params p = draw_params(rng, cfg);
        if (well_conditioned(p)) pool.push_back(std::move(p));
    }
    return pool;
}

suite_config default_suite_config() {
    suite_config cfg;
    cfg.identities.assign(all_identities.begin(), all_identities.end());
    return cfg;
}

std::vector<check_report> run_suite(const suite_config& cfg) {
    if (cfg.range.lo > cfg.range.hi)
        throw std::invalid_argument("run_suite: range.lo > range.hi");
    if (!(cfg.tol.rel > 0) || !(cfg.tol.abs > 0))
        throw std::invalid_argument("run_suite: tolerances must be positive");
    std::vector<check_report> reports;
    if (cfg.identities.empty()) return reports;

    const std::vector<sequence_params> presets = {tribonacci(), padovan(),
                                                  narayana(2), narayana(3)};
    auto build_list = [&](const std::vector<sequence_params>& pool) {
        std::vector<sequence_params> out;
        if (cfg.include_presets)
            out.insert(out.end(), presets.begin(), presets.end());
        out.insert(out.end(), cfg.explicit_params.begin(),
                   cfg.explicit_params.end());
        out.insert(out.end(), pool.begin(), pool.end());
        return out;
    };
    const auto exact_params =
        build_list(cfg.use_pool ? sample_exact_pool(cfg.pool)
                                : std::vector<sequence_params>{});
    const auto analytic_params =
        build_list(cfg.use_pool ? sample_analytic_pool(cfg.pool)
                                : std::vector<sequence_params>{});

    const auto wanted = [&](identity_id id) {
        for (identity_id sel : cfg.identities)
            if (sel == id) return true;
        return false;
    };
    // Canonical (identity, params) order keeps reports deterministic.
    for (identity_id id : all_identities) {
        if (!wanted(id)) continue;
        const bool needs_floor2 = id == identity_id::cassini_u ||
                                  id == identity_id::matrix_form_12 ||
                                  id == identity_id::lemma_9;
        index_range rng = cfg.range;
        if (needs_floor2) {
            rng.lo = std::max<std::uint64_t>(rng.lo, 2);
            if (rng.hi < rng.lo) continue;
        }
        const bool floating = id == identity_id::quad_approx ||
                              id == identity_id::binet_v ||
                              id == identity_id::binet_quaternion;
        const auto& params = floating ? analytic_params : exact_params;
        for (const auto& p : params) {
            switch (id) {
                case identity_id::cassini_u:
                    reports.push_back(check_cassini_u(p.r, p.s, p.t, rng));
                    break;
                case identity_id::cassini_v:
                    reports.push_back(check_cassini_v(p, rng));
                    break;
                case identity_id::matrix_form_12:
                    reports.push_back(check_matrix_form_12(p, rng));
                    break;
                case identity_id::matrix_form_14:
                    reports.push_back(check_matrix_form_14(p, rng));
                    break;
                case identity_id::quad_approx:
                    reports.push_back(check_quad_approx(p, rng, cfg.tol));
                    break;
                case identity_id::binet_v:
                    reports.push_back(check_binet(p, rng, cfg.tol));
                    break;
                case identity_id::binet_quaternion:
                    reports.push_back(
                        check_quaternion_binet(p, rng, cfg.tol));
                    break;
                case identity_id::lemma_9:
                    reports.push_back(check_lemma9(p, rng));
                    break;
            }
        }
    }
    return reports;
}

}  // namespace gtrib
