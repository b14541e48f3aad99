#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gtrib/params.hpp"

namespace gtrib {

enum class identity_id {
    cassini_u,
    cassini_v,
    matrix_form_12,
    matrix_form_14,
    quad_approx,
    binet_v,
    binet_quaternion,
    lemma_9,
};

inline constexpr std::array<identity_id, 8> all_identities = {
    identity_id::cassini_u,      identity_id::cassini_v,
    identity_id::matrix_form_12, identity_id::matrix_form_14,
    identity_id::quad_approx,    identity_id::binet_v,
    identity_id::binet_quaternion, identity_id::lemma_9,
};

std::string_view to_string(identity_id id);
std::optional<identity_id> identity_from_string(std::string_view name);

struct index_range {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
};

struct check_failure {
    std::uint64_t n = 0;
    std::string detail;
};

/// Outcome of one identity over one parameter set and index range.
/// status is pass iff failures is empty; worst_residual is 0 for the
/// exact checks and the largest normalized residual for the floating ones.
struct check_report {
    identity_id id = identity_id::cassini_u;
    sequence_params params;
    index_range range;
    bool pass = true;
    double worst_residual = 0;
    std::vector<check_failure> failures;
    std::vector<std::string> notes;
};

struct tolerance {
    double rel = 1e-8;
    double abs = 1e-12;
};

// --- single-identity checks -------------------------------------------------

/// U-Cassini: U_n^3 + U_{n-1}^2 U_{n+2} + U_{n-2} U_{n+1}^2
///            - 2 U_{n-1} U_n U_{n+1} - U_{n-2} U_n U_{n+2} = t^{n-2},
/// exact at every n. Throws std::invalid_argument if rng.lo < 2.
check_report check_cassini_u(const exact_int& r, const exact_int& s,
                             const exact_int& t, index_range rng);

/// V-Cassini: V_{n+2}^3 + V_{n+1}^2 V_{n+4} + V_n V_{n+3}^2
///            - V_{n+2} (2 V_{n+1} V_{n+3} + V_n V_{n+4}) = t^n g(0), exact.
check_report check_cassini_v(const sequence_params& p, index_range rng);

/// Companion-power forms: mat_pow == u_form entrywise (first report,
/// needs n >= 2) and M^n * shift(0) == shift(n) (second report; the sum
/// form is asserted for t != 0, the (s,t) form for every t).
std::array<check_report, 2> check_matrix_forms(const sequence_params& p,
                                               index_range rng);

/// All three quadratic-approximation residuals, normalized by the dominant
/// magnitude |P| |alpha|^{n+2}. Throws delta_not_positive when Delta <= 0.
check_report check_quad_approx(const sequence_params& p, index_range rng,
                               tolerance tol);

/// Closed forms of V_n and U_n against exact iteration, relative form.
check_report check_binet(const sequence_params& p, index_range rng,
                         tolerance tol);

/// Componentwise closed form of the sequence quaternions vs exact.
check_report check_quaternion_binet(const sequence_params& p, index_range rng,
                                    tolerance tol);

/// V_n = V2 U_n + (s V1 + t V0) U_{n-1} + t V1 U_{n-2}, exact equality.
/// Throws std::invalid_argument if rng.lo < 2.
check_report check_lemma9(const sequence_params& p, index_range rng);

// --- suite ------------------------------------------------------------------

/// Seeded random parameter pool. Bounds are nonnegative magnitudes:
/// coefficients are drawn from [-coeff_bound, coeff_bound], initial terms
/// from [-init_bound, init_bound].
struct pool_config {
    std::uint64_t seed = 42;
    std::size_t count = 25;
    long coeff_bound = 5;
    long init_bound = 9;
};

/// Unrestricted pool for the exact identities (theorems over all integers);
/// guaranteed to contain a t = 0 and a t < 0 member.
std::vector<sequence_params> sample_exact_pool(const pool_config& cfg);

/// Pool for the floating checks: Delta > 0, the real root strictly dominant
/// (|alpha| >= 1.05 |omega|) and a non-negligible leading projection, so the
/// 1e-8 double-precision budget is meaningful.
std::vector<sequence_params> sample_analytic_pool(const pool_config& cfg);

struct suite_config {
    std::vector<identity_id> identities;          // empty -> empty report list
    std::vector<sequence_params> explicit_params; // checked as-is (may throw)
    bool include_presets = true;
    bool use_pool = true;
    pool_config pool;
    index_range range{0, 40};
    tolerance tol;
};

suite_config default_suite_config();

/// Runs every requested identity over the presets, the explicit parameter
/// sets and the seeded pool. Deterministic given the seed; per-identity
/// index floors (n >= 2 for cassini_u / matrix_form_12 / lemma_9) are
/// applied to the suite range. Throws std::invalid_argument on invalid
/// configuration and propagates delta_not_positive from floating checks on
/// explicit Delta <= 0 parameters.
std::vector<check_report> run_suite(const suite_config& cfg);

}  // namespace gtrib
