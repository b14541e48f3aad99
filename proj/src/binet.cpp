#include "gtrib/binet.hpp"

#include <cmath>
#include <stdexcept>

namespace gtrib {

namespace {

using cplx = std::complex<double>;

// Integer power by squaring: real inputs stay exactly real and the sign of
// negative bases is exact, unlike the exp/log route of std::pow.
cplx pow_n(cplx z, std::uint64_t n) {
    cplx out{1, 0};
    while (n) {
        if (n & 1u) out *= z;
        z *= z;
        n >>= 1;
    }
    return out;
}

struct binet_frame {
    cplx a, w1, w2;
    cplx d1, d2, d3;  // (a-w1)(a-w2), (a-w1)(w1-w2), (a-w2)(w1-w2)
};

binet_frame frame_of(const cubic_roots& roots) {
    binet_frame f;
    f.a = {roots.alpha, 0};
    f.w1 = roots.omega1;
    f.w2 = roots.omega2;
    f.d1 = (f.a - f.w1) * (f.a - f.w2);
    f.d2 = (f.a - f.w1) * (f.w1 - f.w2);
    f.d3 = (f.a - f.w2) * (f.w1 - f.w2);
    return f;
}

}  // namespace

binet_constants binet_constants_real(double v0, double v1, double v2,
                                     const cubic_roots& roots) {
    const cplx a{roots.alpha, 0};
    const cplx w1 = roots.omega1, w2 = roots.omega2;
    binet_constants c;
    c.p_c = v2 - (w1 + w2) * v1 + w1 * w2 * v0;
    c.q_c = v2 - (a + w2) * v1 + a * w2 * v0;
    c.r_c = v2 - (a + w1) * v1 + a * w1 * v0;
    return c;
}

binet_constants binet_constants_for(const sequence_params& p,
                                    const cubic_roots& roots) {
    return binet_constants_real(p.v0.get_d(), p.v1.get_d(), p.v2.get_d(),
                                roots);
}

binet_value binet_eval(const cubic_roots& roots, const binet_constants& c,
                       std::uint64_t n) {
    const binet_frame f = frame_of(roots);
    const cplx val = c.p_c * pow_n(f.a, n) / f.d1 -
                     c.q_c * pow_n(f.w1, n) / f.d2 +
                     c.r_c * pow_n(f.w2, n) / f.d3;
    return {val.real(), std::abs(val.imag())};
}

binet_value u_binet(const cubic_roots& roots, std::uint64_t n) {
    return binet_eval(roots, binet_constants{}, n);
}

binet_value v_binet(const sequence_params& p, std::uint64_t n) {
    const cubic_roots roots = roots_of(p);
    return binet_eval(roots, binet_constants_for(p, roots), n);
}

exact_int v_from_u(const sequence_params& p, std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("v_from_u: requires n >= 2");
    const auto u = terms_range(fundamental(p.r, p.s, p.t), n - 2, n);
    return p.v2 * u[2] + (p.s * p.v1 + p.t * p.v0) * u[1] + p.t * p.v1 * u[0];
}

quad_residuals quad_approx_residuals(const cubic_roots& roots,
                                     const binet_constants& c,
                                     double v_n, double v_n1, double v_n2,
                                     std::uint64_t n) {
    const cplx a{roots.alpha, 0};
    const cplx w1 = roots.omega1, w2 = roots.omega2;
    const double s = roots.s, t = roots.t;
    const auto side = [&](cplx root, cplx coef) {
        const cplx lhs = coef * pow_n(root, n + 2);
        const cplx rhs =
            root * root * v_n2 + root * (s * v_n1 + t * v_n) + t * v_n1;
        return std::abs(lhs - rhs);
    };
    quad_residuals out;
    out.alpha_res = side(a, c.p_c);
    out.omega1_res = side(w1, c.q_c);
    out.omega2_res = side(w2, c.r_c);
    out.scale = std::abs(c.p_c) *
                std::pow(std::abs(roots.alpha), static_cast<double>(n) + 2);
    return out;
}

quad_residuals quad_approx_residuals(const sequence_params& p,
                                     std::uint64_t n) {
    const cubic_roots roots = roots_of(p);
    const binet_constants c = binet_constants_for(p, roots);
    const auto v = terms_range(p, n, n + 2);
    return quad_approx_residuals(roots, c, v[0].get_d(), v[1].get_d(),
                                 v[2].get_d(), n);
}

double linear_form_check(const sequence_params& p, std::uint64_t n) {
    const cubic_roots roots = roots_of(p);
    const binet_constants c = binet_constants_for(p, roots);
    const auto v = terms_range(p, n, n + 2);
    const cplx a{roots.alpha, 0};
    const cplx lhs = a * v[2].get_d() +
                     (roots.s + roots.omega1 * roots.omega2) * v[1].get_d() +
                     roots.t * v[0].get_d();
    const cplx rhs = c.p_c * pow_n(a, n + 1);
    return std::abs(lhs - rhs);
}

}  // namespace gtrib
