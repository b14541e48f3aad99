#include "gtrib/quaternion.hpp"

namespace gtrib {

namespace {

using cplx = std::complex<double>;

cplx pow_n(cplx z, std::uint64_t n) {
    cplx out{1, 0};
    while (n) {
        if (n & 1u) out *= z;
        z *= z;
        n >>= 1;
    }
    return out;
}

}  // namespace

exact_quaternion seq_quaternion(const sequence_params& p, std::uint64_t n) {
    auto v = terms_range(p, n, n + 3);
    return {std::move(v[0]), std::move(v[1]), std::move(v[2]),
            std::move(v[3])};
}

complex_quaternion root_quaternion(std::complex<double> z) {
    return {{1, 0}, z, z * z, z * z * z};
}

complex_quaternion quaternion_binet_eval(const cubic_roots& roots,
                                         const binet_constants& c,
                                         std::uint64_t n) {
    const cplx a{roots.alpha, 0};
    const cplx w1 = roots.omega1, w2 = roots.omega2;
    const cplx d1 = (a - w1) * (a - w2);
    const cplx d2 = (a - w1) * (w1 - w2);
    const cplx d3 = (a - w2) * (w1 - w2);
    const cplx ca = c.p_c * pow_n(a, n) / d1;
    const cplx cw1 = c.q_c * pow_n(w1, n) / d2;
    const cplx cw2 = c.r_c * pow_n(w2, n) / d3;
    return (ca * root_quaternion(a)) - (cw1 * root_quaternion(w1)) +
           (cw2 * root_quaternion(w2));
}

complex_quaternion quaternion_binet(const sequence_params& p,
                                    std::uint64_t n) {
    const cubic_roots roots = roots_of(p);
    return quaternion_binet_eval(roots, binet_constants_for(p, roots), n);
}

}  // namespace gtrib
