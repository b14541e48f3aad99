#include "gtrib/mat3.hpp"

#include <stdexcept>

#include "gtrib/seq.hpp"

namespace gtrib {

mat3 mat3::identity() {
    mat3 m;
    m.a[0][0] = 1;
    m.a[1][1] = 1;
    m.a[2][2] = 1;
    return m;
}

mat3 mat3::zero() { return mat3{}; }

mat3 companion(const sequence_params& p) {
    mat3 m;
    m.a[0] = {p.r, p.s, p.t};
    m.a[1][0] = 1;
    m.a[2][1] = 1;
    return m;
}

mat3 mat_mul(const mat3& x, const mat3& y) {
    mat3 out;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 3; ++j)
                out.a[i][j] += x.a[i][k] * y.a[k][j];
    return out;
}

mat3 mat_pow(const mat3& x, std::uint64_t n) {
    mat3 out = mat3::identity();
    if (n == 0) return out;
    int top = 63;
    while (((n >> top) & 1u) == 0) --top;
    for (int bit = top; bit >= 0; --bit) {
        out = mat_mul(out, out);
        if ((n >> bit) & 1u) out = mat_mul(out, x);
    }
    return out;
}

exact_int det3(const mat3& m) {
    const auto& a = m.a;
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

mat3 u_form(const exact_int& r, const exact_int& s, const exact_int& t,
            std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("u_form: requires n >= 2");
    // U_{n-2} .. U_{n+2} of the fundamental sequence.
    const auto u = terms_range(fundamental(r, s, t), n - 2, n + 2);
    mat3 m;
    m.a[0] = {u[4], s * u[3] + t * u[2], t * u[3]};
    m.a[1] = {u[3], s * u[2] + t * u[1], t * u[2]};
    m.a[2] = {u[2], s * u[1] + t * u[0], t * u[1]};
    return m;
}

mat3 v_shift_matrix(const sequence_params& p, std::uint64_t n) {
    const auto v = terms_range(p, n, n + 4);  // V_n .. V_{n+4}
    mat3 m;
    m.a[0] = {v[4], v[3] + v[2], v[3]};
    m.a[1] = {v[3], v[2] + v[1], v[2]};
    m.a[2] = {v[2], v[1] + v[0], v[1]};
    return m;
}

mat3 st_form_matrix(const sequence_params& p, std::uint64_t n) {
    const auto v = terms_range(p, n, n + 4);
    mat3 m;
    m.a[0] = {v[4], p.s * v[3] + p.t * v[2], p.t * v[3]};
    m.a[1] = {v[3], p.s * v[2] + p.t * v[1], p.t * v[2]};
    m.a[2] = {v[2], p.s * v[1] + p.t * v[0], p.t * v[1]};
    return m;
}

exact_int term_by_matrix(const sequence_params& p, std::uint64_t n) {
    const mat3 mn = mat_pow(companion(p), n);
    // Bottom row of M^n applied to the seed column (V2, V1, V0).
    return mn.a[2][0] * p.v2 + mn.a[2][1] * p.v1 + mn.a[2][2] * p.v0;
}

}  // namespace gtrib
