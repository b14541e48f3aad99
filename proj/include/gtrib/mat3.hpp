#pragma once

#include <array>
#include <cstdint>

#include "gtrib/params.hpp"

namespace gtrib {

/// 3x3 matrix over exact integers.
struct mat3 {
    std::array<std::array<exact_int, 3>, 3> a{};

    static mat3 identity();
    static mat3 zero();

    exact_int& operator()(int i, int j) { return a[i][j]; }
    const exact_int& operator()(int i, int j) const { return a[i][j]; }

    bool operator==(const mat3&) const = default;
};

/// Companion matrix [[r,s,t],[1,0,0],[0,1,0]] of the recurrence.
mat3 companion(const sequence_params& p);

mat3 mat_mul(const mat3& x, const mat3& y);

/// x^n by left-to-right binary exponentiation; x^0 is the identity.
mat3 mat_pow(const mat3& x, std::uint64_t n);

exact_int det3(const mat3& m);

/// The U-form of the companion power (n >= 2):
///   M^n = [[U_{n+2}, s*U_{n+1}+t*U_n,     t*U_{n+1}],
///          [U_{n+1}, s*U_n    +t*U_{n-1}, t*U_n    ],
///          [U_n,     s*U_{n-1}+t*U_{n-2}, t*U_{n-1}]]
/// built from iterated U values. Throws std::invalid_argument for n < 2.
mat3 u_form(const exact_int& r, const exact_int& s, const exact_int& t,
            std::uint64_t n);

/// Shifted sum-form matrix
///   [[V_{n+4}, V_{n+3}+V_{n+2}, V_{n+3}],
///    [V_{n+3}, V_{n+2}+V_{n+1}, V_{n+2}],
///    [V_{n+2}, V_{n+1}+V_n,     V_{n+1}]]
/// (equals M^n times the n = 0 instance whenever t != 0).
mat3 v_shift_matrix(const sequence_params& p, std::uint64_t n);

/// (s,t)-form matrix
///   [[V_{n+4}, s*V_{n+3}+t*V_{n+2}, t*V_{n+3}],
///    [V_{n+3}, s*V_{n+2}+t*V_{n+1}, t*V_{n+2}],
///    [V_{n+2}, s*V_{n+1}+t*V_n,     t*V_{n+1}]];
/// satisfies st_form(n) = v_shift(n) * [[1,0,0],[0,t,0],[0,s-t,t]] and
/// M^n * st_form(0) = st_form(n) for every t, including t = 0.
mat3 st_form_matrix(const sequence_params& p, std::uint64_t n);

/// V_n as the third component of M^n * (V2, V1, V0)^T; O(log n) multiplies.
exact_int term_by_matrix(const sequence_params& p, std::uint64_t n);

}  // namespace gtrib
