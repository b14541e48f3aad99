#pragma once

#include <array>
#include <cstdint>

#include "gtrib/mat3.hpp"

namespace gtrib {

/// 3x3 matrix of residues modulo m (entries normalized to [0, m)).
/// The modulus only has to be >= 2; no primality is required.
struct mat3_mod {
    std::array<std::array<std::uint64_t, 3>, 3> a{};
    std::uint64_t modulus = 2;

    std::uint64_t& operator()(int i, int j) { return a[i][j]; }
    std::uint64_t operator()(int i, int j) const { return a[i][j]; }

    bool operator==(const mat3_mod&) const = default;
};

/// a*b mod m without overflow for any m < 2^64.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

/// Nonnegative residue of an exact integer (floor convention).
std::uint64_t residue(const exact_int& v, std::uint64_t m);

/// Entrywise reduction. Throws std::invalid_argument if modulus < 2.
mat3_mod reduce_mod(const mat3& m, std::uint64_t modulus);

mat3_mod mat_mul(const mat3_mod& x, const mat3_mod& y);

/// m^n mod modulus, O(log n) multiplications and O(1) entry size.
mat3_mod mat_pow_mod(const mat3& m, std::uint64_t n, std::uint64_t modulus);

/// V_n mod modulus via the companion power (the fast path for huge n).
std::uint64_t term_by_matrix_mod(const sequence_params& p, std::uint64_t n,
                                 std::uint64_t modulus);

}  // namespace gtrib
