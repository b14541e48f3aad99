#pragma once

#include <complex>
#include <cstdint>

#include "gtrib/binet.hpp"

namespace gtrib {

/// Quaternion w + x i + y j + z k over a pluggable scalar: exact integers
/// for the sequence quaternions, complex doubles for the root quaternions
/// (only scalar-by-quaternion products and sums are needed there).
template <class S>
struct quaternion {
    S w{}, x{}, y{}, z{};

    bool operator==(const quaternion&) const = default;

    friend quaternion operator+(const quaternion& a, const quaternion& b) {
        return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend quaternion operator-(const quaternion& a, const quaternion& b) {
        return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend quaternion operator*(const S& c, const quaternion& q) {
        return {c * q.w, c * q.x, c * q.y, c * q.z};
    }
};

using exact_quaternion = quaternion<exact_int>;
using complex_quaternion = quaternion<std::complex<double>>;

/// Hamilton product, i^2 = j^2 = k^2 = ijk = -1.
template <class S>
quaternion<S> hamilton_mul(const quaternion<S>& a, const quaternion<S>& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

/// N(q) = w^2 + x^2 + y^2 + z^2; multiplicative over hamilton_mul.
template <class S>
S norm_sq(const quaternion<S>& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

/// Q_{V,n} = V_n + V_{n+1} i + V_{n+2} j + V_{n+3} k, exact.
exact_quaternion seq_quaternion(const sequence_params& p, std::uint64_t n);

/// (1, z, z^2, z^3) for a root z.
complex_quaternion root_quaternion(std::complex<double> z);

/// Closed form of Q_{V,n} from the root quaternions; componentwise real
/// parts match seq_quaternion. Throws delta_not_positive when Delta <= 0.
complex_quaternion quaternion_binet(const sequence_params& p, std::uint64_t n);

/// Same with roots and constants already in hand (batch evaluation).
complex_quaternion quaternion_binet_eval(const cubic_roots& roots,
                                         const binet_constants& c,
                                         std::uint64_t n);

}  // namespace gtrib
