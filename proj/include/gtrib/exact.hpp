#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace gtrib {

/// Arbitrary-precision signed integer. All sequence terms and matrix
/// entries are carried exactly; no operation in the exact modules rounds.
using exact_int = mpz_class;

/// Arbitrary-precision rational, always kept in canonical form.
using exact_rat = mpq_class;

/// base^e with the 0^0 = 1 convention (needed by the Cassini right-hand
/// sides at their boundary indices).
inline exact_int pow_int(const exact_int& base, unsigned long e) {
    exact_int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline exact_rat make_rat(long num, long den) {
    exact_rat q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const exact_int& v) { return v.get_str(); }
inline std::string to_string(const exact_rat& v) { return v.get_str(); }

}  // namespace gtrib
