#pragma once

#include <cstdint>
#include <vector>

#include "gtrib/params.hpp"

namespace gtrib {

/// V_n by forward iteration from (V0, V1, V2). O(n) multiplications, exact.
exact_int term_iterative(const sequence_params& p, std::uint64_t n);

/// [V_{n_lo}, ..., V_{n_hi}], consistent with term_iterative at every index.
/// Throws std::invalid_argument if n_lo > n_hi.
std::vector<exact_int> terms_range(const sequence_params& p,
                                   std::uint64_t n_lo, std::uint64_t n_hi);

/// The Cassini seed constant
///   g(0) = V2^3 + V1^2*V4 + V0*V3^2 - V2*(2*V1*V3 + V0*V4),
/// with V3, V4 taken from the recurrence. The V-Cassini identity equals
/// t^n * g(0) at every index.
exact_int cassini_seed(const sequence_params& p);

}  // namespace gtrib
