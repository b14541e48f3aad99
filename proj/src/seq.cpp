#include "gtrib/seq.hpp"

#include <stdexcept>
#include <utility>

namespace gtrib {

exact_int term_iterative(const sequence_params& p, std::uint64_t n) {
    if (n == 0) return p.v0;
    if (n == 1) return p.v1;
    if (n == 2) return p.v2;
    exact_int a = p.v0, b = p.v1, c = p.v2;  // V_{k-3}, V_{k-2}, V_{k-1}
    exact_int next;
    for (std::uint64_t k = 3; k <= n; ++k) {
        next = p.r * c + p.s * b + p.t * a;
        a = std::move(b);
        b = std::move(c);
        c = std::move(next);
    }
    return c;
}

std::vector<exact_int> terms_range(const sequence_params& p,
                                   std::uint64_t n_lo, std::uint64_t n_hi) {
    if (n_lo > n_hi)
        throw std::invalid_argument("terms_range: n_lo > n_hi");
    std::vector<exact_int> out;
    out.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
    exact_int a = p.v0, b = p.v1, c = p.v2;
    auto push_if_in_range = [&](std::uint64_t k, const exact_int& v) {
        if (k >= n_lo && k <= n_hi) out.push_back(v);
    };
    push_if_in_range(0, a);
    if (n_hi >= 1) push_if_in_range(1, b);
    if (n_hi >= 2) push_if_in_range(2, c);
    exact_int next;
    for (std::uint64_t k = 3; k <= n_hi; ++k) {
        next = p.r * c + p.s * b + p.t * a;
        a = std::move(b);
        b = std::move(c);
        c = std::move(next);
        push_if_in_range(k, c);
    }
    return out;
}

exact_int cassini_seed(const sequence_params& p) {
    const exact_int v3 = p.r * p.v2 + p.s * p.v1 + p.t * p.v0;
    const exact_int v4 = p.r * v3 + p.s * p.v2 + p.t * p.v1;
    return p.v2 * p.v2 * p.v2 + p.v1 * p.v1 * v4 + p.v0 * v3 * v3 -
           p.v2 * (2 * p.v1 * v3 + p.v0 * v4);
}

}  // namespace gtrib
