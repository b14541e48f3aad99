#include "gtrib/mat3_mod.hpp"

#include <stdexcept>

namespace gtrib {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t residue(const exact_int& v, std::uint64_t m) {
    // mpz_fdiv_ui floors, so the result is in [0, m) for negative v too.
    return mpz_fdiv_ui(v.get_mpz_t(), m);
}

mat3_mod reduce_mod(const mat3& m, std::uint64_t modulus) {
    if (modulus < 2)
        throw std::invalid_argument("reduce_mod: modulus must be >= 2");
    mat3_mod out;
    out.modulus = modulus;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.a[i][j] = residue(m.a[i][j], modulus);
    return out;
}

mat3_mod mat_mul(const mat3_mod& x, const mat3_mod& y) {
    if (x.modulus != y.modulus)
        throw std::invalid_argument("mat_mul: modulus mismatch");
    const std::uint64_t m = x.modulus;
    mat3_mod out;
    out.modulus = m;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            unsigned __int128 acc = 0;
            for (int k = 0; k < 3; ++k)
                acc += static_cast<unsigned __int128>(x.a[i][k]) * y.a[k][j];
            out.a[i][j] = static_cast<std::uint64_t>(acc % m);
        }
    }
    return out;
}

mat3_mod mat_pow_mod(const mat3& m, std::uint64_t n, std::uint64_t modulus) {
    mat3_mod base = reduce_mod(m, modulus);
    mat3_mod out = reduce_mod(mat3::identity(), modulus);
    if (n == 0) return out;
    int top = 63;
    while (((n >> top) & 1u) == 0) --top;
    for (int bit = top; bit >= 0; --bit) {
        out = mat_mul(out, out);
        if ((n >> bit) & 1u) out = mat_mul(out, base);
    }
    return out;
}

std::uint64_t term_by_matrix_mod(const sequence_params& p, std::uint64_t n,
                                 std::uint64_t modulus) {
    const mat3_mod mn = mat_pow_mod(companion(p), n, modulus);
    const std::uint64_t seed[3] = {residue(p.v2, modulus),
                                   residue(p.v1, modulus),
                                   residue(p.v0, modulus)};
    unsigned __int128 acc = 0;
    for (int j = 0; j < 3; ++j)
        acc += static_cast<unsigned __int128>(mn.a[2][j]) * seed[j];
    return static_cast<std::uint64_t>(acc % modulus);
}

}  // namespace gtrib
