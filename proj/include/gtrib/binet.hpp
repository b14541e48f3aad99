#pragma once

#include <complex>
#include <cstdint>

#include "gtrib/cubic.hpp"
#include "gtrib/seq.hpp"

namespace gtrib {

/// Projection coefficients of the closed form:
///   P = V2 - (omega1+omega2) V1 + omega1 omega2 V0
///   Q = V2 - (alpha +omega2) V1 + alpha  omega2 V0
///   R = V2 - (alpha +omega1) V1 + alpha  omega1 V0
/// P has negligible imaginary part and Q, R are conjugates when the initial
/// terms are real and Delta > 0.
struct binet_constants {
    std::complex<double> p_c{1, 0}, q_c{1, 0}, r_c{1, 0};
};

binet_constants binet_constants_for(const sequence_params& p,
                                    const cubic_roots& roots);

/// Real-valued initial terms (the CLI's decimal path).
binet_constants binet_constants_real(double v0, double v1, double v2,
                                     const cubic_roots& roots);

/// A closed-form evaluation: the real part is the answer, the discarded
/// imaginary magnitude is surfaced as a diagnostic.
struct binet_value {
    double value = 0;
    double imag_residual = 0;
};

/// P alpha^n / ((a-w1)(a-w2)) - Q w1^n / ((a-w1)(w1-w2)) + R w2^n / ((a-w2)(w1-w2)).
binet_value binet_eval(const cubic_roots& roots, const binet_constants& c,
                       std::uint64_t n);

/// The fundamental-sequence closed form (P = Q = R = 1).
binet_value u_binet(const cubic_roots& roots, std::uint64_t n);

/// Closed form of V_n; throws delta_not_positive when Delta <= 0.
binet_value v_binet(const sequence_params& p, std::uint64_t n);

/// Exact decomposition V_n = V2 U_n + (s V1 + t V0) U_{n-1} + t V1 U_{n-2}
/// over the fundamental sequence. Throws std::invalid_argument for n < 2.
exact_int v_from_u(const sequence_params& p, std::uint64_t n);

/// Residuals of the quadratic approximation
///   P alpha^{n+2} = alpha^2 V_{n+2} + alpha (s V_{n+1} + t V_n) + t V_{n+1}
/// and its omega1/omega2 analogues (with Q and R), using exact terms and the
/// floating roots. Identically zero in exact arithmetic; what is returned is
/// pure floating-point error.
struct quad_residuals {
    double alpha_res = 0;
    double omega1_res = 0;
    double omega2_res = 0;
    double scale = 0;  // |P| * |alpha|^{n+2}, the dominant magnitude
};

quad_residuals quad_approx_residuals(const sequence_params& p,
                                     std::uint64_t n);

/// Lower-level form used by the batch checker: terms already in hand.
quad_residuals quad_approx_residuals(const cubic_roots& roots,
                                     const binet_constants& c,
                                     double v_n, double v_n1, double v_n2,
                                     std::uint64_t n);

/// Residual of the linear form alpha V_{n+2} + (s + omega1 omega2) V_{n+1}
/// + t V_n = P alpha^{n+1} (the identity one multiplication before the
/// quadratic approximation).
double linear_form_check(const sequence_params& p, std::uint64_t n);

}  // namespace gtrib
