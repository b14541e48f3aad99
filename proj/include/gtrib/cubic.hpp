#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include "gtrib/params.hpp"

namespace gtrib {

/// The standing assumption Delta(r,s,t) > 0 is violated: the characteristic
/// cubic does not have one real root and a conjugate nonreal pair.
struct delta_not_positive : std::domain_error {
    explicit delta_not_positive(const std::string& what)
        : std::domain_error(what) {}
};

/// Delta(r,s,t) = r^3 t/27 - r^2 s^2/108 + r s t/6 - s^3/27 + t^2/4,
/// as an exact rational, so the Delta > 0 gate is decided exactly for
/// integer coefficients.
exact_rat discriminant(const exact_int& r, const exact_int& s,
                       const exact_int& t);

/// The Cardano cube-root radicand r^3/27 + r s/6 + t/2 (exact rational);
/// A is the real cube root of radicand + sqrt(Delta), B of radicand - sqrt(Delta).
exact_rat cardano_radicand(const exact_int& r, const exact_int& s,
                           const exact_int& t);

/// Roots of x^3 - r x^2 - s x - t for Delta > 0: the real root alpha and the
/// conjugate pair omega1, omega2 (omega2 == conj(omega1), Im(omega1) >= 0).
/// Cardano intermediates and the achieved polynomial residuals are kept for
/// diagnostics. Symmetric functions: alpha + omega1 + omega2 = r, pairwise
/// sum = -s, product = t.
struct cubic_roots {
    double r = 0, s = 0, t = 0;  // coefficients the roots belong to
    double delta = 0;            // floating Delta(r,s,t)
    double radicand = 0;         // Cardano cube-root radicand
    double a_v = 0, b_v = 0;     // the two real cube roots A_V, B_V
    double alpha = 0;
    std::complex<double> omega1, omega2;
    double residual_alpha = 0;   // |f(alpha)| after Newton polish
    double residual_omega = 0;   // |f(omega1)| after Newton polish
};

/// Default scale for the root-residual bound: tol_factor * max(1,|r|,|s|,|t|)^3.
inline constexpr double kRootTolFactor = 1e-10;

/// Cardano radicals followed by Newton refinement (the radical form alone
/// loses digits when A_V is close to -B_V). Throws delta_not_positive when
/// Delta <= 0 (decided in floating point: this is the real-coefficient
/// entry point).
cubic_roots solve_cubic(double r, double s, double t,
                        double tol_factor = kRootTolFactor);

/// Same, but the Delta > 0 gate is decided exactly from the integer
/// coefficients before any floating-point work.
cubic_roots roots_of(const sequence_params& p,
                     double tol_factor = kRootTolFactor);

/// tol_factor * max(1,|r|,|s|,|t|)^3, the bound the polished residuals obey.
double root_tolerance(double r, double s, double t,
                      double tol_factor = kRootTolFactor);

}  // namespace gtrib
