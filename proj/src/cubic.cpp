#include "gtrib/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gtrib {

namespace {

constexpr int kMaxNewton = 48;

double poly_real(double r, double s, double t, double x) {
    return ((x - r) * x - s) * x - t;
}

std::complex<double> poly_complex(double r, double s, double t,
                                  std::complex<double> z) {
    return ((z - r) * z - s) * z - t;
}

double newton_real(double r, double s, double t, double x, double tol) {
    double best = x;
    double best_res = std::abs(poly_real(r, s, t, x));
    for (int i = 0; i < kMaxNewton && best_res > tol; ++i) {
        const double d = (3 * x - 2 * r) * x - s;
        if (d == 0) break;
        x -= poly_real(r, s, t, x) / d;
        const double res = std::abs(poly_real(r, s, t, x));
        if (res < best_res) {
            best = x;
            best_res = res;
        } else {
            break;  // stalled at roundoff level
        }
    }
    return best;
}

std::complex<double> newton_complex(double r, double s, double t,
                                    std::complex<double> z, double tol) {
    std::complex<double> best = z;
    double best_res = std::abs(poly_complex(r, s, t, z));
    for (int i = 0; i < kMaxNewton && best_res > tol; ++i) {
        const std::complex<double> d = (3.0 * z - 2.0 * r) * z - s;
        if (d == std::complex<double>(0, 0)) break;
        z -= poly_complex(r, s, t, z) / d;
        const double res = std::abs(poly_complex(r, s, t, z));
        if (res < best_res) {
            best = z;
            best_res = res;
        } else {
            break;
        }
    }
    return best;
}

}  // namespace

exact_rat discriminant(const exact_int& r, const exact_int& s,
                       const exact_int& t) {
    // (4 r^3 t - r^2 s^2 + 18 r s t - 4 s^3 + 27 t^2) / 108
    const exact_int num = 4 * r * r * r * t - r * r * s * s +
                          18 * r * s * t - 4 * s * s * s + 27 * t * t;
    exact_rat q(num, 108);
    q.canonicalize();
    return q;
}

exact_rat cardano_radicand(const exact_int& r, const exact_int& s,
                           const exact_int& t) {
    // r^3/27 + r s/6 + t/2 = (2 r^3 + 9 r s + 27 t) / 54
    const exact_int num = 2 * r * r * r + 9 * r * s + 27 * t;
    exact_rat q(num, 54);
    q.canonicalize();
    return q;
}

double root_tolerance(double r, double s, double t, double tol_factor) {
    const double scale =
        std::max({1.0, std::abs(r), std::abs(s), std::abs(t)});
    return tol_factor * scale * scale * scale;
}

cubic_roots solve_cubic(double r, double s, double t, double tol_factor) {
    cubic_roots out;
    out.r = r;
    out.s = s;
    out.t = t;
    out.delta = r * r * r * t / 27.0 - r * r * s * s / 108.0 +
                r * s * t / 6.0 - s * s * s / 27.0 + t * t / 4.0;
    if (!(out.delta > 0)) {
        std::ostringstream os;
        os << "Delta(" << r << "," << s << "," << t << ") = " << out.delta
           << " is not positive";
        throw delta_not_positive(os.str());
    }
    out.radicand = r * r * r / 27.0 + r * s / 6.0 + t / 2.0;
    const double sq = std::sqrt(out.delta);
    out.a_v = std::cbrt(out.radicand + sq);
    out.b_v = std::cbrt(out.radicand - sq);

    const double tol = root_tolerance(r, s, t, tol_factor);
    const double third = r / 3.0;
    out.alpha = newton_real(r, s, t, third + out.a_v + out.b_v, tol);
    // omega1 = r/3 + eps*A + eps^2*B with eps = -1/2 + i sqrt(3)/2; its
    // imaginary part is nonnegative because A >= B.
    const std::complex<double> start{third - (out.a_v + out.b_v) / 2.0,
                                     std::sqrt(3.0) / 2.0 *
                                         (out.a_v - out.b_v)};
    out.omega1 = newton_complex(r, s, t, start, tol);
    out.omega2 = std::conj(out.omega1);
    out.residual_alpha = std::abs(poly_real(r, s, t, out.alpha));
    out.residual_omega = std::abs(poly_complex(r, s, t, out.omega1));
    return out;
}

cubic_roots roots_of(const sequence_params& p, double tol_factor) {
    const exact_rat delta = discriminant(p.r, p.s, p.t);
    if (sgn(delta) <= 0)
        throw delta_not_positive("Delta(r,s,t) = " + to_string(delta) +
                                 " is not positive for params " +
                                 to_string(p));
    return solve_cubic(p.r.get_d(), p.s.get_d(), p.t.get_d(), tol_factor);
}

}  // namespace gtrib
