#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "wgamma/params.hpp"
#include "wgamma/support.hpp"

namespace wgamma {

namespace detail {

using Complex = std::complex<double>;

/// All roots of the monic cubic w^3 + a w^2 + b w + c (Cardano, polished).
inline std::array<Complex, 3> solve_monic_cubic(Complex a, Complex b, Complex c) {
    const Complex third = Complex(1.0 / 3.0, 0.0);
    Complex p = b - a * a * third;
    Complex q = a * a * a * (2.0 / 27.0) - a * b * third + c;

    std::array<Complex, 3> roots;
    Complex shift = -a * third;
    Complex sq = std::sqrt(q * q * 0.25 + p * p * p / 27.0);
    Complex u3 = -q * 0.5 + sq;
    if (std::abs(-q * 0.5 - sq) > std::abs(u3)) u3 = -q * 0.5 - sq;
    if (std::abs(u3) < 1e-300) {
        // p and q both vanish: triple root
        Complex r = std::pow(-q, third);
        const Complex omega(-0.5, std::sqrt(3.0) / 2);
        roots = {r + shift, r * omega + shift, r * std::conj(omega) + shift};
    } else {
        Complex u = std::pow(u3, third);
        const Complex omega(-0.5, std::sqrt(3.0) / 2);
        for (int k = 0; k < 3; ++k) {
            Complex uk = u;
            if (k == 1) uk *= omega;
            if (k == 2) uk *= std::conj(omega);
            roots[k] = uk - p / (3.0 * uk) + shift;
        }
    }
    for (Complex& w : roots) {
        for (int it = 0; it < 2; ++it) {
            Complex f = ((w + a) * w + b) * w + c;
            Complex df = (3.0 * w + 2.0 * a) * w + b;
            if (std::abs(df) == 0.0) break;
            w -= f / df;
        }
    }
    return roots;
}

/// Monic cubic in w = 1/G at the point xi:
///   w^3 + (m - xi) w^2 + (mn - 1) w + xi = 0.
/// Working with 1/G keeps the polynomial monic even at xi = 0.
inline std::array<Complex, 3> w_roots(const Params& p, Complex xi) {
    return solve_monic_cubic(Complex(p.m) - xi, Complex(p.m * p.n - 1.0), xi);
}

inline double monic_cubic_discriminant(double a, double b, double c) {
    return 18 * a * b * c - 4 * a * a * a * c + a * a * b * b - 4 * b * b * b - 27 * c * c;
}

/// Real root of a monic real cubic known to have exactly one (disc < 0).
inline double lone_real_root(double a, double b, double c) {
    double p = b - a * a / 3;
    double q = 2 * a * a * a / 27 - a * b / 3 + c;
    double sq = std::sqrt(q * q / 4 + p * p * p / 27);
    double big = (q <= 0) ? std::cbrt(-q / 2 + sq) : std::cbrt(-q / 2 - sq);
    double r = (big == 0.0 ? 0.0 : big - p / (3 * big)) - a / 3;
    for (int it = 0; it < 3; ++it) {
        double f = ((r + a) * r + b) * r + c;
        double df = (3 * r + 2 * a) * r + b;
        if (df == 0.0) break;
        r -= f / df;
    }
    return r;
}

}  // namespace detail

/// Cauchy transform on the open upper half-plane: the branch with G ~ 1/xi
/// at infinity and Im G < 0, tracked by nearest-root continuation downward
/// from Im = 10^3.
inline std::complex<double> cauchy_transform(const Params& p, std::complex<double> xi) {
    using detail::Complex;
    if (!(xi.imag() > 0)) throw std::domain_error("cauchy_transform: Im(xi) must be positive");

    double top = std::max(1e3, 2.0 * std::abs(xi));
    Complex z(xi.real(), top);
    // seed: w = 1/G behaves like xi high above the axis
    Complex w = z;
    auto pick_nearest = [&](Complex target, Complex at) {
        auto roots = detail::w_roots(p, at);
        Complex best = roots[0];
        for (const Complex& r : roots)
            if (std::abs(r - target) < std::abs(best - target)) best = r;
        return best;
    };
    w = pick_nearest(w, z);
    while (z.imag() > xi.imag()) {
        z = Complex(xi.real(), std::max(z.imag() * 0.5, xi.imag()));
        w = pick_nearest(w, z);
    }
    w = pick_nearest(w, xi);

    Complex g = 1.0 / w;
    if (!(g.imag() < 1e-9 * (1 + std::abs(g))))
        throw std::runtime_error("cauchy_transform: lost the Herglotz branch");
    return g;
}

/// Density of the absolutely continuous part, evaluated through the real
/// cubic: three real roots means zero density, a conjugate pair yields
/// |Im w| / (pi |w|^2). The discriminant sign is exact away from the support
/// edges; when it falls below its own roundoff floor (x essentially on an
/// edge) the value is taken at x + i * 1e-8 instead.
class StieltjesDensity {
public:
    explicit StieltjesDensity(const Params& p)
        : params_(p), edges_(support::support_edges(p)) {}

    const Params& params() const { return params_; }
    const std::vector<double>& edges() const { return edges_; }

    double operator()(double x) const {
        if (!std::isfinite(x)) throw std::domain_error("density: x must be finite");

        double a = params_.m - x, b = params_.m * params_.n - 1.0, c = x;
        double t1 = 18 * a * b * c, t2 = -4 * a * a * a * c, t3 = a * a * b * b,
               t4 = -4 * b * b * b, t5 = -27 * c * c;
        double disc = t1 + t2 + t3 + t4 + t5;
        double noise = 64 * std::numeric_limits<double>::epsilon() *
                       (std::abs(t1) + std::abs(t2) + std::abs(t3) + std::abs(t4) + std::abs(t5));
        if (std::abs(disc) <= noise) return regularized(x);
        if (disc > 0) return 0.0;

        double r = detail::lone_real_root(a, b, c);
        double B = a + r, C = b + r * B;
        double im2 = C - B * B / 4;
        if (im2 <= 0) return 0.0;
        double norm2 = B * B / 4 + im2;
        return std::sqrt(im2) / (std::numbers::pi * norm2);
    }

private:
    double regularized(double x) const {
        double rho = -cauchy_transform(params_, {x, 1e-8}).imag() / std::numbers::pi;
        return rho > 0 ? rho : 0.0;
    }

    Params params_;
    std::vector<double> edges_;
};

/// One-off density evaluation; build a StieltjesDensity for grids.
inline double density(const Params& p, double x) { return StieltjesDensity(p)(x); }

}  // namespace wgamma
