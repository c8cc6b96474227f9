#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "wgamma/params.hpp"

namespace wgamma::support {

/// Raised when a classification query sits numerically on a region boundary.
struct BoundaryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Discriminant quartic in xi, descending coefficients; c4 is always 4.
struct QuarticPoly {
    double c4, c3, c2, c1, c0;

    double operator()(double xi) const { return (((c4 * xi + c3) * xi + c2) * xi + c1) * xi + c0; }
    double deriv(double xi) const { return ((4 * c4 * xi + 3 * c3) * xi + 2 * c2) * xi + c1; }
    double deriv2(double xi) const { return (12 * c4 * xi + 6 * c3) * xi + 2 * c2; }
};

inline QuarticPoly discriminant_quartic(const Params& p) {
    double m = p.m, n = p.n;
    QuarticPoly q;
    q.c4 = 4;
    q.c3 = -12 * m;
    q.c2 = n * n * m * m + 12 * m * m - 20 * n * m - 8;
    q.c1 = -2 * n * n * m * m * m - 4 * m * m * m + 22 * n * m * m - 20 * m;
    q.c0 = n * n * m * m * m * m - 4 * n * n * n * m * m * m - 2 * n * m * m * m +
           12 * n * n * m * m + m * m - 12 * n * m + 4;
    return q;
}

/// Algebraic discriminant of the degree-3 equation for the Cauchy transform,
/// xi G^3 - (1 - mn) G^2 - (xi - m) G + 1, via the textbook cubic formula.
inline double cubic_discriminant_in_g(const Params& p, double xi) {
    double a = xi, b = p.m * p.n - 1.0, c = p.m - xi, d = 1.0;
    return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
           27 * a * a * d * d;
}

/// Inner cubic-in-(mn) polynomial whose sign is opposite to the quartic's
/// own discriminant for n > 1.
inline double p_poly(const Params& p) {
    double m = p.m, n = p.n;
    return m * m * m * n * n * n + 15 * m * m * n * n + 48 * m * n - 27 * m * m - 64;
}

/// Discriminant of the quartic itself: negative iff two real roots.
inline double delta2(const Params& p) {
    double m = p.m, n = p.n;
    double inner = m * m * m * n * n * n + 15 * m * m * n * n - 27 * m * m + 48 * m * n - 64;
    return -256 * m * m * (n - 1) * (n + 1) * inner * inner * inner;
}

inline double h_curve(double m) {
    if (!(m > 0)) throw std::domain_error("h_curve: m must be positive");
    return m / 4 + 1 / m;
}

/// Only real root n of P(m, .); closed form polished by Newton since the
/// radicand cancels badly as m -> 0.
inline double g_curve(double m) {
    if (!(m > 0) || m > 4) throw std::domain_error("g_curve: m must lie in (0, 4]");
    double u = std::cbrt(2 + m * m + m * std::sqrt(4 + m * m));
    double n = (3 * std::cbrt(4.0) * u + 6 * std::cbrt(2.0) / u - 10) / (2 * m);
    // P(m, .) is strictly increasing in n for n > 0
    for (int it = 0; it < 60; ++it) {
        double val = p_poly(Params(m, std::max(n, 1.0)));
        double slope = 3 * m * m * m * n * n + 30 * m * m * n + 48 * m;
        double step = val / slope;
        n -= step;
        if (std::abs(step) < 1e-15 * (1 + std::abs(n))) break;
    }
    return n;
}

/// Roots in n of Delta'(0) = 0; first < second.
inline std::pair<double, double> p_curves(double m) {
    double rad = 81 - 8 * m * m;
    if (!(m > 0) || rad < 0) throw std::domain_error("p_curves: m must lie in (0, 9/sqrt(8)]");
    double s = std::sqrt(rad);
    return {(11 - s) / (2 * m), (11 + s) / (2 * m)};
}

/// Roots in n of Delta''(0) = 0; first < second.
inline std::pair<double, double> q_curves(double m) {
    if (!(m > 0) || m > 3) throw std::domain_error("q_curves: m must lie in (0, 3]");
    double s = 2 * std::sqrt(3.0) * std::sqrt(9 - m * m);
    return {(10 - s) / m, (10 + s) / m};
}

/// All real roots of the discriminant quartic, multiplicity counted, sorted.
/// The count is 2 or 4; anything else signals a numerical breakdown.
inline std::vector<double> support_edges(const Params& p) {
    QuarticPoly q = discriminant_quartic(p);

    Eigen::Matrix4d companion = Eigen::Matrix4d::Zero();
    companion(1, 0) = companion(2, 1) = companion(3, 2) = 1.0;
    companion(0, 3) = -q.c0 / q.c4;
    companion(1, 3) = -q.c1 / q.c4;
    companion(2, 3) = -q.c2 / q.c4;
    companion(3, 3) = -q.c3 / q.c4;
    Eigen::EigenSolver<Eigen::Matrix4d> es(companion);

    std::vector<double> roots;
    for (int i = 0; i < 4; ++i) {
        std::complex<double> lambda = es.eigenvalues()(i);
        if (std::abs(lambda.imag()) > 1e-6 * (1 + std::abs(lambda))) continue;
        double x = lambda.real();
        // Newton polish; damped so double roots stay put
        for (int it = 0; it < 8; ++it) {
            double f = q(x), df = q.deriv(x);
            if (df == 0.0) break;
            double step = f / df;
            if (std::abs(q(x - step)) >= std::abs(f)) break;
            x -= step;
        }
        double scale = 1.0;
        double ax = std::abs(x), pw = 1.0;
        for (double c : {q.c0, q.c1, q.c2, q.c3, q.c4}) {
            scale += std::abs(c) * pw;
            pw *= ax;
        }
        if (std::abs(q(x)) <= 1e-10 * scale) roots.push_back(x);
    }
    std::sort(roots.begin(), roots.end());
    if (roots.size() != 2 && roots.size() != 4)
        throw std::runtime_error("support_edges: quartic produced " + std::to_string(roots.size()) +
                                 " real roots");
    return roots;
}

enum class Region { A1, A2, B, C, D };

inline const char* to_string(Region r) {
    switch (r) {
        case Region::A1: return "A1";
        case Region::A2: return "A2";
        case Region::B: return "B";
        case Region::C: return "C";
        case Region::D: return "D";
    }
    return "?";
}

struct Classification {
    Region region;
    bool on_g_boundary = false;
    bool on_h_boundary = false;
};

inline constexpr double kBoundaryTol = 1e-9;
inline constexpr double kBoundaryFlagTol = 1e-6;

/// Region of the (m, n) parameter plane from closed-form signs only:
/// sign of P decides connectedness, Delta(0) whether zero is interior,
/// and the signs of Delta'(0), Delta''(0) separate A1 from A2.
inline Classification classify_region(const Params& p) {
    if (!(p.m > 0) || !(p.n > 1))
        throw std::domain_error("classify_region: requires m > 0 and n > 1");

    double h = h_curve(p.m);
    double g = (p.m <= 4) ? g_curve(p.m) : 0.0;
    if (std::abs(p.n - h) < kBoundaryTol)
        throw BoundaryError("classify_region: point on the h curve");
    if (p.m <= 4 && std::abs(p.n - g) < kBoundaryTol)
        throw BoundaryError("classify_region: point on the g curve");

    QuarticPoly q = discriminant_quartic(p);
    double P = p_poly(p);
    double delta0 = q.c0;        // Delta(0)
    double dprime0 = q.c1;       // Delta'(0)
    double dsecond0 = 2 * q.c2;  // Delta''(0)

    Classification out;
    out.on_h_boundary = std::abs(p.n - h) < kBoundaryFlagTol;
    out.on_g_boundary = p.m <= 4 && std::abs(p.n - g) < kBoundaryFlagTol;

    if (P < 0) {
        if (delta0 < 0) out.region = Region::B;
        else if (dprime0 < 0 && dsecond0 > 0) out.region = Region::A2;
        else out.region = Region::A1;
    } else {
        out.region = (delta0 < 0) ? Region::C : Region::D;
    }
    return out;
}

struct PositivityResult {
    bool positive;
    bool mp_case;  // n == 1: the theorem predicate does not apply
};

/// Positive support iff n <= m/4 + 1/m and m >= 2 (stated for n > 1).
/// At n = 1 the measure specializes to a Marchenko-Pastur law, which is
/// always supported on [0, inf); flagged separately.
inline PositivityResult is_positive_support(const Params& p) {
    if (p.n == 1.0) return {true, true};
    return {p.n <= h_curve(p.m) && p.m >= 2.0, false};
}

}  // namespace wgamma::support
