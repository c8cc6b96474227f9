#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace wgamma {

/// Edges of the Marchenko-Pastur law of parameter t.
inline std::pair<double, double> mp_edges(double t) {
    double s = std::sqrt(t);
    return {(s - 1) * (s - 1), (s + 1) * (s + 1)};
}

inline double mp_atom(double t) { return t < 1 ? 1 - t : 0.0; }

/// Absolutely continuous Marchenko-Pastur density
///   sqrt(4t - (x - 1 - t)^2) / (2 pi x) on [(sqrt t - 1)^2, (sqrt t + 1)^2].
inline double mp_density(double t, double x) {
    if (!(t > 0)) throw std::domain_error("mp_density: t must be positive");
    double rad = 4 * t - (x - 1 - t) * (x - 1 - t);
    if (rad <= 0 || x <= 0) return 0.0;
    return std::sqrt(rad) / (2 * std::numbers::pi * x);
}

/// Semicircle density centered at 1: sqrt(4b - (1 - x)^2) / (2 b pi).
inline double semicircle_density(double beta, double x) {
    if (!(beta > 0)) throw std::domain_error("semicircle_density: beta must be positive");
    double rad = 4 * beta - (1 - x) * (1 - x);
    if (rad <= 0) return 0.0;
    return std::sqrt(rad) / (2 * beta * std::numbers::pi);
}

}  // namespace wgamma
