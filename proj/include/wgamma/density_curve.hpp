#pragma once

#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "wgamma/cauchy.hpp"
#include "wgamma/params.hpp"
#include "wgamma/quadrature.hpp"
#include "wgamma/support.hpp"

namespace wgamma {

/// Atom mass plus sampled a.c. density on a grid spanning the support.
struct DensityCurve {
    Params params;
    double atom;
    std::vector<double> support_edges;
    std::vector<std::pair<double, double>> grid;  // (x, rho)
};

namespace detail {

/// Consecutive edge pairs that actually carry density (midpoint test);
/// discriminant roots can also mark collisions of non-physical branches.
inline std::vector<std::pair<double, double>> carrier_intervals(const StieltjesDensity& rho) {
    const auto& e = rho.edges();
    std::vector<std::pair<double, double>> out;
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
        if (e[i + 1] - e[i] < 1e-12) continue;
        if (rho(0.5 * (e[i] + e[i + 1])) > 1e-12) out.emplace_back(e[i], e[i + 1]);
    }
    return out;
}

inline std::string format17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace detail

inline DensityCurve build_density_curve(const Params& p, int points = 1024, double pad = 0.05) {
    if (points < 2) throw std::domain_error("build_density_curve: need at least 2 points");
    StieltjesDensity rho(p);
    const auto& edges = rho.edges();
    double lo = edges.front(), hi = edges.back();
    double span = hi - lo;
    lo -= pad * span;
    hi += pad * span;

    DensityCurve curve{p, atom_mass(p), edges, {}};
    curve.grid.reserve(points);
    for (int i = 0; i < points; ++i) {
        double x = lo + (hi - lo) * i / (points - 1);
        curve.grid.emplace_back(x, rho(x));
    }
    return curve;
}

/// p-th moment of the curve's measure: atom contribution plus adaptive
/// quadrature of x^p rho(x) over the carrier intervals, substituted so the
/// square-root edges are smooth. Refuses curves that are not normalized.
inline double numeric_moment(const DensityCurve& curve, int p) {
    if (p < 0) throw std::domain_error("numeric_moment: p must be >= 0");
    StieltjesDensity rho(curve.params);
    auto intervals = detail::carrier_intervals(rho);

    double mass = curve.atom;
    for (auto [a, b] : intervals)
        mass += quad::integrate_sqrt_edges([&](double x) { return rho(x); }, a, b, 1e-9);
    if (std::abs(mass - 1.0) > 1e-6)
        throw std::domain_error("numeric_moment: curve is not normalized");
    if (p == 0) return mass;

    double total = 0;  // atom sits at zero: no contribution for p >= 1
    for (auto [a, b] : intervals)
        total += quad::integrate_sqrt_edges([&](double x) { return std::pow(x, p) * rho(x); }, a,
                                            b, 1e-9);
    return total;
}

/// CSV with a JSON header line; 17 significant digits throughout.
inline void write_csv(const DensityCurve& curve, std::ostream& os) {
    nlohmann::json header;
    header["m"] = curve.params.m;
    header["n"] = curve.params.n;
    header["atom_mass"] = curve.atom;
    header["support_edges"] = curve.support_edges;
    os << "# " << header.dump() << "\n";
    os << "x,rho\n";
    for (auto [x, r] : curve.grid) os << detail::format17(x) << "," << detail::format17(r) << "\n";
}

}  // namespace wgamma
