#pragma once

#include <stdexcept>

namespace wgamma {

/// Parameter pair selecting the limit measure: m >= 0, n >= 1.
struct Params {
    double m;
    double n;

    Params(double m_, double n_) : m(m_), n(n_) {
        if (!(m >= 0.0)) throw std::domain_error("Params: m must be >= 0");
        if (!(n >= 1.0)) throw std::domain_error("Params: n must be >= 1");
    }

    /// Free Poisson parameters of the positive and negated components.
    double poisson_plus() const { return m * (n + 1) / 2; }
    double poisson_minus() const { return m * (n - 1) / 2; }
};

/// Mass of the only possible atom, located at 0.
inline double atom_mass(const Params& p) {
    double a = 1.0 - p.m * p.n;
    return a > 0.0 ? a : 0.0;
}

}  // namespace wgamma
