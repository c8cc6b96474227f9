#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "wgamma/parallel.hpp"

namespace wgamma::rmt {

inline constexpr int kSizeCap = 4096;  // on d*n

/// Integer-parameter matrix model: W = (dm)^{-1} G G^* with G of shape
/// dn x dm; blocks of size n are transposed by the partial transpose.
struct WishartConfig {
    int d;
    int n;
    int m;
    std::uint64_t seed;

    WishartConfig(int d_, int n_, int m_, std::uint64_t seed_)
        : d(d_), n(n_), m(m_), seed(seed_) {
        if (d < 1 || n < 1 || m < 1) throw std::domain_error("WishartConfig: d, n, m must be >= 1");
        if (static_cast<long>(d) * n > kSizeCap)
            throw std::domain_error("WishartConfig: d*n exceeds the size cap");
    }
};

/// Counter-based 64-bit generator (splitmix64). Streams derived from
/// (seed xor sample-index) are independent and reproducible regardless of
/// how samples are scheduled across threads.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : state_(seed) {}

    static CounterRng stream(std::uint64_t seed, std::uint64_t index) {
        return CounterRng(seed ^ index);
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform on (0, 1].
    double uniform() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    /// Standard normal via Box-Muller.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double r = std::sqrt(-2.0 * std::log(uniform()));
        double theta = 2.0 * std::numbers::pi * uniform();
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

private:
    std::uint64_t state_;
    double spare_ = 0;
    bool has_spare_ = false;
};

/// Matrix of i.i.d. complex Gaussians with E|G_ij|^2 = 1: (x + iy)/sqrt(2).
inline Eigen::MatrixXcd sample_gaussian_matrix(Eigen::Index rows, Eigen::Index cols,
                                               CounterRng& rng) {
    if (rows < 1 || cols < 1 || rows * cols > static_cast<long>(kSizeCap) * kSizeCap)
        throw std::domain_error("sample_gaussian_matrix: shape out of range");
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Eigen::MatrixXcd g(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) {
            double re = rng.normal(), im = rng.normal();
            g(i, j) = std::complex<double>(re * inv_sqrt2, im * inv_sqrt2);
        }
    return g;
}

/// One Wishart draw; exactly Hermitian by rank-update construction.
inline Eigen::MatrixXcd wishart(const WishartConfig& cfg, std::uint64_t sample_index = 0) {
    auto rng = CounterRng::stream(cfg.seed, sample_index);
    Eigen::Index dn = static_cast<Eigen::Index>(cfg.d) * cfg.n;
    Eigen::Index dm = static_cast<Eigen::Index>(cfg.d) * cfg.m;
    Eigen::MatrixXcd g = sample_gaussian_matrix(dn, dm, rng);
    Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(dn, dn);
    w.selfadjointView<Eigen::Lower>().rankUpdate(g, 1.0 / static_cast<double>(dm));
    w = Eigen::MatrixXcd(w.selfadjointView<Eigen::Lower>());
    return w;
}

/// Transpose each n x n block in place: rows/cols indexed as (i-1)n + a.
inline Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd& w, int d, int n) {
    if (w.rows() != w.cols() || w.rows() != static_cast<long>(d) * n)
        throw std::domain_error("partial_transpose: matrix size is not d*n");
    Eigen::MatrixXcd out = w;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            out.block(static_cast<Eigen::Index>(i) * n, static_cast<Eigen::Index>(j) * n, n, n)
                .transposeInPlace();
    return out;
}

/// Eigenvalues of a Hermitian matrix, ascending.
inline Eigen::VectorXd spectrum(const Eigen::MatrixXcd& h) {
    double scale = h.cwiseAbs().maxCoeff();
    double asym = (h - h.adjoint()).cwiseAbs().maxCoeff();
    if (asym > 1e-10 * (scale > 0 ? scale : 1.0))
        throw std::domain_error("spectrum: matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("spectrum: eigensolver failed");
    return solver.eigenvalues();
}

/// Spectrum of m W^Gamma for one derived sample stream.
struct SpectrumSample {
    WishartConfig config;
    std::uint64_t sample_index;
    Eigen::VectorXd eigenvalues;  // ascending
    double smallest;
};

inline SpectrumSample sample_spectrum(const WishartConfig& cfg, std::uint64_t sample_index = 0) {
    Eigen::MatrixXcd w = wishart(cfg, sample_index);
    Eigen::VectorXd ev = spectrum(partial_transpose(w, cfg.d, cfg.n)) * static_cast<double>(cfg.m);
    return SpectrumSample{cfg, sample_index, ev, ev(0)};
}

/// Independent samples, parallel across derived streams, merged by index.
inline std::vector<SpectrumSample> run_samples(const WishartConfig& cfg, int num_samples) {
    std::vector<SpectrumSample> out(num_samples,
                                    SpectrumSample{cfg, 0, Eigen::VectorXd(), 0.0});
    parallel_for(num_samples, [&](int i) { out[i] = sample_spectrum(cfg, i); });
    return out;
}

/// Normalized power sums of the spectrum for p = 1..p_max.
inline std::vector<double> empirical_moments(const SpectrumSample& s, int p_max) {
    if (p_max < 1 || p_max > 8) throw std::domain_error("empirical_moments: p_max out of range");
    std::vector<double> out(p_max, 0.0);
    for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
        double lambda = s.eigenvalues(i), pw = 1.0;
        for (int p = 0; p < p_max; ++p) {
            pw *= lambda;
            out[p] += pw;
        }
    }
    for (double& v : out) v /= static_cast<double>(s.eigenvalues.size());
    return out;
}

/// One row per eigenvalue: sample_id, index, value.
inline void write_spectra_csv(const std::vector<SpectrumSample>& samples, std::ostream& os) {
    os << "sample_id,index,value\n";
    char buf[40];
    for (const auto& s : samples)
        for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", s.eigenvalues(i));
            os << s.sample_index << "," << i << "," << buf << "\n";
        }
}

inline nlohmann::json spectra_sidecar(const WishartConfig& cfg, int num_samples) {
    nlohmann::json j;
    j["d"] = cfg.d;
    j["n"] = cfg.n;
    j["m"] = cfg.m;
    j["seed"] = cfg.seed;
    j["num_samples"] = num_samples;
    return j;
}

/// Fixed-bin histogram of all eigenvalues, normalized as a density so it can
/// be overlaid on an analytic curve.
inline void write_histogram_csv(const std::vector<SpectrumSample>& samples, int bins, double lo,
                                double hi, std::ostream& os) {
    if (bins < 1 || !(hi > lo)) throw std::domain_error("write_histogram_csv: bad bin layout");
    std::vector<long> count(bins, 0);
    long total = 0;
    for (const auto& s : samples)
        for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
            ++total;
            double x = s.eigenvalues(i);
            if (x < lo || x >= hi) continue;
            ++count[static_cast<int>((x - lo) / (hi - lo) * bins)];
        }
    double width = (hi - lo) / bins;
    os << "bin_lo,bin_hi,count,density\n";
    char buf[128];
    for (int b = 0; b < bins; ++b) {
        double density = total > 0 ? count[b] / (total * width) : 0.0;
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%ld,%.17g", lo + b * width, lo + (b + 1) * width,
                      count[b], density);
        os << buf << "\n";
    }
}

}  // namespace wgamma::rmt
