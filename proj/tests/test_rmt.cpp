#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "wgamma/compare.hpp"
#include "wgamma/wishart.hpp"

using namespace wgamma;
using namespace wgamma::rmt;

TEST_CASE("config validation") {
    CHECK_THROWS_AS(WishartConfig(0, 1, 1, 0), std::domain_error);
    CHECK_THROWS_AS(WishartConfig(4097, 1, 1, 0), std::domain_error);
    CHECK_NOTHROW(WishartConfig(64, 2, 2, 0));

    CounterRng rng(1);
    CHECK_THROWS_AS(sample_gaussian_matrix(0, 3, rng), std::domain_error);
    CHECK_THROWS_AS(sample_gaussian_matrix(4096, 4097, rng), std::domain_error);
}

TEST_CASE("gaussian entries: unit second moment, centered, deterministic") {
    CounterRng rng(123);
    auto g = sample_gaussian_matrix(200, 200, rng);
    double mean_sq = g.cwiseAbs2().mean();
    CHECK(mean_sq == doctest::Approx(1.0).epsilon(0.02));
    std::complex<double> mean = g.mean();
    CHECK(std::abs(mean) < 0.02);

    CounterRng rng2(123);
    auto g2 = sample_gaussian_matrix(200, 200, rng2);
    CHECK((g - g2).cwiseAbs().maxCoeff() == 0.0);

    CounterRng rng3(124);
    auto g3 = sample_gaussian_matrix(200, 200, rng3);
    CHECK((g - g3).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("wishart matrices are Hermitian PSD with unit normalized trace") {
    WishartConfig cfg(40, 3, 2, 9);
    auto w = wishart(cfg);
    CHECK((w - w.adjoint()).cwiseAbs().maxCoeff() == 0.0);

    auto ev = spectrum(w);
    CHECK(ev(0) >= -1e-12);
    // E[tr W] = 1; fluctuation O(1/d)
    CHECK(w.trace().real() / (40 * 3) == doctest::Approx(1.0).epsilon(0.1));

    // scalar case concentrates around 1
    WishartConfig scalar(1, 1, 1000, 5);
    auto s = wishart(scalar);
    CHECK(s(0, 0).real() == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("partial transpose is an involutive trace-preserving Hermitian map") {
    WishartConfig cfg(12, 5, 2, 31);
    auto w = wishart(cfg);
    auto wg = partial_transpose(w, 12, 5);
    CHECK((partial_transpose(wg, 12, 5) - w).cwiseAbs().maxCoeff() == 0.0);
    CHECK(std::abs((wg.trace() - w.trace())) == 0.0);
    CHECK((wg - wg.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    CHECK_THROWS_AS(partial_transpose(w, 12, 4), std::domain_error);
}

TEST_CASE("d = 1 partial transpose preserves the spectrum") {
    WishartConfig cfg(1, 24, 3, 17);
    auto w = wishart(cfg);
    auto ev_w = spectrum(w);
    auto ev_g = spectrum(partial_transpose(w, 1, 24));
    CHECK((ev_w - ev_g).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("spectrum on known matrices") {
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(5, 5);
    auto ev = spectrum(id);
    for (int i = 0; i < 5; ++i) CHECK(ev(i) == doctest::Approx(1.0));

    Eigen::MatrixXcd diag = Eigen::Vector3cd(3, 1, 2).asDiagonal();
    auto evd = spectrum(diag);
    CHECK(evd(0) == doctest::Approx(1.0));
    CHECK(evd(1) == doctest::Approx(2.0));
    CHECK(evd(2) == doctest::Approx(3.0));

    Eigen::MatrixXcd pauli(2, 2);
    pauli << 0, 1, 1, 0;
    auto evp = spectrum(pauli);
    CHECK(evp(0) == doctest::Approx(-1.0));
    CHECK(evp(1) == doctest::Approx(1.0));

    Eigen::MatrixXcd bad(2, 2);
    bad << 0, 1, 2, 0;
    CHECK_THROWS_AS(spectrum(bad), std::domain_error);
}

TEST_CASE("eigensolver residuals stay below 1e-8 * norm") {
    WishartConfig cfg(20, 2, 2, 77);
    auto w = wishart(cfg);
    auto h = partial_transpose(w, 20, 2);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    double hnorm = h.operatorNorm();
    for (int i = 0; i < h.rows(); ++i) {
        double resid = (h * es.eigenvectors().col(i) -
                        es.eigenvalues()(i) * es.eigenvectors().col(i))
                           .norm();
        CHECK(resid <= 1e-8 * hnorm);
    }
}

TEST_CASE("spectrum sum matches the scaled trace") {
    WishartConfig cfg(30, 3, 2, 3);
    auto w = wishart(cfg);
    auto s = sample_spectrum(cfg);
    double lhs = s.eigenvalues.sum();
    double rhs = cfg.m * w.trace().real();
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
    CHECK(s.smallest == s.eigenvalues(0));
}

TEST_CASE("sampling is reproducible and thread-count independent") {
    WishartConfig cfg(16, 2, 2, 42);
    auto a = run_samples(cfg, 6);
    auto b = run_samples(cfg, 6);
    REQUIRE(a.size() == 6);
    for (int i = 0; i < 6; ++i)
        CHECK((a[i].eigenvalues - b[i].eigenvalues).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("empirical moments approach the exact limit") {
    // small d keeps this fast; first moment has no finite-size correction
    WishartConfig cfg(48, 2, 2, 2024);
    int N = 20;
    auto samples = run_samples(cfg, N);
    double m1 = 0, m2 = 0;
    for (const auto& s : samples) {
        auto mom = empirical_moments(s, 2);
        m1 += mom[0];
        m2 += mom[1];
    }
    m1 /= N;
    m2 /= N;
    CHECK(m1 == doctest::Approx(2.0).epsilon(0.02));
    CHECK(m2 == doctest::Approx(8.0).epsilon(0.05));
}

TEST_CASE("compare report: sane z-scores at a quick configuration") {
    WishartConfig cfg(64, 2, 2, 7);
    auto report = compare_report(cfg, 12, 4);
    REQUIRE(report.rows.size() == 4);
    CHECK(report.rows[0].analytic == doctest::Approx(2.0));
    CHECK(report.rows[1].analytic == doctest::Approx(8.0));
    CHECK(report.rows[2].analytic == doctest::Approx(34.0));
    CHECK(report.rows[3].analytic == doctest::Approx(164.0));
    for (const auto& row : report.rows) {
        CHECK(std::abs(row.z) <= 6.0);
        CHECK(row.bootstrap_se > 0.0);
    }
    CHECK(report.support_infimum < report.smallest_mean);

    auto text = format_table(report);
    CHECK(text.find("smallest eigenvalue") != std::string::npos);
}

TEST_CASE("spectra csv and sidecar formats") {
    WishartConfig cfg(4, 2, 1, 11);
    auto samples = run_samples(cfg, 2);
    std::ostringstream csv;
    write_spectra_csv(samples, csv);
    std::string s = csv.str();
    CHECK(s.rfind("sample_id,index,value\n", 0) == 0);
    std::size_t rows = 0;
    for (char c : s) rows += (c == '\n');
    CHECK(rows == 1 + 2 * 8);

    auto sidecar = spectra_sidecar(cfg, 2);
    CHECK(sidecar["d"] == 4);
    CHECK(sidecar["num_samples"] == 2);

    std::ostringstream hist;
    write_histogram_csv(samples, 4, -1.0, 3.0, hist);
    CHECK(hist.str().rfind("bin_lo,bin_hi,count,density\n", 0) == 0);
}
