#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>

#include "wgamma/cauchy.hpp"
#include "wgamma/density_curve.hpp"
#include "wgamma/laws.hpp"
#include "wgamma/moments.hpp"
#include "wgamma/params.hpp"
#include "wgamma/quadrature.hpp"

using namespace wgamma;
using std::numbers::pi;

TEST_CASE("Params validates its domain") {
    CHECK_THROWS_AS(Params(-0.5, 2), std::domain_error);
    CHECK_THROWS_AS(Params(1, 0.5), std::domain_error);
    Params p(3, 2);
    CHECK(p.poisson_plus() == doctest::Approx(4.5));
    CHECK(p.poisson_minus() == doctest::Approx(1.5));
}

TEST_CASE("atom mass max(1 - mn, 0)") {
    CHECK(atom_mass(Params(2, 1)) == 0.0);
    CHECK(atom_mass(Params(0.25, 2)) == doctest::Approx(0.5));
    CHECK(atom_mass(Params(0.5, 2)) == 0.0);  // mn = 1 boundary
}

TEST_CASE("cauchy transform behaves like 1/xi at infinity") {
    for (auto [m, n] : {std::pair{1.0, 1.0}, {2.0, 3.0}, {0.25, 2.0}}) {
        std::complex<double> xi(0, 1e6);
        auto g = cauchy_transform(Params(m, n), xi);
        CHECK(std::abs(g * xi - 1.0) < 1e-5);
    }
}

TEST_CASE("cauchy transform matches the Marchenko-Pastur closed form") {
    // MP(1): G(xi) = (xi - sqrt(xi^2 - 4 xi)) / (2 xi); at xi = 5 + i eps
    auto g = cauchy_transform(Params(1, 1), {5.0, 1e-9});
    CHECK(g.real() == doctest::Approx((5.0 - std::sqrt(5.0)) / 10.0).epsilon(1e-6));
    CHECK(std::abs(g.imag()) < 1e-4);
}

TEST_CASE("cauchy transform is Herglotz at random points") {
    std::mt19937 gen(42);
    std::uniform_real_distribution<double> um(0.05, 8.0), un(1.0, 5.0), ux(-10.0, 15.0),
        uy(1e-6, 10.0);
    for (int i = 0; i < 1000; ++i) {
        Params p(um(gen), un(gen));
        std::complex<double> xi(ux(gen), uy(gen));
        auto g = cauchy_transform(p, xi);
        CHECK(g.imag() < 0.0);
    }
}

TEST_CASE("cauchy transform rejects the closed lower half-plane") {
    CHECK_THROWS_AS(cauchy_transform(Params(1, 1), {1.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(cauchy_transform(Params(1, 1), {1.0, -1.0}), std::domain_error);
}

TEST_CASE("density at pinned points") {
    CHECK(density(Params(1, 1), 2.0) == doctest::Approx(1 / (2 * pi)).epsilon(1e-10));
    CHECK(density(Params(1, 1), -1e6) == 0.0);
    CHECK(density(Params(1, 1), 1e6) == 0.0);
    // (1,2) has zero in the interior of its support: rho(0) = sqrt(3)/(2 pi)
    CHECK(density(Params(1, 2), 0.0) ==
          doctest::Approx(std::sqrt(3.0) / (2 * pi)).epsilon(1e-6));
}

TEST_CASE("density equals the epsilon-regularized limit") {
    for (auto [m, n, x] : {std::tuple{1.0, 1.0, 2.0}, {2.0, 3.0, 1.5}, {1.0, 2.0, 0.5}}) {
        Params p(m, n);
        double direct = density(p, x);
        double prev_gap = 1e300;
        for (double eps : {1e-4, 1e-6, 1e-8}) {
            double reg = -cauchy_transform(p, {x, eps}).imag() / pi;
            double gap = std::abs(reg - direct);
            CHECK(gap < 10 * std::sqrt(eps));
            CHECK(gap < prev_gap + 1e-12);
            prev_gap = gap;
        }
    }
}

TEST_CASE("mp density pinned values") {
    CHECK(mp_density(1, 2) == doctest::Approx(1 / (2 * pi)).epsilon(1e-12));
    CHECK(mp_density(1, 4) == 0.0);
    CHECK(mp_density(4, 1) == 0.0);  // lower edge of MP(4) is exactly 1
    CHECK_THROWS_AS(mp_density(0, 1), std::domain_error);
}

TEST_CASE("semicircle density pinned values") {
    CHECK(semicircle_density(1, 1) == doctest::Approx(1 / pi).epsilon(1e-12));
    CHECK(semicircle_density(1, 3) == 0.0);
    CHECK(semicircle_density(4, 1) == doctest::Approx(1 / (2 * pi)).epsilon(1e-12));
    CHECK_THROWS_AS(semicircle_density(0, 1), std::domain_error);
}

TEST_CASE("density specializes to Marchenko-Pastur at n = 1") {
    for (double m : {0.5, 1.0, 4.0}) {
        StieltjesDensity rho(Params(m, 1));
        auto [lo, hi] = mp_edges(m);
        double sup = 0;
        for (int i = 0; i < 200; ++i) {
            double x = lo + 1e-3 + (hi - lo - 2e-3) * i / 199.0;
            sup = std::max(sup, std::abs(rho(x) - mp_density(m, x)));
        }
        CHECK(sup < 1e-6);
    }
}

TEST_CASE("quadrature integrates sqrt edge singularities") {
    // int_0^1 1/sqrt(x) dx = 2, int_0^4 sqrt(x(4-x)) dx = 2 pi
    double v1 = quad::integrate_sqrt_edges([](double x) { return 1 / std::sqrt(x); }, 0, 1);
    CHECK(v1 == doctest::Approx(2.0).epsilon(1e-9));
    double v2 =
        quad::integrate_sqrt_edges([](double x) { return std::sqrt(x * (4 - x)); }, 0, 4);
    CHECK(v2 == doctest::Approx(2 * pi).epsilon(1e-9));
}

TEST_CASE("density curves normalize and reproduce exact moments") {
    for (auto [m, n] : {std::pair{1.0, 1.0}, {2.0, 3.0}, {0.25, 2.0}, {8.0, 1.5}}) {
        auto curve = build_density_curve(Params(m, n), 64);
        CHECK(numeric_moment(curve, 0) == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(numeric_moment(curve, 1) == doctest::Approx(m).epsilon(1e-5));
        CHECK(numeric_moment(curve, 2) == doctest::Approx(m * m + m * n).epsilon(1e-5));
    }
}

TEST_CASE("continuous part carries mass mn when there is an atom") {
    auto curve = build_density_curve(Params(0.25, 2), 64);
    CHECK(curve.atom == doctest::Approx(0.5));
    CHECK(numeric_moment(curve, 0) - curve.atom == doctest::Approx(0.5).epsilon(1e-4));
}

TEST_CASE("mgf series in doubles matches quadrature moments") {
    auto f = nc::mgf_series(2.0, 3.0, 4);
    auto curve = build_density_curve(Params(2, 3), 64);
    for (int p = 1; p <= 4; ++p)
        CHECK(numeric_moment(curve, p) == doctest::Approx(f[p]).epsilon(1e-4));
}

TEST_CASE("curve grid is nonnegative, zero outside the edge hull") {
    auto curve = build_density_curve(Params(1, 1.2), 256);
    double lo = curve.support_edges.front(), hi = curve.support_edges.back();
    for (auto [x, r] : curve.grid) {
        CHECK(r >= 0.0);
        if (x < lo - 1e-9 || x > hi + 1e-9) CHECK(r == 0.0);
    }
}

TEST_CASE("csv serialization is stable and carries the JSON header") {
    auto curve = build_density_curve(Params(1, 2), 16);
    std::ostringstream a, b;
    write_csv(curve, a);
    write_csv(curve, b);
    CHECK(a.str() == b.str());
    CHECK(a.str().substr(0, 2) == "# ");
    CHECK(a.str().find("\"m\":1.0") != std::string::npos);
    CHECK(a.str().find("x,rho\n") != std::string::npos);
    // one data row per grid point
    std::size_t rows = 0;
    for (char c : a.str()) rows += (c == '\n');
    CHECK(rows == 2 + curve.grid.size());
}

TEST_CASE("numeric_moment refuses a non-normalized curve") {
    auto curve = build_density_curve(Params(0.25, 2), 32);
    curve.atom = 0.0;  // break normalization on purpose
    CHECK_THROWS_AS(numeric_moment(curve, 1), std::domain_error);
}
