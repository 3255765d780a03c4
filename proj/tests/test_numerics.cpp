#include <doctest.h>

#include <cmath>

#include "mpspec/dd.hpp"
#include "mpspec/quadrature.hpp"
#include "mpspec/tridiag.hpp"

using namespace mpspec;

TEST_CASE("double-double recovers cancelled bits") {
    dd a(1.0), b(1e-17);
    dd s = a + b;
    s = s - a;
    CHECK(static_cast<double>(s) == doctest::Approx(1e-17).epsilon(1e-12));

    dd_accumulator acc;
    for (int i = 0; i < 1000000; ++i) acc.add(0.1);
    CHECK(acc.value() == doctest::Approx(100000.0).epsilon(1e-15));
}

TEST_CASE("Gauss-Legendre rule integrates monomials exactly") {
    const auto& r = legendre_rule(12);
    double s0 = 0, s2 = 0, s10 = 0;
    for (int i = 0; i < 12; ++i) {
        s0 += r.weights[i];
        s2 += r.weights[i] * r.nodes[i] * r.nodes[i];
        s10 += r.weights[i] * std::pow(r.nodes[i], 10);
    }
    CHECK(s0 == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(s2 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(s10 == doctest::Approx(2.0 / 11.0).epsilon(1e-13));
}

TEST_CASE("panel and adaptive integrators agree on a Gaussian") {
    auto f = [](double x) { return std::exp(-x * x / 2.0); };
    double ref = std::sqrt(2.0 * M_PI);
    CHECK(integrate_panels(f, -15.0, 15.0, 0.5) == doctest::Approx(ref).epsilon(1e-14));
    CHECK(integrate_adaptive(f, -15.0, 15.0, 0.0, 1e-13) ==
          doctest::Approx(ref).epsilon(1e-12));
}

TEST_CASE("tanh-sinh handles endpoint singularities on (0,1)") {
    // int_0^1 log^2(x) dx = 2
    double v = integrate_tanh_sinh_01([](double x, double) {
        double l = std::log(x);
        return l * l;
    });
    CHECK(v == doctest::Approx(2.0).epsilon(1e-11));
    // int_0^1 x^{-1/2} dx = 2
    double w =
        integrate_tanh_sinh_01([](double x, double) { return 1.0 / std::sqrt(x); });
    CHECK(w == doctest::Approx(2.0).epsilon(1e-11));
    // near-1 singularity needs the exact endpoint distance: int (1-x)^{-0.9} = 10
    double u = integrate_tanh_sinh_01([](double x, double d) {
        return std::pow(x > 0.5 ? d : 1.0 - x, -0.9);
    });
    CHECK(u == doctest::Approx(10.0).epsilon(1e-9));
}

TEST_CASE("fourier_panels matches a known transform") {
    // int e^{-x^2/2} e^{ixv} dx = sqrt(2 pi) e^{-v^2/2}
    for (double v : {0.0, 1.0, 3.0, 6.0}) {
        auto z = fourier_panels([](double x) { return std::exp(-x * x / 2.0); },
                                -12.0, 12.0, v);
        CHECK(z.real() ==
              doctest::Approx(std::sqrt(2.0 * M_PI) * std::exp(-v * v / 2.0))
                  .epsilon(1e-10));
        CHECK(std::abs(z.imag()) < 1e-12);
    }
}

TEST_CASE("Sturm bisection finds tridiagonal spectra") {
    // second difference matrix: eigenvalues 2 - 2 cos(k pi/(n+1))
    int n = 64;
    SymTridiag T;
    T.diag.assign(n, 2.0);
    T.off.assign(n - 1, -1.0);
    auto ev = eigenvalues_bisect(T);
    for (int k = 1; k <= n; ++k) {
        double expect = 2.0 - 2.0 * std::cos(k * M_PI / (n + 1));
        CHECK(ev[k - 1] == doctest::Approx(expect).epsilon(1e-12));
    }
    CHECK(eigenvalue_bisect(T, 1) == doctest::Approx(ev[1]).epsilon(1e-13));
}
