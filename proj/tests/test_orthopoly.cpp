#include <doctest.h>

#include <cmath>
#include <complex>

#include "mpspec/common.hpp"
#include "mpspec/measures.hpp"
#include "mpspec/orthopoly.hpp"
#include "oracle_helpers.hpp"

using namespace mpspec;

TEST_CASE("generating-function Taylor anchors") {
    auto g1 = generating_taylor(1, 2);
    CHECK(g1[0] == PolyExact({Rational(1)}));
    CHECK(g1[1] == PolyExact({Rational(0), Rational(1)}));
    // P_2^{(1)} = (x^2 - 1)/2
    CHECK(g1[2] == PolyExact({Rational(-1, 2), Rational(0), Rational(1, 2)}));
    // P_2^{(2)} = (x^2 - 2)/2
    auto g2 = generating_taylor(2, 2);
    CHECK(g2[2] == PolyExact({Rational(-1), Rational(0), Rational(1, 2)}));
    // P_2^{(3)} = (x^2 - 3)/2
    auto g3 = generating_taylor(3, 2);
    CHECK(g3[2] == PolyExact({Rational(-3, 2), Rational(0), Rational(1, 2)}));
}

TEST_CASE("recurrence equals generating series exactly, k <= 30, ell <= 4") {
    for (int ell = 1; ell <= 4; ++ell) {
        auto rec = mp_recurrence_exact(ell, 30);
        auto gen = generating_taylor(ell, 30);
        for (int k = 0; k <= 30; ++k) {
            CAPTURE(ell);
            CAPTURE(k);
            CHECK(rec[k] == gen[k]);
        }
    }
}

TEST_CASE("leading coefficient is 1/k!") {
    auto P = mp_recurrence_exact(2, 12);
    Rational fact(1);
    for (int k = 1; k <= 12; ++k) {
        fact *= k;
        CHECK(P[k].coeffs.back() == Rational(1) / fact);
    }
}

TEST_CASE("norms are binomial(k+ell-1, k)") {
    CHECK(mp_norm_sq_exact(2, 3) == Rational(4)); // C(4,3)
    CHECK(mp_norm_sq_exact(1, 7) == Rational(1));
    CHECK(mp_norm_sq_exact(3, 4) == Rational(15));
    OrthoBasis b = OrthoBasis::meixner_pollaczek(2, 8);
    CHECK(b.norm_sq(3) == doctest::Approx(4.0));
}

TEST_CASE("mp_eval against exact rational evaluation") {
    // anchors
    CHECK(mp_eval(1, 2, {0.0, 1.0}) ==
          std::complex<double>(-1.0, 0.0)); // (i^2-1)/2
    CHECK(mp_eval(1, 1, {3.0, 0.0}).real() == doctest::Approx(3.0));
    auto P = mp_recurrence_exact(1, 60);
    CHECK(mp_eval(1, 5, {0.0, 0.0}).real() ==
          doctest::Approx(P[5].eval(Rational(0)).get_d()));
    // P_5 = (x^5 - 30 x^3 + 89 x)/120
    CHECK(P[5] == PolyExact({Rational(0), Rational(89, 120), Rational(0),
                             Rational(-1, 4), Rational(0), Rational(1, 120)}));

    for (int k : {10, 25, 40, 60}) {
        for (double x : {-50.0, -7.5, -0.3, 0.9, 12.0, 50.0}) {
            CAPTURE(k);
            CAPTURE(x);
            double exact = Rational(P[k].eval(Rational(x))).get_d();
            double got = mp_eval(1, k, {x, 0.0}).real();
            CHECK(got == doctest::Approx(exact).epsilon(1e-12));
        }
    }
}

TEST_CASE("gauss rule anchors for MP(1)") {
    OrthoBasis b = OrthoBasis::meixner_pollaczek(1, 64);
    GaussRule r1 = gauss_rule(b, 1);
    CHECK(r1.nodes[0] == doctest::Approx(0.0));
    CHECK(r1.weights[0] == doctest::Approx(1.0));

    GaussRule r2 = gauss_rule(b, 2);
    CHECK(r2.nodes[0] == doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(r2.nodes[1] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(r2.weights[0] == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(r2.weights[1] == doctest::Approx(0.5).epsilon(1e-13));

    GaussRule r40 = gauss_rule(b, 40);
    double m2 = r40.integrate([](double x) { return x * x; });
    CHECK(m2 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("gauss rules integrate monomials to the mgf-Taylor moments") {
    for (int ell : {1, 2}) {
        OrthoBasis b = OrthoBasis::meixner_pollaczek(ell, 64);
        GaussRule r = gauss_rule(b, 24);
        double total = 0.0;
        for (double w : r.weights) total += w;
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
        for (int p : {2, 4, 6, 8, 12}) {
            CAPTURE(ell);
            CAPTURE(p);
            double mref = oracle::nu_ell_moment(ell, p);
            double mq = r.integrate([&](double x) { return std::pow(x, p); });
            CHECK(mq == doctest::Approx(mref).epsilon(1e-10));
        }
    }
}

TEST_CASE("node interlacing of consecutive rules") {
    OrthoBasis b = OrthoBasis::meixner_pollaczek(1, 40);
    for (int n : {5, 12, 31}) {
        GaussRule a = gauss_rule(b, n);
        GaussRule c = gauss_rule(b, n + 1);
        for (int i = 0; i < n; ++i) {
            CHECK(c.nodes[i] < a.nodes[i]);
            CHECK(a.nodes[i] < c.nodes[i + 1]);
        }
    }
}

TEST_CASE("orthogonality under the gauss rule, all ell in {1,2,3}") {
    // Gram matrix of P_j, P_k under nu_ell via a 200-node rule
    for (int ell : {1, 2, 3}) {
        OrthoBasis b = OrthoBasis::meixner_pollaczek(ell, 200);
        GaussRule r = gauss_rule(b, 200);
        const int K = 60;
        std::vector<std::vector<double>> vals(r.size());
        std::vector<double> p;
        for (int i = 0; i < r.size(); ++i) {
            b.eval_orthonormal(r.nodes[i], K, p);
            vals[i] = p;
        }
        double worst = 0.0;
        for (int j = 0; j <= K; ++j)
            for (int k = j; k <= K; ++k) {
                double g = 0.0;
                for (int i = 0; i < r.size(); ++i)
                    g += r.weights[i] * vals[i][j] * vals[i][k];
                // orthonormal gram: delta_jk
                double err = std::abs(g - (j == k ? 1.0 : 0.0));
                worst = std::max(worst, err);
            }
        CAPTURE(ell);
        CHECK(worst <= 1e-9);
    }
}

TEST_CASE("laguerre values, derivative, and the xe^{-x} orthogonality") {
    CHECK(laguerre_eval(0, 7.0) == doctest::Approx(1.0));
    CHECK(laguerre_eval(1, 0.3) == doctest::Approx(0.7));
    CHECK(laguerre_eval(2, 0.0) == doctest::Approx(1.0));
    for (int k : {1, 2, 5, 17, 40}) {
        for (double x : {0.0, 0.4, 3.0, 19.0}) {
            CAPTURE(k);
            CAPTURE(x);
            CHECK(laguerre_eval(k, x) ==
                  doctest::Approx(oracle::laguerre_rodrigues(k, x)).epsilon(1e-10));
            double h = 1e-6 * (1.0 + std::abs(x));
            double fd = (oracle::laguerre_rodrigues(k, x + h) -
                         oracle::laguerre_rodrigues(k, x - h)) /
                        (2 * h);
            CHECK(laguerre_deriv(k, x) == doctest::Approx(fd).epsilon(1e-7));
        }
    }

    // int L_k' L_m' x e^{-x} dx = k delta_km for k,m <= 40
    OrthoBasis alpha1 = OrthoBasis::laguerre(128, 1.0);
    GaussRule r = gauss_rule(alpha1, 100);
    double worst = 0.0;
    for (int k = 1; k <= 40; ++k)
        for (int m = k; m <= 40; ++m) {
            double g = r.integrate([&](double x) {
                return laguerre_deriv(k, x) * laguerre_deriv(m, x);
            });
            worst = std::max(worst, std::abs(g - (k == m ? k : 0.0)));
        }
    CHECK(worst <= 1e-9);
}

TEST_CASE("error paths") {
    CHECK_THROWS_AS(mp_recurrence_exact(1, 100000), resolution_error);
    CHECK_THROWS_AS(OrthoBasis::meixner_pollaczek(0, 4), std::invalid_argument);
    OrthoBasis b = OrthoBasis::meixner_pollaczek(1, 8);
    CHECK_THROWS_AS(gauss_rule(b, 9), std::invalid_argument);
}
