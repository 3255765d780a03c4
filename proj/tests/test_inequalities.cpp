#include <doctest.h>

#include <cmath>

#include "mpspec/inequalities.hpp"
#include "mpspec/measures.hpp"

using namespace mpspec;

namespace {
std::vector<double> dense_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
    return g;
}
} // namespace

TEST_CASE("hyperbolic inequality anchors") {
    // alpha -> 0 limit of (cosh-1)/(a sinh a) is 1/2
    auto rows = hyperbolic_checks({1e-9, 1.0, M_PI / 8.0});
    for (const auto& r : rows) {
        CAPTURE(r.name);
        CHECK(r.pass);
    }
    // alpha = 1: 1/4 <= (cosh 1 - 1)/sinh 1 <= 1/2
    double v = (std::cosh(1.0) - 1.0) / std::sinh(1.0);
    CHECK(v == doctest::Approx(0.46211715726).epsilon(1e-9));
    CHECK(v >= 0.25);
    CHECK(v <= 0.5);
    // u = pi/8: cos(pi/4) >= 1/2
    CHECK(std::cos(M_PI / 4.0) >= 0.5);
}

TEST_CASE("hyperbolic inequalities hold on 10^4 points, |alpha| <= 50") {
    auto rows = hyperbolic_checks(dense_grid(-50.0, 50.0, 10000));
    REQUIRE(rows.size() == 5);
    for (const auto& r : rows) {
        CAPTURE(r.name);
        CHECK(r.pass);
        CHECK(r.margin >= 0.0);
    }
}

TEST_CASE("poincare estimates for the reference weights") {
    auto mu1 = poincare_estimate(Weight::two_sided_exp());
    CHECK(mu1.converged);
    CHECK(mu1.estimate == doctest::Approx(4.0).epsilon(0.05));

    auto nu = poincare_estimate(Weight::sech());
    CHECK(nu.converged);
    CHECK(nu.estimate > 1.0);
    CHECK(nu.estimate < 2.0);

    auto gauss = poincare_estimate(Weight::custom(
        [](double x) { return -x * x / 2.0 - 0.5 * std::log(2.0 * M_PI); },
        -std::numeric_limits<double>::infinity(),
        std::numeric_limits<double>::infinity(), true, "std_gaussian"));
    CHECK(gauss.converged);
    CHECK(gauss.estimate == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("poincare scaling invariance") {
    double base = poincare_estimate(Weight::sech()).estimate;
    for (double lam : {0.5, 2.0}) {
        double scaled = poincare_estimate(Weight::sech().dilated(lam)).estimate;
        CAPTURE(lam);
        CHECK(std::abs(scaled * lam * lam - base) <= 0.02 * base);
    }
}

TEST_CASE("perturbation bound for the sech weight") {
    auto r = poincare_perturbation_check(Weight::sech());
    CHECK(r.ok);
    CHECK(r.cp_perturbed > r.cp_base); // the log^2 tilt slows mixing
    CHECK(r.bound >= r.cp_base);       // degenerate sanity: bound >= C_P(nu)
    CHECK(r.cp_perturbed <= r.bound);

    CHECK_THROWS_AS(poincare_perturbation_check(Weight::two_sided_exp()),
                    std::invalid_argument);
}
