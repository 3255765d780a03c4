#ifndef MPSPEC_INEQUALITIES_HPP
#define MPSPEC_INEQUALITIES_HPP

#include <string>
#include <vector>

#include "mpspec/measures.hpp"

namespace mpspec {

struct CheckRow {
    std::string name;
    double worst_point;
    double margin;
    bool pass;
};

// Pointwise hyperbolic inequalities on the grid:
//   1/(2(1+|a|)) <= (cosh a - 1)/(a sinh a) <= 1/2
//   (cosh a - 1)/a^2 <= 2 cosh a/(1+a^2)
//   cos(2u) >= 1 - 4|u|/pi on |u| <= pi/4
//   sin x >= 2x/pi on [0, pi/2]
std::vector<CheckRow> hyperbolic_checks(const std::vector<double>& grid);

struct PoincareEstimate {
    double estimate;   // 1/lambda_1 of the discretized form
    double refined;    // same at doubled point count
    double grid_bound; // truncation actually used
    int points;
    bool converged;    // |estimate - refined| <= 2% relative
};

// Discretized Sturm-Liouville Rayleigh quotient, M points, spectral gap by
// Sturm bisection. X = 0 uses the weight's own -80 log-density truncation
// (keeps the grid scale-aware so dilated weights discretize identically).
PoincareEstimate poincare_estimate(const Weight& w, double X = 0.0, int M = 8001);

struct PerturbationCheck {
    double cp_base;     // C_P(nu)
    double cp_perturbed;
    double bound;       // 4 C (1 + log^+(4C/e)/2)^2
    bool ok;
};

// Perturbation bound for the log^2(e+|x|)-tilted sech weight.
PerturbationCheck poincare_perturbation_check(const Weight& w);

} // namespace mpspec

#endif
