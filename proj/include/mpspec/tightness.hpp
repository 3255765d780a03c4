#ifndef MPSPEC_TIGHTNESS_HPP
#define MPSPEC_TIGHTNESS_HPP

#include <functional>
#include <string>
#include <vector>

#include "mpspec/spectral.hpp"
#include "mpspec/strip.hpp"

namespace mpspec {

// Piecewise-linear convex weight built from a divergent sequence a_k:
// slope i on [x_i, x_{i+1}), tau(0) = 0.
class TauFunction {
public:
    TauFunction(std::vector<double> breakpoints); // x_1 = 0 < x_2 < ...

    double operator()(double x) const;
    double deriv(double x) const; // right derivative
    const std::vector<double>& breakpoints() const { return x_; }

private:
    std::vector<double> x_;      // x_[i] is x_{i+1} in 1-based terms
    std::vector<double> value_;  // tau at each breakpoint
};

// Convex-weight construction: breakpoints x_{i+1} =
// max(16(i+1)^2, log^2(e+k_{i+1}), x_i + 1) with k_i = min{k : a_k >= i},
// probed up to k_max, so that tau(log^2(e+k)) <= a_k log^2(e+k) for every k.
// Throws when the sequence never reaches level 2 (divergence cannot be
// witnessed on the probed range).
TauFunction build_tau(const std::function<double(int)>& a, int k_max);

// MP(1) coefficients of F_lambda on a Gaussian-support panel grid.
SpectralExpansion flambda_expansion(double lambda, int N);

// sum_{k>=1} seq(k) (F_lambda)_k^2 with a tail-dominance guard: the top half
// of the computed range must contribute <= 1e-6 of the head, else a
// resolution_error asks for larger N.
double flambda_weighted_energy(double lambda, const std::function<double(int)>& seq,
                               int N, double* tail_fraction = nullptr);

struct ExperimentRow {
    double lambda;
    double weighted_sum;    // sum a_k log^2(e+k) f_k^2 (head at N)
    double weighted_tail_fraction;
    double k_energy;        // sum k f_k^2 via the strip identity
    double e2, e8, e32, e128;
};

struct ExperimentReport {
    std::vector<ExperimentRow> rows;
    bool weighted_increasing;
    double en_bound_constant; // max over rows of E_n * min(n/e^{lam^2}, lam^2)
    double slope_log_kenergy_vs_lambda_sq;
};

ExperimentReport divergence_experiment(const std::function<double(int)>& a,
                                       const std::vector<double>& lambda_grid, int N);

} // namespace mpspec

#endif
