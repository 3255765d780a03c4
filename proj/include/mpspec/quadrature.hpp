#ifndef MPSPEC_QUADRATURE_HPP
#define MPSPEC_QUADRATURE_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "mpspec/dd.hpp"

namespace mpspec {

// Gauss-Legendre rule on [-1,1]. Nodes by Newton iteration on P_n, cached per order.
struct LegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const LegendreRule& legendre_rule(int n);

// Composite Gauss-Legendre over [a,b] with panels no wider than max_panel.
// Panel edges are placed deterministically; breakpoints force panel edges so
// piecewise-analytic integrands are integrated panel-by-panel at full order.
class PanelGrid {
public:
    PanelGrid(double a, double b, double max_panel, int order = 16,
              const std::vector<double>& breakpoints = {});

    const std::vector<double>& points() const { return x_; }
    const std::vector<double>& weights() const { return w_; }

    template <class F>
    double integrate(F&& f) const {
        dd_accumulator acc;
        for (std::size_t i = 0; i < x_.size(); ++i)
            acc.add(f(x_[i]) * w_[i]);
        return acc.value();
    }

private:
    std::vector<double> x_, w_;
};

// integrate f over [a,b] with composite GL panels
double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        double max_panel, int order = 16,
                        const std::vector<double>& breakpoints = {});

// Adaptive bisection with embedded GL(12)/GL(24) error estimate.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, double rel_tol = 1e-12, int max_depth = 30);

// tanh-sinh rule on (0,1); robust to integrable endpoint singularities.
// The integrand receives (x, dist) with dist the exact distance to the nearer
// endpoint, so singular factors can be evaluated without cancellation.
double integrate_tanh_sinh_01(
    const std::function<double(double, double)>& f, double target_rel = 1e-12,
    int max_level = 12);

// \int_a^b f(x) e^{i x v} dx by composite GL with panels resolving the oscillation.
std::complex<double> fourier_panels(const std::function<double(double)>& f, double a,
                                    double b, double v, double max_panel = 0.5,
                                    int order = 16);

} // namespace mpspec

#endif
