#include "mpspec/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mpspec/common.hpp"
#include "mpspec/tridiag.hpp"

namespace mpspec {

namespace {

// (cosh a - 1)/(a sinh a), series near 0 (limit 1/2)
double ratio_cosh_sinh(double a) {
    if (std::abs(a) < 1e-4) {
        double s = a * a;
        return 0.5 * (1.0 - s / 12.0 + s * s / 120.0);
    }
    // (cosh a - 1)/(a sinh a) = tanh(a/2)/a
    return std::tanh(0.5 * a) / a;
}

// (cosh a - 1)/a^2, series near 0 (limit 1/2)
double ratio_cosh_sq(double a) {
    if (std::abs(a) < 1e-4) {
        double s = a * a;
        return 0.5 + s / 24.0 + s * s / 720.0;
    }
    return (std::cosh(a) - 1.0) / (a * a);
}

} // namespace

std::vector<CheckRow> hyperbolic_checks(const std::vector<double>& grid) {
    std::vector<CheckRow> rows;
    auto run = [&](const std::string& name, auto&& margin_fn,
                   auto&& point_filter) {
        CheckRow row{name, 0.0, std::numeric_limits<double>::infinity(), true};
        for (double a : grid) {
            if (!point_filter(a)) continue;
            double m = margin_fn(a);
            if (m < row.margin) {
                row.margin = m;
                row.worst_point = a;
            }
        }
        row.pass = row.margin >= 0.0;
        rows.push_back(row);
    };

    run("cosh_ratio_upper", // 1/2 - (cosh-1)/(a sinh a) >= 0
        [](double a) { return 0.5 - ratio_cosh_sinh(a); },
        [](double) { return true; });
    run("cosh_ratio_lower", // (cosh-1)/(a sinh a) - 1/(2(1+|a|)) >= 0
        [](double a) { return ratio_cosh_sinh(a) - 0.5 / (1.0 + std::abs(a)); },
        [](double) { return true; });
    run("cosh_sq_bound", // 2cosh/(1+a^2) - (cosh-1)/a^2 >= 0
        [](double a) {
            // scale-free margin: divide by cosh to keep large-a values finite
            double c = std::cosh(a);
            return (2.0 * c / (1.0 + a * a) - ratio_cosh_sq(a)) / c;
        },
        [](double) { return true; });
    run("cos2u_linear", // cos(2u) >= 1 - 4|u|/pi on |u| <= pi/4
        [](double u) { return std::cos(2.0 * u) - (1.0 - 4.0 * std::abs(u) / M_PI); },
        [](double u) { return std::abs(u) <= M_PI / 4.0; });
    run("sin_concave", // sin x >= 2x/pi on [0, pi/2]
        [](double x) { return std::sin(x) - 2.0 * x / M_PI; },
        [](double x) { return x >= 0.0 && x <= M_PI_2; });
    return rows;
}

namespace {

double spectral_gap(const Weight& w, double X, int M) {
    double X_eff = X > 0.0 ? std::min(X, w.truncation_bound())
                           : w.truncation_bound();
    double lo = std::max(w.support_lo(), -X_eff);
    double hi = std::min(w.support_hi(), X_eff);
    if (!(hi > lo)) throw std::invalid_argument("poincare: empty grid");
    double h = (hi - lo) / (M - 1);

    // Dirichlet form with midpoint weights, lumped mass, natural boundary
    std::vector<double> wm(M - 1), mass(M);
    for (int i = 0; i + 1 < M; ++i)
        wm[i] = w.density(lo + (i + 0.5) * h) / h;
    for (int i = 0; i < M; ++i) mass[i] = w.density(lo + i * h) * h;
    // guard against zero mass at extreme nodes
    double floor_mass = 0.0;
    for (double m : mass) floor_mass = std::max(floor_mass, m);
    floor_mass *= 1e-250;
    for (double& m : mass)
        if (m < floor_mass) m = floor_mass;

    SymTridiag C;
    C.diag.assign(M, 0.0);
    C.off.assign(M - 1, 0.0);
    for (int i = 0; i < M; ++i) {
        double a = 0.0;
        if (i > 0) a += wm[i - 1];
        if (i + 1 < M) a += wm[i];
        C.diag[i] = a / mass[i];
    }
    for (int i = 0; i + 1 < M; ++i)
        C.off[i] = -wm[i] / std::sqrt(mass[i] * mass[i + 1]);

    // lambda_0 ~ 0 (constants); the gap is the second eigenvalue
    return eigenvalue_bisect(C, 1);
}

} // namespace

PoincareEstimate poincare_estimate(const Weight& w, double X, int M) {
    if (M < 16) throw std::invalid_argument("poincare_estimate: M too small");
    PoincareEstimate out;
    out.grid_bound =
        X > 0.0 ? std::min(X, w.truncation_bound()) : w.truncation_bound();
    out.points = M;
    double gap = spectral_gap(w, X, M);
    double gap2 = spectral_gap(w, X, 2 * M - 1);
    if (!(gap > 0.0) || !(gap2 > 0.0))
        throw numeric_error("poincare_estimate: nonpositive spectral gap");
    out.estimate = 1.0 / gap;
    out.refined = 1.0 / gap2;
    out.converged = std::abs(out.estimate - out.refined) <= 0.02 * out.refined;
    return out;
}

PerturbationCheck poincare_perturbation_check(const Weight& w) {
    if (w.kind() != WeightKind::Sech)
        throw std::invalid_argument("poincare_perturbation_check: Sech weight required");
    PerturbationCheck out;
    out.cp_base = poincare_estimate(w).estimate;
    out.cp_perturbed = poincare_estimate(Weight::log_perturbed_sech()).estimate;
    double arg = 4.0 * out.cp_base / M_E;
    double logp = std::max(0.0, std::log(arg));
    out.bound = 4.0 * out.cp_base * (1.0 + 0.5 * logp) * (1.0 + 0.5 * logp);
    out.ok = out.cp_perturbed <= out.bound;
    return out;
}

} // namespace mpspec
