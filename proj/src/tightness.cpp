#include "mpspec/tightness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mpspec/common.hpp"
#include "mpspec/dd.hpp"
#include "mpspec/quadrature.hpp"

namespace mpspec {

TauFunction::TauFunction(std::vector<double> breakpoints) : x_(std::move(breakpoints)) {
    if (x_.empty() || x_.front() != 0.0)
        throw std::invalid_argument("TauFunction: breakpoints must start at 0");
    for (std::size_t i = 1; i < x_.size(); ++i)
        if (!(x_[i] > x_[i - 1]))
            throw std::invalid_argument("TauFunction: breakpoints must increase");
    value_.resize(x_.size());
    value_[0] = 0.0;
    for (std::size_t i = 1; i < x_.size(); ++i)
        value_[i] = value_[i - 1] + static_cast<double>(i) * (x_[i] - x_[i - 1]);
}

double TauFunction::operator()(double x) const {
    if (x <= 0.0) return 0.0;
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - x_.begin()) - 1;
    return value_[i] + static_cast<double>(i + 1) * (x - x_[i]);
}

double TauFunction::deriv(double x) const {
    if (x < 0.0) return 0.0;
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    return static_cast<double>(it - x_.begin());
}

TauFunction build_tau(const std::function<double(int)>& a, int k_max) {
    if (k_max < 1) throw std::invalid_argument("build_tau: k_max >= 1 required");
    // level sets k_i = min{k : a_k >= i}; a nondecreasing so one forward scan
    std::vector<long long> levels; // levels[i-1] = k_i
    int k = 0;
    for (int i = 1;; ++i) {
        while (k <= k_max && a(k) < static_cast<double>(i)) ++k;
        if (k > k_max) break;
        levels.push_back(k);
    }
    if (levels.size() < 2)
        throw resolution_error(
            "build_tau: sequence never reaches level 2 on the probed range; "
            "a divergent sequence is required");
    std::vector<double> bp{0.0};
    for (std::size_t i = 1; i < levels.size(); ++i) {
        double le = std::log(M_E + static_cast<double>(levels[i]));
        double next = std::max({16.0 * (i + 1.0) * (i + 1.0), le * le, bp.back() + 1.0});
        bp.push_back(next);
    }
    return TauFunction(std::move(bp));
}

SpectralExpansion flambda_expansion(double lambda, int N) {
    if (!(lambda >= 1.0))
        throw std::invalid_argument("flambda_expansion: lambda >= 1 required");
    auto basis = std::make_shared<OrthoBasis>(OrthoBasis::meixner_pollaczek(1, N));
    // e^{-lam^2 x^2/2} is below 1e-42 past 14/lambda
    double X = 14.0 / lambda;
    double panel = std::min(0.25, 0.2 / lambda);
    PanelGrid grid(-X, X, panel, 16);
    const auto& xs = grid.points();
    std::vector<double> wq(xs.size());
    Weight nu = Weight::sech();
    for (std::size_t i = 0; i < xs.size(); ++i)
        wq[i] = grid.weights()[i] * nu.density(xs[i]);

    std::vector<dd> acc(N + 1);
    dd l2;
    std::vector<double> p;
    double inv_sqrt_lam = 1.0 / std::sqrt(lambda);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double x = xs[i];
        double fx = inv_sqrt_lam * std::exp(-lambda * lambda * x * x / 2.0);
        double g = fx * wq[i];
        l2 += dd(fx * g);
        basis->eval_orthonormal(x, N, p);
        for (int j = 0; j <= N; ++j) acc[j] += dd(g * p[j]);
    }
    std::vector<double> coeffs(N + 1);
    for (int j = 0; j <= N; ++j) coeffs[j] = static_cast<double>(acc[j]);
    return SpectralExpansion(std::move(basis), std::move(coeffs),
                             static_cast<double>(l2),
                             static_cast<int>(xs.size()), X);
}

double flambda_weighted_energy(double lambda, const std::function<double(int)>& seq,
                               int N, double* tail_fraction) {
    SpectralExpansion e = flambda_expansion(lambda, N);
    dd_accumulator head, top;
    const auto& c = e.coeffs();
    for (int k = 1; k <= N; ++k) {
        double term = seq(k) * c[k] * c[k];
        head.add(term);
        if (k > N / 2) top.add(term);
    }
    double total = head.value();
    double frac = (total > 0.0) ? top.value() / total : 0.0;
    if (tail_fraction) *tail_fraction = frac;
    if (frac > 1e-6)
        throw resolution_error(
            "flambda_weighted_energy: top-half contribution " + std::to_string(frac) +
            " exceeds 1e-6 of the head; increase N");
    return total;
}

ExperimentReport divergence_experiment(const std::function<double(int)>& a,
                                       const std::vector<double>& lambda_grid, int N) {
    for (std::size_t i = 1; i < lambda_grid.size(); ++i)
        if (!(lambda_grid[i] > lambda_grid[i - 1]))
            throw std::invalid_argument("divergence_experiment: grid must increase");
    if (!lambda_grid.empty() &&
        (lambda_grid.front() < 1.0 || lambda_grid.back() > 3.5))
        throw std::invalid_argument("divergence_experiment: grid within [1, 3.5]");

    ExperimentReport rep;
    rep.weighted_increasing = true;
    rep.en_bound_constant = 0.0;

    auto log2e = [](int k) {
        double l = std::log(M_E + static_cast<double>(k));
        return l * l;
    };

    std::vector<double> log_k_energy;
    for (double lam : lambda_grid) {
        SpectralExpansion e = flambda_expansion(lam, N);
        ExperimentRow row;
        row.lambda = lam;
        dd_accumulator wsum, wtop;
        const auto& c = e.coeffs();
        for (int k = 1; k <= N; ++k) {
            double term = a(k) * log2e(k) * c[k] * c[k];
            wsum.add(term);
            if (k > N / 2) wtop.add(term);
        }
        row.weighted_sum = wsum.value();
        row.weighted_tail_fraction =
            row.weighted_sum > 0 ? wtop.value() / row.weighted_sum : 0.0;
        // sum k f_k^2 carries mass out to k ~ e^{2 lam^2}; the strip identity
        // evaluates the full sum where any truncated head falls far short
        row.k_energy = identity_rhs(StripFunction::gaussian(lam));
        row.e2 = e.tail_error(2);
        row.e8 = e.tail_error(8);
        row.e32 = e.tail_error(32);
        row.e128 = e.tail_error(128);
        double elam = std::exp(lam * lam);
        for (auto [n, en] : {std::pair<int, double>{2, row.e2},
                             {8, row.e8},
                             {32, row.e32},
                             {128, row.e128}}) {
            double norm = en * std::min(n / elam, lam * lam);
            rep.en_bound_constant = std::max(rep.en_bound_constant, norm);
        }
        if (!rep.rows.empty() && row.weighted_sum <= rep.rows.back().weighted_sum)
            rep.weighted_increasing = false;
        log_k_energy.push_back(std::log(row.k_energy));
        rep.rows.push_back(row);
    }

    // least squares of log(k_energy) against lambda^2
    double su = 0, sy = 0, suu = 0, suy = 0;
    std::size_t m = lambda_grid.size();
    for (std::size_t i = 0; i < m; ++i) {
        double u = lambda_grid[i] * lambda_grid[i];
        su += u;
        sy += log_k_energy[i];
        suu += u * u;
        suy += u * log_k_energy[i];
    }
    rep.slope_log_kenergy_vs_lambda_sq =
        (m * suy - su * sy) / (m * suu - su * su);
    return rep;
}

} // namespace mpspec
