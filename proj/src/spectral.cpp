#include "mpspec/spectral.hpp"

#include <map>
#include <mutex>

#include <cmath>
#include <stdexcept>

#include "mpspec/common.hpp"
#include "mpspec/dd.hpp"
#include "mpspec/quadrature.hpp"

namespace mpspec {

SpectralExpansion::SpectralExpansion(std::shared_ptr<const OrthoBasis> basis,
                                     std::vector<double> coeffs, double l2_norm_sq,
                                     int rule_size, double truncation_bound)
    : basis_(std::move(basis)),
      coeffs_(std::move(coeffs)),
      l2_norm_sq_(l2_norm_sq),
      rule_size_(rule_size),
      truncation_bound_(truncation_bound) {}

double SpectralExpansion::parseval_sum() const {
    dd_accumulator acc;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        acc.add(coeffs_[k] * coeffs_[k] * basis_->norm_sq(static_cast<int>(k)));
    return acc.value();
}

double SpectralExpansion::tail_error(int n) const {
    if (n < 0) throw std::invalid_argument("tail_error: n >= 0 required");
    if (n >= max_degree())
        throw std::invalid_argument("tail_error: n below the expansion degree required");
    dd_accumulator head;
    for (int k = 0; k <= n; ++k)
        head.add(coeffs_[k] * coeffs_[k] * basis_->norm_sq(k));
    double tail = l2_norm_sq_ - head.value();
    return std::max(tail, 0.0);
}

double SpectralExpansion::weighted_sum(const std::function<double(int)>& seq,
                                       int k_min) const {
    dd_accumulator acc;
    for (int k = std::max(k_min, 0); k <= max_degree(); ++k) {
        double s = seq(k);
        if (s < 0.0) throw std::invalid_argument("weighted_sum: seq must be >= 0");
        acc.add(s * coeffs_[k] * coeffs_[k]);
    }
    return acc.value();
}

namespace {

// orthonormal-basis dot products against f on an arbitrary node set
std::vector<double> project_on_nodes(const std::function<double(double)>& f,
                                     const OrthoBasis& basis, int N,
                                     const std::vector<double>& x,
                                     const std::vector<double>& w,
                                     double* l2_out) {
    std::vector<dd> acc(N + 1);
    dd l2;
    std::vector<double> p;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double fx = f(x[i]);
        if (!std::isfinite(fx))
            throw numeric_error("expand: non-finite function value");
        if (w[i] == 0.0) continue;
        double g = fx * w[i];
        l2 += dd(fx * g);
        basis.eval_orthonormal(x[i], N, p);
        for (int k = 0; k <= N; ++k) acc[k] += dd(g * p[k]);
    }
    std::vector<double> out(N + 1);
    for (int k = 0; k <= N; ++k) {
        // classical normalization: f_k = <f, p_k>/sqrt(norm_sq)
        out[k] = static_cast<double>(acc[k]) / std::sqrt(basis.norm_sq(k));
    }
    if (l2_out) *l2_out = static_cast<double>(l2);
    return out;
}

} // namespace

SpectralExpansion expand(const std::function<double(double)>& f,
                         std::shared_ptr<const OrthoBasis> basis, int N,
                         const GaussRule& rule) {
    if (N < 0 || N > basis->degree_cap())
        throw std::invalid_argument("expand: N within degree cap required");
    if (rule.size() < 2 * N)
        throw std::invalid_argument("expand: rule size >= 2N required");
    double l2 = 0.0;
    auto coeffs = project_on_nodes(f, *basis, N, rule.nodes, rule.weights, &l2);
    double X = std::max(std::abs(rule.nodes.front()), std::abs(rule.nodes.back()));
    return SpectralExpansion(std::move(basis), std::move(coeffs), l2, rule.size(), X);
}

SpectralExpansion expand_panels(const std::function<double(double)>& f,
                                std::shared_ptr<const OrthoBasis> basis,
                                const Weight& w, int N,
                                std::vector<double> breakpoints, double max_panel) {
    if (N < 0 || N > basis->degree_cap())
        throw std::invalid_argument("expand_panels: N within degree cap required");
    double X = w.truncation_bound();
    double a = std::max(w.support_lo(), -X);
    double b = std::min(w.support_hi(), X);
    for (double c0 : w.kinks()) breakpoints.push_back(c0);
    PanelGrid grid(a, b, max_panel, 16, breakpoints);
    std::vector<double> wq(grid.weights().size());
    for (std::size_t i = 0; i < wq.size(); ++i)
        wq[i] = grid.weights()[i] * w.density(grid.points()[i]);
    double l2 = 0.0;
    auto coeffs = project_on_nodes(f, *basis, N, grid.points(), wq, &l2);
    return SpectralExpansion(std::move(basis), std::move(coeffs), l2,
                             static_cast<int>(wq.size()), X);
}

OrthoBasis stieltjes_basis(const Weight& w, int degree_cap) {
    // Discrete measure: composite GL panels. The grid must cover the band the
    // degree-cap orthonormal polynomials live on (their Gauss nodes reach well
    // past the density's mass range for exponential tails), not just the
    // region where the density is above the underflow floor.
    double X = std::max(w.truncation_bound(), 2.5 * degree_cap + 40.0);
    double a = std::max(w.support_lo(), -X);
    double b = std::min(w.support_hi(), X);
    PanelGrid grid(a, b, 0.33, 12, w.kinks());
    const auto& x = grid.points();
    std::vector<double> mw(x.size());
    double mass = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mw[i] = grid.weights()[i] * w.density(x[i]);
        mass += mw[i];
    }

    const std::size_t m = x.size();
    std::vector<std::vector<double>> P; // orthonormal values on the grid
    P.reserve(degree_cap + 1);
    std::vector<double> a_coef(degree_cap + 1, 0.0), b_coef(degree_cap + 1, 0.0);

    auto dot_dd = [&](const std::vector<double>& u, const std::vector<double>& v) {
        dd_accumulator acc;
        for (std::size_t i = 0; i < m; ++i) acc.add(u[i] * v[i] * mw[i]);
        return acc.value();
    };
    auto dot_fast = [&](const std::vector<double>& u, const std::vector<double>& v) {
        double acc = 0.0;
        for (std::size_t i = 0; i < m; ++i) acc += u[i] * v[i] * mw[i];
        return acc;
    };

    std::vector<double> p0(m, 1.0 / std::sqrt(mass));
    P.push_back(p0);
    std::vector<double> q(m);
    for (int k = 0; k <= degree_cap; ++k) {
        const auto& pk = P[k];
        for (std::size_t i = 0; i < m; ++i) q[i] = x[i] * pk[i];
        a_coef[k] = dot_dd(q, pk);
        // full reorthogonalization, twice, against everything computed so far
        for (int pass = 0; pass < 2; ++pass)
            for (int j = k; j >= 0; --j) {
                double c = dot_fast(q, P[j]);
                for (std::size_t i = 0; i < m; ++i) q[i] -= c * P[j][i];
            }
        if (k == degree_cap) break;
        double nrm = std::sqrt(dot_dd(q, q));
        if (!(nrm > 0.0) || !std::isfinite(nrm))
            throw numeric_error("stieltjes_basis: breakdown at degree " +
                                std::to_string(k + 1));
        b_coef[k + 1] = nrm;
        std::vector<double> pn(m);
        for (std::size_t i = 0; i < m; ++i) pn[i] = q[i] / nrm;
        P.push_back(std::move(pn));
    }
    return OrthoBasis::from_recurrence(std::move(a_coef), std::move(b_coef), mass);
}

namespace {

double log2e_abs(double x) {
    double l = std::log(M_E + std::abs(x));
    return l * l;
}

} // namespace

MainTheoremSides main_theorem_sides(const StripFunction& f, int N,
                                    bool use_gauss_rule,
                                    std::vector<double> breakpoints) {
    if (!f.has_deriv())
        throw unsupported_capability("main_theorem_sides: derivative required");
    auto basis =
        std::make_shared<OrthoBasis>(OrthoBasis::meixner_pollaczek(1, 2 * N));
    auto fv = [&](double x) { return f(x); };
    SpectralExpansion e =
        use_gauss_rule
            ? expand(fv, basis, N, gauss_rule(*basis, 2 * N))
            : expand_panels(fv, basis, Weight::sech(), N, breakpoints);

    MainTheoremSides out;
    out.lhs = e.weighted_sum([](int k) { return log2e_abs(k); }, 1);

    Weight nu = Weight::sech();
    double X = nu.truncation_bound() + 10.0; // log^2 weight grows slowly
    out.rhs59 = integrate_panels(
        [&](double x) {
            double fx = f(x);
            double dx = f.real_deriv(x);
            return (log2e_abs(x) * fx * fx + dx * dx) * nu.density(x);
        },
        -X, X, 0.25, 16, breakpoints);
    out.rhs60 = integrate_panels(
        [&](double x) {
            double dx = f.real_deriv(x);
            return log2e_abs(x) * dx * dx * nu.density(x);
        },
        -X, X, 0.25, 16, breakpoints);
    return out;
}

TransferCheck measure_transfer_check(const std::function<double(double)>& f, int n,
                                     int N, std::vector<double> breakpoints) {
    if (n >= N) throw std::invalid_argument("measure_transfer_check: n < N required");
    Weight mu1 = Weight::two_sided_exp();
    // the numerically built mu1 recurrence is reused across calls
    static std::mutex cache_mutex;
    static std::map<int, std::shared_ptr<const OrthoBasis>> cache;
    std::shared_ptr<const OrthoBasis> mu_basis;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(N);
        if (it == cache.end())
            it = cache.emplace(N, std::make_shared<OrthoBasis>(
                                      stieltjes_basis(mu1, N))).first;
        mu_basis = it->second;
    }
    SpectralExpansion e_mu = expand_panels(f, mu_basis, mu1, N, breakpoints);

    // w(dx) = dx/(2 cosh x) is the sech probability pushed through x -> pi x/2,
    // with total mass pi/2: E_n(f, w) = (pi/2) E_n(g, nu), g(y) = f(pi y / 2).
    auto nu_basis = std::make_shared<OrthoBasis>(OrthoBasis::meixner_pollaczek(1, N));
    auto g = [&](double y) { return f(M_PI * y / 2.0); };
    std::vector<double> bp;
    for (double c : breakpoints) bp.push_back(2.0 * c / M_PI);
    SpectralExpansion e_w = expand_panels(g, nu_basis, Weight::sech(), N, bp);

    TransferCheck out;
    out.tail_mu1 = e_mu.tail_error(n);
    out.tail_w = M_PI_2 * e_w.tail_error(n);
    out.ratio = out.tail_mu1 / out.tail_w;
    // mu1 <= w <= 2 mu1 pointwise => E_n(mu1) <= E_n(w) <= 2 E_n(mu1)
    double tol = 1e-6 + 1e-3 * out.tail_w;
    out.ok = out.tail_mu1 <= out.tail_w + tol &&
             out.tail_w <= 2.0 * out.tail_mu1 + tol;
    return out;
}

std::vector<std::vector<double>> random_polynomial_suite(std::uint64_t seed, int count,
                                                         int max_degree) {
    SplitMix64 rng(seed);
    std::vector<std::vector<double>> suite(count);
    for (auto& poly : suite) {
        poly.resize(max_degree + 1);
        for (double& c : poly) c = rng.next_symmetric();
    }
    return suite;
}

} // namespace mpspec
