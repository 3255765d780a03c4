#include "mpspec/quadrature.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

#include "mpspec/common.hpp"

namespace mpspec {

namespace {

LegendreRule compute_legendre(int n) {
    LegendreRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    // Newton on P_n with Chebyshev-ish initial guesses; symmetric pairs.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                // one clean-up step
                p0 = 1.0; p1 = x;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                pp = n * (x * p1 - p0) / (x * x - 1.0);
                x -= p1 / pp;
                break;
            }
        }
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.nodes[i] = -x;
        r.weights[i] = w;
        r.nodes[n - 1 - i] = x;
        r.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) r.nodes[n / 2] = 0.0;
    return r;
}

std::map<int, LegendreRule> g_legendre_cache;
std::mutex g_legendre_mutex;

} // namespace

const LegendreRule& legendre_rule(int n) {
    if (n < 1) throw std::invalid_argument("legendre_rule: order must be positive");
    std::lock_guard<std::mutex> lock(g_legendre_mutex);
    auto it = g_legendre_cache.find(n);
    if (it == g_legendre_cache.end())
        it = g_legendre_cache.emplace(n, compute_legendre(n)).first;
    return it->second;
}

PanelGrid::PanelGrid(double a, double b, double max_panel, int order,
                     const std::vector<double>& breakpoints) {
    if (!(b > a)) throw std::invalid_argument("PanelGrid: empty interval");
    if (!(max_panel > 0)) throw std::invalid_argument("PanelGrid: bad panel width");
    std::vector<double> edges{a, b};
    for (double c : breakpoints)
        if (c > a && c < b) edges.push_back(c);
    std::sort(edges.begin(), edges.end());
    const LegendreRule& gl = legendre_rule(order);
    for (std::size_t s = 0; s + 1 < edges.size(); ++s) {
        double lo = edges[s], hi = edges[s + 1];
        int m = std::max(1, static_cast<int>(std::ceil((hi - lo) / max_panel)));
        double h = (hi - lo) / m;
        for (int p = 0; p < m; ++p) {
            double c = lo + (p + 0.5) * h;
            for (int j = 0; j < order; ++j) {
                x_.push_back(c + 0.5 * h * gl.nodes[j]);
                w_.push_back(0.5 * h * gl.weights[j]);
            }
        }
    }
}

double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        double max_panel, int order,
                        const std::vector<double>& breakpoints) {
    PanelGrid grid(a, b, max_panel, order, breakpoints);
    return grid.integrate(f);
}

namespace {

double gl_fixed(const std::function<double(double)>& f, double a, double b, int n) {
    const LegendreRule& gl = legendre_rule(n);
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    dd_accumulator acc;
    for (int j = 0; j < n; ++j)
        acc.add(f(c + h * gl.nodes[j]) * h * gl.weights[j]);
    return acc.value();
}

double adaptive_rec(const std::function<double(double)>& f, double a, double b,
                    double coarse, double tol, int depth, int max_depth) {
    double fine = gl_fixed(f, a, b, 24);
    // the roundoff floor keeps the recursion from chasing unattainable targets
    double floor = 32.0 * std::numeric_limits<double>::epsilon() * std::abs(fine);
    if (std::abs(fine - coarse) <= std::max(tol, floor) || depth >= max_depth)
        return fine;
    double m = 0.5 * (a + b);
    double left = gl_fixed(f, a, m, 12);
    double right = gl_fixed(f, m, b, 12);
    return adaptive_rec(f, a, m, left, 0.5 * tol, depth + 1, max_depth) +
           adaptive_rec(f, m, b, right, 0.5 * tol, depth + 1, max_depth);
}

} // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, double rel_tol, int max_depth) {
    double coarse = gl_fixed(f, a, b, 12);
    double scale = std::max(std::abs(coarse), 1e-300);
    double tol = std::max(abs_tol, rel_tol * scale);
    return adaptive_rec(f, a, b, coarse, tol, 0, max_depth);
}

double integrate_tanh_sinh_01(const std::function<double(double, double)>& f,
                              double target_rel, int max_level) {
    // x = (1 + tanh((pi/2) sinh t)) / 2 maps R -> (0,1);
    // evaluate via exp to keep the endpoint offsets accurate near 0 and 1.
    auto sample = [&](double t, double& x_lo, double& w) {
        double s = M_PI_2 * std::sinh(t);
        double c = std::cosh(s);
        // distance to the nearer endpoint: e^{-|s|}/(2 cosh s) stays accurate
        x_lo = 0.5 * std::exp(-std::abs(s)) / c; // distance from endpoint
        w = M_PI_2 * std::cosh(t) / (2.0 * c * c);
    };
    auto eval = [&](double t) -> double {
        double d, w;
        sample(std::abs(t), d, w);
        if (d <= 0.0 || w <= 0.0) return 0.0;
        double x = (t >= 0) ? 1.0 - d : d;
        double v = f(x, d) * w;
        return std::isfinite(v) ? v : 0.0;
    };

    const double t_max = 6.5; // w underflows past this for double
    double h = 1.0;
    double sum = eval(0.0);
    for (double t = h; t <= t_max; t += h) sum += eval(t) + eval(-t);
    double prev = sum * h;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (double t = h; t <= t_max; t += 2 * h) add += eval(t) + eval(-t);
        sum += add;
        double cur = sum * h;
        if (level >= 3 &&
            std::abs(cur - prev) <= target_rel * std::max(1e-300, std::abs(cur)))
            return cur;
        prev = cur;
    }
    return prev;
}

std::complex<double> fourier_panels(const std::function<double(double)>& f, double a,
                                    double b, double v, double max_panel, int order) {
    double panel = max_panel;
    if (std::abs(v) > 1.0)
        panel = std::min(max_panel, 2.0 * M_PI / (4.0 * std::abs(v)));
    PanelGrid grid(a, b, panel, order);
    dd_accumulator re, im;
    const auto& x = grid.points();
    const auto& w = grid.weights();
    for (std::size_t i = 0; i < x.size(); ++i) {
        double g = f(x[i]) * w[i];
        re.add(g * std::cos(x[i] * v));
        im.add(g * std::sin(x[i] * v));
    }
    return {re.value(), im.value()};
}

} // namespace mpspec
