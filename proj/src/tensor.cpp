#include "mpspec/tensor.hpp"

#include <cmath>
#include <stdexcept>

#include "mpspec/common.hpp"
#include "mpspec/dd.hpp"
#include "mpspec/quadrature.hpp"

namespace mpspec {

MultiIndexExpansion::MultiIndexExpansion(int d, int N, std::vector<double> coeffs,
                                         double l2_norm_sq)
    : d_(d), N_(N), c_(std::move(coeffs)), l2_(l2_norm_sq) {
    std::size_t expect = 1;
    for (int i = 0; i < d; ++i) expect *= static_cast<std::size_t>(N + 1);
    if (c_.size() != expect)
        throw std::invalid_argument("MultiIndexExpansion: coefficient count mismatch");
}

double MultiIndexExpansion::coeff(const std::vector<int>& alpha) const {
    if (static_cast<int>(alpha.size()) != d_)
        throw std::invalid_argument("coeff: index dimension mismatch");
    std::size_t idx = 0;
    for (int i = 0; i < d_; ++i) {
        if (alpha[i] < 0 || alpha[i] > N_)
            throw std::invalid_argument("coeff: index out of range");
        idx = idx * static_cast<std::size_t>(N_ + 1) + alpha[i];
    }
    return c_[idx];
}

double MultiIndexExpansion::tail_error_total_degree(int n) const {
    dd_accumulator head;
    std::vector<int> alpha(d_, 0);
    // iterate the full box, accumulate |alpha| <= n
    std::size_t total = c_.size();
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rem = idx;
        int deg = 0;
        for (int i = d_ - 1; i >= 0; --i) {
            deg += static_cast<int>(rem % (N_ + 1));
            rem /= (N_ + 1);
        }
        if (deg <= n) head.add(c_[idx] * c_[idx]);
    }
    return std::max(l2_ - head.value(), 0.0);
}

double MultiIndexExpansion::weighted_sum_additive(
    const std::function<double(int)>& phi_axis) const {
    std::vector<double> ph(N_ + 1);
    for (int k = 0; k <= N_; ++k) ph[k] = (k == 0) ? 0.0 : phi_axis(k);
    dd_accumulator acc;
    for (std::size_t idx = 0; idx < c_.size(); ++idx) {
        std::size_t rem = idx;
        double w = 0.0;
        for (int i = d_ - 1; i >= 0; --i) {
            w += ph[rem % (N_ + 1)];
            rem /= (N_ + 1);
        }
        acc.add(w * c_[idx] * c_[idx]);
    }
    return acc.value();
}

namespace {

struct AxisRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<std::vector<double>> p; // p[k][node], orthonormal values
};

AxisRule make_axis_rule(int N, int rule_size, bool under_mu1) {
    AxisRule ar;
    OrthoBasis basis =
        under_mu1
            ? stieltjes_basis(Weight::two_sided_exp(), std::max(rule_size, N))
            : OrthoBasis::meixner_pollaczek(1, std::max(rule_size, N));
    GaussRule rule = gauss_rule(basis, rule_size);
    ar.nodes = rule.nodes;
    ar.weights = rule.weights;
    ar.p.assign(N + 1, std::vector<double>(ar.nodes.size()));
    std::vector<double> vals;
    for (std::size_t i = 0; i < ar.nodes.size(); ++i) {
        basis.eval_orthonormal(ar.nodes[i], N, vals);
        for (int k = 0; k <= N; ++k) ar.p[k][i] = vals[k];
    }
    return ar;
}

} // namespace

MultiIndexExpansion product_expand(const MultiFn& f, int d, int N, int rule_size,
                                   bool under_mu1) {
    if (d != 2 && d != 3)
        throw resolution_error("product_expand: d in {2,3} supported");
    if (N < 1 || N > 64)
        throw resolution_error("product_expand: per-axis N <= 64 (tensor budget)");
    if (rule_size == 0) rule_size = std::max(2 * N, 64);
    AxisRule ar = make_axis_rule(N, rule_size, under_mu1);
    const std::size_t R = ar.nodes.size();
    const int M = N + 1;

    if (d == 2) {
        std::vector<double> fv(R * R);
        dd l2;
        std::vector<double> pt(2);
        for (std::size_t i = 0; i < R; ++i) {
            pt[0] = ar.nodes[i];
            for (std::size_t j = 0; j < R; ++j) {
                pt[1] = ar.nodes[j];
                double v = f(pt);
                fv[i * R + j] = v;
                l2 += dd(v * v * ar.weights[i] * ar.weights[j]);
            }
        }
        // stage 1: t[k1][j] = sum_i w_i p_k1(x_i) f(x_i, x_j)
        std::vector<double> t(static_cast<std::size_t>(M) * R, 0.0);
        for (int k = 0; k < M; ++k)
            for (std::size_t i = 0; i < R; ++i) {
                double s = ar.weights[i] * ar.p[k][i];
                if (s == 0.0) continue;
                const double* row = &fv[i * R];
                double* trow = &t[static_cast<std::size_t>(k) * R];
                for (std::size_t j = 0; j < R; ++j) trow[j] += s * row[j];
            }
        // stage 2: c[k1][k2] = sum_j w_j p_k2(x_j) t[k1][j]
        std::vector<double> c(static_cast<std::size_t>(M) * M, 0.0);
        for (int k1 = 0; k1 < M; ++k1)
            for (int k2 = 0; k2 < M; ++k2) {
                dd_accumulator acc;
                const double* trow = &t[static_cast<std::size_t>(k1) * R];
                for (std::size_t j = 0; j < R; ++j)
                    acc.add(ar.weights[j] * ar.p[k2][j] * trow[j]);
                c[static_cast<std::size_t>(k1) * M + k2] = acc.value();
            }
        return MultiIndexExpansion(2, N, std::move(c), static_cast<double>(l2));
    }

    // d == 3
    std::vector<double> c(static_cast<std::size_t>(M) * M * M, 0.0);
    dd l2;
    std::vector<double> pt(3);
    std::vector<double> slab(R * R);
    std::vector<double> t1(static_cast<std::size_t>(M) * R);
    std::vector<double> t2(static_cast<std::size_t>(M) * M);
    for (std::size_t k3i = 0; k3i < R; ++k3i) {
        pt[2] = ar.nodes[k3i];
        for (std::size_t i = 0; i < R; ++i) {
            pt[0] = ar.nodes[i];
            for (std::size_t j = 0; j < R; ++j) {
                pt[1] = ar.nodes[j];
                double v = f(pt);
                slab[i * R + j] = v;
                l2 += dd(v * v * ar.weights[i] * ar.weights[j] * ar.weights[k3i]);
            }
        }
        std::fill(t1.begin(), t1.end(), 0.0);
        for (int k = 0; k < M; ++k)
            for (std::size_t i = 0; i < R; ++i) {
                double s = ar.weights[i] * ar.p[k][i];
                if (s == 0.0) continue;
                const double* row = &slab[i * R];
                double* trow = &t1[static_cast<std::size_t>(k) * R];
                for (std::size_t j = 0; j < R; ++j) trow[j] += s * row[j];
            }
        for (int k1 = 0; k1 < M; ++k1)
            for (int k2 = 0; k2 < M; ++k2) {
                double acc = 0.0;
                const double* trow = &t1[static_cast<std::size_t>(k1) * R];
                for (std::size_t j = 0; j < R; ++j)
                    acc += ar.weights[j] * ar.p[k2][j] * trow[j];
                t2[static_cast<std::size_t>(k1) * M + k2] = acc;
            }
        for (int k1 = 0; k1 < M; ++k1)
            for (int k2 = 0; k2 < M; ++k2) {
                double base = t2[static_cast<std::size_t>(k1) * M + k2];
                if (base == 0.0) continue;
                for (int k3 = 0; k3 < M; ++k3)
                    c[(static_cast<std::size_t>(k1) * M + k2) * M + k3] +=
                        ar.weights[k3i] * ar.p[k3][k3i] * base;
            }
    }
    return MultiIndexExpansion(3, N, std::move(c), static_cast<double>(l2));
}

TensorizationResult tensorization_check(const MultiFn& f,
                                        const std::vector<MultiFn>& partials, int d,
                                        int N,
                                        const std::function<double(int)>& phi_axis,
                                        const std::function<double(double)>& w_axis,
                                        double margin) {
    if (static_cast<int>(partials.size()) != d)
        throw unsupported_capability("tensorization_check: all partials required");
    MultiIndexExpansion e = product_expand(f, d, N);
    TensorizationResult out;
    out.lhs = e.weighted_sum_additive(phi_axis);
    out.margin = margin;

    // rhs by tensor panel quadrature under nu^(x)d (accurate for kinked partials)
    Weight nu = Weight::sech();
    double X = nu.truncation_bound();
    PanelGrid grid(-X, X, 0.5, 12);
    const auto& xs = grid.points();
    std::vector<double> wq(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        wq[i] = grid.weights()[i] * nu.density(xs[i]);
    dd_accumulator rhs;
    std::vector<double> pt(d);
    if (d == 2) {
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = 0; j < xs.size(); ++j) {
                pt[0] = xs[i];
                pt[1] = xs[j];
                double s = 0.0;
                double d0 = partials[0](pt), d1 = partials[1](pt);
                s += w_axis(pt[0]) * d0 * d0 + w_axis(pt[1]) * d1 * d1;
                rhs.add(s * wq[i] * wq[j]);
            }
    } else {
        throw resolution_error("tensorization_check: d == 2 supported");
    }
    out.rhs = rhs.value();
    out.ok = out.lhs <= out.margin * out.rhs * (1.0 + 1e-9) + 1e-12;
    return out;
}

namespace {

// Laguerre coefficients of f under e^{-x} with kink-aware panels.
// |L_k(x)| e^{-x/2} <= 1, so truncation at X kills the integrand uniformly.
std::vector<double> laguerre_coeffs(const std::function<double(double)>& f, int N,
                                    const std::vector<double>& breakpoints,
                                    double* l2_out) {
    OrthoBasis basis = OrthoBasis::laguerre(N);
    double X = 190.0;
    PanelGrid grid(0.0, X, 0.5, 16, breakpoints);
    const auto& xs = grid.points();
    std::vector<dd> acc(N + 1);
    dd l2;
    std::vector<double> p;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double x = xs[i];
        double wq = grid.weights()[i] * std::exp(-x);
        double fx = f(x);
        if (!std::isfinite(fx)) throw numeric_error("laguerre_coeffs: bad value");
        double g = fx * wq;
        l2 += dd(fx * g);
        basis.eval_orthonormal(x, N, p);
        for (int k = 0; k <= N; ++k) acc[k] += dd(g * p[k]);
    }
    if (l2_out) *l2_out = static_cast<double>(l2);
    std::vector<double> out(N + 1);
    for (int k = 0; k <= N; ++k) out[k] = static_cast<double>(acc[k]);
    return out;
}

} // namespace

LaguerreRateReport laguerre_rate_check(const std::function<double(double)>& f,
                                       const std::function<double(double)>& fp,
                                       const std::vector<int>& n_grid,
                                       std::vector<double> breakpoints, int N) {
    LaguerreRateReport rep;
    double l2 = 0.0;
    auto c = laguerre_coeffs(f, N, breakpoints, &l2);
    rep.sobolev = integrate_panels(
        [&](double x) {
            double d = fp(x);
            return x * d * d * std::exp(-x);
        },
        0.0, 190.0, 0.5, 16, breakpoints);
    if (!std::isfinite(rep.sobolev))
        throw std::invalid_argument("laguerre_rate_check: divergent Sobolev integral");
    rep.all_within = true;
    for (int n : n_grid) {
        dd_accumulator head;
        for (int k = 0; k <= n && k <= N; ++k) head.add(c[k] * c[k]);
        LaguerreRateRow row;
        row.n = n;
        row.tail = std::max(l2 - head.value(), 0.0);
        row.bound_over = rep.sobolev / (n + 1.0);
        row.ratio = row.bound_over > 0 ? row.tail / row.bound_over
                                       : (row.tail > 0 ? 1e300 : 0.0);
        if (row.ratio > 1.0 + 1e-8) rep.all_within = false;
        rep.rows.push_back(row);
    }
    return rep;
}

std::vector<RateComparisonRow> rate_comparison(
    const std::function<double(double)>& f_two_sided,
    const std::function<double(double)>& f_half, const std::vector<int>& n_grid,
    std::vector<double> breakpoints_two, std::vector<double> breakpoints_half) {
    int N = 0;
    for (int n : n_grid) N = std::max(N, n);
    N = N + 32;

    auto basis = std::make_shared<OrthoBasis>(OrthoBasis::meixner_pollaczek(1, N));
    SpectralExpansion two = expand_panels(f_two_sided, basis, Weight::sech(), N,
                                          breakpoints_two);
    double l2_half = 0.0;
    auto ch = laguerre_coeffs(f_half, N, breakpoints_half, &l2_half);

    std::vector<RateComparisonRow> rows;
    for (int n : n_grid) {
        RateComparisonRow r;
        r.n = n;
        r.en_two_sided = two.tail_error(n);
        double ln = std::log(static_cast<double>(n));
        r.en_times_log2n = r.en_two_sided * ln * ln;
        dd_accumulator head;
        for (int k = 0; k <= n; ++k) head.add(ch[k] * ch[k]);
        r.en_half = std::max(l2_half - head.value(), 0.0);
        r.en_times_n = r.en_half * (n + 1.0);
        rows.push_back(r);
    }
    return rows;
}

} // namespace mpspec
