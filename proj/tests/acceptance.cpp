// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "mpspec/common.hpp"
#include "mpspec/dd.hpp"
#include "mpspec/inequalities.hpp"
#include "mpspec/quadrature.hpp"
#include "mpspec/spectral.hpp"
#include "mpspec/strip.hpp"
#include "mpspec/tensor.hpp"
#include "mpspec/tightness.hpp"

using namespace mpspec;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool pass, double value,
            double bound) {
    std::printf("%s criterion %2d: %-58s (value %.6g, bound %.6g)\n",
                pass ? "PASS" : "FAIL", criterion, what.c_str(), value, bound);
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double log2e(double x) {
    double l = std::log(M_E + std::abs(x));
    return l * l;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

// --- criterion 1 -------------------------------------------------------------

void criterion_orthogonality() {
    auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
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
        for (int j = 0; j <= K; ++j)
            for (int k = j; k <= K; ++k) {
                dd_accumulator g;
                for (int i = 0; i < r.size(); ++i)
                    g.add(r.weights[i] * vals[i][j] * vals[i][k]);
                double classical =
                    g.value() * std::sqrt(b.norm_sq(j) * b.norm_sq(k));
                double target = (j == k) ? b.norm_sq(k) : 0.0;
                worst = std::max(worst, std::abs(classical - target));
            }
    }
    double dt = seconds_since(t0);
    report(1, "MP orthogonality and norms (ell=1..3, k<=60)",
           worst <= 1e-9 && dt < 30.0, worst, 1e-9);
}

// --- criterion 2 -------------------------------------------------------------

void criterion_strip_identity() {
    auto polys = random_polynomial_suite(7u, 20, 15);
    double worst = 0.0;
    for (const auto& c : polys) {
        auto fk = mp1_coeffs_of_poly(c);
        dd_accumulator lhs;
        for (std::size_t k = 1; k < fk.size(); ++k)
            lhs.add(static_cast<double>(k) * fk[k] * fk[k]);
        double rhs = identity_rhs(StripFunction::from_poly(c));
        worst = std::max(worst, std::abs(lhs.value() - rhs) / lhs.value());
    }
    double ax = identity_rhs(StripFunction::from_poly({0.0, 1.0}));
    double ax2 = identity_rhs(StripFunction::from_poly({0.0, 0.0, 1.0}));
    bool anchors = std::abs(ax - 1.0) <= 1e-8 && std::abs(ax2 - 8.0) <= 8.0 * 1e-8;
    report(2, "strip identity sum k f_k^2 = (1/4) int |Delta|^2 dnu2",
           worst <= 1e-8 && anchors, worst, 1e-8);
}

// --- criterion 3 -------------------------------------------------------------

void criterion_kernel_fourier() {
    double worst = 0.0;
    for (int i = 0; i <= 120; ++i) {
        double v = -6.0 + 0.1 * i;
        auto z = fourier_panels([](double x) { return kernel_K(x); }, -90.0, 90.0, v);
        worst = std::max(
            {worst, std::abs(z.real() - khat_closed(v)), std::abs(z.imag())});
    }
    double k0_err = std::abs(khat_closed(0.0) - 4.0 / (1.0 + std::sqrt(2.0)));
    auto z1 = fourier_panels(
        [](double x) { return 1.0 / (std::sqrt(2.0) * std::cosh(x) + 1.0); }, -95.0,
        95.0, 1.0);
    double i1 = 2.0 * M_PI * std::sinh(M_PI / 4.0) / std::sinh(M_PI);
    bool appendix = std::abs(z1.real() - i1) <= 1e-8;
    report(3, "kernel Fourier closed form (121 points, |v|<=6)",
           worst <= 1e-8 && k0_err <= 1e-14 && appendix, worst, 1e-8);
}

// --- criterion 4 -------------------------------------------------------------

void criterion_gamma_sandwich() {
    struct Named {
        const char* name;
        WeightProfile p;
    };
    std::vector<Named> profiles;
    profiles.push_back({"one", WeightProfile::const_one()});
    profiles.push_back({"log_sq", WeightProfile::log_sq()});
    profiles.push_back({"pow_half", WeightProfile::pow_neg(0.5)});
    profiles.push_back({"pow_09", WeightProfile::pow_neg(0.9)});
    bool ok = true;
    double worst_margin = 1e300;
    for (auto& np : profiles)
        for (int k = 1; k <= (1 << 14); k *= 2) {
            auto r = np.p.sandwich_check(k);
            ok = ok && r.ok;
            worst_margin =
                std::min({worst_margin, r.lower_margin, r.upper_margin});
        }
    WeightProfile lg = WeightProfile::log_sq();
    double lo = 1e300, hi = 0.0;
    for (int k = 1; k <= (1 << 14); k *= 2) {
        double ratio = lg.gamma(k) / log2e(static_cast<double>(k));
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    bool band = lo >= 1.0 / 64.0 && hi <= 8.0;
    report(4, "Gamma_phi sandwich (4 profiles, k<=2^14) and log^2 band",
           ok && band, worst_margin, 0.0);
}

// --- criterion 5 -------------------------------------------------------------

void criterion_coefficient_sandwich() {
    auto t0 = std::chrono::steady_clock::now();
    auto polys = random_polynomial_suite(7u, 20, 15);
    WeightProfile one = WeightProfile::const_one();
    WeightProfile lg = WeightProfile::log_sq();
    bool ok = true;
    double worst_rel_margin = 1e300;
    for (const auto& c : polys) {
        StripFunction f = StripFunction::from_poly(c);
        auto fk = mp1_coeffs_of_poly(c);
        for (const WeightProfile* p : {&one, &lg}) {
            dd_accumulator sum;
            for (std::size_t k = 1; k < fk.size(); ++k)
                sum.add(p->gamma(static_cast<int>(k)) * fk[k] * fk[k]);
            auto b = coefficient_sandwich_bounds(f, *p);
            double s = sum.value();
            bool strict = b.lower < s && s < b.upper;
            ok = ok && strict;
            worst_rel_margin =
                std::min({worst_rel_margin, (s - b.lower) / s, (b.upper - s) / s});
        }
    }
    double dt = seconds_since(t0);
    char buf[96];
    std::snprintf(buf, sizeof(buf),
                  "strip coefficient sandwich, 20 polys x {1, log^2} (%.0fs)", dt);
    report(5, buf, ok && dt < 300.0, worst_rel_margin, 0.0);
}

// --- criterion 6 -------------------------------------------------------------

std::vector<double> poly_from_mp1(const std::vector<double>& mp_coeffs) {
    auto P = mp_recurrence_exact(1, static_cast<int>(mp_coeffs.size()) - 1);
    std::vector<double> mono(mp_coeffs.size(), 0.0);
    for (std::size_t k = 0; k < mp_coeffs.size(); ++k) {
        auto cd = P[k].coeffs_double();
        for (std::size_t j = 0; j < cd.size(); ++j) mono[j] += mp_coeffs[k] * cd[j];
    }
    return mono;
}

void criterion_main_theorem() {
    // polynomials to degree 6 (incl. a near-extremal Rayleigh quotient witness),
    // the Gaussians F_1, F_1.5, F_2, and two clipped-|x| functions
    std::vector<StripFunction> suite;
    suite.push_back(StripFunction::from_poly({0.0, 1.0}));
    suite.push_back(StripFunction::from_poly({0.0, 0.0, 1.0}));
    suite.push_back(StripFunction::from_poly({0.0, 0.0, 0.0, 1.0}));
    suite.push_back(StripFunction::from_poly(
        poly_from_mp1({-0.0959, 0.0, 0.1906, 0.0, -0.3086, 0.0, 0.2834})));
    suite.push_back(StripFunction::from_poly({-0.5, 1.0, 0.0, -1.0, 0.0, 0.0, 0.3}));
    for (double lam : {1.0, 1.5, 2.0}) suite.push_back(StripFunction::gaussian(lam));
    for (double c : {1.0, 3.0}) {
        StripFunction f;
        f.eval = [c](std::complex<double> z) {
            return std::complex<double>(std::min(std::abs(z.real()), c), 0.0);
        };
        f.real_deriv = [c](double x) {
            return std::abs(x) < c ? (x > 0 ? 1.0 : -1.0) : 0.0;
        };
        f.growth_alpha = 0.0;
        f.real_on_real_line = true;
        suite.push_back(f);
    }

    double max128 = 0.0, max256 = 0.0;
    bool finite = true;
    for (const auto& f : suite) {
        auto a = main_theorem_sides(f, 128);
        auto b = main_theorem_sides(f, 256);
        if (!std::isfinite(a.lhs / a.rhs59) || !std::isfinite(b.lhs / b.rhs59))
            finite = false;
        max128 = std::max(max128, a.lhs / a.rhs59);
        max256 = std::max(max256, b.lhs / b.rhs59);
    }
    double drift = std::abs(max256 - max128) / max128;
    report(6, "main theorem ratio max stable within 5% (N 128 -> 256)",
           finite && drift <= 0.05, drift, 0.05);
}

// --- criteria 7 --------------------------------------------------------------

void criterion_tightness() {
    auto a_ll = [](int k) { return std::log(std::log(std::exp(M_E) + k)); };
    auto rep = divergence_experiment(a_ll, {1.0, 1.5, 2.0, 2.5, 3.0}, 16384);
    double slope = rep.slope_log_kenergy_vs_lambda_sq;
    report(7, "tightness: slope of log sum k f_k^2 vs lambda^2 in [0.8, 1.1]",
           slope >= 0.8 && slope <= 1.1, slope, 1.1);

    double ratio = rep.rows.back().weighted_sum / rep.rows.front().weighted_sum;
    report(7, "tightness: loglog-weighted sum grows >= 10x from lam 1 to 3",
           ratio >= 10.0, ratio, 10.0);

    auto rep1 =
        divergence_experiment([](int) { return 1.0; }, {1.0, 1.5, 2.0, 2.5, 3.0},
                              16384);
    double mx = 0.0, mn = 1e300;
    for (const auto& r : rep1.rows) {
        mx = std::max(mx, r.weighted_sum);
        mn = std::min(mn, r.weighted_sum);
    }
    report(7, "tightness: constant-weight column bounded (max/min <= 5)",
           mx / mn <= 5.0, mx / mn, 5.0);
}

// --- criterion 8 -------------------------------------------------------------

void criterion_rate_contrast() {
    std::vector<int> grid{8, 16, 32, 64, 128, 256, 512};
    auto rows = rate_comparison(
        [](double x) { return std::min(std::abs(x), 1.0); },
        [](double x) { return std::min(x, 1.0); }, grid, {-1.0, 0.0, 1.0}, {1.0});
    std::vector<double> col;
    for (const auto& r : rows) col.push_back(r.en_times_log2n);
    std::vector<double> sorted = col;
    std::sort(sorted.begin(), sorted.end());
    double median = sorted[sorted.size() / 2];
    double colmax = *std::max_element(col.begin(), col.end());
    report(8, "two-sided E_n log^2 n bounded (max <= 3 median)",
           colmax <= 3.0 * median, colmax / median, 3.0);

    std::vector<int> lag_grid;
    for (int n = 1; n <= 128; n *= 2) lag_grid.push_back(n);
    auto lag = laguerre_rate_check([](double x) { return std::min(x, 1.0); },
                                   [](double x) { return x < 1.0 ? 1.0 : 0.0; },
                                   lag_grid, {1.0}, 192);
    double worst_ratio = 0.0;
    for (const auto& r : lag.rows) worst_ratio = std::max(worst_ratio, r.ratio);
    report(8, "half-sided E_n (n+1) <= int x f'^2 dmu (n <= 128)",
           worst_ratio <= 1.0 + 1e-8, worst_ratio, 1.0 + 1e-8);
}

// --- criterion 9 -------------------------------------------------------------

void criterion_tensorization() {
    // measured 1-D constant: max over the criterion-6 suite of lhs/rhs60
    std::vector<StripFunction> oned;
    oned.push_back(StripFunction::from_poly({0.0, 1.0}));
    oned.push_back(StripFunction::from_poly({0.0, 0.0, 1.0}));
    oned.push_back(StripFunction::gaussian(1.0));
    {
        StripFunction f;
        f.eval = [](std::complex<double> z) {
            return std::complex<double>(std::min(std::abs(z.real()), 2.0), 0.0);
        };
        f.real_deriv = [](double x) {
            return std::abs(x) < 2.0 ? (x > 0 ? 1.0 : -1.0) : 0.0;
        };
        oned.push_back(f);
    }
    double margin = 0.0;
    for (const auto& f : oned) {
        auto m = main_theorem_sides(f, 128);
        if (m.rhs60 > 1e-14) margin = std::max(margin, m.lhs / m.rhs60);
    }

    auto wlog = [](double x) { return log2e(x); };
    auto phi = [](int k) { return log2e(static_cast<double>(k)); };

    struct Case {
        const char* name;
        MultiFn f;
        std::vector<MultiFn> partials;
    };
    std::vector<Case> suite;
    suite.push_back({"x_plus_y",
                     [](const std::vector<double>& p) { return p[0] + p[1]; },
                     {[](const std::vector<double>&) { return 1.0; },
                      [](const std::vector<double>&) { return 1.0; }}});
    suite.push_back(
        {"clip_sum",
         [](const std::vector<double>& p) {
             return std::min(std::abs(p[0]), 2.0) + std::min(std::abs(p[1]), 2.0);
         },
         {[](const std::vector<double>& p) {
              return std::abs(p[0]) < 2.0 ? (p[0] > 0 ? 1.0 : -1.0) : 0.0;
          },
          [](const std::vector<double>& p) {
              return std::abs(p[1]) < 2.0 ? (p[1] > 0 ? 1.0 : -1.0) : 0.0;
          }}});
    suite.push_back({"gaussian_pair",
                     [](const std::vector<double>& p) {
                         return std::exp(-(p[0] * p[0] + p[1] * p[1]) / 2.0);
                     },
                     {[](const std::vector<double>& p) {
                          return -p[0] *
                                 std::exp(-(p[0] * p[0] + p[1] * p[1]) / 2.0);
                      },
                      [](const std::vector<double>& p) {
                          return -p[1] *
                                 std::exp(-(p[0] * p[0] + p[1] * p[1]) / 2.0);
                      }}});

    bool all_ok = true;
    double worst = 0.0;
    for (const auto& c : suite) {
        auto r = tensorization_check(c.f, c.partials, 2, 24, phi, wlog, margin);
        all_ok = all_ok && r.ok;
        if (r.rhs > 0) worst = std::max(worst, r.lhs / (r.margin * r.rhs));
    }
    report(9, "tensorization (d=2) with the measured 1-D margin", all_ok, worst,
           1.0);

    // separable factorization error
    int N = 20;
    auto g1 = [](double x) { return std::exp(-x * x); };
    auto g2 = [](double y) { return 1.0 / (1.0 + y * y); };
    auto es = product_expand(
        [&](const std::vector<double>& p) { return g1(p[0]) * g2(p[1]); }, 2, N);
    auto basis = std::make_shared<OrthoBasis>(
        OrthoBasis::meixner_pollaczek(1, std::max(2 * N, 64)));
    GaussRule rule = gauss_rule(*basis, std::max(2 * N, 64));
    auto e1 = expand(g1, basis, N, rule);
    auto e2 = expand(g2, basis, N, rule);
    double fworst = 0.0;
    for (int i = 0; i <= N; ++i)
        for (int j = 0; j <= N; ++j)
            fworst = std::max(fworst, std::abs(es.coeff({i, j}) -
                                               e1.coeffs()[i] * e2.coeffs()[j]));
    report(9, "separable factorization error <= 1e-9", fworst <= 1e-9, fworst,
           1e-9);
}

// --- criterion 10 ------------------------------------------------------------

void criterion_geometry() {
    int bad = 0;
    for (double rr : {0.5, 0.9, 0.99}) {
        SplitMix64 rng(17u);
        for (int i = 0; i < 10000; ++i) {
            double a, b;
            do {
                a = rng.next_symmetric();
                b = rng.next_symmetric();
            } while (a * a + b * b >= 1.0);
            std::complex<double> z = std::atan(std::complex<double>(a, b) * rr);
            if (!disk_image_contains(z, rr)) ++bad;
        }
    }
    int violations = 0;
    for (int i = 0; i < 41; ++i) {
        double u = -M_PI / 4.0 + (i + 1) * (M_PI / 2.0) / 42.0;
        for (int j = 0; j < 41; ++j) {
            double v = -4.0 + 8.0 * j / 40.0;
            double a = strip_depth_a(u, v);
            double env = (M_PI - 4.0 * std::abs(u)) * std::exp(-2.0 * std::abs(v));
            if (a > env + 1e-9 || a < env / (2.0 * M_PI) - 1e-9) ++violations;
        }
    }
    double anchor = disk_image_radius(0.0, 1.0 / std::sqrt(3.0));
    bool anchor_ok = std::abs(anchor - (2.0 + std::sqrt(3.0))) <= 1e-12;
    report(10, "disk geometry MC + abound grid + radius anchor",
           bad == 0 && violations == 0 && anchor_ok, bad + violations, 0.0);
}

// --- criterion 11 ------------------------------------------------------------

void criterion_appendix_a() {
    std::vector<double> grid(10000);
    for (int i = 0; i < 10000; ++i) grid[i] = -50.0 + 100.0 * i / 9999.0;
    auto rows = hyperbolic_checks(grid);
    bool ok = true;
    double worst = 1e300;
    for (const auto& r : rows) {
        ok = ok && r.pass;
        worst = std::min(worst, r.margin);
    }
    report(11, "appendix-A inequalities, 10^4 points, |alpha| <= 50", ok, worst,
           0.0);
}

// --- criterion 12 ------------------------------------------------------------

void criterion_poincare() {
    auto pert = poincare_perturbation_check(Weight::sech());
    report(12, "poincare perturbation bound for the sech weight", pert.ok,
           pert.cp_perturbed, pert.bound);
    double base = pert.cp_base;
    double worst = 0.0;
    for (double lam : {0.5, 2.0}) {
        double scaled = poincare_estimate(Weight::sech().dilated(lam)).estimate;
        worst = std::max(worst, std::abs(scaled * lam * lam - base) / base);
    }
    report(12, "poincare scaling C_P(nu_lam) lam^2 = C_P(nu) within 2%",
           worst <= 0.02, worst, 0.02);
}

} // namespace

int main() {
    criterion_orthogonality();
    criterion_strip_identity();
    criterion_kernel_fourier();
    criterion_gamma_sandwich();
    criterion_coefficient_sandwich();
    criterion_main_theorem();
    criterion_tightness();
    criterion_rate_contrast();
    criterion_tensorization();
    criterion_geometry();
    criterion_appendix_a();
    criterion_poincare();

    if (g_failures) {
        std::printf("%d acceptance check(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
