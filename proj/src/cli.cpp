#include "mpspec/cli.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>

#include "mpspec/common.hpp"
#include "mpspec/dd.hpp"
#include "mpspec/inequalities.hpp"
#include "mpspec/quadrature.hpp"
#include "mpspec/spectral.hpp"
#include "mpspec/strip.hpp"
#include "mpspec/tensor.hpp"
#include "mpspec/tightness.hpp"

namespace mpspec {

namespace {

double log2e(double x) {
    double l = std::log(M_E + std::abs(x));
    return l * l;
}

Check make_check(const std::string& name, double value, double bound, bool pass) {
    return Check{name, value, bound, pass};
}

Suite suite_orthogonality(const RunConfig& cfg) {
    Suite s{"orthogonality", {}};
    int K = std::min(60, cfg.N);
    for (int ell : {1, 2, 3}) {
        OrthoBasis b = OrthoBasis::meixner_pollaczek(ell, 200);
        GaussRule r = gauss_rule(b, 200);
        std::vector<std::vector<double>> vals(r.size());
        std::vector<double> p;
        for (int i = 0; i < r.size(); ++i) {
            b.eval_orthonormal(r.nodes[i], K, p);
            vals[i] = p;
        }
        double worst = 0.0;
        for (int j = 0; j <= K; ++j)
            for (int k = j; k <= K; ++k) {
                dd_accumulator g;
                for (int i = 0; i < r.size(); ++i)
                    g.add(r.weights[i] * vals[i][j] * vals[i][k]);
                double classical = g.value() * std::sqrt(b.norm_sq(j) * b.norm_sq(k));
                double target = (j == k) ? b.norm_sq(k) : 0.0;
                worst = std::max(worst, std::abs(classical - target));
            }
        s.checks.push_back(make_check("gram_ell" + std::to_string(ell), worst,
                                      cfg.tol_gram, worst <= cfg.tol_gram));
    }
    return s;
}

Suite suite_identity(const RunConfig& cfg) {
    Suite s{"strip_identity", {}};
    auto polys = random_polynomial_suite(cfg.seed, 20, 15);
    double worst = 0.0;
    for (const auto& c : polys) {
        auto fk = mp1_coeffs_of_poly(c);
        dd_accumulator lhs;
        for (std::size_t k = 1; k < fk.size(); ++k)
            lhs.add(static_cast<double>(k) * fk[k] * fk[k]);
        double rhs = identity_rhs(StripFunction::from_poly(c));
        worst = std::max(worst, std::abs(lhs.value() - rhs) / lhs.value());
    }
    s.checks.push_back(make_check("random_poly_rel_err", worst, cfg.tol_identity,
                                  worst <= cfg.tol_identity));
    double ax = identity_rhs(StripFunction::from_poly({0.0, 1.0}));
    s.checks.push_back(make_check("anchor_x", ax, 1.0, std::abs(ax - 1.0) <= 1e-8));
    double ax2 = identity_rhs(StripFunction::from_poly({0.0, 0.0, 1.0}));
    s.checks.push_back(
        make_check("anchor_x2", ax2, 8.0, std::abs(ax2 - 8.0) <= 8e-8));
    return s;
}

Suite suite_khat(const RunConfig& cfg) {
    Suite s{"kernel_fourier", {}};
    double worst = 0.0;
    for (int i = 0; i <= 120; ++i) {
        double v = -6.0 + 0.1 * i;
        auto z = fourier_panels([](double x) { return kernel_K(x); }, -90.0, 90.0, v);
        worst = std::max({worst, std::abs(z.real() - khat_closed(v)),
                          std::abs(z.imag())});
    }
    s.checks.push_back(
        make_check("khat_max_err", worst, cfg.tol_fourier, worst <= cfg.tol_fourier));
    double k0 = khat_closed(0.0);
    double expect = 4.0 / (1.0 + std::sqrt(2.0));
    s.checks.push_back(
        make_check("khat_at_0", k0, expect, std::abs(k0 - expect) <= 1e-14));
    auto z1 = fourier_panels(
        [](double x) { return 1.0 / (std::sqrt(2.0) * std::cosh(x) + 1.0); }, -95.0,
        95.0, 1.0);
    double i1 = 2.0 * M_PI * std::sinh(M_PI / 4.0) / std::sinh(M_PI);
    s.checks.push_back(make_check("appendix_contour_v1", z1.real(), i1,
                                  std::abs(z1.real() - i1) <= 1e-8));
    return s;
}

Suite suite_gamma(const RunConfig&) {
    Suite s{"gamma_sandwich", {}};
    struct Named {
        const char* name;
        WeightProfile p;
    };
    std::vector<Named> profiles;
    profiles.push_back({"one", WeightProfile::const_one()});
    profiles.push_back({"log_sq", WeightProfile::log_sq()});
    profiles.push_back({"pow_half", WeightProfile::pow_neg(0.5)});
    profiles.push_back({"pow_09", WeightProfile::pow_neg(0.9)});
    for (auto& np : profiles) {
        double worst_lower = 1e300, worst_upper = 1e300;
        bool ok = true;
        for (int k = 1; k <= (1 << 14); k *= 2) {
            auto r = np.p.sandwich_check(k);
            ok = ok && r.ok;
            worst_lower = std::min(worst_lower, r.lower_margin);
            worst_upper = std::min(worst_upper, r.upper_margin);
        }
        s.checks.push_back(make_check(std::string("sandwich_") + np.name,
                                      std::min(worst_lower, worst_upper), 0.0, ok));
    }
    // asymptotic band for the log^2 profile
    WeightProfile lg = WeightProfile::log_sq();
    double band_lo = 1e300, band_hi = 0.0;
    for (int k = 1; k <= (1 << 14); k *= 2) {
        double ratio = lg.gamma(k) / log2e(static_cast<double>(k));
        band_lo = std::min(band_lo, ratio);
        band_hi = std::max(band_hi, ratio);
    }
    s.checks.push_back(make_check("log_sq_ratio_lo", band_lo, 1.0 / 64.0,
                                  band_lo >= 1.0 / 64.0));
    s.checks.push_back(make_check("log_sq_ratio_hi", band_hi, 8.0, band_hi <= 8.0));
    return s;
}

Suite suite_appendix_a(const RunConfig&) {
    Suite s{"appendix_a", {}};
    std::vector<double> grid(10000);
    for (int i = 0; i < 10000; ++i) grid[i] = -50.0 + 100.0 * i / 9999.0;
    for (const auto& row : hyperbolic_checks(grid))
        s.checks.push_back(make_check(row.name, row.margin, 0.0, row.pass));
    return s;
}

Suite suite_geometry(const RunConfig& cfg) {
    Suite s{"disk_geometry", {}};
    int bad = 0;
    for (double rr : {0.5, 0.9, 0.99}) {
        SplitMix64 rng(cfg.seed + 17u);
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
    s.checks.push_back(make_check("membership_violations", bad, 0.0, bad == 0));
    double anchor = disk_image_radius(0.0, 1.0 / std::sqrt(3.0));
    double expect = 2.0 + std::sqrt(3.0);
    s.checks.push_back(make_check("radius_anchor", anchor, expect,
                                  std::abs(anchor - expect) <= 1e-12));
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
    s.checks.push_back(make_check("abound_grid_violations", violations, 0.0,
                                  violations == 0));
    return s;
}

Report run_verify(const RunConfig& cfg) {
    Report rep;
    rep.suites.push_back(suite_orthogonality(cfg));
    rep.suites.push_back(suite_identity(cfg));
    rep.suites.push_back(suite_khat(cfg));
    rep.suites.push_back(suite_gamma(cfg));
    rep.suites.push_back(suite_appendix_a(cfg));
    rep.suites.push_back(suite_geometry(cfg));
    return rep;
}

struct NamedFunction {
    std::function<double(double)> two_sided;
    std::function<double(double)> half;
    std::vector<double> breaks_two;
    std::vector<double> breaks_half;
};

NamedFunction lookup_function(const std::string& name) {
    if (name == "abs_clip")
        return {[](double x) { return std::min(std::abs(x), 1.0); },
                [](double x) { return std::min(x, 1.0); },
                {-1.0, 0.0, 1.0},
                {1.0}};
    if (name == "gaussian")
        return {[](double x) { return std::exp(-x * x / 2.0); },
                [](double x) { return std::exp(-x * x / 2.0); },
                {},
                {}};
    if (name == "x2")
        return {[](double x) { return x * x; }, [](double x) { return x * x; },
                {},
                {}};
    throw std::invalid_argument("unknown test function: " + name);
}

Report run_rates(const RunConfig& cfg, std::vector<std::vector<std::string>>* rows_out) {
    NamedFunction f = lookup_function(cfg.test_function);
    auto rows = rate_comparison(f.two_sided, f.half, cfg.n_grid, f.breaks_two,
                                f.breaks_half);
    std::vector<double> col;
    for (const auto& r : rows) col.push_back(r.en_times_log2n);
    std::vector<double> sorted = col;
    std::sort(sorted.begin(), sorted.end());
    double median = sorted[sorted.size() / 2];
    double colmax = *std::max_element(col.begin(), col.end());

    Report rep;
    Suite s{"rates", {}};
    s.checks.push_back(make_check("two_sided_log2_bounded", colmax, 3.0 * median,
                                  median == 0.0 || colmax <= 3.0 * median));
    double sob = integrate_panels(
        [&](double x) {
            double h = 1e-6;
            double d = (f.half(x + h) - f.half(x - h)) / (2 * h);
            return x * d * d * std::exp(-x);
        },
        0.0, 190.0, 0.5, 16, f.breaks_half);
    bool half_ok = true;
    for (const auto& r : rows) half_ok = half_ok && r.en_times_n <= sob * (1 + 1e-6);
    s.checks.push_back(make_check("half_sided_linear_bound", sob, sob, half_ok));
    rep.suites.push_back(s);

    if (rows_out) {
        for (const auto& r : rows)
            rows_out->push_back({std::to_string(r.n), fmt_g17(r.en_two_sided),
                                 fmt_g17(r.en_times_log2n), fmt_g17(r.en_half),
                                 fmt_g17(r.en_times_n)});
    }
    return rep;
}

Report run_tightness(const RunConfig& cfg,
                     std::vector<std::vector<std::string>>* rows_out) {
    auto a_ll = [](int k) { return std::log(std::log(std::exp(M_E) + k)); };
    int N = std::max(cfg.N, 4096);
    auto rep_exp = divergence_experiment(a_ll, cfg.lambda_grid, N);

    Report rep;
    Suite s{"tightness", {}};
    s.checks.push_back(make_check("weighted_sum_increasing",
                                  rep_exp.weighted_increasing ? 1.0 : 0.0, 1.0,
                                  rep_exp.weighted_increasing));
    s.checks.push_back(make_check("k_energy_slope",
                                  rep_exp.slope_log_kenergy_vs_lambda_sq, 1.1,
                                  rep_exp.slope_log_kenergy_vs_lambda_sq >= 0.8 &&
                                      rep_exp.slope_log_kenergy_vs_lambda_sq <= 1.1));
    s.checks.push_back(make_check("en_normalized_bound", rep_exp.en_bound_constant,
                                  1.0, rep_exp.en_bound_constant < 1.0));
    rep.suites.push_back(s);

    if (rows_out) {
        for (const auto& r : rep_exp.rows)
            rows_out->push_back({fmt_g17(r.lambda), fmt_g17(r.weighted_sum),
                                 fmt_g17(r.k_energy), fmt_g17(r.e2), fmt_g17(r.e8),
                                 fmt_g17(r.e32), fmt_g17(r.e128)});
    }
    return rep;
}

Report run_tensor(const RunConfig& cfg) {
    Report rep;
    Suite s{"tensor", {}};

    auto e = product_expand(
        [](const std::vector<double>& p) { return p[0] * p[1]; }, 2, 8);
    double c11 = e.coeff({1, 1});
    s.checks.push_back(
        make_check("xy_coefficient", c11, 1.0, std::abs(c11 - 1.0) <= 1e-10));

    // separable factorization error
    int N = std::min(cfg.N, 20);
    auto g1 = [](double x) { return std::exp(-x * x); };
    auto g2 = [](double y) { return 1.0 / (1.0 + y * y); };
    auto es = product_expand(
        [&](const std::vector<double>& p) { return g1(p[0]) * g2(p[1]); }, 2, N);
    auto basis = std::make_shared<OrthoBasis>(
        OrthoBasis::meixner_pollaczek(1, std::max(2 * N, 64)));
    GaussRule rule = gauss_rule(*basis, std::max(2 * N, 64));
    auto e1 = expand(g1, basis, N, rule);
    auto e2 = expand(g2, basis, N, rule);
    double worst = 0.0;
    for (int i = 0; i <= N; ++i)
        for (int j = 0; j <= N; ++j)
            worst = std::max(worst, std::abs(es.coeff({i, j}) -
                                             e1.coeffs()[i] * e2.coeffs()[j]));
    s.checks.push_back(make_check("separability", worst, 1e-9, worst <= 1e-9));

    auto r = tensorization_check(
        [](const std::vector<double>& p) {
            return std::min(std::abs(p[0]), 2.0) + std::min(std::abs(p[1]), 2.0);
        },
        {[](const std::vector<double>& p) {
             return std::abs(p[0]) < 2.0 ? (p[0] > 0 ? 1.0 : -1.0) : 0.0;
         },
         [](const std::vector<double>& p) {
             return std::abs(p[1]) < 2.0 ? (p[1] > 0 ? 1.0 : -1.0) : 0.0;
         }},
        2, std::min(cfg.N, 24), log2e,
        [](double x) { return log2e(x); }, 1.0);
    s.checks.push_back(make_check("tensorization_clip", r.lhs, r.margin * r.rhs, r.ok));
    rep.suites.push_back(s);
    return rep;
}

Report run_poincare(const RunConfig&) {
    Report rep;
    Suite s{"poincare", {}};
    auto nu = poincare_estimate(Weight::sech());
    s.checks.push_back(make_check("sech_converged", nu.estimate, nu.refined,
                                  nu.converged));
    auto pert = poincare_perturbation_check(Weight::sech());
    s.checks.push_back(
        make_check("perturbation_bound", pert.cp_perturbed, pert.bound, pert.ok));
    double base = nu.estimate;
    bool scaling_ok = true;
    double worst = 0.0;
    for (double lam : {0.5, 2.0}) {
        double scaled = poincare_estimate(Weight::sech().dilated(lam)).estimate;
        double rel = std::abs(scaled * lam * lam - base) / base;
        worst = std::max(worst, rel);
        scaling_ok = scaling_ok && rel <= 0.02;
    }
    s.checks.push_back(make_check("scaling_2pct", worst, 0.02, scaling_ok));
    rep.suites.push_back(s);
    return rep;
}

} // namespace

void RunConfig::validate() const {
    static const std::vector<std::string> commands{"verify", "rates", "tightness",
                                                   "tensor", "poincare"};
    if (std::find(commands.begin(), commands.end(), command) == commands.end())
        throw std::invalid_argument("unknown command: " + command);
    if (N < 1) throw std::invalid_argument("N must be positive");
    if (rule_size != 0 && rule_size < 2 * N)
        throw std::invalid_argument("rule size must be at least 2N");
    if (format != "csv" && format != "json")
        throw std::invalid_argument("format must be csv or json");
    if (tol_identity <= 0 || tol_fourier <= 0 || tol_gram <= 0)
        throw std::invalid_argument("tolerances must be positive");
    if (lambda_grid.empty() || n_grid.empty())
        throw std::invalid_argument("grids must be nonempty");
    if (!std::is_sorted(lambda_grid.begin(), lambda_grid.end()) ||
        !std::is_sorted(n_grid.begin(), n_grid.end()))
        throw std::invalid_argument("grids must be sorted");
    if (weight != "sech")
        throw std::invalid_argument("verification runs under the sech weight");
}

void RunConfig::apply_json(const std::string& config_path) {
    std::ifstream in(config_path);
    if (!in) throw std::invalid_argument("cannot read config " + config_path);
    nlohmann::json j;
    in >> j;
    if (j.contains("weight")) weight = j["weight"].get<std::string>();
    if (j.contains("N")) N = j["N"].get<int>();
    if (j.contains("rule")) rule_size = j["rule"].get<int>();
    if (j.contains("lambda")) lambda_grid = j["lambda"].get<std::vector<double>>();
    if (j.contains("n")) n_grid = j["n"].get<std::vector<int>>();
    if (j.contains("f")) test_function = j["f"].get<std::string>();
    if (j.contains("out")) out_path = j["out"].get<std::string>();
    if (j.contains("format")) format = j["format"].get<std::string>();
    if (j.contains("seed")) seed = j["seed"].get<std::uint64_t>();
    if (j.contains("tol_identity")) tol_identity = j["tol_identity"].get<double>();
    if (j.contains("tol_fourier")) tol_fourier = j["tol_fourier"].get<double>();
    if (j.contains("tol_gram")) tol_gram = j["tol_gram"].get<double>();
}

int run(const RunConfig& cfg) {
    cfg.validate();
    Report rep;
    std::vector<std::vector<std::string>> data_rows;
    std::vector<std::string> data_header;

    if (cfg.command == "verify") {
        rep = run_verify(cfg);
    } else if (cfg.command == "rates") {
        data_header = {"n", "En_two_sided", "En_times_log2n", "En_half",
                       "En_times_n"};
        rep = run_rates(cfg, &data_rows);
    } else if (cfg.command == "tightness") {
        data_header = {"lambda", "weighted_sum", "k_energy", "e2", "e8", "e32",
                       "e128"};
        rep = run_tightness(cfg, &data_rows);
    } else if (cfg.command == "tensor") {
        rep = run_tensor(cfg);
    } else {
        rep = run_poincare(cfg);
    }

    rep.config = {{"command", cfg.command}, {"weight", cfg.weight},
                  {"N", cfg.N},             {"rule", cfg.rule_size},
                  {"lambda", cfg.lambda_grid}, {"n", cfg.n_grid},
                  {"f", cfg.test_function}, {"format", cfg.format},
                  {"seed", cfg.seed},
                  {"truncation_bound", Weight::sech().truncation_bound()}};

    std::string out = cfg.out_path.empty()
                          ? cfg.command + "_report." + cfg.format
                          : cfg.out_path;
    if (cfg.format == "json") {
        nlohmann::json j = rep.to_json();
        if (!data_rows.empty()) {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& r : data_rows) {
                nlohmann::json jr = nlohmann::json::array();
                for (const auto& cell : r) jr.push_back(cell);
                rows.push_back(jr);
            }
            j["columns"] = data_header;
            j["rows"] = rows;
        }
        std::ofstream jo(out, std::ios::binary);
        if (!jo) throw std::runtime_error("cannot open " + out);
        jo << j.dump(2) << "\n";
    } else if (!data_rows.empty()) {
        write_csv(out, data_header, data_rows);
    } else {
        write_report_csv(out, rep);
    }

    for (const auto& s : rep.suites) {
        std::cout << (s.all_pass() ? "PASS " : "FAIL ") << s.name;
        if (const Check* c = s.first_failure()) std::cout << " (first: " << c->name << ")";
        std::cout << "\n";
    }
    if (!rep.all_pass()) {
        std::cout << "FAILED: " << rep.first_failure_name() << "\n";
        return 1;
    }
    std::cout << "all checks passed; report written to " << out << "\n";
    return 0;
}

} // namespace mpspec
