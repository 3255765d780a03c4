#include "mpspec/strip.hpp"

#include <cmath>
#include <stdexcept>

#include "mpspec/common.hpp"
#include "mpspec/dd.hpp"
#include "mpspec/orthopoly.hpp"
#include "mpspec/quadrature.hpp"

namespace mpspec {

namespace {

double nu2_density(double x) {
    double a = std::abs(x);
    if (a < 1e-3) {
        double t = 0.25 * M_PI * M_PI * x * x;
        return (1.0 / M_PI) * (1.0 - t / 6.0 + 7.0 * t * t / 360.0);
    }
    return a / (2.0 * std::sinh(M_PI * a / 2.0));
}

// t/sinh(t) with the removable singularity handled by series
double t_over_sinh(double t) {
    double a = std::abs(t);
    if (a < 1e-3) {
        double s = t * t;
        return 1.0 - s / 6.0 + 7.0 * s * s / 360.0;
    }
    return t / std::sinh(t);
}

} // namespace

StripFunction StripFunction::from_poly(std::vector<double> monomial_coeffs) {
    if (monomial_coeffs.empty()) monomial_coeffs.push_back(0.0);
    StripFunction f;
    f.poly_coeffs = monomial_coeffs;
    f.eval = [c = monomial_coeffs](std::complex<double> z) {
        std::complex<double> acc = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
        return acc;
    };
    f.real_deriv = [c = monomial_coeffs](double x) {
        double acc = 0.0;
        for (std::size_t j = c.size(); j-- > 1;)
            acc = acc * x + static_cast<double>(j) * c[j];
        return acc;
    };
    f.growth_alpha = 0.0;
    double m = 0.0;
    for (double v : monomial_coeffs) m += std::abs(v);
    f.growth_scale = std::max(1.0, m);
    f.real_on_real_line = true;
    return f;
}

StripFunction StripFunction::gaussian(double lambda) {
    if (!(lambda > 0)) throw std::invalid_argument("gaussian: lambda > 0 required");
    StripFunction f;
    f.eval = [lambda](std::complex<double> z) {
        return std::exp(-lambda * lambda * z * z / 2.0) / std::sqrt(lambda);
    };
    f.real_deriv = [lambda](double x) {
        return -lambda * lambda * x * std::exp(-lambda * lambda * x * x / 2.0) /
               std::sqrt(lambda);
    };
    f.growth_alpha = 0.0;
    f.growth_scale = std::exp(lambda * lambda / 2.0) / std::sqrt(lambda);
    f.real_on_real_line = true;
    return f;
}

std::complex<double> delta(const StripFunction& f, double x) {
    return f.eval({x, 1.0}) - f.eval({x, -1.0});
}

double kernel_Ku(double u, double x) {
    if (!(std::abs(u) <= M_PI / 4.0 + 1e-12))
        throw std::domain_error("kernel_Ku: |u| <= pi/4 required");
    return (2.0 / M_PI) * t_over_sinh(M_PI * x / 2.0) * std::exp(u * x);
}

double kernel_K(double x) {
    if (std::abs(x) < 1e-3) {
        // 2 sinh(a x)/sinh(b x) with a=pi/8, b=pi/2
        double a = M_PI / 8.0, b = M_PI / 2.0;
        double xa = a * x, xb = b * x;
        double num = 1.0 + xa * xa / 6.0 + xa * xa * xa * xa / 120.0;
        double den = 1.0 + xb * xb / 6.0 + xb * xb * xb * xb / 120.0;
        return 2.0 * (a / b) * num / den;
    }
    return 2.0 * std::sinh(M_PI * x / 8.0) / std::sinh(M_PI * x / 2.0);
}

double khat_closed(double v) {
    return 4.0 / (1.0 + std::sqrt(2.0) * std::cosh(2.0 * v));
}

double identity_rhs(const StripFunction& f) {
    if (!(f.growth_alpha < M_PI / 4.0))
        throw std::invalid_argument(
            "identity_rhs: growth certificate must be below pi/4");
    // |Delta_f|^2 nu_2 decays at rate pi/2 - 2*alpha
    double rate = M_PI / 2.0 - 2.0 * f.growth_alpha;
    double X = (100.0 + std::log(1.0 + f.growth_scale)) / rate;
    if (f.poly_coeffs) {
        int d = static_cast<int>(f.poly_coeffs->size());
        X = std::max(X, 40.0 + 14.0 * d); // poly growth against e^{-pi x/2}
    }
    double val = integrate_panels(
        [&](double x) {
            std::complex<double> d = delta(f, x);
            return 0.25 * std::norm(d) * nu2_density(x);
        },
        -X, X, 0.25);
    if (!std::isfinite(val)) throw numeric_error("identity_rhs: quadrature failed");
    return val;
}

std::vector<double> mp1_coeffs_of_poly(const std::vector<double>& monomial_coeffs) {
    // exact triangular reduction against P_k^{(1)} (leading coefficient 1/k!)
    int d = static_cast<int>(monomial_coeffs.size()) - 1;
    while (d > 0 && monomial_coeffs[d] == 0.0) --d;
    auto P = mp_recurrence_exact(1, std::max(1, d));
    std::vector<Rational> rem(d + 1);
    for (int j = 0; j <= d; ++j) rem[j] = Rational(monomial_coeffs[j]);
    std::vector<double> out(d + 1, 0.0);
    Rational factorial(1);
    std::vector<Rational> fact(d + 1);
    fact[0] = 1;
    for (int j = 1; j <= d; ++j) fact[j] = fact[j - 1] * j;
    for (int k = d; k >= 0; --k) {
        Rational ck = rem[k] * fact[k]; // leading coeff of P_k is 1/k!
        out[k] = ck.get_d();
        if (ck != 0) {
            for (int j = 0; j <= P[k].degree(); ++j) rem[j] -= ck * P[k].coeffs[j];
        }
    }
    return out;
}

double disk_integral_rhs(const StripFunction& f, const WeightProfile& p) {
    if (!f.poly_coeffs)
        throw unsupported_capability("disk_integral: polynomial input required");
    auto fk = mp1_coeffs_of_poly(*f.poly_coeffs);
    dd_accumulator acc;
    for (std::size_t k = 1; k < fk.size(); ++k)
        acc.add(p.gamma(static_cast<int>(k)) * fk[k] * fk[k]);
    return M_PI_2 * acc.value();
}

double disk_integral_lhs(const StripFunction& f, const WeightProfile& p) {
    if (!f.poly_coeffs)
        throw unsupported_capability("disk_integral: polynomial input required");
    auto fk = mp1_coeffs_of_poly(*f.poly_coeffs);
    int deg = static_cast<int>(fk.size()) - 1;
    // G_f'(s) = sum_{k>=1} k f_k s^{k-1}; |G'|^2 on the circle of radius rho is a
    // trig polynomial of degree <= 2(deg-1): the M-point angular trapezoid below
    // is exact, and the radial Gauss rule is exact for the polynomial in rho.
    int M = std::max(8, 4 * deg);
    const LegendreRule& gl = legendre_rule(32);
    auto inner_disk = [&](double radius) {
        // \int_{D(0,radius)} |G'|^2 dA
        dd_accumulator acc;
        for (int j = 0; j < 32; ++j) {
            double rho = 0.5 * radius * (gl.nodes[j] + 1.0);
            double w = 0.5 * radius * gl.weights[j];
            double mean = 0.0;
            for (int t = 0; t < M; ++t) {
                double th = 2.0 * M_PI * t / M;
                std::complex<double> s = std::polar(rho, th);
                std::complex<double> g = 0.0;
                for (int k = deg; k >= 1; --k)
                    g = g * s + static_cast<double>(k) * fk[k];
                mean += std::norm(g);
            }
            mean /= M;
            acc.add(2.0 * M_PI * rho * mean * w);
        }
        return acc.value();
    };
    return integrate_tanh_sinh_01(
        [&](double eps, double) { return inner_disk(1.0 - eps) * p.phi(eps); },
        1e-11);
}

DiskGeometry::DiskGeometry(double radius) : r(radius) {
    if (!(radius > 0.0 && radius < 1.0))
        throw std::domain_error("DiskGeometry: 0 < r < 1 required");
    C_r = (1.0 + r * r) / (1.0 - r * r);
}

double DiskGeometry::angular_half_width() const { return 0.5 * std::acos(1.0 / C_r); }

double DiskGeometry::image_radius(double theta) const {
    double c = C_r * std::cos(2.0 * theta);
    if (c < 1.0)
        throw std::domain_error("image_radius: theta outside angular range");
    return c + std::sqrt(c * c - 1.0);
}

bool DiskGeometry::contains(std::complex<double> z, double pad) const {
    double th = z.real();
    if (std::abs(th) > angular_half_width() + pad) return false;
    double c = C_r * std::cos(2.0 * th);
    if (c < 1.0) return std::abs(z.imag()) <= pad;
    double half_height = 0.5 * std::log(c + std::sqrt(c * c - 1.0));
    return std::abs(z.imag()) <= half_height + pad;
}

double disk_image_radius(double theta, double r) {
    return DiskGeometry(r).image_radius(theta);
}

bool disk_image_contains(std::complex<double> z, double r) {
    return DiskGeometry(r).contains(z, 1e-12);
}

double strip_depth_a(double u, double v) {
    if (!(std::abs(u) < M_PI / 4.0))
        throw std::domain_error("strip_depth_a: |u| < pi/4 required");
    double target = std::exp(2.0 * std::abs(v));
    auto feasible = [&](double eps) {
        double r = 1.0 - eps;
        double C = (1.0 + r * r) / (1.0 - r * r);
        double c = C * std::cos(2.0 * u);
        if (c < 1.0) return false;                       // condition A
        return c + std::sqrt(c * c - 1.0) >= target;     // condition B
    };
    if (!feasible(1e-300)) return 0.0;
    double lo = 0.0, hi = 1.0; // feasible at lo+, infeasible at 1 (r=0)
    while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        if (feasible(mid))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

SandwichBounds coefficient_sandwich_bounds(const StripFunction& f,
                                           const WeightProfile& p) {
    if (!(f.growth_alpha < M_PI / 4.0))
        throw std::invalid_argument(
            "coefficient_sandwich_bounds: growth certificate >= pi/4");

    // x-truncation: K_u Delta_f decays at rate pi/2 - |u| - alpha
    auto x_cut = [&](double u) {
        double rate = M_PI / 2.0 - std::abs(u) - f.growth_alpha;
        double X = (45.0 + std::log(1.0 + f.growth_scale)) / rate;
        if (f.poly_coeffs) {
            int d = static_cast<int>(f.poly_coeffs->size());
            // solve rate*X - (d+1) log X > 45 crudely
            for (int it = 0; it < 60; ++it)
                X = (45.0 + (d + 1) * std::log(X + 2.0)) / rate;
        }
        return X;
    };

    const double V = 9.0;      // |hat| envelope decays like e^{-2|v|}
    const double hv = 0.02;    // Simpson step in v
    const int nv = static_cast<int>(std::round(V / hv)) + 1;

    // Gauss-Legendre nodes in u on each half of (-pi/4, pi/4)
    const int nu_half = 24;
    const LegendreRule& glu = legendre_rule(nu_half);

    dd_accumulator upper_acc, lower_acc;
    std::vector<std::complex<double>> hat(nv);

    auto add_u_panel = [&](double u, double wu) {
        double X = x_cut(u);
        PanelGrid grid(-X, X, 0.35, 16);
        const auto& xs = grid.points();
        const auto& ws = grid.weights();
        std::fill(hat.begin(), hat.end(), std::complex<double>(0.0, 0.0));
        for (std::size_t i = 0; i < xs.size(); ++i) {
            double x = xs[i];
            std::complex<double> g = kernel_Ku(u, x) * delta(f, x) * ws[i];
            std::complex<double> rot = std::polar(1.0, x * hv);
            std::complex<double> phase(1.0, 0.0); // e^{i x v} starting at v=0
            for (int j = 0; j < nv; ++j) {
                hat[j] += g * phase;
                phase *= rot;
            }
        }
        // Simpson in v on [0, V], doubled for the (-V, 0) half: |hat|^2 and
        // the Phi argument are even in v for functions real on the real line
        double su = M_PI - 4.0 * std::abs(u);
        dd_accumulator up, low;
        for (int j = 0; j < nv; ++j) {
            double v = j * hv;
            double simp = (j == 0 || j == nv - 1) ? 1.0 : (j % 2 ? 4.0 : 2.0);
            double h2 = std::norm(hat[j]);
            double e = std::exp(-2.0 * v);
            up.add(simp * h2 * p.Phi(su * e));
            low.add(simp * h2 * p.Phi(su * e / (2.0 * M_PI)));
        }
        double scale = wu * 2.0 * (hv / 3.0);
        upper_acc.add(scale * up.value());
        lower_acc.add(scale * low.value());
    };

    for (int side = 0; side < 2; ++side) {
        double sign = side == 0 ? -1.0 : 1.0;
        for (int j = 0; j < nu_half; ++j) {
            double u = sign * (M_PI / 8.0) * (glu.nodes[j] + 1.0);
            double wu = (M_PI / 8.0) * glu.weights[j];
            add_u_panel(u, wu);
        }
    }
    double c = 1.0 / (8.0 * M_PI);
    return {c * upper_acc.value(), c * lower_acc.value()};
}

} // namespace mpspec
