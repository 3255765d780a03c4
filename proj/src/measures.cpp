#include "mpspec/measures.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "mpspec/common.hpp"
#include "mpspec/quadrature.hpp"

namespace mpspec {

namespace {

// log(2 cosh(t)) without overflow
double log_2cosh(double t) {
    double a = std::abs(t);
    return a + std::log1p(std::exp(-2.0 * a));
}

// log(2 sinh(t)) for t > 0
double log_2sinh(double t) {
    return t + std::log1p(-std::exp(-2.0 * t));
}

// Lanczos g=7 n=9 log-gamma, Re z > 0 (all our arguments have Re z >= 1/2)
std::complex<double> lanczos_log_gamma(std::complex<double> z) {
    static const double c[9] = {
        0.99999999999980993,  676.5203681218851,    -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,  12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    z -= 1.0;
    std::complex<double> x = c[0];
    for (int i = 1; i < 9; ++i) x += c[i] / (z + static_cast<double>(i));
    std::complex<double> t = z + 7.5;
    return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// log |Gamma((ell + i x)/2)|^2 = 2 Re log Gamma((ell + ix)/2)
double log_gamma_mod_sq(int ell, double x) {
    return 2.0 * lanczos_log_gamma({0.5 * ell, 0.5 * x}).real();
}

double nu2_log_density(double x) {
    double a = std::abs(x);
    if (a < 1e-3) {
        // x/(2 sinh(pi x/2)) = (1/pi)(1 - t/6 + 7 t^2/360 - ...), t = (pi x/2)^2
        double t = 0.25 * M_PI * M_PI * x * x;
        return std::log((1.0 / M_PI) * (1.0 - t / 6.0 + 7.0 * t * t / 360.0));
    }
    return std::log(a) - log_2sinh(M_PI * a / 2.0);
}

} // namespace

Weight Weight::two_sided_exp() {
    Weight w;
    w.kind_ = WeightKind::TwoSidedExp;
    w.name_ = "two_sided_exp";
    w.symmetric_ = true;
    w.truncation_bound(); // caches fill before publication (concurrent reads)
    return w;
}

Weight Weight::sech() {
    Weight w;
    w.kind_ = WeightKind::Sech;
    w.ell_ = 1;
    w.name_ = "sech";
    w.symmetric_ = true;
    w.truncation_bound();
    return w;
}

Weight Weight::nu_ell(int ell) {
    if (ell < 1) throw std::invalid_argument("nu_ell: ell must be positive");
    Weight w;
    w.kind_ = WeightKind::NuEll;
    w.ell_ = ell;
    w.name_ = "nu_" + std::to_string(ell);
    w.symmetric_ = true;
    w.truncation_bound();
    return w;
}

Weight Weight::half_exp() {
    Weight w;
    w.kind_ = WeightKind::HalfExp;
    w.name_ = "half_exp";
    w.lo_ = 0.0;
    w.symmetric_ = false;
    w.truncation_bound();
    return w;
}

Weight Weight::log_perturbed_sech() {
    Weight w;
    w.kind_ = WeightKind::LogPerturbedSech;
    w.name_ = "log_perturbed_sech";
    w.symmetric_ = true;
    w.log_normalizer();
    w.truncation_bound();
    return w;
}

Weight Weight::custom(std::function<double(double)> log_density, double lo, double hi,
                      bool symmetric, std::string name) {
    Weight w;
    w.kind_ = WeightKind::Custom;
    w.name_ = std::move(name);
    w.lo_ = lo;
    w.hi_ = hi;
    w.symmetric_ = symmetric;
    w.custom_log_density_ = std::move(log_density);
    if (w.custom_log_density_) w.truncation_bound();
    return w;
}

Weight Weight::dilated(double lambda) const {
    if (!(lambda > 0)) throw std::invalid_argument("dilated: lambda must be positive");
    Weight w = *this;
    w.dilation_ *= lambda;
    w.name_ = name_ + "_dilated";
    if (std::isfinite(lo_)) w.lo_ = lo_ / lambda;
    if (std::isfinite(hi_)) w.hi_ = hi_ / lambda;
    w.cached_trunc_ = -1.0;
    w.truncation_bound();
    return w;
}

double Weight::base_log_density(double x) const {
    switch (kind_) {
        case WeightKind::TwoSidedExp:
            return -std::abs(x) - std::log(2.0);
        case WeightKind::Sech:
            return -log_2cosh(M_PI * x / 2.0);
        case WeightKind::NuEll:
            if (ell_ == 1) return -log_2cosh(M_PI * x / 2.0);
            if (ell_ == 2) return nu2_log_density(x);
            // normalized gamma-modulus form; reduces to the sech density at ell=1
            return (ell_ - 1) * std::log(2.0) - std::log(2.0 * M_PI) -
                   std::lgamma(static_cast<double>(ell_)) + log_gamma_mod_sq(ell_, x);
        case WeightKind::HalfExp:
            if (x < 0.0) return -std::numeric_limits<double>::infinity();
            return -x;
        case WeightKind::LogPerturbedSech:
            return 2.0 * std::log(std::log(M_E + std::abs(x))) -
                   log_2cosh(M_PI * x / 2.0) - log_normalizer();
        case WeightKind::Custom:
            if (!custom_log_density_)
                throw unsupported_capability("custom weight has no density");
            return custom_log_density_(x);
    }
    throw std::logic_error("unreachable");
}

double Weight::log_density(double x) const {
    if (x < lo_ || x > hi_) return -std::numeric_limits<double>::infinity();
    if (dilation_ == 1.0) return base_log_density(x);
    return std::log(dilation_) + base_log_density(dilation_ * x);
}

double Weight::density(double x) const {
    double l = log_density(x);
    return std::isfinite(l) ? std::exp(l) : 0.0;
}

bool Weight::has_mgf() const {
    return kind_ == WeightKind::Sech || kind_ == WeightKind::NuEll;
}

double Weight::mgf(double alpha) const {
    if (!has_mgf())
        throw unsupported_capability("no closed-form mgf for weight " + name_);
    double a = alpha / dilation_; // E e^{alpha X/lam} = mgf_base(alpha/lam)
    if (!(std::abs(a) < M_PI_2))
        throw std::domain_error("mgf: |alpha| must be below pi/2");
    return std::pow(1.0 / std::cos(a), ell_);
}

double Weight::log_normalizer() const {
    if (kind_ != WeightKind::LogPerturbedSech) return 0.0;
    if (std::isnan(cached_log_z_)) {
        // Z = \int log^2(e+|x|) dnu, computed once
        double X = 80.0 * 2.0 / M_PI + 10.0;
        double z = integrate_panels(
            [](double x) {
                double l = std::log(M_E + std::abs(x));
                double log_rho = -(M_PI * std::abs(x) / 2.0 +
                                   std::log1p(std::exp(-M_PI * std::abs(x))));
                return l * l * std::exp(log_rho);
            },
            -X, X, 0.5);
        cached_log_z_ = std::log(z);
    }
    return cached_log_z_;
}

double Weight::truncation_bound() const {
    if (cached_trunc_ > 0.0) return cached_trunc_;
    // grow until log-density < -80 on both relevant sides, then bisect
    auto below = [&](double x) { return log_density(x) < -80.0; };
    double X = 1.0;
    double hi_cap = 1e6;
    while (X < hi_cap && (!below(X) || (symmetric_ && !below(-X)))) X *= 1.5;
    if (X >= hi_cap)
        throw numeric_error(
            "truncation_bound: tail of " + name_ + " too heavy to truncate");
    double lo = X / 1.5, hi = X;
    for (int i = 0; i < 80; ++i) {
        double mid = 0.5 * (lo + hi);
        if (below(mid) && (!symmetric_ || below(-mid)))
            hi = mid;
        else
            lo = mid;
    }
    cached_trunc_ = hi;
    return cached_trunc_;
}

std::vector<double> Weight::kinks() const {
    switch (kind_) {
        case WeightKind::TwoSidedExp:
        case WeightKind::LogPerturbedSech:
            return {0.0}; // |x| kink, fixed under dilation
        default:
            return {};
    }
}

double Weight::moment(int p) const {
    if (p < 0) throw std::invalid_argument("moment: p must be nonnegative");
    if (p == 0) return 1.0;
    if (symmetric_ && (p % 2 == 1)) return 0.0;
    double X = truncation_bound();
    double a = std::isfinite(lo_) ? std::max(lo_, -X) : -X;
    double b = std::isfinite(hi_) ? std::min(hi_, X) : X;
    double val = integrate_panels(
        [&](double x) { return std::pow(x, p) * density(x); }, a, b,
        std::max((b - a) / 512.0, 1e-3), 16, kinks());
    if (!std::isfinite(val))
        throw numeric_error("moment: quadrature failed (divergent moment?)");
    return val;
}

double Weight::mgf_numeric(double alpha) const {
    // truncate where the integrand e^{alpha x} rho(x) drops below 1e-40 of scale
    double X = truncation_bound();
    if (kind_ == WeightKind::Sech || kind_ == WeightKind::NuEll) {
        double rate = M_PI_2 * dilation_ - std::abs(alpha);
        if (rate <= 0.0)
            throw std::domain_error("mgf_numeric: integral diverges");
        X = std::max(X, (95.0 + std::abs(std::log(rate))) / rate);
    }
    double a = std::isfinite(lo_) ? lo_ : -X;
    double b = std::isfinite(hi_) ? std::min(hi_, X) : X;
    double val = integrate_panels(
        [&](double x) { return std::exp(alpha * x + log_density(x)); }, a, b, 0.5,
        16, kinks());
    return val;
}

} // namespace mpspec
