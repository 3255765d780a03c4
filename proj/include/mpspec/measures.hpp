#ifndef MPSPEC_MEASURES_HPP
#define MPSPEC_MEASURES_HPP

#include <functional>
#include <limits>
#include <memory>
#include <vector>
#include <string>

namespace mpspec {

enum class WeightKind {
    TwoSidedExp,      // e^{-|x|}/2 on R
    Sech,             // 1/(2 cosh(pi x/2)) on R
    NuEll,            // ell-fold convolution of Sech
    HalfExp,          // e^{-x} on [0, inf)
    LogPerturbedSech, // log^2(e+|x|)/(2 cosh(pi x/2)) / Z
    Custom
};

// Probability weight on the line: density, log-density, support, optional
// closed-form exponential-moment function. Immutable after construction.
class Weight {
public:
    static Weight two_sided_exp();
    static Weight sech();
    static Weight nu_ell(int ell);
    static Weight half_exp();
    static Weight log_perturbed_sech();
    static Weight custom(std::function<double(double)> log_density,
                         double support_lo = -std::numeric_limits<double>::infinity(),
                         double support_hi = std::numeric_limits<double>::infinity(),
                         bool symmetric = false, std::string name = "custom");
    // the dilated weight: X ~ w  =>  X/lambda, density lambda*rho(lambda x)
    Weight dilated(double lambda) const;

    WeightKind kind() const { return kind_; }
    int ell() const { return ell_; }
    const std::string& name() const { return name_; }

    double density(double x) const;
    double log_density(double x) const;
    double support_lo() const { return lo_; }
    double support_hi() const { return hi_; }
    bool symmetric() const { return symmetric_; }

    bool has_mgf() const;
    // closed-form \int e^{alpha x} dw; Sech and NuEll only, |alpha| < pi/2
    double mgf(double alpha) const;

    // |x| beyond which log_density < -80 (integration cutoff)
    double truncation_bound() const;

    // density kinks (panel breakpoints for quadrature)
    std::vector<double> kinks() const;

    // \int x^p dw by adaptive quadrature; odd p of a symmetric weight is 0 exactly
    double moment(int p) const;

    // \int e^{alpha x} dw by quadrature (cross-check path for the mgf)
    double mgf_numeric(double alpha) const;

private:
    Weight() = default;

    WeightKind kind_ = WeightKind::Custom;
    int ell_ = 0;
    std::string name_;
    double lo_ = -std::numeric_limits<double>::infinity();
    double hi_ = std::numeric_limits<double>::infinity();
    bool symmetric_ = false;
    double dilation_ = 1.0; // density is dilation * base(dilation * x)
    std::function<double(double)> custom_log_density_;
    mutable double cached_trunc_ = -1.0;
    mutable double cached_log_z_ = std::numeric_limits<double>::quiet_NaN();

    double base_log_density(double x) const;
    double log_normalizer() const; // LogPerturbedSech only
};

} // namespace mpspec

#endif
