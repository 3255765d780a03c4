#ifndef MPSPEC_PROFILE_HPP
#define MPSPEC_PROFILE_HPP

#include <functional>
#include <string>

namespace mpspec {

// Decreasing eps-weight phi on (0,1), its antiderivative Phi extended to
// (0,pi) by the convention phi = 0 outside (0,1), and the induced sequence
//   Gamma_phi(k) = 2k \int_0^1 (1-eps)^{2k} phi(eps) deps.
class WeightProfile {
public:
    static WeightProfile const_one();
    static WeightProfile log_sq();              // phi(eps) = log^2(eps)
    static WeightProfile pow_neg(double beta);  // phi(eps) = eps^{-beta}, 0<beta<1
    static WeightProfile custom(std::function<double(double)> phi,
                                std::function<double(double)> Phi_closed,
                                bool decreasing, std::string name);

    const std::string& name() const { return name_; }
    bool decreasing() const { return decreasing_; }

    double phi(double eps) const { return phi_(eps); }
    // Phi(t) = \int_0^{min(t,1)} phi, valid on (0, pi)
    double Phi(double t) const;

    // Gamma_phi(k) by the substitution eps = 1 - t^{1/(2k)} and tanh-sinh
    double gamma(int k) const;

    struct SandwichResult {
        bool ok;
        double gamma;
        double lower, upper;
        double lower_margin, upper_margin;
    };
    // checks phi(1/k)/32 + (k/2) Phi(1/2k) <= Gamma_phi(k) <= 2k Phi(1/k) + phi(1/k)
    SandwichResult sandwich_check(int k) const;

private:
    std::string name_;
    bool decreasing_ = true;
    std::function<double(double)> phi_;
    std::function<double(double)> Phi_closed_; // on [0,1]
};

} // namespace mpspec

#endif
