#include "mpspec/profile.hpp"

#include <cmath>
#include <stdexcept>

#include "mpspec/common.hpp"
#include "mpspec/quadrature.hpp"

namespace mpspec {

WeightProfile WeightProfile::const_one() {
    WeightProfile p;
    p.name_ = "one";
    p.decreasing_ = true;
    p.phi_ = [](double) { return 1.0; };
    p.Phi_closed_ = [](double t) { return t; };
    return p;
}

WeightProfile WeightProfile::log_sq() {
    WeightProfile p;
    p.name_ = "log_sq";
    p.decreasing_ = true;
    p.phi_ = [](double eps) {
        double l = std::log(eps);
        return l * l;
    };
    // \int_0^t log^2 = t (log^2 t - 2 log t + 2)
    p.Phi_closed_ = [](double t) {
        if (t <= 0.0) return 0.0;
        double l = std::log(t);
        return t * (l * l - 2.0 * l + 2.0);
    };
    return p;
}

WeightProfile WeightProfile::pow_neg(double beta) {
    if (!(beta > 0.0 && beta < 1.0))
        throw std::domain_error("pow_neg: 0 < beta < 1 required");
    WeightProfile p;
    p.name_ = "pow_neg";
    p.decreasing_ = true;
    p.phi_ = [beta](double eps) { return std::pow(eps, -beta); };
    p.Phi_closed_ = [beta](double t) {
        return std::pow(t, 1.0 - beta) / (1.0 - beta);
    };
    return p;
}

WeightProfile WeightProfile::custom(std::function<double(double)> phi,
                                    std::function<double(double)> Phi_closed,
                                    bool decreasing, std::string name) {
    WeightProfile p;
    p.name_ = std::move(name);
    p.decreasing_ = decreasing;
    p.phi_ = std::move(phi);
    if (Phi_closed) {
        p.Phi_closed_ = std::move(Phi_closed);
    } else {
        auto f = p.phi_;
        p.Phi_closed_ = [f](double t) {
            if (t <= 0.0) return 0.0;
            return integrate_tanh_sinh_01([&](double e, double) {
                return e < 1.0 ? f(e * t) * t : 0.0;
            });
        };
    }
    return p;
}

double WeightProfile::Phi(double t) const {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return Phi_closed_(1.0); // phi = 0 outside (0,1)
    return Phi_closed_(t);
}

double WeightProfile::gamma(int k) const {
    if (k < 1) throw std::domain_error("gamma: k >= 1 required");
    // eps = 1 - t^{1/(2k)} turns the integral into \int_0^1 t^{1/(2k)} phi(eps) dt;
    // near t = 1 the exact endpoint distance keeps eps ~ dist/(2k) accurate
    double inv2k = 1.0 / (2.0 * k);
    double val = integrate_tanh_sinh_01(
        [&](double t, double dist) {
            double log_t = (t > 0.5) ? std::log1p(-dist) : std::log(t);
            double eps = -std::expm1(log_t * inv2k);
            if (eps <= 0.0 || eps >= 1.0) return 0.0;
            return std::exp(log_t * inv2k) * phi_(eps);
        },
        1e-12);
    if (!std::isfinite(val))
        throw numeric_error("gamma: integral not finite (phi not integrable?)");
    return val;
}

WeightProfile::SandwichResult WeightProfile::sandwich_check(int k) const {
    if (!decreasing_)
        throw std::invalid_argument("sandwich_check: phi must be decreasing");
    SandwichResult r;
    r.gamma = gamma(k);
    double invk = 1.0 / k;
    r.lower = phi_(invk) / 32.0 + 0.5 * k * Phi(0.5 * invk);
    r.upper = 2.0 * k * Phi(invk) + phi_(invk);
    r.lower_margin = r.gamma - r.lower;
    r.upper_margin = r.upper - r.gamma;
    r.ok = r.lower_margin >= 0.0 && r.upper_margin >= 0.0;
    return r;
}

} // namespace mpspec
