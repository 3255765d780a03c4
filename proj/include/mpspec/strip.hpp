#ifndef MPSPEC_STRIP_HPP
#define MPSPEC_STRIP_HPP

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "mpspec/profile.hpp"

namespace mpspec {

// Function evaluable on the strip |Im z| <= 1 + delta with a declared growth
// certificate |f(R+iv)| <= M e^{alpha |R|}, alpha < pi/4.
struct StripFunction {
    std::function<std::complex<double>(std::complex<double>)> eval;
    std::function<double(double)> real_deriv; // empty when unavailable
    double growth_alpha = 0.0;
    double growth_scale = 1.0; // the M in the certificate
    bool real_on_real_line = true;
    std::optional<std::vector<double>> poly_coeffs; // monomial basis, when polynomial

    static StripFunction from_poly(std::vector<double> monomial_coeffs);
    static StripFunction gaussian(double lambda); // F_lambda = e^{-lam^2 z^2/2}/sqrt(lam)

    bool has_deriv() const { return static_cast<bool>(real_deriv); }
    double operator()(double x) const { return eval({x, 0.0}).real(); }
};

// Delta_f(x) = f(x+i) - f(x-i)
std::complex<double> delta(const StripFunction& f, double x);

// K_u(x) = x e^{ux}/sinh(pi x/2), continuous at 0 with K_u(0) = 2/pi
double kernel_Ku(double u, double x);
// K(x) = \int_{-pi/8}^{pi/8} K_u(x) du = 2 sinh(pi x/8)/sinh(pi x/2), K(0) = 1/2
double kernel_K(double x);
// closed-form Fourier transform of K
double khat_closed(double v);

// 1/4 \int |Delta_f|^2 dnu_2; requires growth_alpha < pi/4
double identity_rhs(const StripFunction& f);

// left side of the nested-disk identity for a polynomial f:
// \int_0^1 \int_{D(0,1-eps)} |G_f'|^2 phi(eps) dA deps  (polar quadrature)
double disk_integral_lhs(const StripFunction& f, const WeightProfile& p);
// its exact counterpart (pi/2) sum Gamma_phi(k) f_k^2 for the same polynomial
double disk_integral_rhs(const StripFunction& f, const WeightProfile& p);

// arctan disk-image geometry
struct DiskGeometry {
    double r;
    double C_r; // (1+r^2)/(1-r^2)

    explicit DiskGeometry(double radius);
    double angular_half_width() const; // arccos(1/C_r)/2
    double image_radius(double theta) const; // R_{theta,r}
    bool contains(std::complex<double> z, double pad = 0.0) const;
};

double disk_image_radius(double theta, double r);
bool disk_image_contains(std::complex<double> z, double r);

// greatest eps with cos(2u) >= 1/C_{1-eps} and R_{u,1-eps} >= e^{2|v|} (bisection);
// returns 0 when infeasible
double strip_depth_a(double u, double v);

struct SandwichBounds {
    double upper;
    double lower;
};
// The two (u,v) double integrals bracketing sum Gamma_phi(k) f_k^2: both carry
// the 1/(8 pi) prefactor; the lower bound scales the Phi argument by 1/(2 pi).
SandwichBounds coefficient_sandwich_bounds(const StripFunction& f,
                                           const WeightProfile& p);

// MP(1) coefficients of a polynomial (exact triangular conversion, then rounded)
std::vector<double> mp1_coeffs_of_poly(const std::vector<double>& monomial_coeffs);

} // namespace mpspec

#endif
