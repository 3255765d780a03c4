#ifndef MPSPEC_ORTHOPOLY_HPP
#define MPSPEC_ORTHOPOLY_HPP

#include <complex>
#include <vector>

#include "mpspec/rational_poly.hpp"

namespace mpspec {

enum class PolyFamily { MeixnerPollaczek, Laguerre };

// Three-term recurrence table for an orthogonal family, in orthonormal form:
//   x p_k = b_{k+1} p_{k+1} + a_k p_k + b_k p_{k-1}.
// norms_sq holds the squared L2 norms of the classical (non-normalized)
// polynomials: binomial(k+ell-1, k) for MP(ell), 1 for Laguerre.
class OrthoBasis {
public:
    static OrthoBasis meixner_pollaczek(int ell, int degree_cap);
    static OrthoBasis laguerre(int degree_cap, double alpha = 0.0);
    // orthonormal basis from an externally computed recurrence (Stieltjes path)
    static OrthoBasis from_recurrence(std::vector<double> a, std::vector<double> b,
                                      double mass);

    PolyFamily family() const { return family_; }
    int ell() const { return ell_; }
    double alpha() const { return alpha_; }
    int degree_cap() const { return cap_; }
    double mass() const { return mass_; }

    double a(int k) const { return a_[k]; }
    double b(int k) const { return b_[k]; } // defined for k >= 1
    double norm_sq(int k) const { return norms_sq_[k]; }
    const std::vector<double>& norms_sq() const { return norms_sq_; }

    // values of the orthonormal p_0..p_n at x (forward recurrence)
    void eval_orthonormal(double x, int n, std::vector<double>& out) const;

private:
    PolyFamily family_ = PolyFamily::MeixnerPollaczek;
    int ell_ = 1;
    double alpha_ = 0.0;
    int cap_ = 0;
    double mass_ = 1.0;
    std::vector<double> a_, b_, norms_sq_;
};

// Gauss rule for the basis weight: nodes are Jacobi-matrix eigenvalues
// (Sturm bisection), weights from the orthonormal-recurrence eigenvector
// identity w_i = mass / sum_k p_k(x_i)^2.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    int size() const { return static_cast<int>(nodes.size()); }

    template <class F>
    double integrate(F&& f) const {
        double acc = 0.0;
        for (int i = 0; i < size(); ++i) acc += f(nodes[i]) * weights[i];
        return acc;
    }
};

GaussRule gauss_rule(const OrthoBasis& basis, int n);

// --- exact-coefficient layer -------------------------------------------------

// P_k^{(ell)} up to degree_cap from the derived three-term recurrence
//   (k+1) P_{k+1} = x P_k - (k-1+ell) P_{k-1},  P_0 = 1, P_1 = x,
// in exact rational arithmetic.
std::vector<PolyExact> mp_recurrence_exact(int ell, int degree_cap);

// The same polynomials from the generating function: Taylor expansion of
// e^{x arctan s} (1+s^2)^{-ell/2} in s, composed in exact rational series.
std::vector<PolyExact> generating_taylor(int ell, int degree_cap);

// P_k^{(ell)}(z) by forward recurrence in complex double-double arithmetic.
std::complex<double> mp_eval(int ell, int k, std::complex<double> z);

// exact squared norm binomial(k+ell-1, k)
Rational mp_norm_sq_exact(int ell, int k);

// --- Laguerre ----------------------------------------------------------------

double laguerre_eval(int k, double x);
double laguerre_deriv(int k, double x);

} // namespace mpspec

#endif
