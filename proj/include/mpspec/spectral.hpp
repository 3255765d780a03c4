#ifndef MPSPEC_SPECTRAL_HPP
#define MPSPEC_SPECTRAL_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "mpspec/measures.hpp"
#include "mpspec/orthopoly.hpp"
#include "mpspec/profile.hpp"
#include "mpspec/strip.hpp"

namespace mpspec {

// Coefficients f_k of a function in an orthogonal basis, stored in the
// classical normalization: f = sum f_k P_k with <P_k,P_k> = norms_sq[k].
class SpectralExpansion {
public:
    SpectralExpansion(std::shared_ptr<const OrthoBasis> basis,
                      std::vector<double> coeffs, double l2_norm_sq,
                      int rule_size, double truncation_bound);

    const OrthoBasis& basis() const { return *basis_; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    int max_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    double l2_norm_sq() const { return l2_norm_sq_; }
    int rule_size() const { return rule_size_; }
    double truncation_bound() const { return truncation_bound_; }

    // sum_k f_k^2 norms_sq[k] over k <= max_degree
    double parseval_sum() const;

    // E_n = sum_{k>n} f_k^2 norms_sq[k], computed as ||f||^2 - head so the far
    // tail is not lost to truncation
    double tail_error(int n) const;

    // sum_{k>=k_min} seq(k) f_k^2 (head up to max_degree)
    double weighted_sum(const std::function<double(int)>& seq, int k_min) const;

private:
    std::shared_ptr<const OrthoBasis> basis_;
    std::vector<double> coeffs_;
    double l2_norm_sq_;
    int rule_size_;
    double truncation_bound_;
};

// f_k by Gauss quadrature with the given rule; pre: rule.size() >= 2N.
SpectralExpansion expand(const std::function<double(double)>& f,
                         std::shared_ptr<const OrthoBasis> basis, int N,
                         const GaussRule& rule);

// f_k by composite panel quadrature against the weight density, splitting at
// the given breakpoints (kinks); the accurate path for non-polynomial f.
SpectralExpansion expand_panels(const std::function<double(double)>& f,
                                std::shared_ptr<const OrthoBasis> basis,
                                const Weight& w, int N,
                                std::vector<double> breakpoints = {},
                                double max_panel = 0.25);

// Orthonormal recurrence for an arbitrary weight by the discrete Stieltjes
// procedure (Lanczos with full reorthogonalization on a panel grid).
OrthoBasis stieltjes_basis(const Weight& w, int degree_cap);

struct MainTheoremSides {
    double lhs;    // sum_{k>=1} log^2(e+k) f_k^2
    double rhs59;  // int log^2(e+|x|) f^2 dnu + int (f')^2 dnu
    double rhs60;  // int log^2(e+|x|) (f')^2 dnu
};

// Both sides of the main inequality under the sech weight and MP(1) basis.
MainTheoremSides main_theorem_sides(const StripFunction& f, int N,
                                    bool use_gauss_rule = true,
                                    std::vector<double> breakpoints = {});

struct TransferCheck {
    bool ok;
    double tail_mu1;
    double tail_w;   // scaled-sech side
    double ratio;    // tail_mu1 / tail_w
};

// Tail equivalence between mu_1 and the comparable sech weight:
// E_n(f, mu1) <= E_n(f, w) <= 2 E_n(f, mu1) for w(dx) = dx/(2 cosh x).
TransferCheck measure_transfer_check(const std::function<double(double)>& f, int n,
                                     int N = 96,
                                     std::vector<double> breakpoints = {});

// Seeded random polynomial suite (splitmix64): monomial coefficients in [-1,1].
std::vector<std::vector<double>> random_polynomial_suite(std::uint64_t seed,
                                                         int count = 20,
                                                         int max_degree = 15);

} // namespace mpspec

#endif
