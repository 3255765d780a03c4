#ifndef MPSPEC_TENSOR_HPP
#define MPSPEC_TENSOR_HPP

#include <functional>
#include <vector>

#include "mpspec/spectral.hpp"

namespace mpspec {

using MultiFn = std::function<double(const std::vector<double>&)>;

// Coefficients f_alpha of a d-variate function in a tensor orthonormal basis,
// alpha ranging over {0..N}^d.
class MultiIndexExpansion {
public:
    MultiIndexExpansion(int d, int N, std::vector<double> coeffs, double l2_norm_sq);

    int dimension() const { return d_; }
    int axis_cap() const { return N_; }
    double l2_norm_sq() const { return l2_; }

    double coeff(const std::vector<int>& alpha) const;
    const std::vector<double>& raw() const { return c_; }

    // E_n by total degree: ||f||^2 - sum_{|alpha| <= n} f_alpha^2
    double tail_error_total_degree(int n) const;

    // sum over alpha of phi(alpha) f_alpha^2 with phi(alpha) = sum_i phi_axis(alpha_i)
    double weighted_sum_additive(const std::function<double(int)>& phi_axis) const;

private:
    int d_, N_;
    std::vector<double> c_;
    double l2_;
};

// Tensor-Gauss expansion in the MP(1)^(x)d basis under nu^(x)d (or the
// mu1-Stieltjes basis per axis when under_mu1 is set). d in {2,3}.
MultiIndexExpansion product_expand(const MultiFn& f, int d, int N,
                                   int rule_size = 0, bool under_mu1 = false);

struct TensorizationResult {
    double lhs;
    double rhs;
    double margin; // the 1-D constant supplied by the caller
    bool ok;       // lhs <= margin * rhs (small tolerance)
};

// Additive-multi-index tensorization check:
// sum phi(alpha) f_alpha^2 <= margin * int sum_i w(x_i) (d_i f)^2 dmu.
TensorizationResult tensorization_check(const MultiFn& f,
                                        const std::vector<MultiFn>& partials, int d,
                                        int N,
                                        const std::function<double(int)>& phi_axis,
                                        const std::function<double(double)>& w_axis,
                                        double margin);

struct LaguerreRateRow {
    int n;
    double tail;        // E_n(f, half-exp)
    double bound_over;  // (int x f'^2 dmu) / (n+1)
    double ratio;       // tail / bound_over
};

struct LaguerreRateReport {
    std::vector<LaguerreRateRow> rows;
    double sobolev; // int x (f')^2 e^{-x} dx
    bool all_within; // every ratio <= 1 + 1e-8
};

// Half-line rate check E_n <= (int x f'^2 dmu)/(n+1) in the Laguerre basis.
LaguerreRateReport laguerre_rate_check(const std::function<double(double)>& f,
                                       const std::function<double(double)>& fp,
                                       const std::vector<int>& n_grid,
                                       std::vector<double> breakpoints = {},
                                       int N = 192);

struct RateComparisonRow {
    int n;
    double en_two_sided;
    double en_times_log2n;
    double en_half;
    double en_times_n;
};

// Side-by-side two-sided (nu basis) vs half-sided (Laguerre) decay columns.
std::vector<RateComparisonRow> rate_comparison(
    const std::function<double(double)>& f_two_sided,
    const std::function<double(double)>& f_half,
    const std::vector<int>& n_grid, std::vector<double> breakpoints_two = {},
    std::vector<double> breakpoints_half = {});

} // namespace mpspec

#endif
