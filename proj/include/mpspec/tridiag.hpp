#ifndef MPSPEC_TRIDIAG_HPP
#define MPSPEC_TRIDIAG_HPP

#include <vector>

namespace mpspec {

// Symmetric tridiagonal matrix: diagonal d[0..n-1], off-diagonal e[0..n-2].
struct SymTridiag {
    std::vector<double> diag;
    std::vector<double> off;

    int size() const { return static_cast<int>(diag.size()); }
};

// Number of eigenvalues strictly below x (Sturm count via shifted LDL^T).
int sturm_count(const SymTridiag& T, double x);

// All eigenvalues in ascending order by bisection; abs_tol relative to ||T||.
std::vector<double> eigenvalues_bisect(const SymTridiag& T, double rel_tol = 1e-15);

// k-th smallest eigenvalue (0-based) by bisection.
double eigenvalue_bisect(const SymTridiag& T, int k, double rel_tol = 1e-15);

} // namespace mpspec

#endif
