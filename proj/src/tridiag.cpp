#include "mpspec/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mpspec/common.hpp"

namespace mpspec {

namespace {

double gershgorin_radius(const SymTridiag& T) {
    int n = T.size();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(T.off[i - 1]);
        if (i + 1 < n) r += std::abs(T.off[i]);
        lo = std::min(lo, T.diag[i] - r);
        hi = std::max(hi, T.diag[i] + r);
    }
    return std::max(std::abs(lo), std::abs(hi));
}

} // namespace

int sturm_count(const SymTridiag& T, double x) {
    int n = T.size();
    int count = 0;
    double q = T.diag[0] - x;
    if (q < 0) ++count;
    const double tiny = std::numeric_limits<double>::min();
    for (int i = 1; i < n; ++i) {
        if (q == 0.0) q = tiny;
        q = T.diag[i] - x - T.off[i - 1] * T.off[i - 1] / q;
        if (q < 0) ++count;
    }
    return count;
}

double eigenvalue_bisect(const SymTridiag& T, int k, double rel_tol) {
    int n = T.size();
    if (k < 0 || k >= n) throw std::invalid_argument("eigenvalue_bisect: bad index");
    double r = gershgorin_radius(T);
    double lo = -r - 1.0, hi = r + 1.0;
    double tol = std::max(rel_tol * std::max(r, 1.0),
                          4 * std::numeric_limits<double>::min());
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break; // bit-level convergence
        if (sturm_count(T, mid) <= k)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> eigenvalues_bisect(const SymTridiag& T, double rel_tol) {
    int n = T.size();
    double r = gershgorin_radius(T);
    double tol = std::max(rel_tol * std::max(r, 1.0),
                          4 * std::numeric_limits<double>::min());

    std::vector<double> out(n);
    struct Task {
        double lo, hi;
        int k0, k1; // eigenvalue indices contained in (lo, hi]
    };
    std::vector<Task> stack{{-r - 1.0, r + 1.0, 0, n}};
    while (!stack.empty()) {
        Task t = stack.back();
        stack.pop_back();
        if (t.k0 >= t.k1) continue;
        double mid = 0.5 * (t.lo + t.hi);
        if (t.hi - t.lo <= tol || mid == t.lo || mid == t.hi) {
            for (int k = t.k0; k < t.k1; ++k) out[k] = mid;
            continue;
        }
        int c = std::clamp(sturm_count(T, mid), t.k0, t.k1);
        stack.push_back({t.lo, mid, t.k0, c});
        stack.push_back({mid, t.hi, c, t.k1});
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace mpspec
