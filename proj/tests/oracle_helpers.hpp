#ifndef MPSPEC_TEST_ORACLES_HPP
#define MPSPEC_TEST_ORACLES_HPP

// Test-side oracles, independent of the library's numerical paths: exact
// rational Taylor series for sec^ell, closed forms for Gamma_phi, and the
// Rodrigues construction for Laguerre polynomials.

#include <gmpxx.h>

#include <cmath>
#include <vector>

namespace oracle {

// Taylor coefficients of 1/cos(a)^ell up to order max_order (inclusive),
// exact rationals: series inversion of cos, then the ell-th power.
inline std::vector<mpq_class> sec_power_series(int ell, int max_order) {
    int m = max_order + 1;
    std::vector<mpq_class> cosc(m, 0), inv(m, 0);
    mpq_class fact(1);
    for (int n = 0; n < m; ++n) {
        if (n > 0) fact *= n;
        if (n % 2 == 0) cosc[n] = mpq_class((n / 2) % 2 ? -1 : 1) / fact;
    }
    inv[0] = 1;
    for (int n = 1; n < m; ++n) {
        mpq_class s = 0;
        for (int j = 1; j <= n; ++j) s += cosc[j] * inv[n - j];
        inv[n] = -s;
    }
    std::vector<mpq_class> out(m, 0);
    out[0] = 1;
    for (int rep = 0; rep < ell; ++rep) {
        std::vector<mpq_class> next(m, 0);
        for (int i = 0; i < m; ++i) {
            if (out[i] == 0) continue;
            for (int j = 0; i + j < m; ++j) next[i + j] += out[i] * inv[j];
        }
        out = std::move(next);
    }
    return out;
}

// p-th moment of nu_ell: p! * [a^p] sec^ell(a)
inline double nu_ell_moment(int ell, int p) {
    auto series = sec_power_series(ell, p);
    mpq_class fact(1);
    for (int j = 2; j <= p; ++j) fact *= j;
    return mpq_class(series[p] * fact).get_d();
}

// Gamma_{log^2}(k) = (2k/(2k+1)) [H_{2k+1}^2 + H^{(2)}_{2k+1}] (beta-integral
// derivatives at a=1, b=2k+1)
inline double gamma_log_sq_closed(long k) {
    long n = 2 * k + 1;
    double h1 = 0.0, h2 = 0.0;
    for (long j = 1; j <= n; ++j) {
        h1 += 1.0 / j;
        h2 += 1.0 / (static_cast<double>(j) * j);
    }
    return (2.0 * k / (2.0 * k + 1.0)) * (h1 * h1 + h2);
}

// Gamma_{eps^{-beta}}(k) = 2k B(1-beta, 2k+1)
inline double gamma_pow_neg_closed(long k, double beta) {
    return 2.0 * k *
           std::exp(std::lgamma(1.0 - beta) + std::lgamma(2.0 * k + 1.0) -
                    std::lgamma(2.0 * k + 2.0 - beta));
}

// L_k by the Rodrigues formula, L_k(x) = sum_j C(k,j) (-x)^j / j!, evaluated
// in exact rationals (the alternating sum cancels catastrophically in double).
inline double laguerre_rodrigues(int k, double x) {
    mpq_class xr(x), sum(0), binom(1), powfact(1);
    for (int j = 0; j <= k; ++j) {
        sum += binom * powfact;
        binom *= k - j;
        binom /= j + 1;
        powfact *= -xr;
        powfact /= j + 1;
    }
    return sum.get_d();
}

} // namespace oracle

#endif
