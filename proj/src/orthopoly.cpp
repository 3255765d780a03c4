#include "mpspec/orthopoly.hpp"

#include <cmath>
#include <stdexcept>

#include "mpspec/common.hpp"
#include "mpspec/dd.hpp"
#include "mpspec/tridiag.hpp"

namespace mpspec {

namespace {
constexpr int kExactBudget = 512; // rational-arithmetic degree budget
}

OrthoBasis OrthoBasis::meixner_pollaczek(int ell, int degree_cap) {
    if (ell < 1) throw std::invalid_argument("meixner_pollaczek: ell >= 1 required");
    if (degree_cap < 1) throw std::invalid_argument("degree_cap >= 1 required");
    OrthoBasis b;
    b.family_ = PolyFamily::MeixnerPollaczek;
    b.ell_ = ell;
    b.cap_ = degree_cap;
    b.mass_ = 1.0;
    b.a_.assign(degree_cap + 1, 0.0); // even weight
    b.b_.assign(degree_cap + 1, 0.0);
    for (int k = 1; k <= degree_cap; ++k)
        b.b_[k] = std::sqrt(static_cast<double>(k) * (k + ell - 1.0));
    b.norms_sq_.resize(degree_cap + 1);
    for (int k = 0; k <= degree_cap; ++k)
        b.norms_sq_[k] = mp_norm_sq_exact(ell, k).get_d();
    return b;
}

OrthoBasis OrthoBasis::laguerre(int degree_cap, double alpha) {
    if (degree_cap < 1) throw std::invalid_argument("degree_cap >= 1 required");
    OrthoBasis b;
    b.family_ = PolyFamily::Laguerre;
    b.alpha_ = alpha;
    b.cap_ = degree_cap;
    b.mass_ = std::tgamma(alpha + 1.0); // \int x^a e^{-x}
    b.a_.resize(degree_cap + 1);
    b.b_.assign(degree_cap + 1, 0.0);
    for (int k = 0; k <= degree_cap; ++k) b.a_[k] = 2.0 * k + 1.0 + alpha;
    for (int k = 1; k <= degree_cap; ++k)
        b.b_[k] = std::sqrt(k * (k + alpha));
    b.norms_sq_.assign(degree_cap + 1, 1.0);
    return b;
}

OrthoBasis OrthoBasis::from_recurrence(std::vector<double> a, std::vector<double> b,
                                       double mass) {
    if (a.size() != b.size() || a.empty())
        throw std::invalid_argument("from_recurrence: inconsistent tables");
    OrthoBasis out;
    out.family_ = PolyFamily::MeixnerPollaczek; // tag unused on this path
    out.cap_ = static_cast<int>(a.size()) - 1;
    out.mass_ = mass;
    out.a_ = std::move(a);
    out.b_ = std::move(b);
    out.norms_sq_.assign(out.cap_ + 1, 1.0);
    return out;
}

void OrthoBasis::eval_orthonormal(double x, int n, std::vector<double>& out) const {
    if (n > cap_) throw std::invalid_argument("eval_orthonormal: beyond degree cap");
    out.resize(n + 1);
    out[0] = 1.0;
    if (n == 0) return;
    out[1] = (x - a_[0]) / b_[1];
    for (int k = 1; k < n; ++k)
        out[k + 1] = ((x - a_[k]) * out[k] - b_[k] * out[k - 1]) / b_[k + 1];
}

GaussRule gauss_rule(const OrthoBasis& basis, int n) {
    if (n < 1 || n > basis.degree_cap())
        throw std::invalid_argument("gauss_rule: need 1 <= n <= degree_cap");
    SymTridiag T;
    T.diag.resize(n);
    T.off.resize(n - 1);
    for (int k = 0; k < n; ++k) T.diag[k] = basis.a(k);
    for (int k = 1; k < n; ++k) T.off[k - 1] = basis.b(k);

    GaussRule rule;
    rule.nodes = eigenvalues_bisect(T);
    for (int i = 1; i < n; ++i) {
        if (!(rule.nodes[i] > rule.nodes[i - 1]))
            throw numeric_error("gauss_rule: nodes failed to separate");
    }
    rule.weights.resize(n);
    // w_i = mass / sum_{k<n} p_k(x_i)^2, with rescaling so extreme nodes
    // (huge p_k) do not overflow; track the scale in log space.
    for (int i = 0; i < n; ++i) {
        double x = rule.nodes[i];
        double log_scale = 0.0;
        double pkm1 = 1.0, pk = (n > 1) ? (x - basis.a(0)) / basis.b(1) : 0.0;
        double s = 1.0 + (n > 1 ? pk * pk : 0.0);
        for (int k = 1; k + 1 < n; ++k) {
            double pkp1 =
                ((x - basis.a(k)) * pk - basis.b(k) * pkm1) / basis.b(k + 1);
            pkm1 = pk;
            pk = pkp1;
            s += pk * pk;
            if (s > 1e250) {
                const double r = 1e-125;
                s *= r * r;
                pk *= r;
                pkm1 *= r;
                log_scale += 250.0 * std::log(10.0);
            }
        }
        rule.weights[i] = basis.mass() * std::exp(-std::log(s) - log_scale);
    }
    return rule;
}

std::vector<PolyExact> mp_recurrence_exact(int ell, int degree_cap) {
    if (ell < 1 || degree_cap < 0) throw std::invalid_argument("mp_recurrence_exact");
    if (degree_cap > kExactBudget)
        throw resolution_error("mp_recurrence_exact: degree cap beyond exact budget");
    std::vector<PolyExact> P;
    P.reserve(degree_cap + 1);
    P.emplace_back(std::vector<Rational>{Rational(1)});
    if (degree_cap >= 1)
        P.emplace_back(std::vector<Rational>{Rational(0), Rational(1)});
    for (int k = 1; k < degree_cap; ++k) {
        PolyExact next = shift_up(P[k]) - (Rational(k - 1 + ell) * P[k - 1]);
        P.push_back(Rational(1, k + 1) * next);
    }
    return P;
}

std::vector<PolyExact> generating_taylor(int ell, int degree_cap) {
    if (ell < 1 || degree_cap < 0) throw std::invalid_argument("generating_taylor");
    if (degree_cap > kExactBudget)
        throw resolution_error("generating_taylor: degree cap beyond exact budget");
    const int m = degree_cap + 1;

    // arctan s = sum (-1)^n s^{2n+1}/(2n+1)
    std::vector<Rational> atan_s(m, Rational(0));
    for (int n = 0; 2 * n + 1 < m; ++n)
        atan_s[2 * n + 1] = Rational((n % 2) ? -1 : 1, 2 * n + 1);

    auto series_mul = [&](const std::vector<Rational>& u,
                          const std::vector<Rational>& v) {
        std::vector<Rational> w(m, Rational(0));
        for (int i = 0; i < m; ++i) {
            if (u[i] == 0) continue;
            for (int j = 0; i + j < m; ++j)
                if (v[j] != 0) w[i + j] += u[i] * v[j];
        }
        return w;
    };

    // e^{x arctan s}: coefficient of s^k is sum_n x^n [s^k](arctan s)^n / n!
    // accumulated as polynomials in x.
    std::vector<PolyExact> expo(m);
    expo[0] = PolyExact(std::vector<Rational>{Rational(1)});
    std::vector<Rational> apow(m, Rational(0));
    apow[0] = 1; // A^0
    Rational inv_fact(1);
    for (int n = 1; n < m; ++n) {
        apow = series_mul(apow, atan_s);
        inv_fact /= n;
        for (int k = n; k < m; ++k) {
            if (apow[k] == 0) continue;
            Rational c = apow[k] * inv_fact;
            // add c * x^n to expo[k]
            if (static_cast<int>(expo[k].coeffs.size()) < n + 1)
            	expo[k].coeffs.resize(n + 1, Rational(0));
            expo[k].coeffs[n] += c;
        }
    }

    // (1+s^2)^{-ell/2} = sum binom(-ell/2, n) s^{2n}, rational binomials
    std::vector<Rational> bin(m, Rational(0));
    bin[0] = 1;
    Rational half_ell(-ell, 2);
    half_ell.canonicalize();
    Rational term(1);
    for (int n = 1; 2 * n < m; ++n) {
        term *= (half_ell - (n - 1));
        term /= n;
        bin[2 * n] = term;
    }

    std::vector<PolyExact> G(m);
    for (int k = 0; k < m; ++k) {
        PolyExact acc;
        for (int j = 0; j <= k; j += 2) {
            if (bin[j] == 0) continue;
            acc = acc + (bin[j] * expo[k - j]);
        }
        acc.trim();
        G[k] = acc;
    }
    return G;
}

std::complex<double> mp_eval(int ell, int k, std::complex<double> z) {
    if (ell < 1 || k < 0) throw std::invalid_argument("mp_eval");
    if (k == 0) return {1.0, 0.0};
    ddcomplex zz(z.real(), z.imag());
    ddcomplex pkm1(1.0, 0.0);
    ddcomplex pk = zz;
    for (int j = 1; j < k; ++j) {
        ddcomplex next = zz * pk - (dd(static_cast<double>(j - 1 + ell)) * pkm1);
        // divide by (j+1)
        dd inv = dd(1.0) / dd(static_cast<double>(j + 1));
        next = ddcomplex(inv * next.re, inv * next.im);
        pkm1 = pk;
        pk = next;
    }
    return {static_cast<double>(pk.re), static_cast<double>(pk.im)};
}

Rational mp_norm_sq_exact(int ell, int k) {
    // binomial(k + ell - 1, k)
    Rational out(1);
    for (int j = 1; j <= k; ++j) {
        out *= (ell - 1 + j);
        out /= j;
    }
    return out;
}

double laguerre_eval(int k, double x) {
    if (k < 0) throw std::invalid_argument("laguerre_eval");
    if (k == 0) return 1.0;
    double lkm1 = 1.0, lk = 1.0 - x;
    for (int j = 1; j < k; ++j) {
        double next = ((2.0 * j + 1.0 - x) * lk - j * lkm1) / (j + 1);
        lkm1 = lk;
        lk = next;
    }
    return lk;
}

namespace {
// generalized Laguerre L_k^{(1)} by recurrence
double laguerre1_eval(int k, double x) {
    if (k == 0) return 1.0;
    double lkm1 = 1.0, lk = 2.0 - x;
    for (int j = 1; j < k; ++j) {
        double next = ((2.0 * j + 2.0 - x) * lk - (j + 1.0) * lkm1) / (j + 1);
        lkm1 = lk;
        lk = next;
    }
    return lk;
}
} // namespace

double laguerre_deriv(int k, double x) {
    if (k < 0) throw std::invalid_argument("laguerre_deriv");
    if (k == 0) return 0.0;
    return -laguerre1_eval(k - 1, x); // d/dx L_k = -L_{k-1}^{(1)}
}

} // namespace mpspec
