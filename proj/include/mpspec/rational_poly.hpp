#ifndef MPSPEC_RATIONAL_POLY_HPP
#define MPSPEC_RATIONAL_POLY_HPP

#include <gmpxx.h>

#include <vector>

namespace mpspec {

using Rational = mpq_class;

// Polynomial with exact rational coefficients in the monomial basis.
struct PolyExact {
    std::vector<Rational> coeffs; // index = power

    PolyExact() = default;
    explicit PolyExact(std::vector<Rational> c) : coeffs(std::move(c)) { trim(); }

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    void trim() {
        while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    double eval_double(double x) const {
        double acc = 0.0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
            acc = acc * x + it->get_d();
        return acc;
    }

    std::vector<double> coeffs_double() const {
        std::vector<double> out(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) out[i] = coeffs[i].get_d();
        return out;
    }

    bool operator==(const PolyExact& o) const { return coeffs == o.coeffs; }
};

inline PolyExact operator*(const Rational& s, const PolyExact& p) {
    PolyExact out = p;
    for (auto& c : out.coeffs) c *= s;
    out.trim();
    return out;
}

inline PolyExact operator+(const PolyExact& a, const PolyExact& b) {
    PolyExact out;
    out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
    out.trim();
    return out;
}

inline PolyExact operator-(const PolyExact& a, const PolyExact& b) {
    return a + (Rational(-1) * b);
}

// multiply by x
inline PolyExact shift_up(const PolyExact& p) {
    PolyExact out;
    out.coeffs.resize(p.coeffs.size() + 1, Rational(0));
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) out.coeffs[i + 1] = p.coeffs[i];
    out.trim();
    return out;
}

} // namespace mpspec

#endif
