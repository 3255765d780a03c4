#ifndef MPSPEC_DD_HPP
#define MPSPEC_DD_HPP

#include <cmath>

namespace mpspec {

// Double-double value: unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
// Only the operations the recurrences and accumulators need are provided.
struct dd {
    double hi = 0.0;
    double lo = 0.0;

    dd() = default;
    dd(double h) : hi(h), lo(0.0) {}
    dd(double h, double l) : hi(h), lo(l) {}

    explicit operator double() const { return hi + lo; }
};

namespace detail {

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    return {p, err};
}

} // namespace detail

inline dd operator+(dd a, dd b) {
    dd s = detail::two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    return detail::quick_two_sum(s.hi, lo);
}

inline dd operator-(dd a, dd b) { return a + dd(-b.hi, -b.lo); }
inline dd operator-(dd a) { return {-a.hi, -a.lo}; }

inline dd operator*(dd a, dd b) {
    dd p = detail::two_prod(a.hi, b.hi);
    double lo = p.lo + a.hi * b.lo + a.lo * b.hi;
    return detail::quick_two_sum(p.hi, lo);
}

inline dd operator/(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = a - dd(q1) * b;
    double q2 = r.hi / b.hi;
    r = r - dd(q2) * b;
    double q3 = r.hi / b.hi;
    dd q = detail::quick_two_sum(q1, q2);
    return q + dd(q3);
}

inline dd& operator+=(dd& a, dd b) { a = a + b; return a; }
inline dd& operator-=(dd& a, dd b) { a = a - b; return a; }
inline dd& operator*=(dd& a, dd b) { a = a * b; return a; }

// Complex value over dd, for forward recurrences off the real axis.
struct ddcomplex {
    dd re, im;

    ddcomplex() = default;
    ddcomplex(dd r, dd i) : re(r), im(i) {}
    ddcomplex(double r, double i) : re(r), im(i) {}
};

inline ddcomplex operator+(ddcomplex a, ddcomplex b) { return {a.re + b.re, a.im + b.im}; }
inline ddcomplex operator-(ddcomplex a, ddcomplex b) { return {a.re - b.re, a.im - b.im}; }
inline ddcomplex operator*(ddcomplex a, ddcomplex b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline ddcomplex operator*(dd s, ddcomplex a) { return {s * a.re, s * a.im}; }

// Running compensated sum of doubles (exact within dd).
class dd_accumulator {
public:
    void add(double x) { sum_ += dd(x); }
    void add(dd x) { sum_ += x; }
    double value() const { return static_cast<double>(sum_); }
    dd value_dd() const { return sum_; }

private:
    dd sum_;
};

} // namespace mpspec

#endif
