#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <string>

#include "gk/errors.hpp"

namespace gk {

using Complex = std::complex<double>;

// Gaussian rationals: the exact coefficient field.
struct QComplex {
    mpq_class re{0};
    mpq_class im{0};

    QComplex() = default;
    QComplex(long v) : re(v) {}
    // mpq_class(n, d) is not reduced on construction; equality needs it
    QComplex(mpq_class r) : re(std::move(r)) { re.canonicalize(); }
    QComplex(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {
        re.canonicalize();
        im.canonicalize();
    }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    QComplex conj() const { return {re, -im}; }
    Complex to_complex() const { return {re.get_d(), im.get_d()}; }

    QComplex& operator+=(const QComplex& o) { re += o.re; im += o.im; return *this; }
    QComplex& operator-=(const QComplex& o) { re -= o.re; im -= o.im; return *this; }
    QComplex& operator*=(const QComplex& o) {
        mpq_class r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    QComplex& operator/=(const QComplex& o) {
        mpq_class n = o.re * o.re + o.im * o.im;
        if (sgn(n) == 0) fail("DivisionByZero", "exact division by zero");
        mpq_class r = (re * o.re + im * o.im) / n;
        im = (im * o.re - re * o.im) / n;
        re = r;
        return *this;
    }
    friend QComplex operator+(QComplex a, const QComplex& b) { return a += b; }
    friend QComplex operator-(QComplex a, const QComplex& b) { return a -= b; }
    friend QComplex operator*(QComplex a, const QComplex& b) { return a *= b; }
    friend QComplex operator/(QComplex a, const QComplex& b) { return a /= b; }
    friend QComplex operator-(const QComplex& a) { return {-a.re, -a.im}; }
    friend bool operator==(const QComplex& a, const QComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
};

// Small uniform interface so templates can work over either field.
template <class C> struct Field;

template <> struct Field<QComplex> {
    static constexpr bool exact = true;
    static QComplex one() { return QComplex(1); }
    static QComplex zero() { return QComplex(0); }
    static bool is_zero(const QComplex& c) { return c.is_zero(); }
    static double magnitude(const QComplex& c) { return std::abs(c.to_complex()); }
    static Complex to_complex(const QComplex& c) { return c.to_complex(); }
};

template <> struct Field<Complex> {
    static constexpr bool exact = false;
    static Complex one() { return 1.0; }
    static Complex zero() { return 0.0; }
    static bool is_zero(const Complex& c) { return c == 0.0; }
    static double magnitude(const Complex& c) { return std::abs(c); }
    static Complex to_complex(const Complex& c) { return c; }
};

template <class C> C pow_int(const C& base, long long n) {
    if (n < 0) return pow_int(Field<C>::one() / base, -n);
    C result = Field<C>::one();
    C b = base;
    while (n > 0) {
        if (n & 1) result = result * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return result;
}

// Text forms: "p/q", "p/q+r/si", "1.5-2i", "i", ...
QComplex parse_qcomplex(const std::string& s);
Complex parse_complex(const std::string& s);
std::string to_string(const QComplex& c);
std::string to_string(const Complex& c);

} // namespace gk
