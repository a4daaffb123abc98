#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "gk/scalar.hpp"

namespace gk {

// Polynomial over Q in variables v0, v1, ...; exponent vectors have no
// trailing zeros.
class QPoly {
public:
    using Exponent = std::vector<int>;

    QPoly() = default;
    QPoly(long c) : QPoly(mpq_class(c)) {}
    QPoly(const mpq_class& c);
    static QPoly variable(int i);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponent, mpq_class>& terms() const { return terms_; }

    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.terms_ == b.terms_; }

    mpq_class evaluate(const std::vector<mpq_class>& at) const;
    std::string to_string(const std::vector<std::string>& names) const;

private:
    void add_term(Exponent e, const mpq_class& c);
    std::map<Exponent, mpq_class> terms_;
};

// Quotient of polynomials; equality is tested by cross-multiplication, so no
// gcd is ever computed.
class RatFunc {
public:
    RatFunc() : num_(0), den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(const mpq_class& c) : num_(c), den_(1) {}
    RatFunc(QPoly n, QPoly d);
    static RatFunc variable(int i) { return {QPoly::variable(i), QPoly(1)}; }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    mpq_class evaluate(const std::vector<mpq_class>& at) const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b);

private:
    QPoly num_, den_;
};

template <> struct Field<RatFunc> {
    static constexpr bool exact = true;
    static RatFunc one() { return RatFunc(1); }
    static RatFunc zero() { return RatFunc(0); }
    static bool is_zero(const RatFunc& c) { return c.is_zero(); }
    static double magnitude(const RatFunc&) { return 0; }
    static Complex to_complex(const RatFunc&) { fail("DomainMismatch", "symbolic value has no numeric form"); }
};

} // namespace gk
