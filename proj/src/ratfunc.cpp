#include "gk/ratfunc.hpp"

#include <sstream>

#include "gk/errors.hpp"

namespace gk {

QPoly::QPoly(const mpq_class& c) {
    if (sgn(c) != 0) terms_[{}] = c;
}

QPoly QPoly::variable(int i) {
    QPoly p;
    Exponent e(i + 1, 0);
    e[i] = 1;
    p.terms_[e] = 1;
    return p;
}

void QPoly::add_term(Exponent e, const mpq_class& c) {
    while (!e.empty() && e.back() == 0) e.pop_back();
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    QPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

QPoly operator-(const QPoly& a) {
    QPoly r;
    for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
    return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            QPoly::Exponent e(std::max(ea.size(), eb.size()), 0);
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

mpq_class QPoly::evaluate(const std::vector<mpq_class>& at) const {
    mpq_class s = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i >= at.size()) fail("BadInput", "too few values for the variables");
            for (int k = 0; k < e[i]; ++k) t *= at[i];
        }
        s += t;
    }
    return s;
}

std::string QPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        mpq_class a = abs(c);
        bool bare = e.empty();
        if (a != 1 || bare) os << a.get_str();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            os << names.at(i);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

RatFunc::RatFunc(QPoly n, QPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) fail("DivisionByZero", "rational function with zero denominator");
}

mpq_class RatFunc::evaluate(const std::vector<mpq_class>& at) const {
    mpq_class d = den_.evaluate(at);
    if (sgn(d) == 0) fail("DivisionByZero", "denominator vanishes at the point");
    return num_.evaluate(at) / d;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RatFunc operator-(const RatFunc& a) { return {-a.num_, a.den_}; }

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) fail("DivisionByZero", "division by the zero function");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

} // namespace gk
