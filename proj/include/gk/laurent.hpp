#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <vector>

#include "gk/errors.hpp"
#include "gk/graph.hpp"
#include "gk/polygon.hpp"
#include "gk/scalar.hpp"

namespace gk {

// Relative magnitude below which float coefficients are dropped.
inline constexpr double kFloatPrune = 1e-12;

/*
 * Sparse polynomial in lambda^{+-1}, mu^{+-1}. The exponent (i, j) is stored
 * as a Hom. The coefficient field is a template parameter, so exact and float
 * polynomials cannot be mixed by accident; AnyPoly (io.hpp) carries the
 * runtime check for data read from files.
 */
template <class C> class LaurentPoly2 {
public:
    using Terms = std::map<Hom, C>;

    LaurentPoly2() = default;
    explicit LaurentPoly2(const C& c) { set({0, 0}, c); }

    static LaurentPoly2 monomial(const C& c, Hom e) {
        LaurentPoly2 p;
        p.set(e, c);
        return p;
    }
    static LaurentPoly2 lambda() { return monomial(Field<C>::one(), {1, 0}); }
    static LaurentPoly2 mu() { return monomial(Field<C>::one(), {0, 1}); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    C coeff(Hom e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Field<C>::zero() : it->second;
    }
    void set(Hom e, const C& c) {
        if (Field<C>::is_zero(c)) terms_.erase(e);
        else terms_[e] = c;
    }

    double max_magnitude() const {
        double m = 0;
        for (const auto& [e, c] : terms_) m = std::max(m, Field<C>::magnitude(c));
        return m;
    }

    // Drops float coefficients below rel * scale; no-op in exact mode.
    void prune(double rel, double scale) {
        if constexpr (!Field<C>::exact) {
            const double cut = rel * scale;
            for (auto it = terms_.begin(); it != terms_.end();)
                it = (Field<C>::magnitude(it->second) <= cut) ? terms_.erase(it) : std::next(it);
        } else {
            (void)rel;
            (void)scale;
        }
    }

    LaurentPoly2& operator+=(const LaurentPoly2& o) {
        double scale = Field<C>::exact ? 0.0 : std::max(max_magnitude(), o.max_magnitude());
        for (const auto& [e, c] : o.terms_) {
            auto it = terms_.find(e);
            if (it == terms_.end()) terms_.emplace(e, c);
            else {
                it->second = it->second + c;
                if (Field<C>::is_zero(it->second)) terms_.erase(it);
            }
        }
        prune(kFloatPrune, scale);
        return *this;
    }
    LaurentPoly2& operator-=(const LaurentPoly2& o) { return *this += -o; }

    friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
    friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
    friend LaurentPoly2 operator-(const LaurentPoly2& a) {
        LaurentPoly2 r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
        LaurentPoly2 r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Hom e = ea + eb;
                auto it = r.terms_.find(e);
                if (it == r.terms_.end()) r.terms_.emplace(e, ca * cb);
                else it->second = it->second + ca * cb;
            }
        for (auto it = r.terms_.begin(); it != r.terms_.end();)
            it = Field<C>::is_zero(it->second) ? r.terms_.erase(it) : std::next(it);
        if constexpr (!Field<C>::exact) r.prune(kFloatPrune, a.max_magnitude() * b.max_magnitude());
        return r;
    }
    friend LaurentPoly2 operator*(const C& s, const LaurentPoly2& a) {
        LaurentPoly2 r;
        for (const auto& [e, c] : a.terms_) r.set(e, s * c);
        return r;
    }
    friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) { return a.terms_ == b.terms_; }

    LaurentPoly2 shifted(Hom by) const {
        LaurentPoly2 r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + by, c);
        return r;
    }

    Complex evaluate(Complex lam, Complex mu) const {
        Complex s = 0;
        for (const auto& [e, c] : terms_)
            s += Field<C>::to_complex(c) * std::pow(lam, static_cast<double>(e.x)) *
                 std::pow(mu, static_cast<double>(e.y));
        return s;
    }
    // Sum of |c| |lambda^i mu^j|: the natural scale for a residual at a point.
    double evaluation_scale(Complex lam, Complex mu) const {
        double s = 0;
        for (const auto& [e, c] : terms_)
            s += Field<C>::magnitude(c) * std::pow(std::abs(lam), static_cast<double>(e.x)) *
                 std::pow(std::abs(mu), static_cast<double>(e.y));
        return s;
    }

    std::vector<Hom> support() const {
        std::vector<Hom> s;
        for (const auto& [e, c] : terms_) s.push_back(e);
        return s;
    }
    NewtonPolygon newton_polygon() const {
        if (terms_.empty()) fail("ZeroPolynomial", "zero polynomial has no Newton polygon");
        return hull_polygon(support());
    }

private:
    Terms terms_;
};

using ExactPoly = LaurentPoly2<QComplex>;
using FloatPoly = LaurentPoly2<Complex>;

template <class T> using Matrix = std::vector<std::vector<T>>;

// Monomial shift to the lexicographically smallest exponent, then division by
// its coefficient. Rescaling of lambda and mu is deliberately not normalized.
template <class C> LaurentPoly2<C> canonical_form(const LaurentPoly2<C>& p) {
    if (p.is_zero()) fail("ZeroPolynomial", "canonical form of the zero polynomial");
    const auto& [e0, c0] = *p.terms().begin(); // std::map order is lexicographic
    LaurentPoly2<C> r;
    for (const auto& [e, c] : p.terms()) r.set(e - e0, c / c0);
    return r;
}

// Exact for exact coefficients; expansion over column subsets, so every
// product of n entries appears exactly as in the permutation expansion.
template <class C> LaurentPoly2<C> det(const Matrix<LaurentPoly2<C>>& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) fail("NotSquare", "determinant of a non-square matrix");
    if (n == 0) return LaurentPoly2<C>(Field<C>::one());
    if (n > 20) fail("NotSquare", "matrix too large for cofactor expansion");
    std::vector<LaurentPoly2<C>> dp(std::size_t{1} << n);
    std::vector<char> live(dp.size(), 0);
    dp[0] = LaurentPoly2<C>(Field<C>::one());
    live[0] = 1;
    for (std::size_t mask = 0; mask < dp.size(); ++mask) {
        if (!live[mask]) continue;
        const std::size_t row = static_cast<std::size_t>(std::popcount(mask));
        if (row == n) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (mask & (std::size_t{1} << j) || m[row][j].is_zero()) continue;
            // inversions with the columns already used by earlier rows
            int above = std::popcount(mask >> (j + 1));
            LaurentPoly2<C> term = dp[mask] * m[row][j];
            std::size_t next = mask | (std::size_t{1} << j);
            if (above % 2) dp[next] -= term;
            else dp[next] += term;
            live[next] = 1;
        }
    }
    return dp.back();
}

// Numerical determinant of a complex matrix by partial-pivot LU.
Complex det(Matrix<Complex> a);

} // namespace gk
