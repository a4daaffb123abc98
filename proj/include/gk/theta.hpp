#pragma once

#include <utility>
#include <vector>

#include "gk/laurent.hpp"
#include "gk/scalar.hpp"

namespace gk {

struct EllipticParams {
    Complex tau{0.0, 1.0};
    double eps_term = 1e-16;

    EllipticParams() = default;
    explicit EllipticParams(Complex t, double eps = 1e-16);
};

// theta[a,b](z) = sum_n exp(i pi tau (n+a)^2 + 2 pi i (n+a)(z+b)).
struct ThetaChar {
    double a = 0;
    double b = 0;
};

inline constexpr ThetaChar kTheta00{0.0, 0.0};
inline constexpr ThetaChar kTheta01{0.0, 0.5};
inline constexpr ThetaChar kTheta10{0.5, 0.0};
inline constexpr ThetaChar kTheta11{0.5, 0.5};

int truncation_radius(const EllipticParams& p, Complex z);

// Series truncated at the automatic radius, or at an explicit one.
Complex theta(ThetaChar c, Complex z, const EllipticParams& p);
Complex theta(ThetaChar c, Complex z, const EllipticParams& p, int radius);

// Odd characteristic summed as a sine series, so theta11(-z) == -theta11(z)
// holds bit for bit.
Complex theta11(Complex z, const EllipticParams& p);
Complex theta11(Complex z, const EllipticParams& p, int radius);

// E(x, y) = theta11(x - y), with no normalizing constant.
Complex prime_form(Complex x, Complex y, const EllipticParams& p);

// prod_k E(z, point_k)^{mult_k}
using Divisor = std::vector<std::pair<Complex, long long>>;
Complex section_E(const Divisor& d, Complex z, const EllipticParams& p);

// F_t(u, v) = theta00(u + v - t) E(u, v)
Complex fay_F(Complex u, Complex v, Complex t, const EllipticParams& p);

struct FayResult {
    Complex value;
    double scale = 0; // sum of the magnitudes of the terms
    double relative() const { return scale > 0 ? std::abs(value) / scale : std::abs(value); }
};

// Left-hand side of the cyclic trisecant identity with theta = theta00.
FayResult fay_residual(const std::vector<Complex>& alphas, Complex z, Complex t, const EllipticParams& p);

// Multidimensional theta with zero characteristic, genus at most 3.
Complex riemann_theta(const std::vector<Complex>& z, const Matrix<Complex>& omega, double eps_term = 1e-16);

} // namespace gk
