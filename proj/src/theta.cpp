#include "gk/theta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gk/errors.hpp"

namespace gk {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

} // namespace

EllipticParams::EllipticParams(Complex t, double eps) : tau(t), eps_term(eps) {
    if (!(tau.imag() > 0)) fail("BadTau", "Im tau must be positive");
    if (!(eps_term > 0 && eps_term < 1)) fail("BadTau", "series tolerance must lie in (0, 1)");
}

int truncation_radius(const EllipticParams& p, Complex z) {
    if (!(p.tau.imag() > 0)) fail("BadTau", "Im tau must be positive");
    const double it = p.tau.imag();
    return static_cast<int>(std::ceil(std::sqrt(-std::log(p.eps_term) / (kPi * it)) + std::abs(z.imag()) / it)) + 2;
}

Complex theta(ThetaChar c, Complex z, const EllipticParams& p, int radius) {
    if (c.a == 0.5 && c.b == 0.5) return theta11(z, p, radius);
    Complex s = 0;
    for (int n = -radius; n <= radius; ++n) {
        double m = n + c.a;
        s += std::exp(kI * kPi * p.tau * (m * m) + 2.0 * kPi * kI * m * (z + c.b));
    }
    return s;
}

Complex theta(ThetaChar c, Complex z, const EllipticParams& p) {
    return theta(c, z, p, truncation_radius(p, z));
}

Complex theta11(Complex z, const EllipticParams& p, int radius) {
    // pairs n and -1-n of the series: -2 sum (-1)^n q^{(n+1/2)^2} sin((2n+1) pi z)
    Complex s = 0;
    for (int n = 0; n <= radius; ++n) {
        double m = n + 0.5;
        Complex term = std::exp(kI * kPi * p.tau * (m * m)) * std::sin(static_cast<double>(2 * n + 1) * kPi * z);
        s += (n % 2 ? -term : term);
    }
    return -2.0 * s;
}

Complex theta11(Complex z, const EllipticParams& p) { return theta11(z, p, truncation_radius(p, z)); }

Complex prime_form(Complex x, Complex y, const EllipticParams& p) { return theta11(x - y, p); }

Complex section_E(const Divisor& d, Complex z, const EllipticParams& p) {
    Complex r = 1.0;
    for (const auto& [pt, mult] : d) {
        if (mult == 0) continue;
        Complex e = prime_form(z, pt, p);
        if (mult < 0 && std::abs(e) < 1e-14) fail("PoleAtSample", "sample point is a pole of the section");
        r *= std::pow(e, static_cast<double>(mult));
    }
    return r;
}

Complex fay_F(Complex u, Complex v, Complex t, const EllipticParams& p) {
    return theta(kTheta00, u + v - t, p) * prime_form(u, v, p);
}

FayResult fay_residual(const std::vector<Complex>& alphas, Complex z, Complex t, const EllipticParams& p) {
    if (alphas.empty()) fail("BadInput", "at least one point is needed");
    const std::size_t n = alphas.size();
    FayResult r{0.0, 0.0};
    std::vector<Complex> terms;
    double numscale = 0;
    std::vector<Complex> dens;
    for (std::size_t k = 0; k < n; ++k) {
        Complex a = alphas[k], b = alphas[(k + 1) % n];
        // symmetric in a, b bit for bit, so the n = 2 terms cancel exactly
        Complex num = theta(kTheta00, t + z - (a + b), p) * prime_form(a, b, p);
        Complex den = (prime_form(z, a, p) * theta(kTheta00, t - a, p)) * (prime_form(z, b, p) * theta(kTheta00, t - b, p));
        numscale = std::max(numscale, std::abs(num));
        dens.push_back(den);
        terms.push_back(num);
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(dens[k]) < 1e-13 * std::max(1.0, numscale))
            fail("NearSingular", "a denominator of the identity is numerically zero");
        Complex term = terms[k] / dens[k];
        r.value += term;
        r.scale += std::abs(term);
    }
    return r;
}

Complex riemann_theta(const std::vector<Complex>& z, const Matrix<Complex>& omega, double eps_term) {
    const std::size_t g = z.size();
    if (g == 0 || g > 3) fail("GenusUnsupported", "riemann_theta supports genus 1 to 3");
    if (omega.size() != g) fail("BadTau", "period matrix has the wrong size");
    for (const auto& row : omega)
        if (row.size() != g) fail("BadTau", "period matrix has the wrong size");
    // leading principal minors of Im omega must be positive
    Matrix<Complex> im(g, std::vector<Complex>(g));
    double trace = 0;
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            if (std::abs(omega[i][j] - omega[j][i]) > 1e-14) fail("BadTau", "period matrix is not symmetric");
            im[i][j] = omega[i][j].imag();
        }
    double detv = 0;
    for (std::size_t k = 1; k <= g; ++k) {
        Matrix<Complex> minor(k, std::vector<Complex>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor[i][j] = im[i][j];
        detv = det(minor).real();
        if (!(detv > 0)) fail("BadTau", "imaginary part of the period matrix is not positive definite");
    }
    for (std::size_t i = 0; i < g; ++i) trace += im[i][i].real();
    const double lmin = detv / std::pow(trace, static_cast<double>(g - 1));
    double zmax = 0;
    for (const auto& v : z) zmax = std::max(zmax, std::abs(v.imag()));
    const int r = static_cast<int>(std::ceil(std::sqrt(-std::log(eps_term) / (kPi * lmin)) + zmax / lmin)) + 2;

    Complex s = 0;
    std::vector<int> n(g, -r);
    for (;;) {
        Complex q = 0, lin = 0;
        for (std::size_t i = 0; i < g; ++i) {
            lin += static_cast<double>(n[i]) * z[i];
            for (std::size_t j = 0; j < g; ++j) q += static_cast<double>(n[i] * n[j]) * omega[i][j];
        }
        s += std::exp(kI * kPi * q + 2.0 * kPi * kI * lin);
        std::size_t k = 0;
        while (k < g && n[k] == r) n[k++] = -r;
        if (k == g) break;
        ++n[k];
    }
    return s;
}

} // namespace gk
