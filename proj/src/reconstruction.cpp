#include "gk/reconstruction.hpp"

#include <cmath>

#include "gk/errors.hpp"
#include "gk/polygon.hpp"

namespace gk {

namespace {

struct LatticeCoords {
    double u, v; // w = u + v tau
};

LatticeCoords lattice_coords(Complex w, Complex tau) {
    double v = w.imag() / tau.imag();
    return {w.real() - v * tau.real(), v};
}

double lattice_distance(Complex w, Complex tau) {
    auto [u, v] = lattice_coords(w, tau);
    return std::abs(w - (std::round(u) + std::round(v) * tau));
}

Complex theta_q(const EllipticSpectralData& data, Complex z) {
    Complex v = theta(data.theta_q, z, data.params);
    if (std::abs(v) < 1e-14) fail("ThetaZeroHit", "theta vanishes at a sample; perturb t");
    return v;
}

Complex theta_odd(const EllipticSpectralData& data, Complex z) {
    Complex v = theta11(z, data.params);
    if (std::abs(v) < 1e-14) fail("ThetaZeroHit", "two infinity points coincide");
    return v;
}

double norm2(const std::vector<Complex>& v) {
    double s = 0;
    for (const auto& c : v) s += std::norm(c);
    return std::sqrt(s);
}

// Integer s with row0.s = t0 and row1.s = t1, by column Hermite reduction.
std::vector<long long> solve_two_rows(const AbelLabel& row0, const AbelLabel& row1, long long t0, long long t1) {
    const std::size_t n = row0.size();
    std::vector<AbelLabel> m{row0, row1};
    std::vector<AbelLabel> u(n, AbelLabel(n, 0)); // columns of U
    for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
    auto colop = [&](std::size_t dst, std::size_t src, long long q) { // col dst -= q col src
        for (auto& r : m) r[dst] -= q * r[src];
        for (std::size_t i = 0; i < n; ++i) u[i][dst] -= q * u[i][src];
    };
    auto swapcol = [&](std::size_t a, std::size_t b) {
        for (auto& r : m) std::swap(r[a], r[b]);
        for (std::size_t i = 0; i < n; ++i) std::swap(u[i][a], u[i][b]);
    };
    std::size_t c = 0;
    for (std::size_t r = 0; r < 2 && c < n; ++r) {
        for (;;) {
            std::size_t piv = n;
            for (std::size_t j = c; j < n; ++j)
                if (m[r][j] != 0 && (piv == n || std::llabs(m[r][j]) < std::llabs(m[r][piv]))) piv = j;
            if (piv == n) break;
            swapcol(c, piv);
            bool clean = true;
            for (std::size_t j = c + 1; j < n; ++j) {
                colop(j, c, m[r][j] / m[r][c]);
                if (m[r][j]) clean = false;
            }
            if (clean) break;
        }
        if (m[r][c] != 0) ++c;
    }
    // m = [h 0] lower triangular in its first c columns
    std::vector<long long> y(n, 0);
    long long rest0 = t0, rest1 = t1;
    if (c >= 1) {
        if (m[0][0] == 0 || rest0 % m[0][0]) fail("BadInfinityPoints", "no lift of the points makes lambda, mu single valued");
        y[0] = rest0 / m[0][0];
        rest1 -= m[1][0] * y[0];
    } else if (rest0) {
        fail("BadInfinityPoints", "no lift of the points makes lambda, mu single valued");
    }
    if (c >= 2) {
        if (rest1 % m[1][1]) fail("BadInfinityPoints", "no lift of the points makes lambda, mu single valued");
        y[1] = rest1 / m[1][1];
    } else if (rest1) {
        fail("BadInfinityPoints", "no lift of the points makes lambda, mu single valued");
    }
    std::vector<long long> s(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s[i] += u[i][j] * y[j];
    return s;
}

} // namespace

InfinityReport validate_infinity_points(const EllipticSpectralData& data, const std::vector<ZigZag>& zs) {
    if (data.points.size() != zs.size()) fail("BadInfinityPoints", "need one point per zig-zag");
    InfinityReport r;
    r.residual_x = lattice_distance(evaluate_label(h1_embed(zs, {1, 0}), data), data.params.tau);
    r.residual_y = lattice_distance(evaluate_label(h1_embed(zs, {0, 1}), data), data.params.tau);
    r.pass = r.residual_x < 1e-10 && r.residual_y < 1e-10;
    return r;
}

EllipticSpectralData prepare_spectral_data(const TorusGraph& g, const AbelMap& d, EllipticSpectralData data) {
    (void)g;
    NewtonPolygon poly = newton_polygon(d.zs);
    if (poly.degenerate || poly.interior != 1)
        fail("GenusUnsupported", "reconstruction needs a polygon with exactly one interior point");
    auto rep = validate_infinity_points(data, d.zs);
    if (!rep.pass) fail("BadInfinityPoints", "points at infinity violate the divisor constraint");
    AbelLabel ex = h1_embed(d.zs, {1, 0}), ey = h1_embed(d.zs, {0, 1});
    auto kx = std::llround(lattice_coords(evaluate_label(ex, data), data.params.tau).v);
    auto ky = std::llround(lattice_coords(evaluate_label(ey, data), data.params.tau).v);
    auto s = solve_two_rows(ex, ey, -kx, -ky);
    for (std::size_t i = 0; i < s.size(); ++i) data.points[i] += static_cast<double>(s[i]) * data.params.tau;
    return data;
}

Complex evaluate_label(const AbelLabel& l, const EllipticSpectralData& data) {
    if (l.size() != data.points.size()) fail("BadInfinityPoints", "need one point per zig-zag");
    Complex s = 0;
    for (std::size_t i = 0; i < l.size(); ++i) s += static_cast<double>(l[i]) * data.points[i];
    return s;
}

Divisor label_divisor(const AbelLabel& l, const EllipticSpectralData& data) {
    Divisor dv;
    for (std::size_t i = 0; i < l.size(); ++i)
        if (l[i]) dv.emplace_back(data.points[i], l[i]);
    return dv;
}

LambdaMu lambda_mu(const AbelMap& d, const EllipticSpectralData& data, Complex z) {
    return {section_E(label_divisor(d.sign * h1_embed(d.zs, {1, 0}), data), z, data.params),
            section_E(label_divisor(d.sign * h1_embed(d.zs, {0, 1}), data), z, data.params)};
}

std::vector<Complex> face_coordinates(const TorusGraph& g, const AbelMap& d, const EllipticSpectralData& data) {
    const std::size_t n = d.zs.size();
    std::vector<Complex> x;
    for (int f = 0; f < g.num_faces(); ++f) {
        const AbelLabel& di = d.face[f];
        Complex num = 1.0, den = 1.0;
        for (int dart : g.face(f).darts) {
            int e = TorusGraph::edge_of(dart);
            AbelLabel step = unit_label(n, d.alpha_plus(e)) - unit_label(n, d.alpha_minus(e));
            bool bw = TorusGraph::from_black(dart);
            AbelLabel dj = bw ? di + step : di - step;
            Complex factor = theta_odd(data, evaluate_label(dj - di, data)) /
                             theta_q(data, data.t + evaluate_label(dj, data));
            // sides are numbered from 1 at a black-to-white side: exponent (-1)^k
            if (bw) den *= factor;
            else num *= factor;
        }
        // The curvature R_f = -(-1)^{l/2} combines with (-1)^{l/2} from the
        // parity of theta11 across the l sides: the sign is -1 for every l.
        x.push_back(-num / den);
    }
    return x;
}

Connection<Complex> theta_connection(const TorusGraph& g, const AbelMap& d, const EllipticSpectralData& data,
                                     const SignCochain& k) {
    const std::size_t n = d.zs.size();
    Connection<Complex> a;
    for (int e = 0; e < g.num_edges(); ++e) {
        const AbelLabel& db = d.vertex[g.edge(e).black];
        int ap = d.alpha_plus(e), am = d.alpha_minus(e);
        Complex num = theta_odd(data, data.points[ap] - data.points[am]);
        Complex den = theta_q(data, data.t + evaluate_label(db - unit_label(n, ap), data)) *
                      theta_q(data, data.t + evaluate_label(db - unit_label(n, am), data));
        a.push_back(static_cast<double>(k[e]) * num / den);
    }
    return a;
}

std::vector<Complex> kernel_vector(const TorusGraph& g, const AbelMap& d, const EllipticSpectralData& data,
                                   Complex z) {
    std::vector<Complex> psi;
    for (int w : g.whites()) {
        const AbelLabel& dw = d.vertex[w];
        psi.push_back(theta(data.theta_q, z + data.t + evaluate_label(dw, data), data.params) *
                      section_E(label_divisor(dw, data), z, data.params));
    }
    return psi;
}

Matrix<Complex> theta_dirac_at(const TorusGraph& g, const AbelMap& d, const EllipticSpectralData& data,
                               const SignCochain& k, const Connection<Complex>& a, Complex z) {
    const std::size_t n = g.blacks().size();
    Matrix<Complex> m(n, std::vector<Complex>(n, 0.0));
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto& ed = g.edge(e);
        Complex b = section_E(label_divisor(d.edge_class(g, e), data), z, data.params);
        m[g.color_index(ed.white)][g.color_index(ed.black)] += static_cast<double>(k[e]) * a[e] * b;
    }
    return m;
}

SampleResidual sample_residual(const TorusGraph& g, const AbelMap& d, const EllipticSpectralData& data,
                               const SignCochain& k, const Connection<Complex>& a, Complex z) {
    SampleResidual s;
    s.z = z;
    auto m = theta_dirac_at(g, d, data, k, a, z);
    auto psi = kernel_vector(g, d, data, z);
    const std::size_t n = m.size();
    std::vector<Complex> r(n, 0.0);
    double fro = 0, hadamard = 1;
    for (std::size_t w = 0; w < n; ++w) {
        for (std::size_t b = 0; b < n; ++b) r[b] += psi[w] * m[w][b];
        hadamard *= norm2(m[w]);
        fro += std::pow(norm2(m[w]), 2);
    }
    s.kernel = norm2(r) / (std::sqrt(fro) * norm2(psi));
    s.det = std::abs(det(m)) / hadamard;
    return s;
}

RoundTrip round_trip(const TorusGraph& g, const AbelMap& d, const EllipticSpectralData& data, const SignCochain& k,
                     const std::vector<Complex>& zs) {
    RoundTrip rt;
    rt.x = face_coordinates(g, d, data);
    auto a_theta = theta_connection(g, d, data, k);
    auto a_section = connection_from_face_weights(g, rt.x);
    rt.twist = twist_between(g, a_theta, a_section);
    rt.curve = det(dirac_matrix(g, k, connection_from_face_weights(g, rt.x, rt.twist)));
    for (Complex z : zs) {
        auto s = sample_residual(g, d, data, k, a_theta, z);
        auto [lam, mu] = lambda_mu(d, data, z);
        s.curve = std::abs(rt.curve.evaluate(lam, mu)) / rt.curve.evaluation_scale(lam, mu);
        rt.samples.push_back(s);
    }
    return rt;
}

} // namespace gk
