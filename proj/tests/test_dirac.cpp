#include "support.hpp"

using namespace gkt;

namespace {

// Random exact face weights with product one.
std::vector<QComplex> random_weights(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> num(1, 9), den(1, 7), sg(0, 1);
    std::vector<QComplex> x;
    QComplex prod(1);
    for (int i = 0; i + 1 < n; ++i) {
        QComplex v(mpq_class(num(rng) * (sg(rng) ? -1 : 1), den(rng)), mpq_class(num(rng) % 3, den(rng)));
        x.push_back(v);
        prod = prod * v;
    }
    x.push_back(QComplex(1) / prod);
    return x;
}

} // namespace

TEST_CASE("flat weights give the all-ones connection") {
    auto g = load("toda.json");
    auto a = connection_from_face_weights(g, std::vector<QComplex>(4, q(1)));
    for (const auto& v : a) CHECK(v == q(1));
}

TEST_CASE("section reproduces the requested monodromies") {
    auto g = load("toda.json");
    std::vector<QComplex> x{q(2), q(3), q(1, 6), q(1)};
    auto a = connection_from_face_weights(g, x);
    CHECK(monodromies(g, a) == x);
    for (const auto& v : a) CHECK_FALSE(v.is_zero());

    std::mt19937_64 rng(21);
    for (const char* name : kAllFixtures) {
        auto h = load(name);
        auto y = random_weights(rng, h.num_faces());
        CHECK(monodromies(h, connection_from_face_weights(h, y)) == y);
        auto yf = std::vector<Complex>();
        for (const auto& v : y) yf.push_back(v.to_complex());
        auto mf = monodromies(h, connection_from_face_weights(h, yf));
        for (std::size_t f = 0; f < yf.size(); ++f) CHECK(rel(mf[f], yf[f]) < 1e-10);
    }
}

TEST_CASE("section rejects bad face weights") {
    auto g = load("toda.json");
    CHECK(error_kind([&] { connection_from_face_weights(g, std::vector<QComplex>{q(2), q(3), q(1, 6), q(2)}); }) ==
          "ProductNotOne");
    CHECK(error_kind([&] { connection_from_face_weights(g, std::vector<QComplex>{q(0), q(3), q(1, 6), q(2)}); }) ==
          "ZeroFaceWeight");
    CHECK(error_kind([&] { connection_from_face_weights(g, std::vector<QComplex>{q(1)}); }) == "BadWeights");
}

TEST_CASE("twist rescales edges without changing monodromies") {
    auto g = load("toda.json");
    std::vector<QComplex> x{q(2), q(3), q(1, 6), q(1)};
    Twist<QComplex> tw{q(5, 2), q(-3)};
    auto a0 = connection_from_face_weights(g, x);
    auto a1 = connection_from_face_weights(g, x, tw);
    CHECK(monodromies(g, a1) == x);
    for (int e = 0; e < g.num_edges(); ++e) {
        Hom h = g.edge(e).h;
        CHECK(a1[e] == a0[e] * pow_int(tw.lambda0, h.x) * pow_int(tw.mu0, h.y));
    }
    auto back = twist_between(g, a1, a0);
    CHECK(back.lambda0 == tw.lambda0);
    CHECK(back.mu0 == tw.mu0);
}

TEST_CASE("honeycomb operator is a sum of three monomials") {
    auto g = load("honeycomb.json");
    auto m = dirac_matrix(g, SignCochain(3, 1), Connection<QComplex>(3, q(1)));
    REQUIRE(m.size() == 1);
    CHECK(m[0][0] == ExactPoly(q(1)) + ExactPoly::monomial(q(1), {-1, 0}) + ExactPoly::monomial(q(1), {0, -1}));
}

TEST_CASE("toda operator has one monomial per parallel edge") {
    auto g = load("toda.json");
    auto k = find_kasteleyn(g);
    auto a = connection_from_face_weights(g, std::vector<QComplex>{q(2), q(3), q(1, 6), q(1)});
    auto m = dirac_matrix(g, k, a);
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto& ed = g.edge(e);
        const auto& entry = m[g.color_index(ed.white)][g.color_index(ed.black)];
        CHECK(entry.coeff(ed.h) == (k[e] > 0 ? a[e] : -a[e]));
    }
    auto at = dirac_matrix_at(g, k, a, Complex(0.7, 0.2), Complex(-0.4, 1.3));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(std::abs(at[i][j] - m[i][j].evaluate(Complex(0.7, 0.2), Complex(-0.4, 1.3))) < 1e-14);
}

TEST_CASE("generic curves fill the zig-zag polygon") {
    std::mt19937_64 rng(22);
    for (const char* name : kAllFixtures) {
        CAPTURE(name);
        auto g = load(name);
        auto k = find_kasteleyn(g);
        auto target = curve_polygon(zigzags(g));
        for (int trial = 0; trial < 10; ++trial) {
            auto p = spectral_curve(g, k, random_weights(rng, g.num_faces()));
            CHECK(p.newton_polygon() == target);
        }
    }
}

TEST_CASE("toda curve with a vanishing interior coefficient stays in the square") {
    // family (s, 2, 3, 1/(6s)); the coefficient of the interior point is
    // driven to zero by a secant iteration in s
    auto g = load("toda.json");
    auto k = find_kasteleyn(g);
    auto middle = [&](Complex s) {
        auto p = spectral_curve(g, k, std::vector<Complex>{s, 2.0, 3.0, 1.0 / (6.0 * s)});
        return p.coeff({1, 0});
    };
    Complex s0(0.5, 0.1), s1(0.7, -0.2);
    for (int it = 0; it < 60 && std::abs(s1 - s0) > 1e-15; ++it) {
        Complex f0 = middle(s0), f1 = middle(s1);
        Complex s2 = s1 - f1 * (s1 - s0) / (f1 - f0);
        s0 = s1;
        s1 = s2;
    }
    CHECK(std::abs(middle(s1)) < 1e-12);
    auto p = spectral_curve(g, k, std::vector<Complex>{s1, 2.0, 3.0, 1.0 / (6.0 * s1)});
    CHECK(fits_inside(p.newton_polygon(), curve_polygon(zigzags(g))));
}

TEST_CASE("canonical curve is gauge invariant") {
    auto g = load("dp0.json");
    auto k = find_kasteleyn(g);
    std::mt19937_64 rng(23);
    auto x = random_weights(rng, g.num_faces());
    auto a = connection_from_face_weights(g, x);
    std::vector<QComplex> gauge;
    for (int v = 0; v < g.num_vertices(); ++v) gauge.push_back(q(v + 2, 3));
    auto b = a;
    for (int e = 0; e < g.num_edges(); ++e) b[e] = a[e] * gauge[g.edge(e).black] / gauge[g.edge(e).white];
    CHECK(monodromies(g, b) == x);
    CHECK(canonical_form(det(dirac_matrix(g, k, a))) == canonical_form(det(dirac_matrix(g, k, b))));
    CHECK_FALSE(det(dirac_matrix(g, k, a)) == det(dirac_matrix(g, k, b)));
}

TEST_CASE("twist between two sections is recovered in float mode") {
    auto g = load("hex6.json");
    std::vector<Complex> x;
    Complex prod = 1;
    for (int f = 0; f + 1 < g.num_faces(); ++f) {
        x.push_back(Complex(0.5 + f, 0.3 * f - 0.2));
        prod *= x.back();
    }
    x.push_back(1.0 / prod);
    Twist<Complex> tw{Complex(0.8, 0.6), Complex(-1.7, 0.25)};
    auto back = twist_between(g, connection_from_face_weights(g, x, tw), connection_from_face_weights(g, x));
    CHECK(rel(back.lambda0, tw.lambda0) < 1e-12);
    CHECK(rel(back.mu0, tw.mu0) < 1e-12);
}
