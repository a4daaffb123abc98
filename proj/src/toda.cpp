#include "gk/toda.hpp"

#include <set>

#include "gk/kasteleyn.hpp"

namespace gk {

TodaFaces toda_faces(const TorusGraph& g) {
    if (g.num_faces() != 4) fail("NotToda", "the Toda graph has four faces");
    int e1 = g.edge_index("e1"), e2 = g.edge_index("e2");
    TodaFaces f{g.face_of(2 * e1), g.face_of(2 * e1 + 1), g.face_of(2 * e2), g.face_of(2 * e2 + 1)};
    std::set<int> s{f.ul, f.ll, f.lr, f.ur};
    if (s.size() != 4) fail("NotToda", "edges e1, e2 do not separate four distinct faces");
    return f;
}

std::array<int, 4> toda_flow_slots(const TorusGraph& g) {
    auto f = toda_faces(g);
    return {f.ul, f.ll, f.lr, f.ur};
}

std::array<int, 4> toda_display_slots(const TorusGraph& g) {
    auto f = toda_faces(g);
    return {f.ul, f.ur, f.ll, f.lr};
}

std::vector<Complex> toda_points(const std::vector<ZigZag>& zs, Complex a) {
    std::vector<Complex> p;
    for (const auto& z : zs) {
        if (z.h == Hom{-1, 1}) p.push_back(a);
        else if (z.h == Hom{-1, -1}) p.push_back(0.5);
        else if (z.h == Hom{1, -1}) p.push_back(a + 0.5);
        else if (z.h == Hom{1, 1}) p.push_back(0.0);
        else fail("NotToda", "zig-zag class is not (+-1, +-1)");
    }
    return p;
}

std::array<Complex, 4> toda_closed_forms(const EllipticParams& p, Complex a, Complex t) {
    auto t11 = [&](Complex z) { return std::pow(theta11(z, p), 2); };
    auto t00 = [&](Complex z) { return std::pow(theta(kTheta00, z, p), 2); };
    return {-t11(0.5 - a) / t11(a) * t00(t + a) / t00(t + a + 0.5),
            -t11(a) / t11(0.5 - a) * t00(t) / t00(t + 0.5),
            -t11(a) / t11(0.5 - a) * t00(t + 0.5) / t00(t),
            -t11(0.5 - a) / t11(a) * t00(t + a + 0.5) / t00(t + a)};
}

std::array<Complex, 2> toda_closed_lambda_mu(const EllipticParams& p, Complex a, Complex z) {
    auto t = [&](Complex u) { return theta11(u, p); };
    return {t(z - a) * t(z - 0.5) / (t(z - a - 0.5) * t(z)), t(z - a) * t(z) / (t(z - a - 0.5) * t(z - 0.5))};
}

TodaFlow::TodaFlow(TorusGraph g, std::vector<QComplex> signed_weights) : g_(std::move(g)), w_(std::move(signed_weights)) {
    toda_faces(g_);
    if (static_cast<int>(w_.size()) != g_.num_edges()) fail("BadWeights", "expected one weight per edge");
}

TodaFlow TodaFlow::from_face_weights(TorusGraph g, const std::array<QComplex, 4>& xyzw) {
    auto slots = toda_flow_slots(g);
    std::vector<QComplex> x(4);
    for (int k = 0; k < 4; ++k) x[slots[k]] = xyzw[k];
    auto a = connection_from_face_weights(g, x);
    auto k = find_kasteleyn(g);
    for (int e = 0; e < g.num_edges(); ++e)
        if (k[e] < 0) a[e] = -a[e];
    return TodaFlow(std::move(g), std::move(a));
}

void TodaFlow::step() {
    auto s = toda_flow_slots(g_);
    Move m1 = spider_move(g_, s[1]);
    auto w1 = transport_weights(m1, w_);
    Move m2 = spider_move(m1.graph, m1.record.face_map[s[3]]);
    auto w2 = transport_weights(m2, w1);
    auto red = reduce_all(m2.graph, w2);
    int y_final = red.face_map[m2.record.face_map[m1.record.face_map[s[1]]]];
    auto iso = find_isomorphism(red.graph, g_, y_final, s[0]);
    if (!iso) fail("SingularFlowStep", "reduced graph is not isomorphic to the Toda graph");
    w_ = transport_weights(*iso, red.w);
}

void TodaFlow::swap() {
    auto s = toda_flow_slots(g_);
    auto iso = find_isomorphism(g_, g_, s[2], s[0]);
    if (!iso) fail("NotToda", "no translation exchanging the x and z faces");
    w_ = transport_weights(*iso, w_);
}

std::array<QComplex, 4> TodaFlow::face_weights() const {
    auto s = toda_flow_slots(g_);
    auto x = face_weights_of(g_, w_);
    return {x[s[0]], x[s[1]], x[s[2]], x[s[3]]};
}

ExactPoly TodaFlow::curve() const { return canonical_form(det(signed_dirac(g_, w_))); }

std::array<RatFunc, 4> toda_flow_by_mutation(const TorusGraph& g) {
    auto s = toda_flow_slots(g);
    std::vector<RatFunc> x(4);
    for (int k = 0; k < 4; ++k) x[s[k]] = RatFunc::variable(k);
    Move m1 = spider_move(g, s[1]);
    auto x1 = permute_faces(m1.record.face_map, mutate_face_weights(exchange_matrix(g), x, s[1]));
    int w1 = m1.record.face_map[s[3]];
    Move m2 = spider_move(m1.graph, w1);
    auto x2 = permute_faces(m2.record.face_map, mutate_face_weights(exchange_matrix(m1.graph), x1, w1));
    auto red = reduce_all(m2.graph, std::vector<QComplex>(m2.graph.num_edges(), QComplex(1)));
    auto x3 = permute_faces(red.face_map, x2);
    int y_final = red.face_map[m2.record.face_map[m1.record.face_map[s[1]]]];
    auto iso = find_isomorphism(red.graph, g, y_final, s[0]);
    if (!iso) fail("SingularFlowStep", "reduced graph is not isomorphic to the Toda graph");
    auto x4 = permute_faces(iso->face, x3);
    return {x4[s[0]], x4[s[1]], x4[s[2]], x4[s[3]]};
}

} // namespace gk
