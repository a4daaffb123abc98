#include "gk/mutation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace gk {

std::string to_string(MoveKind k) {
    switch (k) {
    case MoveKind::Reduce2: return "reduce2";
    case MoveKind::Spider: return "spider";
    case MoveKind::Subdivide: return "subdivide";
    case MoveKind::Isomorphism: return "isomorphism";
    }
    return "?";
}

namespace {

std::string fresh_id(const std::string& prefix, std::set<std::string>& used) {
    for (int k = 1;; ++k) {
        std::string id = prefix + std::to_string(k);
        if (used.insert(id).second) return id;
    }
}

// Old rotations rewritten dart by dart: each old dart maps to a list of new
// edge ids (empty to delete it, the old id to keep it).
using DartRewrite = std::map<int, std::vector<std::string>>;

std::vector<std::string> rewrite_rotation(const TorusGraph& g, int v, const DartRewrite& rw) {
    std::vector<std::string> out;
    for (int d : g.vertex(v).darts) {
        auto it = rw.find(d);
        if (it == rw.end()) out.push_back(g.edge(TorusGraph::edge_of(d)).id);
        else out.insert(out.end(), it->second.begin(), it->second.end());
    }
    return out;
}

// Face and zig-zag bijections through darts shared by both graphs.
void fill_maps(const TorusGraph& from, const TorusGraph& to, const std::vector<std::pair<int, int>>& darts,
               std::map<int, int> forced_faces, MoveRecord& rec) {
    std::map<int, int> dart_map(darts.begin(), darts.end());
    rec.face_map.assign(from.num_faces(), -1);
    for (auto [f, t] : forced_faces) rec.face_map[f] = t;
    for (int f = 0; f < from.num_faces(); ++f) {
        if (rec.face_map[f] >= 0) continue;
        for (int d : from.face(f).darts) {
            auto it = dart_map.find(d);
            if (it != dart_map.end()) {
                rec.face_map[f] = to.face_of(it->second);
                break;
            }
        }
        if (rec.face_map[f] < 0) fail("BadMove", "face " + std::to_string(f) + " has no surviving side");
    }
    std::vector<int> sorted = rec.face_map;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || from.num_faces() != to.num_faces())
        fail("BadMove", "face correspondence is not a bijection");

    auto zf = zigzags(from), zt = zigzags(to);
    auto of_f = zigzag_of_dart(from, zf), of_t = zigzag_of_dart(to, zt);
    rec.zigzag_map.assign(zf.size(), -1);
    std::vector<char> taken(zt.size(), 0);
    for (std::size_t z = 0; z < zf.size(); ++z)
        for (int d : zf[z].darts) {
            auto it = dart_map.find(d);
            if (it == dart_map.end()) continue;
            rec.zigzag_map[z] = of_t[it->second];
            taken[of_t[it->second]] = 1;
            break;
        }
    for (std::size_t z = 0; z < zf.size(); ++z) {
        if (rec.zigzag_map[z] >= 0) continue;
        int match = -1, count = 0;
        for (std::size_t u = 0; u < zt.size(); ++u)
            if (!taken[u] && zt[u].h == zf[z].h) {
                match = static_cast<int>(u);
                ++count;
            }
        if (count != 1) fail("BadMove", "zig-zag correspondence is ambiguous");
        rec.zigzag_map[z] = match;
        taken[match] = 1;
    }
    if (zf.size() != zt.size()) fail("BadMove", "number of zig-zags changed");
}

// Darts of edges whose id survives, paired by end.
std::vector<std::pair<int, int>> shared_darts(const TorusGraph& from, const TorusGraph& to) {
    std::vector<std::pair<int, int>> out;
    for (int e = 0; e < from.num_edges(); ++e) {
        int ne;
        try {
            ne = to.edge_index(from.edge(e).id);
        } catch (const Error&) {
            continue;
        }
        out.emplace_back(2 * e, 2 * ne);
        out.emplace_back(2 * e + 1, 2 * ne + 1);
    }
    return out;
}

std::set<std::string> used_ids(const TorusGraph& g) {
    std::set<std::string> s;
    for (const auto& v : g.vertices()) s.insert(v.id);
    for (const auto& e : g.edges()) s.insert(e.id);
    return s;
}

} // namespace

Move spider_move(const TorusGraph& g, int face) {
    if (face < 0 || face >= g.num_faces()) fail("UnknownFace", std::to_string(face));
    const auto& f = g.face(face);
    if (f.sides() != 4) fail("NotQuadrilateral", "face " + std::to_string(face) + " has " + std::to_string(f.sides()) + " sides");
    std::set<int> distinct;
    for (int d : f.darts) distinct.insert(TorusGraph::edge_of(d));
    if (distinct.size() != 4) fail("NotQuadrilateral", "face meets the same edge twice");

    Move m;
    m.record.kind = MoveKind::Spider;
    m.record.face = face;
    m.record.target = std::to_string(face);
    for (int d : f.darts) m.square.push_back(TorusGraph::edge_of(d));

    auto used = used_ids(g);
    std::string n[4], spoke[4];
    const Color ncol[4] = {Color::White, Color::Black, Color::White, Color::Black};
    for (int k = 0; k < 4; ++k) n[k] = fresh_id("s", used);
    for (int k = 0; k < 4; ++k) spoke[k] = fresh_id("t", used);
    std::string P = fresh_id("t", used), Q = fresh_id("t", used), R = fresh_id("t", used), U = fresh_id("t", used);

    GraphSpec spec;
    for (const auto& v : g.vertices()) spec.vertices.push_back({v.id, v.color});
    for (int k = 0; k < 4; ++k) spec.vertices.push_back({n[k], ncol[k]});
    for (int e = 0; e < g.num_edges(); ++e) {
        if (distinct.count(e)) continue;
        const auto& ed = g.edge(e);
        spec.edges.push_back({ed.id, g.vertex(ed.black).id, g.vertex(ed.white).id, ed.h});
        m.rules.push_back({WeightRule::Kind::Keep, e});
    }
    // corners b1, w1, b2, w2 at the face offsets; the new square sits at offset 0
    std::string corner[4];
    for (int k = 0; k < 4; ++k) corner[k] = g.vertex(g.tail(f.darts[k])).id;
    const auto& off = f.offsets;
    spec.edges.push_back({spoke[0], corner[0], n[0], Hom{} - off[0]});
    spec.edges.push_back({spoke[1], n[1], corner[1], off[1]});
    spec.edges.push_back({spoke[2], corner[2], n[2], Hom{} - off[2]});
    spec.edges.push_back({spoke[3], n[3], corner[3], off[3]});
    for (int k = 0; k < 4; ++k) m.rules.push_back({WeightRule::Kind::One, -1});
    spec.edges.push_back({P, n[1], n[0], {}});
    spec.edges.push_back({Q, n[1], n[2], {}});
    spec.edges.push_back({R, n[3], n[2], {}});
    spec.edges.push_back({U, n[3], n[0], {}});
    m.rules.push_back({WeightRule::Kind::SpiderP, -1});
    m.rules.push_back({WeightRule::Kind::SpiderQ, -1});
    m.rules.push_back({WeightRule::Kind::SpiderR, -1});
    m.rules.push_back({WeightRule::Kind::SpiderU, -1});

    DartRewrite rw;
    for (int k = 0; k < 4; ++k) {
        rw[f.darts[k]] = {spoke[k]};
        rw[TorusGraph::opposite(f.darts[(k + 3) % 4])] = {};
    }
    for (int v = 0; v < g.num_vertices(); ++v) spec.rotations[g.vertex(v).id] = rewrite_rotation(g, v, rw);
    spec.rotations[n[0]] = {spoke[0], P, U};
    spec.rotations[n[1]] = {spoke[1], Q, P};
    spec.rotations[n[2]] = {spoke[2], R, Q};
    spec.rotations[n[3]] = {spoke[3], U, R};

    m.graph = TorusGraph::build(spec);
    int central = m.graph.face_of(2 * m.graph.edge_index(P) + 1);
    fill_maps(g, m.graph, shared_darts(g, m.graph), {{face, central}}, m.record);
    return m;
}

Move reduce_degree2(const TorusGraph& g, int v) {
    if (v < 0 || v >= g.num_vertices()) fail("UnknownVertex", std::to_string(v));
    const auto& vd = g.vertex(v).darts;
    if (vd.size() != 2) fail("NotTwoValent", "vertex " + g.vertex(v).id + " has degree " + std::to_string(vd.size()));
    int u0 = g.tail(TorusGraph::opposite(vd[0])), u1 = g.tail(TorusGraph::opposite(vd[1]));
    if (u0 == u1) fail("NotTwoValent", "both edges of " + g.vertex(v).id + " lead to the same vertex");
    const int s = std::min(u0, u1), o = std::max(u0, u1);
    const int es = TorusGraph::edge_of(u0 == s ? vd[0] : vd[1]);
    const int eo = TorusGraph::edge_of(u0 == o ? vd[0] : vd[1]);
    const int ds_at_s = TorusGraph::opposite(u0 == s ? vd[0] : vd[1]);
    const int do_at_o = TorusGraph::opposite(u0 == o ? vd[0] : vd[1]);
    const Hom shift = g.edge(es).h - g.edge(eo).h;

    Move m;
    m.record.kind = MoveKind::Reduce2;
    m.record.target = g.vertex(v).id;
    m.survivor_edge = es;
    m.other_edge = eo;

    GraphSpec spec;
    for (int u = 0; u < g.num_vertices(); ++u)
        if (u != v && u != o) spec.vertices.push_back({g.vertex(u).id, g.vertex(u).color});
    const std::string& sid = g.vertex(s).id;
    for (int e = 0; e < g.num_edges(); ++e) {
        if (e == es || e == eo) continue;
        const auto& ed = g.edge(e);
        std::string b = g.vertex(ed.black).id, w = g.vertex(ed.white).id;
        if (ed.black == o || ed.white == o) {
            (ed.black == o ? b : w) = sid;
            spec.edges.push_back({ed.id, b, w, ed.h + shift});
            m.rules.push_back({WeightRule::Kind::Reattach, e});
        } else {
            spec.edges.push_back({ed.id, b, w, ed.h});
            m.rules.push_back({WeightRule::Kind::Keep, e});
        }
    }
    // at s, the dart towards v is replaced by the darts of o that follow the
    // dart towards v
    std::vector<std::string> inserted;
    for (int d = g.next_around(do_at_o); d != do_at_o; d = g.next_around(d))
        inserted.push_back(g.edge(TorusGraph::edge_of(d)).id);
    DartRewrite rw{{ds_at_s, inserted}};
    for (int u = 0; u < g.num_vertices(); ++u)
        if (u != v && u != o) spec.rotations[g.vertex(u).id] = rewrite_rotation(g, u, rw);

    m.graph = TorusGraph::build(spec);
    fill_maps(g, m.graph, shared_darts(g, m.graph), {}, m.record);
    return m;
}

Move subdivide_edge(const TorusGraph& g, int edge) {
    if (edge < 0 || edge >= g.num_edges()) fail("UnknownEdge", std::to_string(edge));
    const auto& ed = g.edge(edge);
    auto used = used_ids(g);
    std::string wn = fresh_id("s", used), bn = fresh_id("s", used);
    std::string e1 = fresh_id("t", used), e2 = fresh_id("t", used), e3 = fresh_id("t", used);

    Move m;
    m.record.kind = MoveKind::Subdivide;
    m.record.target = ed.id;
    GraphSpec spec;
    for (const auto& v : g.vertices()) spec.vertices.push_back({v.id, v.color});
    spec.vertices.push_back({wn, Color::White});
    spec.vertices.push_back({bn, Color::Black});
    for (int e = 0; e < g.num_edges(); ++e) {
        if (e == edge) continue;
        const auto& x = g.edge(e);
        spec.edges.push_back({x.id, g.vertex(x.black).id, g.vertex(x.white).id, x.h});
        m.rules.push_back({WeightRule::Kind::Keep, e});
    }
    spec.edges.push_back({e1, g.vertex(ed.black).id, wn, ed.h});
    spec.edges.push_back({e2, bn, wn, {}});
    spec.edges.push_back({e3, bn, g.vertex(ed.white).id, {}});
    m.rules.push_back({WeightRule::Kind::One, -1});
    m.rules.push_back({WeightRule::Kind::MinusOne, -1});
    m.rules.push_back({WeightRule::Kind::Keep, edge});
    DartRewrite rw{{2 * edge, {e1}}, {2 * edge + 1, {e3}}};
    for (int v = 0; v < g.num_vertices(); ++v) spec.rotations[g.vertex(v).id] = rewrite_rotation(g, v, rw);
    spec.rotations[wn] = {e1, e2};
    spec.rotations[bn] = {e2, e3};
    m.graph = TorusGraph::build(spec);
    auto darts = shared_darts(g, m.graph);
    darts.emplace_back(2 * edge, 2 * m.graph.edge_index(e1));
    darts.emplace_back(2 * edge + 1, 2 * m.graph.edge_index(e3) + 1);
    fill_maps(g, m.graph, darts, {}, m.record);
    return m;
}

IntMatrix mutate_exchange(const IntMatrix& eps, int k) {
    IntMatrix r = eps;
    const std::size_t n = eps.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (static_cast<int>(i) == k || static_cast<int>(j) == k) r[i][j] = -eps[i][j];
            else
                r[i][j] = eps[i][j] + (std::llabs(eps[i][k]) * eps[k][j] + eps[i][k] * std::llabs(eps[k][j])) / 2;
        }
    return r;
}

IntMatrix pull_back(const IntMatrix& eps_new, const std::vector<int>& face_map) {
    const std::size_t n = face_map.size();
    IntMatrix r(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i][j] = eps_new[face_map[i]][face_map[j]];
    return r;
}

AbelLabel spider_abel_update(const TorusGraph& g, const AbelMap& d, int face) {
    const auto& f = g.face(face);
    if (f.sides() != 4) fail("NotQuadrilateral", "face " + std::to_string(face));
    const std::size_t n = d.zs.size();
    AbelLabel r = d.face[face];
    for (int k = 0; k < 4; ++k) {
        AbelLabel a = unit_label(n, d.alpha_plus(TorusGraph::edge_of(f.darts[k])));
        r = (k % 2 == 0) ? r + a : r - a;
    }
    return r;
}

AbelMap transported_abel(const TorusGraph& g, const AbelMap& d, const Move& m) {
    int base = -1;
    for (int f = 0; f < g.num_faces() && base < 0; ++f)
        if (f != m.record.face) base = f;
    AbelLabel value(d.zs.size(), 0);
    for (std::size_t z = 0; z < d.zs.size(); ++z) value[m.record.zigzag_map[z]] = d.face[base][z];
    return discrete_abel(m.graph, m.record.face_map[base], value);
}

EllipticSpectralData transported_data(const EllipticSpectralData& data, const MoveRecord& r) {
    EllipticSpectralData out = data;
    for (std::size_t z = 0; z < data.points.size(); ++z) out.points[r.zigzag_map[z]] = data.points[z];
    return out;
}

std::optional<Isomorphism> find_isomorphism(const TorusGraph& from, const TorusGraph& to, int from_face,
                                            int to_face) {
    if (from.num_edges() != to.num_edges() || from.num_vertices() != to.num_vertices()) return std::nullopt;
    const auto& ff = from.face(from_face);
    const auto& tf = to.face(to_face);
    if (ff.sides() != tf.sides()) return std::nullopt;
    for (int start = 0; start < tf.sides(); start += 2) {
        std::vector<int> dmap(from.num_darts(), -1), inv(to.num_darts(), -1);
        std::vector<int> stack;
        bool ok = true;
        auto assign = [&](int a, int b) {
            if (dmap[a] == b) return;
            if (dmap[a] >= 0 || inv[b] >= 0 || TorusGraph::from_black(a) != TorusGraph::from_black(b)) {
                ok = false;
                return;
            }
            dmap[a] = b;
            inv[b] = a;
            stack.push_back(a);
        };
        assign(ff.darts[0], tf.darts[start]);
        while (ok && !stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            int b = dmap[a];
            assign(TorusGraph::opposite(a), TorusGraph::opposite(b));
            if (ok) assign(from.next_around(a), to.next_around(b));
        }
        if (!ok || std::count(dmap.begin(), dmap.end(), -1)) continue;
        Isomorphism iso;
        iso.vertex.assign(from.num_vertices(), -1);
        iso.edge.assign(from.num_edges(), -1);
        for (int d = 0; d < from.num_darts(); ++d) {
            iso.vertex[from.tail(d)] = to.tail(dmap[d]);
            iso.edge[TorusGraph::edge_of(d)] = TorusGraph::edge_of(dmap[d]);
        }
        // lifts: h_to(phi e) = h_from(e) + lift(w) - lift(b)
        iso.lift.assign(from.num_vertices(), {});
        std::vector<char> seen(from.num_vertices(), 0);
        std::vector<int> q{0};
        seen[0] = 1;
        for (std::size_t k = 0; k < q.size() && ok; ++k) {
            int v = q[k];
            for (int d : from.vertex(v).darts) {
                int u = from.tail(TorusGraph::opposite(d));
                Hom want = iso.lift[v] + to.shift(dmap[d]) - from.shift(d);
                if (!seen[u]) {
                    seen[u] = 1;
                    iso.lift[u] = want;
                    q.push_back(u);
                } else if (iso.lift[u] != want) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        iso.face.assign(from.num_faces(), -1);
        for (int f = 0; f < from.num_faces(); ++f) iso.face[f] = to.face_of(dmap[from.face(f).darts[0]]);
        return iso;
    }
    return std::nullopt;
}

std::vector<int> compose_maps(const std::vector<int>& first, const std::vector<int>& second) {
    std::vector<int> r;
    for (int v : first) r.push_back(second[v]);
    return r;
}

namespace {

double max_relative(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double r = 0;
    for (std::size_t i = 0; i < a.size(); ++i) r = std::max(r, std::abs(a[i] - b[i]) / std::abs(b[i]));
    return r;
}

} // namespace

CommutingReport commuting_diagram_check(const TorusGraph& g, const AbelMap& d, const EllipticSpectralData& data,
                                        int face) {
    auto prepared = prepare_spectral_data(g, d, data);
    auto x = face_coordinates(g, d, prepared);
    Move m = spider_move(g, face);
    CommutingReport rep;
    rep.mutated = permute_faces(m.record.face_map, mutate_face_weights(exchange_matrix(g), x, face));
    AbelMap d2 = transported_abel(g, d, m);
    auto data2 = prepare_spectral_data(m.graph, d2, transported_data(prepared, m.record));
    rep.from_new_graph = face_coordinates(m.graph, d2, data2);
    rep.residual = max_relative(rep.from_new_graph, rep.mutated);
    return rep;
}

CommutingReport commuting_reduce_check(const TorusGraph& g, const AbelMap& d, const EllipticSpectralData& data,
                                       int vertex) {
    auto prepared = prepare_spectral_data(g, d, data);
    auto x = face_coordinates(g, d, prepared);
    Move m = reduce_degree2(g, vertex);
    CommutingReport rep;
    rep.mutated = permute_faces(m.record.face_map, x);
    AbelMap d2 = transported_abel(g, d, m);
    auto data2 = prepare_spectral_data(m.graph, d2, transported_data(prepared, m.record));
    rep.from_new_graph = face_coordinates(m.graph, d2, data2);
    rep.residual = max_relative(rep.from_new_graph, rep.mutated);
    return rep;
}

} // namespace gk
