#include "gk/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "gk/errors.hpp"
#include "gk/polygon.hpp"

namespace gk {

TorusGraph TorusGraph::build(const GraphSpec& spec) {
    TorusGraph g;
    for (const auto& v : spec.vertices) {
        if (g.vertex_ids_.count(v.id)) fail("BadRotationSystem", "duplicate vertex id " + v.id);
        g.vertex_ids_[v.id] = static_cast<int>(g.vertices_.size());
        g.vertices_.push_back({v.id, v.color, {}});
    }
    for (const auto& e : spec.edges) {
        if (g.edge_ids_.count(e.id)) fail("BadRotationSystem", "duplicate edge id " + e.id);
        auto b = g.vertex_ids_.find(e.black);
        auto w = g.vertex_ids_.find(e.white);
        if (b == g.vertex_ids_.end() || w == g.vertex_ids_.end())
            fail("BadRotationSystem", "edge " + e.id + " has an unknown endpoint");
        if (g.vertices_[b->second].color != Color::Black || g.vertices_[w->second].color != Color::White)
            fail("NotBipartite", "edge " + e.id + " does not join a black vertex to a white one");
        g.edge_ids_[e.id] = static_cast<int>(g.edges_.size());
        g.edges_.push_back({e.id, b->second, w->second, e.h});
    }

    // rotation system
    const int nd = g.num_darts();
    std::vector<int> seen(nd, 0);
    g.dart_rot_pos_.assign(nd, -1);
    for (auto& v : g.vertices_) {
        auto it = spec.rotations.find(v.id);
        if (it == spec.rotations.end()) fail("BadRotationSystem", "no rotation for vertex " + v.id);
        int vi = g.vertex_ids_[v.id];
        for (const auto& eid : it->second) {
            auto e = g.edge_ids_.find(eid);
            if (e == g.edge_ids_.end())
                fail("BadRotationSystem", "rotation of " + v.id + " names unknown edge " + eid);
            const Edge& ed = g.edges_[e->second];
            int d;
            if (ed.black == vi) d = 2 * e->second;
            else if (ed.white == vi) d = 2 * e->second + 1;
            else fail("BadRotationSystem", "edge " + eid + " is not incident to " + v.id);
            if (seen[d]++) fail("BadRotationSystem", "edge " + eid + " repeated around " + v.id);
            g.dart_rot_pos_[d] = static_cast<int>(v.darts.size());
            v.darts.push_back(d);
        }
    }
    if (spec.rotations.size() != g.vertices_.size())
        fail("BadRotationSystem", "rotation listed for an unknown vertex");
    for (int d = 0; d < nd; ++d)
        if (!seen[d]) fail("BadRotationSystem", "edge " + g.edges_[d >> 1].id + " missing from a rotation");

    for (int v = 0; v < g.num_vertices(); ++v) {
        g.color_index_.push_back(static_cast<int>(
            g.vertices_[v].color == Color::Black ? g.blacks_.size() : g.whites_.size()));
        (g.vertices_[v].color == Color::Black ? g.blacks_ : g.whites_).push_back(v);
    }
    if (g.blacks_.size() != g.whites_.size())
        fail("NotBipartite", "numbers of black and white vertices differ");

    // connectivity
    if (g.num_vertices() == 0) fail("Disconnected", "empty graph");
    {
        std::vector<char> mark(g.num_vertices(), 0);
        std::queue<int> q;
        q.push(0);
        mark[0] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int d : g.vertices_[v].darts) {
                int u = g.tail(opposite(d));
                if (!mark[u]) { mark[u] = 1; q.push(u); }
            }
        }
        if (std::count(mark.begin(), mark.end(), 0))
            fail("Disconnected", "graph is not connected");
    }

    // faces
    g.dart_face_.assign(nd, -1);
    g.dart_pos_.assign(nd, -1);
    for (int d0 = 0; d0 < nd; d0 += 2) {
        if (g.dart_face_[d0] >= 0) continue;
        Face f;
        Hom off;
        int d = d0;
        const int fi = g.num_faces();
        do {
            if (g.dart_face_[d] >= 0) fail("BadRotationSystem", "face tracing revisited a dart");
            g.dart_face_[d] = fi;
            g.dart_pos_[d] = f.sides();
            f.darts.push_back(d);
            f.offsets.push_back(off);
            off += g.shift(d);
            d = g.prev_around(opposite(d));
        } while (d != d0);
        if (off != Hom{})
            fail("BadRotationSystem", "boundary of face through edge " + g.edges_[d0 >> 1].id +
                                          " does not close in the universal cover");
        if (f.sides() % 2) fail("NotBipartite", "odd face");
        g.faces_.push_back(std::move(f));
    }
    for (int d = 0; d < nd; ++d)
        if (g.dart_face_[d] < 0) fail("BadRotationSystem", "dart on no face");

    if (g.num_vertices() - g.num_edges() + g.num_faces() != 0)
        fail("EulerMismatch", "V - E + F = " +
                                  std::to_string(g.num_vertices() - g.num_edges() + g.num_faces()) +
                                  ", expected 0 on the torus");
    return g;
}

GraphSpec TorusGraph::spec() const {
    GraphSpec s;
    for (const auto& v : vertices_) s.vertices.push_back({v.id, v.color});
    for (const auto& e : edges_)
        s.edges.push_back({e.id, vertices_[e.black].id, vertices_[e.white].id, e.h});
    for (const auto& v : vertices_) {
        auto& r = s.rotations[v.id];
        for (int d : v.darts) r.push_back(edges_[d >> 1].id);
    }
    return s;
}

int TorusGraph::vertex_index(const std::string& id) const {
    auto it = vertex_ids_.find(id);
    if (it == vertex_ids_.end()) fail("UnknownVertex", id);
    return it->second;
}

int TorusGraph::edge_index(const std::string& id) const {
    auto it = edge_ids_.find(id);
    if (it == edge_ids_.end()) fail("UnknownEdge", id);
    return it->second;
}

int TorusGraph::tail(int d) const {
    const Edge& e = edges_[d >> 1];
    return from_black(d) ? e.black : e.white;
}

int TorusGraph::next_around(int d) const {
    const auto& r = vertices_[tail(d)].darts;
    return r[(dart_rot_pos_[d] + 1) % r.size()];
}

int TorusGraph::prev_around(int d) const {
    const auto& r = vertices_[tail(d)].darts;
    return r[(dart_rot_pos_[d] + r.size() - 1) % r.size()];
}

std::vector<ZigZag> zigzags(const TorusGraph& g) {
    std::vector<ZigZag> out;
    std::vector<char> used(g.num_darts(), 0);
    for (int d0 = 0; d0 < g.num_darts(); ++d0) {
        if (used[d0]) continue;
        ZigZag z;
        int d = d0;
        do {
            used[d] = 1;
            z.darts.push_back(d);
            z.h += g.shift(d);
            int a = TorusGraph::opposite(d);
            d = g.vertex(g.tail(a)).color == Color::White ? g.next_around(a) : g.prev_around(a);
        } while (d != d0);
        out.push_back(std::move(z));
    }
    return out;
}

std::vector<int> zigzag_of_dart(const TorusGraph& g, const std::vector<ZigZag>& zs) {
    std::vector<int> of(g.num_darts(), -1);
    for (int i = 0; i < static_cast<int>(zs.size()); ++i)
        for (int d : zs[i].darts) of[d] = i;
    return of;
}

IntMatrix exchange_matrix(const TorusGraph& g) {
    const int n = g.num_faces();
    IntMatrix eps(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) {
        const auto& f = g.face(i);
        for (int k = 0; k < f.sides(); ++k) {
            int j = g.face_of(TorusGraph::opposite(f.darts[k]));
            // k is 0-based here: side number k+1
            eps[i][j] += (k % 2 == 0) ? -1 : 1;
        }
    }
    return eps;
}

IntMatrix exchange_matrix_edgewise(const TorusGraph& g) {
    const int n = g.num_faces();
    IntMatrix eps(n, std::vector<long long>(n, 0));
    for (int e = 0; e < g.num_edges(); ++e) {
        int left = g.face_of(2 * e);
        int right = g.face_of(2 * e + 1);
        eps[left][right] -= 1;
        eps[right][left] += 1;
    }
    return eps;
}

Classification classify(const TorusGraph& g) {
    Classification c;
    auto zs = zigzags(g);
    NewtonPolygon p = newton_polygon(zs);
    c.faces = g.num_faces();
    c.twice_area = p.twice_area;
    c.minimal = c.faces == p.twice_area;
    for (const auto& z : zs)
        if (gcd_ll(z.h.x, z.h.y) != 1) c.divisible_classes.push_back(z.h);
    c.simple = c.divisible_classes.empty();
    return c;
}

} // namespace gk
