#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gk/abel.hpp"
#include "gk/errors.hpp"
#include "gk/graph.hpp"
#include "gk/reconstruction.hpp"

namespace gk {

enum class MoveKind { Reduce2, Spider, Subdivide, Isomorphism };

std::string to_string(MoveKind k);

struct MoveRecord {
    MoveKind kind = MoveKind::Spider;
    std::string target;          // vertex or edge id, or face index
    int face = -1;               // mutated face (old index), spider only
    std::vector<int> face_map;   // old face -> new face
    std::vector<int> zigzag_map; // old zig-zag -> new zig-zag
};

// How one new edge weight arises from the old signed weights.
struct WeightRule {
    enum class Kind { Keep, One, MinusOne, Reattach, SpiderP, SpiderQ, SpiderR, SpiderU };
    Kind kind = Kind::Keep;
    int src = -1; // old edge for Keep and Reattach
};

/*
 * A graph rewrite together with the rule carrying signed edge weights
 * W_e = K_e A_e (the coefficients of the Dirac matrix) across it. Weighted
 * moves change det D by a scalar and a monomial only.
 */
struct Move {
    TorusGraph graph;
    MoveRecord record;
    std::vector<WeightRule> rules; // per new edge
    std::vector<int> square;       // spider: old edges of sides 1..4
    int survivor_edge = -1;        // reduce: edge to the surviving neighbour
    int other_edge = -1;           // reduce: edge to the removed neighbour
};

// Square face with sides e1..e4 replaced by a smaller square joined to the
// corners by four spokes.
Move spider_move(const TorusGraph& g, int face);
// Removes a two-valent vertex and merges its neighbours.
Move reduce_degree2(const TorusGraph& g, int vertex);
// Inverse of a reduction: inserts a white-black pair into an edge.
Move subdivide_edge(const TorusGraph& g, int edge);

template <class C> std::vector<C> transport_weights(const Move& m, const std::vector<C>& w) {
    using K = WeightRule::Kind;
    C delta_inv = Field<C>::zero();
    if (!m.square.empty()) {
        delta_inv = w[m.square[0]] * w[m.square[2]] - w[m.square[1]] * w[m.square[3]];
        if (Field<C>::is_zero(delta_inv)) fail("SingularMutation", "face weight equals -1");
    }
    std::vector<C> out;
    for (const auto& r : m.rules) {
        switch (r.kind) {
        case K::Keep: out.push_back(w[r.src]); break;
        case K::One: out.push_back(Field<C>::one()); break;
        case K::MinusOne: out.push_back(-Field<C>::one()); break;
        case K::Reattach: out.push_back(-(w[r.src] * w[m.survivor_edge] / w[m.other_edge])); break;
        case K::SpiderR: out.push_back(-(w[m.square[0]] / delta_inv)); break;
        case K::SpiderU: out.push_back(w[m.square[1]] / delta_inv); break;
        case K::SpiderP: out.push_back(-(w[m.square[2]] / delta_inv)); break;
        case K::SpiderQ: out.push_back(w[m.square[3]] / delta_inv); break;
        }
    }
    return out;
}

// Face weights x_f = R_f * monodromy of the signed weights; they agree with
// the monodromies of A when W = K A.
template <class C> std::vector<C> face_weights_of(const TorusGraph& g, const std::vector<C>& w) {
    auto x = monodromies(g, w);
    for (int f = 0; f < g.num_faces(); ++f)
        if (g.face(f).sides() % 4 == 0) x[f] = -x[f];
    return x;
}

// x_i -> 1/x_i and x_j -> x_j (1 + x_i^{-1})^{-eps_ij} when eps_ij > 0,
// x_j (1 + x_i)^{-eps_ij} when eps_ij < 0. Indices are those of the old graph.
template <class C> std::vector<C> mutate_face_weights(const IntMatrix& eps, const std::vector<C>& x, int i) {
    C one = Field<C>::one();
    C plus = one + x[i];
    bool singular = Field<C>::exact ? Field<C>::is_zero(plus)
                                    : Field<C>::magnitude(plus) < 1e-14 * (1 + Field<C>::magnitude(x[i]));
    if (singular) fail("SingularMutation", "face weight equals -1");
    C plus_inv = one + one / x[i];
    std::vector<C> y = x;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (static_cast<int>(j) == i) continue;
        long long e = eps[i][j];
        if (e > 0) y[j] = y[j] / pow_int(plus_inv, e);
        else if (e < 0) y[j] = y[j] * pow_int(plus, -e);
    }
    y[i] = one / x[i];
    return y;
}

template <class C> std::vector<C> permute_faces(const std::vector<int>& face_map, const std::vector<C>& x) {
    std::vector<C> y(x.size(), Field<C>::zero());
    for (std::size_t f = 0; f < x.size(); ++f) y[face_map[f]] = x[f];
    return y;
}

// Standard matrix mutation at k.
IntMatrix mutate_exchange(const IntMatrix& eps, int k);
// eps of the new graph pulled back to old face indices.
IntMatrix pull_back(const IntMatrix& eps_new, const std::vector<int>& face_map);

// d(i) + alpha+(e1) - alpha+(e2) + alpha+(e3) - alpha+(e4) for the new
// central face, in the old zig-zag indexing.
AbelLabel spider_abel_update(const TorusGraph& g, const AbelMap& d, int face);

// Abel labels for the rewritten graph, propagated from a face the move did
// not touch so that labels of unchanged faces carry over.
AbelMap transported_abel(const TorusGraph& g, const AbelMap& d, const Move& m);
EllipticSpectralData transported_data(const EllipticSpectralData& data, const MoveRecord& r);

/*
 * Isomorphism of rotation systems whose action on homology is the identity:
 * h_to(phi e) = h_from(e) + lift(white) - lift(black). Found by propagating
 * a single dart assignment, so at most sides/2 candidates are tried.
 */
struct Isomorphism {
    std::vector<int> vertex;
    std::vector<int> edge;
    std::vector<Hom> lift;
    std::vector<int> face;
};

std::optional<Isomorphism> find_isomorphism(const TorusGraph& from, const TorusGraph& to, int from_face, int to_face);

template <class C> std::vector<C> transport_weights(const Isomorphism& iso, const std::vector<C>& w) {
    std::vector<C> out(w.size(), Field<C>::zero());
    for (std::size_t e = 0; e < w.size(); ++e) out[iso.edge[e]] = w[e];
    return out;
}

// Composition of face maps: first then second.
std::vector<int> compose_maps(const std::vector<int>& first, const std::vector<int>& second);

// Reduces two-valent vertices until none are left (lowest index first),
// carrying signed weights along.
template <class C> struct Reduced {
    TorusGraph graph;
    std::vector<C> w;
    std::vector<int> face_map;
    std::vector<int> zigzag_map;
    int steps = 0;
};

template <class C> Reduced<C> reduce_all(const TorusGraph& g, std::vector<C> w) {
    Reduced<C> r{g, std::move(w), {}, {}, 0};
    for (int f = 0; f < g.num_faces(); ++f) r.face_map.push_back(f);
    for (int z = 0; z < static_cast<int>(zigzags(g).size()); ++z) r.zigzag_map.push_back(z);
    for (;;) {
        int v = -1;
        for (int u = 0; u < r.graph.num_vertices() && v < 0; ++u)
            if (r.graph.vertex(u).darts.size() == 2) v = u;
        if (v < 0) break;
        Move m = reduce_degree2(r.graph, v);
        r.w = transport_weights(m, r.w);
        r.face_map = compose_maps(r.face_map, m.record.face_map);
        r.zigzag_map = compose_maps(r.zigzag_map, m.record.zigzag_map);
        r.graph = std::move(m.graph);
        ++r.steps;
    }
    return r;
}

struct CommutingReport {
    double residual = 0;
    std::vector<Complex> from_new_graph; // face coordinates of the rewritten data
    std::vector<Complex> mutated;        // cluster-mutated old coordinates
};

// Compares face_coordinates on the spider-moved graph with the cluster
// mutation of face_coordinates on the original one.
CommutingReport commuting_diagram_check(const TorusGraph& g, const AbelMap& d, const EllipticSpectralData& data,
                                        int face);
// Same comparison for a reduction (face coordinates carried by identity).
CommutingReport commuting_reduce_check(const TorusGraph& g, const AbelMap& d, const EllipticSpectralData& data,
                                       int vertex);

} // namespace gk
