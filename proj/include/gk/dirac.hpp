#pragma once

#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "gk/errors.hpp"
#include "gk/graph.hpp"
#include "gk/kasteleyn.hpp"
#include "gk/laurent.hpp"

namespace gk {

// Edge weights A_e, indexed by edge, read from black to white.
template <class C> using Connection = std::vector<C>;

// Cohomology twist (lambda0, mu0): multiplies A_e by lambda0^{h_x} mu0^{h_y}.
template <class C> struct Twist {
    C lambda0 = Field<C>::one();
    C mu0 = Field<C>::one();
};

// Alternating product around face f; the side leaving a black vertex enters
// with exponent -1 and the exponents alternate from there.
template <class C> C monodromy(const TorusGraph& g, const Connection<C>& a, int f) {
    C num = Field<C>::one(), den = Field<C>::one();
    for (int d : g.face(f).darts) {
        const C& w = a[TorusGraph::edge_of(d)];
        if (TorusGraph::from_black(d)) den = den * w;
        else num = num * w;
    }
    return num / den;
}

template <class C> std::vector<C> monodromies(const TorusGraph& g, const Connection<C>& a) {
    std::vector<C> x;
    for (int f = 0; f < g.num_faces(); ++f) x.push_back(monodromy(g, a, f));
    return x;
}

namespace detail {

inline bool near_one(const Complex& c, double tol) { return std::abs(c - 1.0) <= tol; }
inline bool near_one(const QComplex& c, double) { return c == QComplex(1); }

template <class C> C twist_factor(const Twist<C>& tw, Hom h) {
    return pow_int(tw.lambda0, h.x) * pow_int(tw.mu0, h.y);
}

// BFS spanning tree of the primal graph from vertex 0.
std::vector<char> primal_tree(const TorusGraph& g);

// Faces in leaves-first order of a dual spanning tree made of non-tree edges,
// together with the edge joining each face to its parent (-1 at the root).
struct DualTree {
    std::vector<int> order;       // leaves first, root last
    std::vector<int> parent_edge; // per face
};
DualTree dual_tree(const TorusGraph& g, const std::vector<char>& primal);

// Integer lift of every vertex along the primal tree.
std::vector<Hom> tree_lifts(const TorusGraph& g, const std::vector<char>& primal);

} // namespace detail

/*
 * A reproducible section of the monodromy map: weight 1 on a primal spanning
 * tree and on the two edges left over by the dual tree, the dual-tree edges
 * solved face by face from the leaves. The optional twist then rescales every
 * edge by lambda0^{h_x} mu0^{h_y}, which leaves all monodromies unchanged.
 */
template <class C>
Connection<C> connection_from_face_weights(const TorusGraph& g, const std::vector<C>& x,
                                           const Twist<C>& twist = {}) {
    if (static_cast<int>(x.size()) != g.num_faces())
        fail("BadWeights", "expected one weight per face");
    C prod = Field<C>::one();
    for (const auto& v : x) {
        if (Field<C>::is_zero(v)) fail("ZeroFaceWeight", "face weight is zero");
        prod = prod * v;
    }
    if (!detail::near_one(prod, 1e-10)) fail("ProductNotOne", "product of face weights is not 1");

    auto primal = detail::primal_tree(g);
    auto dual = detail::dual_tree(g, primal);
    Connection<C> a(g.num_edges(), Field<C>::one());
    for (int f : dual.order) {
        int pe = dual.parent_edge[f];
        if (pe < 0) continue;
        C rest = Field<C>::one();
        bool parent_black = false;
        Connection<C> tmp = a;
        tmp[pe] = Field<C>::one();
        rest = monodromy(g, tmp, f);
        for (int d : g.face(f).darts)
            if (TorusGraph::edge_of(d) == pe) parent_black = TorusGraph::from_black(d);
        // monodromy = rest * A_pe^{+-1}
        C ratio = x[f] / rest;
        a[pe] = parent_black ? Field<C>::one() / ratio : ratio;
    }
    for (int e = 0; e < g.num_edges(); ++e) a[e] = a[e] * detail::twist_factor(twist, g.edge(e).h);
    return a;
}

// Rows are white vertices, columns black vertices, in blacks()/whites() order.
template <class C>
Matrix<LaurentPoly2<C>> dirac_matrix(const TorusGraph& g, const SignCochain& k, const Connection<C>& a) {
    const std::size_t n = g.blacks().size();
    Matrix<LaurentPoly2<C>> m(n, std::vector<LaurentPoly2<C>>(n));
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto& ed = g.edge(e);
        if (Field<C>::is_zero(a[e])) fail("ZeroFaceWeight", "connection has a zero weight");
        C c = a[e];
        if (k[e] < 0) c = -c;
        m[g.color_index(ed.white)][g.color_index(ed.black)] += LaurentPoly2<C>::monomial(c, ed.h);
    }
    return m;
}

// Same operator with lambda and mu substituted.
template <class C>
Matrix<Complex> dirac_matrix_at(const TorusGraph& g, const SignCochain& k, const Connection<C>& a,
                                Complex lam, Complex mu) {
    const std::size_t n = g.blacks().size();
    Matrix<Complex> m(n, std::vector<Complex>(n, 0.0));
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto& ed = g.edge(e);
        m[g.color_index(ed.white)][g.color_index(ed.black)] +=
            static_cast<double>(k[e]) * Field<C>::to_complex(a[e]) *
            std::pow(lam, static_cast<double>(ed.h.x)) * std::pow(mu, static_cast<double>(ed.h.y));
    }
    return m;
}

template <class C>
LaurentPoly2<C> spectral_curve(const TorusGraph& g, const SignCochain& k, const std::vector<C>& x,
                               const Twist<C>& twist = {}) {
    return canonical_form(det(dirac_matrix(g, k, connection_from_face_weights(g, x, twist))));
}

/*
 * For two connections with equal monodromies, the flat ratio target/base is
 * gauge equivalent to a pure twist; this recovers it from the holonomy along
 * the fundamental cycles of a spanning tree.
 */
template <class C>
Twist<C> twist_between(const TorusGraph& g, const Connection<C>& target, const Connection<C>& base) {
    auto primal = detail::primal_tree(g);
    auto lift = detail::tree_lifts(g, primal);
    // gauge the ratio to 1 on the tree
    std::vector<C> pot(g.num_vertices(), Field<C>::one());
    {
        std::vector<char> seen(g.num_vertices(), 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int d : g.vertex(v).darts) {
                int e = TorusGraph::edge_of(d);
                int u = g.tail(TorusGraph::opposite(d));
                if (!primal[e] || seen[u]) continue;
                seen[u] = 1;
                C r = target[e] / base[e];
                // r * pot[black] / pot[white] == 1 on tree edges
                if (TorusGraph::from_black(d)) pot[u] = r * pot[v];
                else pot[u] = pot[v] / r;
                q.push(u);
            }
        }
    }
    struct Row {
        long long x, y;
        C r;
    };
    std::vector<Row> rows;
    for (int e = 0; e < g.num_edges(); ++e) {
        if (primal[e]) continue;
        const auto& ed = g.edge(e);
        Hom c = lift[ed.black] + ed.h - lift[ed.white];
        rows.push_back({c.x, c.y, target[e] / base[e] * pot[ed.black] / pot[ed.white]});
    }
    // integer row reduction; row_i -= q row_j becomes r_i / r_j^q
    auto reduce_col = [&](std::size_t from, bool use_x) -> std::optional<std::size_t> {
        auto val = [&](const Row& r) { return use_x ? r.x : r.y; };
        for (;;) {
            std::optional<std::size_t> piv;
            for (std::size_t i = from; i < rows.size(); ++i)
                if (val(rows[i]) != 0 && (!piv || std::llabs(val(rows[i])) < std::llabs(val(rows[*piv]))))
                    piv = i;
            if (!piv) return std::nullopt;
            bool done = true;
            for (std::size_t i = from; i < rows.size(); ++i) {
                if (i == *piv || val(rows[i]) == 0) continue;
                long long q = val(rows[i]) / val(rows[*piv]);
                rows[i].x -= q * rows[*piv].x;
                rows[i].y -= q * rows[*piv].y;
                rows[i].r = rows[i].r / pow_int(rows[*piv].r, q);
                if (val(rows[i]) != 0) done = false;
            }
            if (done) {
                std::swap(rows[from], rows[*piv]);
                return from;
            }
        }
    };
    auto p0 = reduce_col(0, true);
    auto p1 = reduce_col(p0 ? 1 : 0, false);
    if (!p0 || !p1) fail("Degenerate", "fundamental cycles do not span the homology");
    Row rx = rows[*p0], ry = rows[*p1];
    if (std::llabs(rx.x) != 1 || std::llabs(ry.y) != 1)
        fail("Degenerate", "fundamental cycles do not generate the homology");
    // ry = (0, +-1): mu0^{+-1} = ry.r
    C mu0 = ry.y > 0 ? ry.r : Field<C>::one() / ry.r;
    // rx = (+-1, k): lambda0^{+-1} mu0^k = rx.r
    C l = rx.r / pow_int(mu0, rx.y);
    C lambda0 = rx.x > 0 ? l : Field<C>::one() / l;
    return {lambda0, mu0};
}

} // namespace gk
