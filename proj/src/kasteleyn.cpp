#include "gk/kasteleyn.hpp"

#include <cstdint>
#include <queue>

#include "gk/errors.hpp"

namespace gk {

Curvature curvature_target(const TorusGraph& g) {
    Curvature c;
    for (const auto& f : g.faces()) {
        int r = (f.sides() % 4 == 0) ? -1 : 1;
        c.value.push_back(r);
        c.product *= r;
    }
    return c;
}

int sign_coboundary(const TorusGraph& g, const SignCochain& k, int f) {
    int s = 1;
    for (int d : g.face(f).darts) s *= k[TorusGraph::edge_of(d)];
    return s;
}

SignCochain find_kasteleyn(const TorusGraph& g) {
    return find_kasteleyn(g, curvature_target(g).value);
}

SignCochain find_kasteleyn(const TorusGraph& g, const std::vector<int>& target) {
    int prod = 1;
    for (int r : target) prod *= r;
    if (prod != 1) fail("Unsolvable", "product of the curvature over all faces is -1");

    const int ne = g.num_edges();
    std::vector<char> in_tree(ne, 0);
    {
        std::vector<char> seen(g.num_vertices(), 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int d : g.vertex(v).darts) {
                int u = g.tail(TorusGraph::opposite(d));
                if (!seen[u]) {
                    seen[u] = 1;
                    in_tree[TorusGraph::edge_of(d)] = 1;
                    q.push(u);
                }
            }
        }
    }
    std::vector<int> var_edge;
    std::vector<int> var_of(ne, -1);
    for (int e = 0; e < ne; ++e)
        if (!in_tree[e]) {
            var_of[e] = static_cast<int>(var_edge.size());
            var_edge.push_back(e);
        }
    const int nv = static_cast<int>(var_edge.size());
    const int words = (nv + 1 + 63) / 64; // last bit column is the right-hand side
    using Row = std::vector<std::uint64_t>;
    auto flip = [](Row& r, int bit) { r[bit / 64] ^= (std::uint64_t{1} << (bit % 64)); };
    auto test = [](const Row& r, int bit) { return (r[bit / 64] >> (bit % 64)) & 1; };

    std::vector<Row> rows;
    for (int f = 0; f < g.num_faces(); ++f) {
        Row r(words, 0);
        for (int d : g.face(f).darts) {
            int v = var_of[TorusGraph::edge_of(d)];
            if (v >= 0) flip(r, v);
        }
        if (target[f] == -1) flip(r, nv);
        rows.push_back(std::move(r));
    }
    // Gauss-Jordan over GF(2)
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < nv && rank < static_cast<int>(rows.size()); ++c) {
        int p = -1;
        for (int i = rank; i < static_cast<int>(rows.size()); ++i)
            if (test(rows[i], c)) { p = i; break; }
        if (p < 0) continue;
        std::swap(rows[p], rows[rank]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            if (i != rank && test(rows[i], c))
                for (int w = 0; w < words; ++w) rows[i][w] ^= rows[rank][w];
        pivot_col.push_back(c);
        ++rank;
    }
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
        if (test(rows[i], nv)) fail("Unsolvable", "inconsistent face equations");

    SignCochain k(ne, 1);
    for (int i = 0; i < rank; ++i)
        if (test(rows[i], nv)) k[var_edge[pivot_col[i]]] = -1;
    for (int f = 0; f < g.num_faces(); ++f)
        if (sign_coboundary(g, k, f) != target[f]) fail("Unsolvable", "internal: dK != R");
    return k;
}

} // namespace gk
