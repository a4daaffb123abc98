#include "gk/dirac.hpp"

#include <algorithm>

namespace gk::detail {

std::vector<char> primal_tree(const TorusGraph& g) {
    std::vector<char> in_tree(g.num_edges(), 0), seen(g.num_vertices(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int d : g.vertex(v).darts) {
            int u = g.tail(TorusGraph::opposite(d));
            if (seen[u]) continue;
            seen[u] = 1;
            in_tree[TorusGraph::edge_of(d)] = 1;
            q.push(u);
        }
    }
    return in_tree;
}

DualTree dual_tree(const TorusGraph& g, const std::vector<char>& primal) {
    DualTree t;
    t.parent_edge.assign(g.num_faces(), -1);
    std::vector<char> seen(g.num_faces(), 0);
    std::vector<int> bfs{0};
    seen[0] = 1;
    for (std::size_t k = 0; k < bfs.size(); ++k) {
        for (int d : g.face(bfs[k]).darts) {
            int e = TorusGraph::edge_of(d);
            if (primal[e]) continue;
            int f = g.face_of(TorusGraph::opposite(d));
            if (seen[f]) continue;
            seen[f] = 1;
            t.parent_edge[f] = e;
            bfs.push_back(f);
        }
    }
    if (static_cast<int>(bfs.size()) != g.num_faces()) fail("Disconnected", "dual graph is not connected");
    t.order.assign(bfs.rbegin(), bfs.rend());
    return t;
}

std::vector<Hom> tree_lifts(const TorusGraph& g, const std::vector<char>& primal) {
    std::vector<Hom> lift(g.num_vertices());
    std::vector<char> seen(g.num_vertices(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int d : g.vertex(v).darts) {
            int u = g.tail(TorusGraph::opposite(d));
            if (!primal[TorusGraph::edge_of(d)] || seen[u]) continue;
            seen[u] = 1;
            lift[u] = lift[v] + g.shift(d);
            q.push(u);
        }
    }
    return lift;
}

} // namespace gk::detail

namespace gk {

Complex det(Matrix<Complex> a) {
    const std::size_t n = a.size();
    Complex d = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
        if (a[p][c] == 0.0) return 0.0;
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            Complex f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return d;
}

} // namespace gk
