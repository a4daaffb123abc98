#include "gk/abel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <tuple>

#include "gk/errors.hpp"

namespace gk {

long long degree(const AbelLabel& l) { return std::accumulate(l.begin(), l.end(), 0LL); }

AbelLabel operator+(AbelLabel a, const AbelLabel& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

AbelLabel operator-(AbelLabel a, const AbelLabel& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

AbelLabel operator*(long long k, AbelLabel a) {
    for (auto& v : a) v *= k;
    return a;
}

AbelLabel unit_label(std::size_t n, std::size_t i) {
    AbelLabel l(n, 0);
    l[i] = 1;
    return l;
}

AbelLabel h1_embed(const std::vector<ZigZag>& zs, Hom h) {
    AbelLabel l;
    for (const auto& z : zs) l.push_back(cross(h, z.h));
    return l;
}

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace

H1Lattice::H1Lattice(const std::vector<ZigZag>& zs) : zs_(zs) {
    std::vector<AbelLabel> rows{h1_embed(zs, {1, 0}), h1_embed(zs, {0, 1})};
    const std::size_t n = zs.size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        // Euclid on column c among rows r..
        for (;;) {
            std::optional<std::size_t> piv;
            for (std::size_t i = r; i < rows.size(); ++i)
                if (rows[i][c] != 0 && (!piv || std::llabs(rows[i][c]) < std::llabs(rows[*piv][c])))
                    piv = i;
            if (!piv) break;
            std::swap(rows[r], rows[*piv]);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                long long q = rows[i][c] / rows[r][c];
                rows[i] = rows[i] - q * rows[r];
                if (rows[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (r < rows.size() && rows[r][c] != 0) {
            if (rows[r][c] < 0) rows[r] = -1 * rows[r];
            for (std::size_t i = 0; i < r; ++i) rows[i] = rows[i] - floor_div(rows[i][c], rows[r][c]) * rows[r];
            basis_.push_back(rows[r]);
            pivot_.push_back(c);
            ++r;
        }
    }
}

AbelLabel H1Lattice::reduce(AbelLabel l) const {
    for (std::size_t k = 0; k < basis_.size(); ++k)
        l = l - floor_div(l[pivot_[k]], basis_[k][pivot_[k]]) * basis_[k];
    return l;
}

bool H1Lattice::contains(const AbelLabel& l) const {
    for (long long v : reduce(l))
        if (v) return false;
    return true;
}

Hom H1Lattice::preimage(const AbelLabel& l) const {
    if (!contains(l)) fail("NotInImage", "label is not the image of a homology class");
    // two integer unknowns; h1_embed is injective when the classes span
    AbelLabel ex = h1_embed(zs_, {1, 0}), ey = h1_embed(zs_, {0, 1});
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = i + 1; j < l.size(); ++j) {
            long long det = ex[i] * ey[j] - ex[j] * ey[i];
            if (!det) continue;
            long long nx = l[i] * ey[j] - l[j] * ey[i];
            long long ny = ex[i] * l[j] - ex[j] * l[i];
            if (nx % det || ny % det) continue;
            Hom h{nx / det, ny / det};
            if (h1_embed(zs_, h) == l) return h;
        }
    if (degree(l) == 0 && std::all_of(l.begin(), l.end(), [](long long v) { return v == 0; })) return {};
    fail("NotInImage", "homology classes of the zig-zags are degenerate");
}

AbelLabel AbelMap::face_at(int f, Hom lift) const { return face[f] + sign * h1_embed(zs, lift); }

AbelLabel AbelMap::vertex_at(int v, Hom lift) const { return vertex[v] + sign * h1_embed(zs, lift); }

AbelLabel AbelMap::edge_class(const TorusGraph& g, int e) const {
    const std::size_t n = zs.size();
    const auto& ed = g.edge(e);
    return vertex[ed.black] - vertex[ed.white] - unit_label(n, alpha_plus(e)) - unit_label(n, alpha_minus(e));
}

namespace {

// A cell of the torus: kind 0 = face, 1 = vertex.
using CellKey = std::pair<int, int>;

struct Visit {
    Hom lift;
    AbelLabel label;
};

} // namespace

AbelMap discrete_abel(const TorusGraph& g, int base_face, AbelLabel base_value) {
    AbelMap m;
    m.zs = zigzags(g);
    m.zz_of_dart = zigzag_of_dart(g, m.zs);
    const std::size_t n = m.zs.size();
    if (base_value.empty()) base_value.assign(n, 0);
    if (base_value.size() != n) fail("BadLabel", "base value has the wrong length");
    if (degree(base_value) != 0) fail("BadLabel", "base value must have degree 0");
    if (base_face < 0 || base_face >= g.num_faces()) fail("UnknownFace", std::to_string(base_face));

    // Per edge, the four cells around its black end with lifts relative to the
    // black lift and labels relative to d(b).
    struct Around {
        CellKey cell;
        Hom lift;
        AbelLabel rel;
    };
    std::vector<std::vector<Around>> around(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto& ed = g.edge(e);
        AbelLabel ap = unit_label(n, m.zz_of_dart[2 * e]);
        AbelLabel am = unit_label(n, m.zz_of_dart[2 * e + 1]);
        around[e] = {{{1, ed.black}, {}, AbelLabel(n, 0)},
                     {{1, ed.white}, ed.h, -1 * (ap + am)},
                     {{0, g.face_of(2 * e)}, Hom{} - g.offset(2 * e), -1 * ap},
                     {{0, g.face_of(2 * e + 1)}, ed.h - g.offset(2 * e + 1), -1 * am}};
    }
    std::map<CellKey, std::vector<std::pair<int, int>>> incident; // cell -> (edge, slot)
    for (int e = 0; e < g.num_edges(); ++e)
        for (int s = 0; s < 4; ++s) incident[around[e][s].cell].emplace_back(e, s);

    std::map<CellKey, Visit> seen;
    // pending consistency constraints: label difference vs lift difference
    std::vector<std::pair<AbelLabel, Hom>> loops;
    std::queue<CellKey> q;
    seen[{0, base_face}] = {{}, base_value};
    q.push({0, base_face});
    while (!q.empty()) {
        CellKey c = q.front();
        q.pop();
        const Visit here = seen[c];
        for (auto [e, s] : incident[c]) {
            Hom black_lift = here.lift - around[e][s].lift;
            AbelLabel black_label = here.label - around[e][s].rel;
            for (const auto& other : around[e]) {
                Hom lift = black_lift + other.lift;
                AbelLabel label = black_label + other.rel;
                auto it = seen.find(other.cell);
                if (it == seen.end()) {
                    seen[other.cell] = {lift, label};
                    q.push(other.cell);
                } else if (it->second.lift != lift || it->second.label != label) {
                    loops.emplace_back(label - it->second.label, lift - it->second.lift);
                }
            }
        }
    }
    // d(c + T) - d(c) must be sign * h1_embed(T) for a single sign
    std::optional<int> sign;
    for (const auto& [dl, dt] : loops) {
        AbelLabel img = h1_embed(m.zs, dt);
        if (img == dl) {
            if (dl != AbelLabel(n, 0) && sign == -1) fail("InconsistentLift", "orientation sign changes");
            if (dl != AbelLabel(n, 0)) sign = 1;
        } else if (img == -1 * dl) {
            if (sign == 1) fail("InconsistentLift", "orientation sign changes");
            sign = -1;
        } else {
            fail("InconsistentLift", "propagation defect is not the image of the lift shift");
        }
    }
    m.sign = sign.value_or(1);
    m.face.assign(g.num_faces(), {});
    m.vertex.assign(g.num_vertices(), {});
    for (const auto& [c, v] : seen) {
        AbelLabel at0 = v.label - m.sign * h1_embed(m.zs, v.lift);
        (c.first == 0 ? m.face[c.second] : m.vertex[c.second]) = at0;
    }
    return m;
}

std::vector<AbelLabel> epsilon_abel_check(const AbelMap& d, const IntMatrix& eps) {
    H1Lattice lat(d.zs);
    const std::size_t nf = d.face.size();
    std::vector<AbelLabel> out;
    for (std::size_t j = 0; j < nf; ++j) {
        AbelLabel s(d.zs.size(), 0);
        for (std::size_t i = 0; i < nf; ++i) s = s + eps[i][j] * d.face[i];
        out.push_back(lat.reduce(s));
    }
    return out;
}

} // namespace gk
