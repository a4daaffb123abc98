#include "gk/polygon.hpp"

#include <algorithm>
#include <cstdlib>

#include "gk/errors.hpp"

namespace gk {

long long gcd_ll(long long a, long long b) {
    a = std::llabs(a);
    b = std::llabs(b);
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Hom primitive(const Hom& v) {
    long long g = gcd_ll(v.x, v.y);
    if (g == 0) return v;
    return {v.x / g, v.y / g};
}

namespace {

bool upper_half(const Hom& v) { return v.y > 0 || (v.y == 0 && v.x > 0); }

bool angle_less(const Hom& a, const Hom& b) {
    bool ua = upper_half(a), ub = upper_half(b);
    if (ua != ub) return ua;
    return cross(a, b) > 0;
}

bool same_direction(const Hom& a, const Hom& b) {
    return cross(a, b) == 0 && (a.x * b.x + a.y * b.y) > 0;
}

// Fills counts and segments for a ccw vertex list (at least 3 vertices).
void finish(NewtonPolygon& p) {
    auto lex = std::min_element(p.vertices.begin(), p.vertices.end());
    std::rotate(p.vertices.begin(), lex, p.vertices.end());
    Hom o = p.vertices.front();
    for (auto& v : p.vertices) v -= o;

    const std::size_t n = p.vertices.size();
    p.twice_area = 0;
    p.boundary = 0;
    p.segments.clear();
    for (std::size_t k = 0; k < n; ++k) {
        const Hom& a = p.vertices[k];
        const Hom& b = p.vertices[(k + 1) % n];
        p.twice_area += cross(a, b);
        Hom side = b - a;
        long long g = gcd_ll(side.x, side.y);
        p.boundary += g;
        p.segments.emplace_back(static_cast<std::size_t>(g), primitive(side));
    }
    // interior points by direct enumeration; Pick's identity is then a check,
    // not a definition
    long long xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    for (const auto& v : p.vertices) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    p.interior = 0;
    for (long long x = xmin; x <= xmax; ++x)
        for (long long y = ymin; y <= ymax; ++y) {
            bool strictly = true;
            for (std::size_t k = 0; k < n && strictly; ++k) {
                Hom e = p.vertices[(k + 1) % n] - p.vertices[k];
                if (cross(e, Hom{x, y} - p.vertices[k]) <= 0) strictly = false;
            }
            if (strictly) ++p.interior;
        }
}

NewtonPolygon degenerate_from(std::vector<Hom> pts) {
    NewtonPolygon p;
    p.degenerate = true;
    std::sort(pts.begin(), pts.end());
    Hom lo = pts.front(), hi = pts.back();
    p.vertices = {Hom{}, hi - lo};
    if (lo == hi) p.vertices.pop_back();
    long long g = gcd_ll((hi - lo).x, (hi - lo).y);
    p.boundary = 2 * g;
    if (g) {
        p.segments.emplace_back(static_cast<std::size_t>(g), primitive(hi - lo));
        p.segments.emplace_back(static_cast<std::size_t>(g), primitive(lo - hi));
    }
    return p;
}

} // namespace

bool NewtonPolygon::contains(const Hom& q) const {
    const std::size_t n = vertices.size();
    if (n == 0) return false;
    if (n == 1) return q == vertices[0];
    if (degenerate) {
        Hom a = vertices[0], b = vertices[1];
        if (cross(b - a, q - a) != 0) return false;
        long long t = (q - a).x * (b - a).x + (q - a).y * (b - a).y;
        long long len = (b - a).x * (b - a).x + (b - a).y * (b - a).y;
        return t >= 0 && t <= len;
    }
    for (std::size_t k = 0; k < n; ++k)
        if (cross(vertices[(k + 1) % n] - vertices[k], q - vertices[k]) < 0) return false;
    return true;
}

NewtonPolygon newton_polygon(const std::vector<Hom>& sides_in) {
    std::vector<Hom> sides;
    Hom total;
    for (const auto& s : sides_in) {
        total += s;
        if (s != Hom{}) sides.push_back(s);
    }
    if (total != Hom{}) fail("BadPolygon", "side vectors do not sum to zero");
    std::stable_sort(sides.begin(), sides.end(), angle_less);

    std::vector<Hom> pts;
    Hom cur;
    for (std::size_t k = 0; k < sides.size(); ++k) {
        if (k == 0 || !same_direction(sides[k - 1], sides[k])) pts.push_back(cur);
        cur += sides[k];
    }
    bool flat = true;
    for (const auto& s : sides)
        if (cross(sides.front(), s) != 0) flat = false;
    if (sides.empty() || flat) {
        std::vector<Hom> all{Hom{}};
        Hom c;
        for (const auto& s : sides) {
            c += s;
            all.push_back(c);
        }
        return degenerate_from(all);
    }
    NewtonPolygon p;
    p.vertices = pts;
    finish(p);
    return p;
}

NewtonPolygon newton_polygon(const std::vector<ZigZag>& zs) {
    std::vector<Hom> sides;
    for (const auto& z : zs) sides.push_back(z.h);
    return newton_polygon(sides);
}

NewtonPolygon curve_polygon(const std::vector<ZigZag>& zs) {
    std::vector<Hom> sides;
    for (const auto& z : zs) sides.push_back(Hom{} - z.h);
    return newton_polygon(sides);
}

NewtonPolygon hull_polygon(std::vector<Hom> pts) {
    if (pts.empty()) fail("BadPolygon", "empty point set");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return degenerate_from(pts);
    std::vector<Hom> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    if (h.size() < 3) return degenerate_from(pts);
    NewtonPolygon p;
    p.vertices = h;
    finish(p);
    return p;
}

bool fits_inside(const NewtonPolygon& inner, const NewtonPolygon& outer) {
    if (inner.vertices.empty()) return true;
    long long xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    for (const auto& v : outer.vertices) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    for (long long x = xmin; x <= xmax; ++x)
        for (long long y = ymin; y <= ymax; ++y) {
            Hom t{x, y};
            bool ok = true;
            for (const auto& v : inner.vertices)
                if (!outer.contains(v - inner.vertices.front() + t)) { ok = false; break; }
            if (ok) return true;
        }
    return false;
}

} // namespace gk
