#pragma once

#include <vector>

#include "gk/graph.hpp"

namespace gk {

/*
 * Convex lattice polygon, translated so that its lexicographically smallest
 * vertex sits at the origin. Vertices run counterclockwise.
 */
struct NewtonPolygon {
    std::vector<Hom> vertices;
    long long twice_area = 0; // 2S
    long long interior = 0;   // I
    long long boundary = 0;   // B
    bool degenerate = false;  // all side vectors collinear
    // primitive steps of each side, sides in counterclockwise order
    std::vector<std::vector<Hom>> segments;

    long long genus() const { return interior; }
    bool contains(const Hom& p) const;
    friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;
};

long long gcd_ll(long long a, long long b);
Hom primitive(const Hom& v);

// Polygon whose sides are the given vectors (they must sum to zero).
NewtonPolygon newton_polygon(const std::vector<Hom>& sides);
NewtonPolygon newton_polygon(const std::vector<ZigZag>& zs);
// The same polygon turned by a half-turn. With zig-zags oriented as above and
// edge monomials lambda^h mu^h, det D has this polygon as its support hull.
NewtonPolygon curve_polygon(const std::vector<ZigZag>& zs);
// Convex hull of a finite point set.
NewtonPolygon hull_polygon(std::vector<Hom> points);
// True if some lattice translate of `inner` lies inside `outer`.
bool fits_inside(const NewtonPolygon& inner, const NewtonPolygon& outer);

} // namespace gk
