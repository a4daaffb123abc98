#pragma once

#include <vector>

#include "gk/graph.hpp"

namespace gk {

// Element of the free abelian group on the zig-zags, indexed like zigzags(g).
using AbelLabel = std::vector<long long>;

long long degree(const AbelLabel& l);
AbelLabel operator+(AbelLabel a, const AbelLabel& b);
AbelLabel operator-(AbelLabel a, const AbelLabel& b);
AbelLabel operator*(long long k, AbelLabel a);
AbelLabel unit_label(std::size_t n, std::size_t i);

// Coordinate at alpha: h x h_alpha.
AbelLabel h1_embed(const std::vector<ZigZag>& zs, Hom h);

// Reduction modulo the image of h1_embed by a fixed Hermite basis.
class H1Lattice {
public:
    explicit H1Lattice(const std::vector<ZigZag>& zs);
    AbelLabel reduce(AbelLabel l) const;
    bool contains(const AbelLabel& l) const;
    // Solves l = h1_embed(h); throws NotInImage otherwise.
    Hom preimage(const AbelLabel& l) const;

private:
    std::vector<ZigZag> zs_;
    std::vector<AbelLabel> basis_; // Hermite rows, pivots strictly increasing
    std::vector<std::size_t> pivot_;
};

/*
 * Values of the discrete Abel map on the cells of the fundamental domain.
 *
 * Cells of the universal cover are (cell, lift) with lifts taken from the
 * graph's own conventions: a vertex at its lift, a face at the lift of the
 * tail of its first dart. On the cover d(c + T) = d(c) + sign * h1_embed(T);
 * the sign depends only on the orientation of the zig-zag classes and is
 * found during propagation.
 */
struct AbelMap {
    std::vector<ZigZag> zs;
    std::vector<int> zz_of_dart;
    std::vector<AbelLabel> face;
    std::vector<AbelLabel> vertex;
    int sign = 1;

    AbelLabel face_at(int f, Hom lift) const;
    AbelLabel vertex_at(int v, Hom lift) const;
    int alpha_plus(int e) const { return zz_of_dart[2 * e]; }
    int alpha_minus(int e) const { return zz_of_dart[2 * e + 1]; }
    // d(b) - d(w) - alpha+ - alpha-, an element of the image of h1_embed
    AbelLabel edge_class(const TorusGraph& g, int e) const;
};

AbelMap discrete_abel(const TorusGraph& g, int base_face = 0, AbelLabel base_value = {});

// Residual of sum_i eps_ij d(i) per column j, reduced modulo the image of H1.
std::vector<AbelLabel> epsilon_abel_check(const AbelMap& d, const IntMatrix& eps);

} // namespace gk
