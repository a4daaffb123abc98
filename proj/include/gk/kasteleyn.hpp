#pragma once

#include <vector>

#include "gk/graph.hpp"

namespace gk {

// Edge signs, +1 or -1, indexed by edge.
using SignCochain = std::vector<int>;

struct Curvature {
    std::vector<int> value; // per face
    int product = 1;
};

// -1 on faces whose number of sides is divisible by 4, +1 otherwise.
Curvature curvature_target(const TorusGraph& g);

// Alternating product of the signs around face f.
int sign_coboundary(const TorusGraph& g, const SignCochain& k, int f);

// Solves dK = R over GF(2) with K = +1 on a BFS spanning tree; the two free
// cycle variables are set to +1. Throws Unsolvable when the product of R is -1.
SignCochain find_kasteleyn(const TorusGraph& g);
SignCochain find_kasteleyn(const TorusGraph& g, const std::vector<int>& target);

} // namespace gk
