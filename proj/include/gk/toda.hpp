#pragma once

#include <array>
#include <vector>

#include "gk/mutation.hpp"
#include "gk/ratfunc.hpp"
#include "gk/reconstruction.hpp"

namespace gk {

/*
 * The four-face relativistic Toda graph. Faces are located by darts of the
 * parallel edges e1, e2 so that the naming survives any reordering of the
 * fixture file: UL holds the black end of e1, LL its white end, LR the black
 * end of e2 and UR its white end.
 */
struct TodaFaces {
    int ul, ll, lr, ur;
};

TodaFaces toda_faces(const TorusGraph& g);

// Names used by the flow: (x, y, z, w) = (UL, LL, LR, UR).
std::array<int, 4> toda_flow_slots(const TorusGraph& g);
// Names used by the closed-form coordinates: (x, y, z, w) = (UL, UR, LL, LR).
std::array<int, 4> toda_display_slots(const TorusGraph& g);

// Points by zig-zag class: (-1,1) -> a, (-1,-1) -> 1/2, (1,-1) -> a + 1/2, (1,1) -> 0.
std::vector<Complex> toda_points(const std::vector<ZigZag>& zs, Complex a);

// Closed forms for (x, y, z, w) in display naming.
std::array<Complex, 4> toda_closed_forms(const EllipticParams& p, Complex a, Complex t);
// Closed forms for lambda and mu; [0] is lambda_mu().mu and [1] is lambda_mu().lambda.
std::array<Complex, 2> toda_closed_lambda_mu(const EllipticParams& p, Complex a, Complex z);

template <class C> std::array<C, 4> toda_flow_formula(const std::array<C, 4>& v) {
    const C one = Field<C>::one();
    const C &x = v[0], &y = v[1], &z = v[2], &w = v[3];
    C a = one + w, b = one + one / y, c = one + y, d = one + one / w;
    return {one / y, x * a * a / (b * b), one / w, z * c * c / (d * d)};
}

template <class C> std::array<C, 4> toda_swap_formula(const std::array<C, 4>& v) { return {v[2], v[3], v[0], v[1]}; }

/*
 * Discrete Toda dynamics on signed Dirac weights. A flow step is a spider
 * move at y, a spider move at the image of w, reduction of every two-valent
 * vertex and the isomorphism back onto the original graph that sends the
 * mutated y face to the x slot. Since the weights themselves are moved, the
 * Dirac determinant changes only by a scalar and a monomial, so the
 * canonical curve is conserved exactly, not just up to rescaling of lambda
 * and mu.
 */
class TodaFlow {
public:
    TodaFlow(TorusGraph g, std::vector<QComplex> signed_weights);
    // Starts from face weights (x, y, z, w) in flow naming.
    static TodaFlow from_face_weights(TorusGraph g, const std::array<QComplex, 4>& xyzw);

    void step();
    void swap();

    const TorusGraph& graph() const { return g_; }
    const std::vector<QComplex>& weights() const { return w_; }
    std::array<QComplex, 4> face_weights() const; // flow naming
    ExactPoly curve() const;                      // canonical det of the signed Dirac matrix

private:
    TorusGraph g_;
    std::vector<QComplex> w_;
};

// Signed Dirac matrix, K already folded into the weights.
template <class C> Matrix<LaurentPoly2<C>> signed_dirac(const TorusGraph& g, const std::vector<C>& w) {
    return dirac_matrix(g, SignCochain(g.num_edges(), 1), w);
}

// Symbolic composite of the two mutations, in flow naming, as rational
// functions of (x, y, z, w).
std::array<RatFunc, 4> toda_flow_by_mutation(const TorusGraph& g);

} // namespace gk
