#pragma once

#include <vector>

#include "gk/abel.hpp"
#include "gk/dirac.hpp"
#include "gk/graph.hpp"
#include "gk/kasteleyn.hpp"
#include "gk/theta.hpp"

namespace gk {

/*
 * Genus-1 spectral data: the elliptic curve C/(Z + tau Z), one point per
 * zig-zag (same order as zigzags(g)), and the line-bundle parameter t.
 * theta_q is the characteristic used in the denominators; the odd one is
 * always theta11.
 */
struct EllipticSpectralData {
    EllipticParams params;
    std::vector<Complex> points;
    Complex t{0.0, 0.0};
    ThetaChar theta_q = kTheta00;
};

struct InfinityReport {
    double residual_x = 0; // distance of sum <(1,0), h_alpha> alpha to the lattice
    double residual_y = 0;
    bool pass = false;
};

InfinityReport validate_infinity_points(const EllipticSpectralData& data, const std::vector<ZigZag>& zs);

// Checks genus 1 and the point constraints, then moves point lifts by
// multiples of tau until each basis class evaluates to an integer, which
// makes lambda and mu single valued.
EllipticSpectralData prepare_spectral_data(const TorusGraph& g, const AbelMap& d, EllipticSpectralData data);

// sum n_alpha * point_alpha
Complex evaluate_label(const AbelLabel& l, const EllipticSpectralData& data);
Divisor label_divisor(const AbelLabel& l, const EllipticSpectralData& data);

struct LambdaMu {
    Complex lambda;
    Complex mu;
};
// Values of the monomials lambda^{(1,0)} and mu^{(0,1)} of the Dirac matrix.
LambdaMu lambda_mu(const AbelMap& d, const EllipticSpectralData& data, Complex z);

std::vector<Complex> face_coordinates(const TorusGraph& g, const AbelMap& d, const EllipticSpectralData& data);

Connection<Complex> theta_connection(const TorusGraph& g, const AbelMap& d, const EllipticSpectralData& data,
                                     const SignCochain& k);

// psi per white vertex, in whites() order
std::vector<Complex> kernel_vector(const TorusGraph& g, const AbelMap& d, const EllipticSpectralData& data,
                                   Complex z);

// Dirac matrix with B_e = E_{h_e}(z) in place of the lambda, mu monomials.
Matrix<Complex> theta_dirac_at(const TorusGraph& g, const AbelMap& d, const EllipticSpectralData& data,
                               const SignCochain& k, const Connection<Complex>& a, Complex z);

struct SampleResidual {
    Complex z;
    double kernel = 0; // |psi^T D| / (|D|_F |psi|)
    double det = 0;    // |det D| / product of row norms
    double curve = 0;  // |P(lambda, mu)| / sum |c| |monomial|
};

struct RoundTrip {
    std::vector<Complex> x;
    Twist<Complex> twist;
    FloatPoly curve; // det of the Dirac matrix of the section with twist
    std::vector<SampleResidual> samples;
};

RoundTrip round_trip(const TorusGraph& g, const AbelMap& d, const EllipticSpectralData& data, const SignCochain& k,
                     const std::vector<Complex>& zs);

SampleResidual sample_residual(const TorusGraph& g, const AbelMap& d, const EllipticSpectralData& data,
                               const SignCochain& k, const Connection<Complex>& a, Complex z);

} // namespace gk
