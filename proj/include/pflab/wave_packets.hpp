#ifndef PFLAB_WAVE_PACKETS_HPP
#define PFLAB_WAVE_PACKETS_HPP

#include "pflab/momentum_grid.hpp"

namespace pflab {

// Fixed reference bump g(x) = c (1-|x|^2)^4 on |x| < 1, normalized to
// int g = 1 over R^3. All moments and radial transforms are closed-form
// (Beta functions) or one-dimensional Gauss-Legendre quadratures; no
// position-space grids appear anywhere.
namespace bump {

// int_0^1 t^j (1-t^2)^4 dt
double radial_moment(int j);

// normalization constant c with int_{R^3} c (1-|x|^2)^4 d^3x = 1
double c_norm();

// int_{S^2} n^alpha dOmega (nonzero only for all-even alpha)
double sphere_monomial_integral(const MultiIndex& alpha);

// M_alpha = int x^alpha g(x) d^3x for the normalized bump
double moment(const MultiIndex& alpha);

// T_{l,j}(z) = int_0^1 t^{2+j} (1-t^2)^4 j_l(z t) dt
double hankel(int l, int j, double z);

// int_0^infty z^2 omega(z/r)^{osign} T_{l,j}(z)^2 dz, osign in {-1,+1}
double radial_norm_integral(int l, int j, double r, double mass, int osign);

} // namespace bump

// Localized single-particle pair f^{+/-} for radius r and bump profile
// x^beta g(x/r): f^{+/-} = omega^{-/+1/2} * (momentum transform), each part
// scaled to unit continuum K-norm so that the moment pairings realize the
// r^{|kappa|+(s-/+1)/2} scaling laws.
struct LocalizedPair {
    GridPtr grid;
    double radius = 0.0;
    MultiIndex profile;
    SPVector plus_part, minus_part;
    double cont_norm_plus = 0.0;  // continuum norms divided out
    double cont_norm_minus = 0.0;
};

LocalizedPair make_local_pair(const GridPtr& grid, double r, const MultiIndex& beta);

// <f^{sign} | h_kappa^{sign}> = (sqrt2 / kappa!) * r^{s+|kappa|+|beta|} *
//     M_{kappa+beta} / cont_norm, real by construction. sign in {+1,-1}.
double moment_pairing(const LocalizedPair& pair, const MultiIndex& kappa, int sign);

// Weyl generator f = t * (f^+ + i f^-) for one pair; members of local
// families combine several of these.
SPVector pair_generator(const LocalizedPair& pair, double t);

} // namespace pflab

#endif
