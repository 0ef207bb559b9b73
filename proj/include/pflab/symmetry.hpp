#ifndef PFLAB_SYMMETRY_HPP
#define PFLAB_SYMMETRY_HPP

#include <optional>
#include <string>

#include "pflab/extraction.hpp"
#include "pflab/wick.hpp"

namespace pflab {

// Microscopic symmetry candidate acting on the single-particle grid; the
// second-quantized action on forms goes through Weyl covariance
// U W(f) U* = W(u f) and through the wick-term vectors.
struct SymmetryAction {
    GridPtr grid;
    Mat u;                   // n_modes x n_modes single-particle map
    bool antiunitary = false;
    double locality_factor = 1.0;     // c in Def. condition (2)
    double validity_radius = 1e300;   // R
    std::string name;

    SPVector apply_sp(const SPVector& v) const;
    WickForm apply_wick(const WickForm& f) const;
};

// Exact rotation: block Wigner matrices per (node, l) block.
SymmetryAction rotation(const GridPtr& grid, const Eigen::Matrix3d& R);
Eigen::Matrix3d axis_rotation(int axis, double angle);

// Hermitean conjugation phi -> phi* (antiunitary; on Weyl generators f -> -f).
SymmetryAction conjugation(const GridPtr& grid);

// Dilation by lambda = ratio^octaves (exact node permutation; requires m = 0).
SymmetryAction dilation(const GridPtr& grid, int octaves);

// Synthetic energy-raising unitary (radial node shift up); exercises the
// ell -> ell' damping-compatibility bookkeeping of condition (1).
SymmetryAction mode_shift_up(const GridPtr& grid);

struct MicroscopicReport {
    bool cond1_pass = false;
    double ell = 0.0, ell_prime = 0.0;      // witness
    double cond1_norm = 0.0;                 // ||R^{-ell} U R^{ell'}||
    bool cond2_pass = false;
    double cond2_max_residual = 0.0;         // family-span containment residual
    int cond2_pairs_checked = 0;
    std::string note;
};

// Condition (1): finiteness of ||R^{-ell} Gamma(u) R^{ell'}|| on the truncated
// basis with an ell' witness; condition (2): alpha maps LocalFamily(r) into
// the span of LocalFamily(c r) within tol, over schedule radii pairs.
MicroscopicReport check_microscopic(const SymmetryAction& alpha,
                                    const PairingTensor& tensor, double ell,
                                    double tol = 1e-8);

// Max principal angle between span(alpha X) and span(X) for a field space
// given by operator-side coefficients over the family at one radius.
double verify_invariance_family(const SymmetryAction& alpha,
                                const PairingTensor& tensor, std::size_t k_radius,
                                const Mat& field_coeffs);

// Same for a list of analytic forms.
double verify_invariance_forms(const SymmetryAction& alpha, const ProbeSet& probes,
                               const std::vector<WickForm>& forms);

// Derivative d_mu phi = i [P_mu, phi]; mu = 0 is time (P_0 = H), mu = 1..3
// spatial (P_j from exact spherical-harmonic recurrences). Wick slots map
// v -> i M v.
WickForm derivative(const WickForm& phi, int mu, const GridPtr& grid);

// Relative residual of d0^2 phi = sum_j dj^2 phi - m^2 phi at the level of
// the single-particle vectors (the forms are linear in them; both sides are
// evaluated through the same commutator machinery). l_max >= 2 required.
double field_equation_residual(const GridPtr& grid);

} // namespace pflab

#endif
