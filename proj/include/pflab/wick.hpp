#ifndef PFLAB_WICK_HPP
#define PFLAB_WICK_HPP

#include "pflab/fock_ops.hpp"
#include "pflab/momentum_grid.hpp"
#include "pflab/mu_index.hpp"

namespace pflab {

// Normal-ordered polynomial in creation/annihilation operators:
//   sum_t coef_t * prod a*(u) prod a(v).
// Annihilator arguments are fixed vectors; scalar multiples scale coef only.
struct WickTerm {
    cd coef = 1.0;
    std::vector<SPVector> creators;
    std::vector<SPVector> annihilators;
};

struct WickForm {
    SpacePtr space;
    std::vector<WickTerm> terms;

    WickForm& operator*=(cd c) {
        for (auto& t : terms) t.coef *= c;
        return *this;
    }
    WickForm& operator+=(const WickForm& o) {
        terms.insert(terms.end(), o.terms.begin(), o.terms.end());
        return *this;
    }
    WickForm adjoint() const;
};

// phi_mu: the expansion monomial with multiplicities mu over the improper
// vectors g_kappa^{+/-}, coefficient pattern from the normal-ordered Weyl
// series (multinomial regrouping).
WickForm wick_monomial(const MuIndex& mu, const GridPtr& grid);

// a*(w) + a(w) for a single-particle vector w.
WickForm field_form(const SPVector& w);

// Exact matrix element <chi| form |xi> via two-sided lowering.
cd wick_element(const FockBasis& basis, std::size_t chi, std::size_t xi,
                const WickForm& form);

FockOperator wick_operator(const WickForm& form, BasisPtr basis);

// Dense damped kernel R^ell phi_mu R^ell (small bases).
DampedForm wick_damped_form(const WickForm& form, BasisPtr basis, double ell);

// Test-function profile for smeared fields: the reference bump in space
// (radius r/2) times a one-dimensional bump in time (width r/2), both
// normalized to unit integral; closed under time differentiation.
struct SmearedVectorSpec {
    double radius = 1.0;
    int time_derivs = 0; // each derivative multiplies by (-i omega)
};

// The single-particle smearing vector w with phi(f_r) = a(w) + a*(w); the
// time dependence is evaluated analytically at omega(p) per mode.
SPVector smeared_vector(const GridPtr& grid, const SmearedVectorSpec& spec);

FockOperator smeared_field(const GridPtr& grid, const SmearedVectorSpec& spec,
                           BasisPtr basis);

} // namespace pflab

#endif
