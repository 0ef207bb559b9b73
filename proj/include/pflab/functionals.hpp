#ifndef PFLAB_FUNCTIONALS_HPP
#define PFLAB_FUNCTIONALS_HPP

#include <string>
#include <vector>

#include "pflab/fock_ops.hpp"
#include "pflab/wave_packets.hpp"
#include "pflab/wick.hpp"

namespace pflab {

// Energy-damped linear functional represented by a finite kernel,
//   sigma(A) = sum K_{chi,xi} <chi| A |xi>.
class Functional {
public:
    struct Entry {
        std::size_t chi, xi;
        cd k;
    };

    Functional() = default;
    explicit Functional(BasisPtr basis, double ell = 0.0)
        : basis_(std::move(basis)), ell_(ell) {}

    const BasisPtr& basis() const { return basis_; }
    double ell() const { return ell_; }
    const std::vector<Entry>& entries() const { return entries_; }

    Functional& add(std::size_t chi, std::size_t xi, cd k);
    Functional& scale(cd c);
    Functional& accumulate(const Functional& o, cd c = 1.0);
    Functional adjoint_functional() const; // sigma*(A) := conj(sigma(A*))

    cd eval_identity() const;
    cd eval_weyl(const SPVector& f) const;
    cd eval_wick(const WickForm& form) const;
    cd eval_op(const FockOperator& op) const;
    cd eval_dense(const Mat& a) const;

private:
    BasisPtr basis_;
    double ell_ = 0.0;
    std::vector<Entry> entries_;
};

// ||sigma||^(ell) = trace norm of the kernel conjugated by R^{-ell}.
double damped_norm(const Functional& sigma, double ell);

Functional vacuum_functional(const BasisPtr& basis);

// sigma(A) = damp * <chi| A |xi>, damp = (1+E_chi)^{-ell} (1+E_xi)^{-ell}.
Functional rank_one_damped(const BasisPtr& basis, std::size_t chi, std::size_t xi,
                           double ell);

// (A13)-type functional sigma(.) = (Omega| [a(b), [a*(b'), .]] |Omega)
//   = <b|b'> (Omega|.|Omega) - (b|.|b').
Functional sigma_commutator(const SPVector& b, const SPVector& bp,
                            const BasisPtr& basis);

// Explicit quadratic functional (A20) for a supplied grid vector h.
Functional sigma_q(const BasisPtr& basis, const SPVector& h);

// Weyl-operator family localized at one radius: members are generators
// f = sum_beta t_beta (f_beta^+ + i f_beta^-) over bump profiles x^beta.
struct FamilyMember {
    SPVector f;                                    // on the model's mode space
    std::vector<std::pair<MultiIndex, double>> parts; // (beta, t)
    double norm_bound = 1.0;                       // Weyl operators: 1
    std::string label;
};

struct LocalFamily {
    double radius = 0.0;
    std::vector<LocalizedPair> pairs;   // one per profile, canonical order
    std::vector<FamilyMember> members;

    // product of moment pairings for the member, one factor per mu entry
    double member_moment(const FamilyMember& m, const MultiIndex& kappa,
                         int sign) const;
};

// Canonical deterministic family: per-profile singles (t in {1,-1,1/2,-1/2})
// plus {0, e_j} cross pairs when cross_pairs is set.
LocalFamily make_local_family(const GridPtr& grid, double r, bool cross_pairs);

struct SeminormEstimate {
    double value = 0.0;
    std::vector<cd> witness; // coefficients over family members
    std::size_t family_size = 0;
};

// Lower bound for ||sigma||_r: maximize |sigma(A)| over explicit elements of
// the operator-norm unit ball of the member span (vertices plus a refined
// direction when a dense realization is affordable).
SeminormEstimate local_seminorm(const Functional& sigma, const LocalFamily& fam,
                                std::size_t dense_cap = 4096);

// Solve (A12): functional with sigma_mu(W(f)) = e^{-|f|^2/2} prod_j
// <f^+|h_j^+>^{mu_j^+} <f^-|h_j^->^{mu_j^-} over the family ensemble.
// Realized as slot-wise linear least squares for nested-commutator argument
// vectors, symmetrized; residual measured on held-out members.
struct SigmaMuResult {
    MuIndex mu;
    Functional sigma;
    double residual = 0.0;      // max |sigma(W(f)) - target| on held-out set
    double target_scale = 0.0;  // max |target| on held-out set
    std::vector<SPVector> slot_vectors;
};

SigmaMuResult sigma_mu(const MuIndex& mu, const std::vector<LocalFamily>& families,
                       const BasisPtr& basis);

} // namespace pflab

#endif
