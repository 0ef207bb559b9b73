#ifndef PFLAB_FOCK_OPS_HPP
#define PFLAB_FOCK_OPS_HPP

#include <Eigen/Dense>
#include <functional>

#include "pflab/fock_basis.hpp"

namespace pflab {

using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

// Matrix-free linear operator on a FockBasis. Dense realization materializes
// on demand (small bases only).
class FockOperator {
public:
    using Applicator = std::function<void(const Vec&, Vec&)>;

    FockOperator() = default;
    FockOperator(BasisPtr basis, Applicator apply, bool hermitian = false)
        : basis_(std::move(basis)), apply_(std::move(apply)), hermitian_(hermitian) {}

    const BasisPtr& basis() const { return basis_; }
    bool hermitian() const { return hermitian_; }

    Vec apply(const Vec& v) const {
        Vec out = Vec::Zero(v.size());
        apply_(v, out);
        return out;
    }

    Mat dense() const;

private:
    BasisPtr basis_;
    Applicator apply_;
    bool hermitian_ = false;
};

// a(f) v: bosonic annihilation, antilinear in f; f given on the grid (node
// values), internally converted to orthonormal coordinates.
void apply_annihilator(const FockBasis& basis, const Eigen::VectorXcd& f_ortho,
                       const Vec& in, Vec& out);

// a*(f) v: states pushed above n_max (or e_cut) are dropped.
void apply_creator(const FockBasis& basis, const Eigen::VectorXcd& f_ortho,
                   const Vec& in, Vec& out);

FockOperator annihilator(const SPVector& f, BasisPtr basis);
FockOperator creator(const SPVector& f, BasisPtr basis);

// W(f) = e^{-|f|^2/2} e^{i a*(f)} e^{i a(f)} as an operator on the truncated
// basis (creator side truncates).
FockOperator weyl(const SPVector& f, BasisPtr basis);

// Exact matrix element <chi| W(f) |xi> via the terminating lowering series,
// independent of n_max as long as chi, xi are kept states.
cd weyl_element(const FockBasis& basis, std::size_t chi, std::size_t xi,
                const Eigen::VectorXcd& f_ortho, double f_norm2);

// Convenience: orthonormal coordinates and |f|^2 for a grid vector.
Eigen::VectorXcd ortho_coords(const SPVector& f);

// diag (1+H)^{-ell}
Vec damping_diagonal(const FockBasis& basis, double ell);

// Damped quadratic form R^ell phi R^ell materialized on the full basis.
struct DampedForm {
    BasisPtr basis;
    double ell = 0.0;
    Mat kernel; // kernel(chi, xi) = <chi| R^ell phi R^ell |xi>

    DampedForm adjoint() const;
};

// Hilbert-Schmidt inner product of damped kernels.
cd hs_inner(const DampedForm& a, const DampedForm& b);

// ||R^la phi R^la|| operator norm of a dense-form kernel re-damped from ell
// to ell_new (kernel entries rescaled by the diagonal damping ratio).
DampedForm redamp(const DampedForm& f, double ell_new);

double operator_norm(const Mat& m);

} // namespace pflab

#endif
