#ifndef PFLAB_ANGULAR_HPP
#define PFLAB_ANGULAR_HPP

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <memory>
#include <vector>

#include "pflab/multi_index.hpp"

namespace pflab {

// Real orthonormal spherical harmonics on S^2 up to a fixed degree, together
// with a product quadrature that is exact for the polynomial degrees used by
// the grid machinery (channel decompositions, rotation blocks, recurrences).
//
// Channel ordering: (l, m) with l ascending, m = -l..l.
class AngularBasis {
public:
    explicit AngularBasis(int l_max);

    int l_max() const { return l_max_; }
    int n_channels() const { return (l_max_ + 1) * (l_max_ + 1); }

    static int channel_index(int l, int m) { return l * l + l + m; }
    int channel_l(int ch) const { return ch_l_[ch]; }
    int channel_m(int ch) const { return ch_m_[ch]; }

    // Y_{lm}(n) for a unit vector n.
    static double eval(int l, int m, const Eigen::Vector3d& n);

    // Coefficients c_ch with  f(n) = sum_ch c_ch Y_ch(n)  for f a polynomial
    // of degree <= deg in the direction components (exact projection).
    Eigen::VectorXd project(const std::function<double(const Eigen::Vector3d&)>& f,
                            int deg) const;

    // Channel coefficients of the direction monomial n^kappa (degree |kappa|).
    // Only channels with l <= l_max are returned; higher harmonics of the
    // monomial are outside the basis and dropped by the caller's contract.
    Eigen::VectorXd monomial_channels(const MultiIndex& kappa) const;

    // (2l+1) x (2l+1) block D with  Y_{lm}(R^{-1} n) = sum_{m'} D(m',m) Y_{lm'}(n).
    Eigen::MatrixXd rotation_block(int l, const Eigen::Matrix3d& R) const;

    // Matrices X_j (j = 0,1,2) with  n_j Y_ch(n) = sum_{ch'} X_j(ch',ch) Y_ch'(n)
    // restricted to channels with l <= l_max (the l = l_max+1 part is cut off).
    const Eigen::MatrixXd& x_matrix(int j) const { return xmat_[j]; }

private:
    int l_max_;
    std::vector<int> ch_l_, ch_m_;
    // product quadrature nodes on S^2 (unit vectors) and weights
    std::vector<Eigen::Vector3d> qnode_;
    std::vector<double> qweight_;
    Eigen::MatrixXd ytab_; // [n_channels x n_quad] Y values at quadrature nodes
    std::array<Eigen::MatrixXd, 3> xmat_;
};

// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

} // namespace pflab

#endif
