#ifndef PFLAB_MOMENTUM_GRID_HPP
#define PFLAB_MOMENTUM_GRID_HPP

#include <memory>
#include <vector>

#include "pflab/angular.hpp"
#include "pflab/mode_space.hpp"
#include "pflab/multi_index.hpp"

namespace pflab {

// Discretized single-particle momentum space: geometric radial nodes times
// real spherical-harmonic channels, with midpoint-in-log-p quadrature weights
// so that dilations by powers of the node ratio act as exact permutations.
//
// Mode index = ir * n_channels + channel, ir = 0..n_r-1 (nodes ascending);
// the mode amplitude is the channel coefficient of the wave function at the
// radial node.
class MomentumGrid : public ModeSpace {
public:
    MomentumGrid(int s, double mass, double p_max, int n_r, int l_max);

    int s() const { return s_; }
    double mass() const { return mass_; }
    double p_max() const { return p_max_; }
    int n_r() const { return n_r_; }
    int l_max() const { return ang_->l_max(); }
    double ratio() const { return ratio_; }

    int n_modes() const override { return n_r_ * ang_->n_channels(); }
    double omega_mode(int m) const override { return omega_[mode_node(m)]; }
    double weight_mode(int m) const override { return w_[mode_node(m)]; }

    int mode(int ir, int ch) const { return ir * ang_->n_channels() + ch; }
    int mode_node(int m) const { return m / ang_->n_channels(); }
    int mode_channel(int m) const { return m % ang_->n_channels(); }

    double p(int ir) const { return p_[ir]; }
    double omega_node(int ir) const { return omega_[ir]; }
    double weight_node(int ir) const { return w_[ir]; }

    const AngularBasis& angular() const { return *ang_; }
    std::shared_ptr<const AngularBasis> angular_ptr() const { return ang_; }

private:
    int s_;
    double mass_, p_max_;
    int n_r_;
    double ratio_;
    std::vector<double> p_, omega_, w_;
    std::shared_ptr<const AngularBasis> ang_;
};

using GridPtr = std::shared_ptr<const MomentumGrid>;

GridPtr build_grid(int s, double mass, double p_max, int n_r, int l_max);

// Improper vector g_kappa^{sign} as a genuine grid vector,
//   g = i^{-|kappa|} / (sqrt(2) (2 pi)^{s/2}) * omega^{-sign/2} p^kappa,
// with the angular monomial projected onto channels l <= l_max.
// sign = +1 picks omega^{-1/2}, sign = -1 picks omega^{+1/2}.
SPVector improper_vector(const GridPtr& grid, const MultiIndex& kappa, int sign);

} // namespace pflab

#endif
