#include "pflab/momentum_grid.hpp"

#include <cmath>

#include "pflab/errors.hpp"

namespace pflab {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kNodeRatio = 2.0; // geometric node spacing, one octave
} // namespace

MomentumGrid::MomentumGrid(int s, double mass, double p_max, int n_r, int l_max)
    : s_(s), mass_(mass), p_max_(p_max), n_r_(n_r), ratio_(kNodeRatio) {
    if (s < 1) throw ConfigError("grid: spatial dimension must be >= 1");
    if (s != 3)
        throw ConfigError("grid: angular discretization is implemented for s = 3");
    if (n_r < 2) throw ConfigError("grid: n_r must be >= 2");
    if (l_max < 0) throw ConfigError("grid: l_max must be >= 0");
    if (p_max <= 0.0) throw ConfigError("grid: p_max must be positive");
    if (mass < 0.0) throw ConfigError("grid: mass must be nonnegative");

    ang_ = std::make_shared<AngularBasis>(l_max);
    const double h = std::log(ratio_);
    for (int i = 0; i < n_r; ++i) {
        double pi = p_max * std::pow(ratio_, double(i - (n_r - 1)));
        p_.push_back(pi);
        omega_.push_back(std::sqrt(pi * pi + mass * mass));
        // midpoint rule in log p for int p^{s-1} dp = int p^s dlog p
        w_.push_back(h * std::pow(pi, double(s_)));
    }
}

GridPtr build_grid(int s, double mass, double p_max, int n_r, int l_max) {
    return std::make_shared<MomentumGrid>(s, mass, p_max, n_r, l_max);
}

SPVector improper_vector(const GridPtr& grid, const MultiIndex& kappa, int sign) {
    const int n = kappa.order();
    if (grid->l_max() < n)
        throw ResolutionError("improper_vector: grid l_max below |kappa|");
    const auto& ang = grid->angular();
    Eigen::VectorXd chan = ang.monomial_channels(kappa);

    static const cd kInvI[4] = {cd(1, 0), cd(0, -1), cd(-1, 0), cd(0, 1)};
    cd iphase = kInvI[n % 4]; // i^{-|kappa|}
    double cnorm = 1.0 / (std::sqrt(2.0) * std::pow(2.0 * kPi, grid->s() / 2.0));

    SPVector v(grid);
    for (int ir = 0; ir < grid->n_r(); ++ir) {
        double radial = std::pow(grid->p(ir), double(n)) *
                        std::pow(grid->omega_node(ir), -0.5 * sign);
        for (int ch = 0; ch < ang.n_channels(); ++ch) {
            if (chan(ch) == 0.0) continue;
            v[grid->mode(ir, ch)] = iphase * cnorm * radial * chan(ch);
        }
    }
    return v;
}

} // namespace pflab
