#include "pflab/wave_packets.hpp"

#include <cmath>

#include "pflab/errors.hpp"

namespace pflab {

namespace {
constexpr double kPi = 3.14159265358979323846;

const std::vector<double>& gl64_x() {
    static std::vector<double> x, w;
    if (x.empty()) gauss_legendre(64, x, w);
    return x;
}
const std::vector<double>& gl64_w() {
    static std::vector<double> x, w;
    if (w.empty()) gauss_legendre(64, x, w);
    return w;
}

double dfact(int n) { // (n)!! with (-1)!! = 1
    double f = 1.0;
    for (int i = n; i >= 2; i -= 2) f *= i;
    return f;
}
} // namespace

namespace bump {

double radial_moment(int j) {
    // (1/2) B((j+1)/2, 5)
    return 0.5 * std::exp(std::lgamma(0.5 * (j + 1)) + std::lgamma(5.0) -
                          std::lgamma(0.5 * (j + 1) + 5.0));
}

double c_norm() { return 1.0 / (4.0 * kPi * radial_moment(2)); }

double sphere_monomial_integral(const MultiIndex& alpha) {
    for (int i = 0; i < 3; ++i)
        if (alpha.k[i] % 2 != 0) return 0.0;
    double num = dfact(alpha.k[0] - 1) * dfact(alpha.k[1] - 1) * dfact(alpha.k[2] - 1);
    return 4.0 * kPi * num / dfact(alpha.order() + 1);
}

double moment(const MultiIndex& alpha) {
    return c_norm() * sphere_monomial_integral(alpha) * radial_moment(alpha.order() + 2);
}

double hankel(int l, int j, double z) {
    const auto& x = gl64_x();
    const auto& w = gl64_w();
    double acc = 0.0;
    for (size_t q = 0; q < x.size(); ++q) {
        double t = 0.5 * (x[q] + 1.0);
        double om = 1.0 - t * t;
        double pw = om * om;
        pw *= pw; // (1-t^2)^4
        acc += 0.5 * w[q] * std::pow(t, 2 + j) * pw * std::sph_bessel(unsigned(l), z * t);
    }
    return acc;
}

double radial_norm_integral(int l, int j, double r, double mass, int osign) {
    const auto& x = gl64_x();
    const auto& w = gl64_w();
    // dyadic panels; integrand decays like z^-12 (bump has 4 smooth derivatives)
    const double edges[] = {0.0, 2.0, 8.0, 32.0, 128.0, 512.0};
    double acc = 0.0;
    for (int pnl = 0; pnl + 1 < 6; ++pnl) {
        double a = edges[pnl], b = edges[pnl + 1];
        for (size_t q = 0; q < x.size(); ++q) {
            double z = 0.5 * (b - a) * (x[q] + 1.0) + a;
            double p = z / r;
            double om = std::sqrt(p * p + mass * mass);
            double T = hankel(l, j, z);
            double val = z * z * T * T * (osign > 0 ? om : (om > 0 ? 1.0 / om : 0.0));
            acc += 0.5 * (b - a) * w[q] * val;
        }
    }
    return acc;
}

} // namespace bump

LocalizedPair make_local_pair(const GridPtr& grid, double r, const MultiIndex& beta) {
    if (r <= 0.0) throw ConfigError("make_local_pair: radius must be positive");
    if (beta.order() > 2)
        throw ConfigError("make_local_pair: profile order |beta| must be <= 2");

    const auto& ang = grid->angular();
    const int nb = beta.order();
    Eigen::VectorXd chan = ang.monomial_channels(beta);

    LocalizedPair pair;
    pair.grid = grid;
    pair.radius = r;
    pair.profile = beta;
    pair.plus_part = SPVector(grid);
    pair.minus_part = SPVector(grid);

    // u(x) = x^beta g(x/r); momentum rep per channel (l,m):
    //   A_ch(p) = (2 pi)^{-3/2} 4 pi (-i)^l d_ch r^{3+|beta|} c T_{l,|beta|}(p r)
    const double pref = std::pow(2.0 * kPi, -1.5) * 4.0 * kPi *
                        std::pow(r, 3.0 + nb) * bump::c_norm();

    // continuum norms over all channels present in the profile
    double nrm2_plus = 0.0, nrm2_minus = 0.0;
    for (int ch = 0; ch < ang.n_channels(); ++ch) {
        if (chan(ch) == 0.0) continue;
        int l = ang.channel_l(ch);
        double cf = pref * chan(ch);
        double base = cf * cf / (r * r * r); // z-substitution jacobian p^2 dp = z^2 dz / r^3
        nrm2_plus += base * bump::radial_norm_integral(l, nb, r, grid->mass(), -1);
        nrm2_minus += base * bump::radial_norm_integral(l, nb, r, grid->mass(), +1);
    }
    pair.cont_norm_plus = std::sqrt(nrm2_plus);
    pair.cont_norm_minus = std::sqrt(nrm2_minus);

    for (int ir = 0; ir < grid->n_r(); ++ir) {
        double z = grid->p(ir) * r;
        double om = grid->omega_node(ir);
        for (int ch = 0; ch < ang.n_channels(); ++ch) {
            if (chan(ch) == 0.0) continue;
            int l = ang.channel_l(ch);
            static const cd kMinusI[4] = {cd(1, 0), cd(0, -1), cd(-1, 0), cd(0, 1)};
            cd il = kMinusI[l % 4]; // (-i)^l
            cd amp = pref * chan(ch) * il * bump::hankel(l, nb, z);
            int m = grid->mode(ir, ch);
            pair.plus_part[m] = amp / std::sqrt(om) / pair.cont_norm_plus;
            pair.minus_part[m] = amp * std::sqrt(om) / pair.cont_norm_minus;
        }
    }
    return pair;
}

double moment_pairing(const LocalizedPair& pair, const MultiIndex& kappa, int sign) {
    if (pair.grid->l_max() < kappa.order())
        throw ResolutionError("moment_pairing: grid l_max below |kappa|");
    MultiIndex tot(kappa.k[0] + pair.profile.k[0], kappa.k[1] + pair.profile.k[1],
                   kappa.k[2] + pair.profile.k[2]);
    double mom = bump::moment(tot);
    double nu = (sign > 0) ? pair.cont_norm_plus : pair.cont_norm_minus;
    double s = double(pair.grid->s());
    return std::sqrt(2.0) / kappa.factorial() *
           std::pow(pair.radius, s + kappa.order() + pair.profile.order()) * mom / nu;
}

SPVector pair_generator(const LocalizedPair& pair, double t) {
    SPVector f(pair.grid);
    f.amps() = t * (pair.plus_part.amps() + cd(0.0, 1.0) * pair.minus_part.amps());
    return f;
}

} // namespace pflab
