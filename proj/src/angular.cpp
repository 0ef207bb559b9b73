#include "pflab/angular.hpp"

#include <cmath>

#include "pflab/errors.hpp"

namespace pflab {

namespace {
constexpr double kPi = 3.14159265358979323846;

// Associated Legendre P_l^m(x) without Condon-Shortley phase, m >= 0.
double assoc_legendre_nocs(int l, int m, double x) {
    // P_m^m = (2m-1)!! (1-x^2)^{m/2}
    double pmm = 1.0;
    if (m > 0) {
        double somx2 = std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x)));
        double fact = 1.0;
        for (int i = 1; i <= m; ++i) {
            pmm *= fact * somx2;
            fact += 2.0;
        }
    }
    if (l == m) return pmm;
    double pmmp1 = x * (2.0 * m + 1.0) * pmm;
    if (l == m + 1) return pmmp1;
    double pll = 0.0;
    for (int ll = m + 2; ll <= l; ++ll) {
        pll = (x * (2.0 * ll - 1.0) * pmmp1 - (ll + m - 1.0) * pmm) / (ll - m);
        pmm = pmmp1;
        pmmp1 = pll;
    }
    return pll;
}

double sh_norm(int l, int m) {
    // sqrt((2l+1)/(4 pi) * (l-m)!/(l+m)!)
    double ratio = 1.0;
    for (int i = l - m + 1; i <= l + m; ++i) ratio *= i;
    return std::sqrt((2.0 * l + 1.0) / (4.0 * kPi) / ratio);
}
} // namespace

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

double AngularBasis::eval(int l, int m, const Eigen::Vector3d& n) {
    double ct = n.z();
    double phi = std::atan2(n.y(), n.x());
    int ma = std::abs(m);
    double base = sh_norm(l, ma) * assoc_legendre_nocs(l, ma, ct);
    if (m == 0) return base;
    const double s2 = std::sqrt(2.0);
    if (m > 0) return s2 * base * std::cos(ma * phi);
    return s2 * base * std::sin(ma * phi);
}

AngularBasis::AngularBasis(int l_max) : l_max_(l_max) {
    if (l_max < 0) throw ConfigError("AngularBasis: l_max must be >= 0");
    for (int l = 0; l <= l_max; ++l)
        for (int m = -l; m <= l; ++m) {
            ch_l_.push_back(l);
            ch_m_.push_back(m);
        }

    // product quadrature exact well beyond the degrees needed (degree ~31)
    const int n_theta = 16;
    const int n_phi = 33;
    std::vector<double> ct, cw;
    gauss_legendre(n_theta, ct, cw);
    for (int i = 0; i < n_theta; ++i) {
        double st = std::sqrt(std::max(0.0, 1.0 - ct[i] * ct[i]));
        for (int j = 0; j < n_phi; ++j) {
            double phi = 2.0 * kPi * j / n_phi;
            qnode_.emplace_back(st * std::cos(phi), st * std::sin(phi), ct[i]);
            qweight_.push_back(cw[i] * 2.0 * kPi / n_phi);
        }
    }

    const int nch = n_channels();
    const int nq = static_cast<int>(qnode_.size());
    ytab_.resize(nch, nq);
    for (int ch = 0; ch < nch; ++ch)
        for (int q = 0; q < nq; ++q)
            ytab_(ch, q) = eval(ch_l_[ch], ch_m_[ch], qnode_[q]);

    for (int j = 0; j < 3; ++j) {
        xmat_[j].setZero(nch, nch);
        for (int ch = 0; ch < nch; ++ch)
            for (int chp = 0; chp < nch; ++chp) {
                double acc = 0.0;
                for (int q = 0; q < nq; ++q)
                    acc += qweight_[q] * qnode_[q](j) * ytab_(ch, q) * ytab_(chp, q);
                xmat_[j](chp, ch) = acc;
            }
    }
}

Eigen::VectorXd AngularBasis::project(
    const std::function<double(const Eigen::Vector3d&)>& f, int /*deg*/) const {
    const int nch = n_channels();
    Eigen::VectorXd c = Eigen::VectorXd::Zero(nch);
    for (size_t q = 0; q < qnode_.size(); ++q) {
        double fv = qweight_[q] * f(qnode_[q]);
        for (int ch = 0; ch < nch; ++ch) c(ch) += fv * ytab_(ch, q);
    }
    return c;
}

Eigen::VectorXd AngularBasis::monomial_channels(const MultiIndex& kappa) const {
    Eigen::VectorXd c = project(
        [&kappa](const Eigen::Vector3d& n) {
            double v = 1.0;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < kappa.k[i]; ++j) v *= n(i);
            return v;
        },
        kappa.order());
    // parity-forbidden channels carry only quadrature dust; scrub it
    for (int ch = 0; ch < c.size(); ++ch)
        if (std::abs(c(ch)) < 1e-12) c(ch) = 0.0;
    return c;
}

Eigen::MatrixXd AngularBasis::rotation_block(int l, const Eigen::Matrix3d& R) const {
    if (l > l_max_) throw ResolutionError("rotation_block: l exceeds l_max");
    const int d = 2 * l + 1;
    Eigen::MatrixXd D(d, d);
    Eigen::Matrix3d Rinv = R.transpose();
    for (int m = -l; m <= l; ++m)
        for (int mp = -l; mp <= l; ++mp) {
            double acc = 0.0;
            for (size_t q = 0; q < qnode_.size(); ++q)
                acc += qweight_[q] * eval(l, m, Rinv * qnode_[q]) *
                       eval(l, mp, qnode_[q]);
            D(mp + l, m + l) = acc;
        }
    return D;
}

} // namespace pflab
