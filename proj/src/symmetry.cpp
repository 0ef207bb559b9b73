#include "pflab/symmetry.hpp"

#include <cmath>

#include "pflab/errors.hpp"

namespace pflab {

namespace {
// p_j multiplication matrix on grid modes (node-diagonal, channel mixing)
Mat momentum_matrix(const GridPtr& grid, int j) {
    const auto& ang = grid->angular();
    const Mat X = ang.x_matrix(j).cast<cd>();
    const int nch = ang.n_channels();
    Mat M = Mat::Zero(grid->n_modes(), grid->n_modes());
    for (int ir = 0; ir < grid->n_r(); ++ir)
        M.block(ir * nch, ir * nch, nch, nch) = grid->p(ir) * X;
    return M;
}
} // namespace

SPVector SymmetryAction::apply_sp(const SPVector& v) const {
    SPVector out(v.space());
    out.amps() = u * v.amps();
    return out;
}

WickForm SymmetryAction::apply_wick(const WickForm& f) const {
    WickForm base = antiunitary ? f.adjoint() : f;
    WickForm out;
    out.space = base.space;
    for (const auto& t : base.terms) {
        WickTerm nt;
        nt.coef = t.coef;
        for (const auto& uvec : t.creators) nt.creators.push_back(apply_sp(uvec));
        for (const auto& vvec : t.annihilators)
            nt.annihilators.push_back(apply_sp(vvec));
        out.terms.push_back(std::move(nt));
    }
    return out;
}

Eigen::Matrix3d axis_rotation(int axis, double angle) {
    Eigen::Matrix3d R = Eigen::Matrix3d::Identity();
    int a = (axis + 1) % 3, b = (axis + 2) % 3;
    double c = std::cos(angle), s = std::sin(angle);
    R(a, a) = c;
    R(b, b) = c;
    R(a, b) = -s;
    R(b, a) = s;
    return R;
}

SymmetryAction rotation(const GridPtr& grid, const Eigen::Matrix3d& R) {
    SymmetryAction act;
    act.grid = grid;
    act.name = "rotation";
    act.locality_factor = 1.0;
    const auto& ang = grid->angular();
    const int nch = ang.n_channels();
    act.u = Mat::Zero(grid->n_modes(), grid->n_modes());
    for (int l = 0; l <= grid->l_max(); ++l) {
        Eigen::MatrixXd D = ang.rotation_block(l, R);
        for (int ir = 0; ir < grid->n_r(); ++ir) {
            int base = ir * nch + AngularBasis::channel_index(l, -l);
            act.u.block(base, base, 2 * l + 1, 2 * l + 1) = D.cast<cd>();
        }
    }
    return act;
}

SymmetryAction conjugation(const GridPtr& grid) {
    SymmetryAction act;
    act.grid = grid;
    act.name = "conjugation";
    act.antiunitary = true;
    // on Weyl generators the adjoint sends f to -f
    act.u = -Mat::Identity(grid->n_modes(), grid->n_modes());
    return act;
}

SymmetryAction dilation(const GridPtr& grid, int octaves) {
    if (grid->mass() != 0.0)
        throw ConfigError("dilation: requires a massless grid");
    if (octaves == 0) {
        SymmetryAction act;
        act.grid = grid;
        act.name = "dilation(1)";
        act.u = Mat::Identity(grid->n_modes(), grid->n_modes());
        return act;
    }
    SymmetryAction act;
    act.grid = grid;
    act.name = "dilation(2^" + std::to_string(octaves) + ")";
    // x -> lambda x with lambda = ratio^{octaves}: momentum nodes shift by
    // -octaves, amplitudes scale by lambda^{s/2}; shifted-out nodes drop.
    act.locality_factor = std::pow(grid->ratio(), double(octaves));
    const int nch = grid->angular().n_channels();
    const double amp = std::pow(act.locality_factor, 1.5); // lambda^{s/2}, s=3
    act.u = Mat::Zero(grid->n_modes(), grid->n_modes());
    for (int ir = 0; ir < grid->n_r(); ++ir) {
        int src = ir + octaves; // (u f)(p_ir) = lambda^{3/2} f(lambda p_ir)
        if (src < 0 || src >= grid->n_r()) continue;
        for (int ch = 0; ch < nch; ++ch)
            act.u(grid->mode(ir, ch), grid->mode(src, ch)) = amp;
    }
    return act;
}

SymmetryAction mode_shift_up(const GridPtr& grid) {
    SymmetryAction act;
    act.grid = grid;
    act.name = "mode_shift_up";
    const int nch = grid->angular().n_channels();
    act.u = Mat::Zero(grid->n_modes(), grid->n_modes());
    for (int ir = 0; ir + 1 < grid->n_r(); ++ir)
        for (int ch = 0; ch < nch; ++ch) {
            // keep the weighted inner product: amplitude ratio sqrt(w_src/w_dst)
            double scale = std::sqrt(grid->weight_node(ir) / grid->weight_node(ir + 1));
            act.u(grid->mode(ir + 1, ch), grid->mode(ir, ch)) = scale;
        }
    return act;
}

MicroscopicReport check_microscopic(const SymmetryAction& alpha,
                                    const PairingTensor& tensor, double ell,
                                    double tol) {
    MicroscopicReport rep;
    rep.ell = ell;
    const auto& basis = tensor.probes.basis;

    // condition (1): second-quantized Gamma(u) maps an n-particle state over
    // modes {m_i} into tensor products of u-columns; bound the damped norm by
    // scanning basis states with the per-mode energy reachability of u.
    // For a column m of u, the reachable energies are those of modes m' with
    // u(m',m) != 0; the worst-case mapped energy of a state is the sum of the
    // per-mode maxima.
    const auto& space = *basis->space();
    const int M = alpha.u.rows();
    std::vector<double> max_target_energy(M, 0.0);
    for (int m = 0; m < M; ++m) {
        double e = 0.0;
        bool any = false;
        for (int mp = 0; mp < M; ++mp)
            if (std::abs(alpha.u(mp, m)) > 1e-14) {
                e = std::max(e, space.omega_mode(mp));
                any = true;
            }
        max_target_energy[m] = any ? e : 0.0;
    }
    double best_ellp = -1.0;
    for (double ellp = ell; ellp <= ell + 4.0 + 1e-9; ellp += 0.5) {
        double worst = 0.0;
        for (std::size_t i = 0; i < basis->size(); ++i) {
            double etgt = 0.0;
            for (int m : basis->state_modes(i)) etgt += max_target_energy[m];
            double ratio = std::pow(1.0 + etgt, ell) * std::pow(1.0 + basis->energy(i), -ellp);
            worst = std::max(worst, ratio);
        }
        if (worst <= 10.0) {
            best_ellp = ellp;
            rep.cond1_norm = worst;
            break;
        }
    }
    rep.cond1_pass = best_ellp >= 0.0;
    rep.ell_prime = best_ellp;

    // condition (2): frames of alpha(W(f)) against the span of the family at
    // radius c*r, for schedule pairs where the target radius exists
    for (std::size_t k = 0; k < tensor.radii.size(); ++k) {
        double r = tensor.radii[k];
        if (r >= alpha.validity_radius) continue;
        double target = alpha.locality_factor * r;
        int kt = -1;
        for (std::size_t k2 = 0; k2 < tensor.radii.size(); ++k2)
            if (std::abs(tensor.radii[k2] - target) < 1e-12 * target) kt = int(k2);
        if (kt < 0) continue;
        Mat span = tensor.values[kt];
        for (const auto& m : tensor.families[k].members) {
            SPVector uf = alpha.apply_sp(m.f);
            Vec v = tensor.probes.frame_weyl(uf);
            // distance to the column span
            Eigen::JacobiSVD<Mat> svd(span, Eigen::ComputeThinU | Eigen::ComputeThinV);
            Vec proj = span * svd.solve(v);
            double resid = (v - proj).norm() / std::max(v.norm(), 1e-300);
            rep.cond2_max_residual = std::max(rep.cond2_max_residual, resid);
            ++rep.cond2_pairs_checked;
        }
    }
    rep.cond2_pass = rep.cond2_pairs_checked > 0 && rep.cond2_max_residual <= tol;
    if (rep.cond2_pairs_checked == 0)
        rep.note = "no schedule radius pair matches the locality factor";
    return rep;
}

double verify_invariance_family(const SymmetryAction& alpha,
                                const PairingTensor& tensor, std::size_t k_radius,
                                const Mat& field_coeffs) {
    const auto& fam = tensor.families[k_radius];
    Mat orig = tensor.values[k_radius] * field_coeffs;
    Mat rotated(orig.rows(), orig.cols());
    // frames of the transformed member operators
    Mat rot_cols(orig.rows(), fam.members.size());
    for (std::size_t b = 0; b < fam.members.size(); ++b) {
        SPVector uf = alpha.apply_sp(fam.members[b].f);
        rot_cols.col(b) = tensor.probes.frame_weyl(uf);
    }
    // antiunitary actions conjugate the combination coefficients
    rotated = alpha.antiunitary ? Mat(rot_cols * field_coeffs.conjugate())
                                : Mat(rot_cols * field_coeffs);
    return match_spaces(rotated, orig);
}

double verify_invariance_forms(const SymmetryAction& alpha, const ProbeSet& probes,
                               const std::vector<WickForm>& forms) {
    Mat orig(probes.n_probes(), forms.size());
    Mat rot(probes.n_probes(), forms.size());
    for (std::size_t j = 0; j < forms.size(); ++j) {
        orig.col(j) = probes.frame_wick(forms[j]);
        rot.col(j) = probes.frame_wick(alpha.apply_wick(forms[j]));
    }
    return match_spaces(rot, orig);
}

WickForm derivative(const WickForm& phi, int mu, const GridPtr& grid) {
    if (mu < 0 || mu > 3) throw ConfigError("derivative: direction must be 0..3");
    if (mu >= 1 && grid->l_max() < 1)
        throw ResolutionError("derivative: spatial derivative needs l_max >= 1");

    Mat M;
    if (mu == 0) {
        M = Mat::Zero(grid->n_modes(), grid->n_modes());
        for (int m = 0; m < grid->n_modes(); ++m) M(m, m) = grid->omega_mode(m);
    } else {
        M = momentum_matrix(grid, mu - 1);
    }

    WickForm out;
    out.space = phi.space;
    for (const auto& t : phi.terms) {
        for (std::size_t s = 0; s < t.creators.size(); ++s) {
            WickTerm nt = t;
            nt.creators[s].amps() = cd(0.0, 1.0) * (M * t.creators[s].amps());
            out.terms.push_back(std::move(nt));
        }
        for (std::size_t s = 0; s < t.annihilators.size(); ++s) {
            WickTerm nt = t;
            nt.annihilators[s].amps() = cd(0.0, 1.0) * (M * t.annihilators[s].amps());
            out.terms.push_back(std::move(nt));
        }
    }
    return out;
}

double field_equation_residual(const GridPtr& grid) {
    if (grid->l_max() < 2)
        throw ResolutionError("field_equation_residual: needs l_max >= 2");
    SPVector v = improper_vector(grid, MultiIndex(0, 0, 0), +1);

    Mat H = Mat::Zero(grid->n_modes(), grid->n_modes());
    for (int m = 0; m < grid->n_modes(); ++m) H(m, m) = grid->omega_mode(m);

    Eigen::VectorXcd lhs = (cd(0, 1) * H) * ((cd(0, 1) * H) * v.amps());
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(v.size());
    for (int j = 0; j < 3; ++j) {
        Mat Mj = momentum_matrix(grid, j);
        rhs += (cd(0, 1) * Mj) * ((cd(0, 1) * Mj) * v.amps());
    }
    rhs -= grid->mass() * grid->mass() * v.amps();

    SPVector diff(v.space(), lhs - rhs), scale(v.space(), lhs);
    return diff.norm() / scale.norm();
}

} // namespace pflab
