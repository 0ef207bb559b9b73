#include "pflab/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "pflab/errors.hpp"

namespace pflab {

Functional& Functional::add(std::size_t chi, std::size_t xi, cd k) {
    for (auto& e : entries_)
        if (e.chi == chi && e.xi == xi) {
            e.k += k;
            return *this;
        }
    entries_.push_back({chi, xi, k});
    return *this;
}

Functional& Functional::scale(cd c) {
    for (auto& e : entries_) e.k *= c;
    return *this;
}

Functional& Functional::accumulate(const Functional& o, cd c) {
    for (const auto& e : o.entries_) add(e.chi, e.xi, c * e.k);
    return *this;
}

Functional Functional::adjoint_functional() const {
    // sigma*(A) = conj(sigma(A*)) => kernel K*_{chi,xi} = conj(K_{xi,chi})
    Functional out(basis_, ell_);
    for (const auto& e : entries_) out.add(e.xi, e.chi, std::conj(e.k));
    return out;
}

cd Functional::eval_identity() const {
    cd acc = 0.0;
    for (const auto& e : entries_)
        if (e.chi == e.xi) acc += e.k;
    return acc;
}

cd Functional::eval_weyl(const SPVector& f) const {
    Eigen::VectorXcd fo = f.ortho();
    double n2 = fo.squaredNorm();
    cd acc = 0.0;
    for (const auto& e : entries_)
        acc += e.k * weyl_element(*basis_, e.chi, e.xi, fo, n2);
    return acc;
}

cd Functional::eval_wick(const WickForm& form) const {
    cd acc = 0.0;
    for (const auto& e : entries_) acc += e.k * wick_element(*basis_, e.chi, e.xi, form);
    return acc;
}

cd Functional::eval_op(const FockOperator& op) const {
    if (op.basis().get() != basis_.get())
        throw ConfigError("Functional::eval_op: basis mismatch");
    // group entries by xi, one applicator pass per distinct column
    std::map<std::size_t, std::vector<const Entry*>> byxi;
    for (const auto& e : entries_) byxi[e.xi].push_back(&e);
    cd acc = 0.0;
    Vec unit = Vec::Zero(basis_->size());
    for (const auto& [xi, list] : byxi) {
        unit(xi) = 1.0;
        Vec col = op.apply(unit);
        unit(xi) = 0.0;
        for (const Entry* e : list) acc += e->k * col(e->chi);
    }
    return acc;
}

cd Functional::eval_dense(const Mat& a) const {
    cd acc = 0.0;
    for (const auto& e : entries_) acc += e.k * a(e.chi, e.xi);
    return acc;
}

double damped_norm(const Functional& sigma, double ell) {
    if (sigma.entries().empty()) return 0.0;
    const auto& basis = *sigma.basis();
    std::vector<std::size_t> rows, cols; // rows: xi, cols: chi
    for (const auto& e : sigma.entries()) {
        rows.push_back(e.xi);
        cols.push_back(e.chi);
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    auto rindex = [&](std::size_t s) {
        return std::lower_bound(rows.begin(), rows.end(), s) - rows.begin();
    };
    auto cindex = [&](std::size_t s) {
        return std::lower_bound(cols.begin(), cols.end(), s) - cols.begin();
    };
    Mat m = Mat::Zero(rows.size(), cols.size());
    for (const auto& e : sigma.entries())
        m(rindex(e.xi), cindex(e.chi)) +=
            e.k * std::pow(1.0 + basis.energy(e.xi), ell) *
            std::pow(1.0 + basis.energy(e.chi), ell);
    Eigen::JacobiSVD<Mat> svd(m);
    return svd.singularValues().sum();
}

Functional vacuum_functional(const BasisPtr& basis) {
    Functional s(basis, 0.0);
    s.add(basis->vacuum(), basis->vacuum(), 1.0);
    return s;
}

Functional rank_one_damped(const BasisPtr& basis, std::size_t chi, std::size_t xi,
                           double ell) {
    Functional s(basis, ell);
    s.add(chi, xi, basis->damp(chi, ell) * basis->damp(xi, ell));
    return s;
}

namespace {
// index of the one-particle state for a mode, or npos when absent (e_cut)
std::size_t one_particle_index(const FockBasis& basis, int mode) {
    int m[1] = {mode};
    auto idx = basis.index_of(std::span<const int>(m, 1));
    return idx ? *idx : static_cast<std::size_t>(-1);
}
} // namespace

Functional sigma_commutator(const SPVector& b, const SPVector& bp,
                            const BasisPtr& basis) {
    if (basis->n_max() < 2)
        throw ConfigError("sigma_commutator: needs n_max >= 2 headroom");
    Eigen::VectorXcd bo = b.ortho(), bpo = bp.ortho();
    Functional s(basis, 0.0);
    s.add(basis->vacuum(), basis->vacuum(), bo.dot(bpo)); // <b|b'>
    const int M = static_cast<int>(bo.size());
    for (int i = 0; i < M; ++i) {
        if (bo(i) == cd(0.0, 0.0)) continue;
        std::size_t chi = one_particle_index(*basis, i);
        if (chi == static_cast<std::size_t>(-1)) continue;
        for (int j = 0; j < M; ++j) {
            if (bpo(j) == cd(0.0, 0.0)) continue;
            std::size_t xi = one_particle_index(*basis, j);
            if (xi == static_cast<std::size_t>(-1)) continue;
            s.add(chi, xi, -std::conj(bo(i)) * bpo(j));
        }
    }
    return s;
}

Functional sigma_q(const BasisPtr& basis, const SPVector& h) {
    if (basis->n_max() < 2) throw ConfigError("sigma_q: needs n_max >= 2");
    Eigen::VectorXcd ho = h.ortho();
    const std::size_t n = basis->size();
    const std::size_t vac = basis->vacuum();

    Vec v1 = Vec::Zero(n), unit = Vec::Zero(n);
    unit(vac) = 1.0;
    apply_creator(*basis, ho, unit, v1);
    Vec v2 = Vec::Zero(n);
    apply_creator(*basis, ho, v1, v2);
    v2 /= std::sqrt(2.0); // |h (x) h>

    std::vector<std::size_t> s1, s2;
    for (std::size_t i = 0; i < n; ++i) {
        if (v1(i) != cd(0.0, 0.0)) s1.push_back(i);
        if (v2(i) != cd(0.0, 0.0)) s2.push_back(i);
    }
    Functional s(basis, 0.0);
    const double c2 = 1.0 / (4.0 * std::sqrt(2.0));
    for (std::size_t i : s2) {
        s.add(i, vac, c2 * std::conj(v2(i))); // (h x h| . |Omega)
        s.add(vac, i, c2 * v2(i));            // (Omega| . |h x h)
    }
    for (std::size_t i : s1)
        for (std::size_t j : s1) s.add(i, j, 0.25 * std::conj(v1(i)) * v1(j));
    s.add(vac, vac, -0.25 * ho.squaredNorm());
    return s;
}

double LocalFamily::member_moment(const FamilyMember& m, const MultiIndex& kappa,
                                  int sign) const {
    double acc = 0.0;
    for (const auto& [beta, t] : m.parts) {
        for (const auto& pair : pairs)
            if (pair.profile == beta) {
                acc += t * moment_pairing(pair, kappa, sign);
                break;
            }
    }
    return acc;
}

LocalFamily make_local_family(const GridPtr& grid, double r, bool cross_pairs) {
    LocalFamily fam;
    fam.radius = r;

    int max_order = std::min(2, grid->l_max() + 0); // profiles need their channels
    std::vector<MultiIndex> betas = multi_indices_up_to(std::min(2, max_order), 3);
    // profiles with |beta| > l_max have angular content outside the grid; the
    // l <= l_max part still localizes correctly, keep only realizable ones
    for (const auto& beta : betas) fam.pairs.push_back(make_local_pair(grid, r, beta));

    const double tgrid[4] = {1.0, -1.0, 0.5, -0.5};
    for (std::size_t ip = 0; ip < fam.pairs.size(); ++ip) {
        for (double t : tgrid) {
            FamilyMember m;
            m.parts = {{fam.pairs[ip].profile, t}};
            m.f = pair_generator(fam.pairs[ip], t);
            m.label = "b" + fam.pairs[ip].profile.to_string() + "_t" +
                      std::to_string(t);
            fam.members.push_back(std::move(m));
        }
    }
    if (cross_pairs && grid->l_max() >= 1) {
        const MultiIndex zero(0, 0, 0);
        const double tpat[4][2] = {{1, 1}, {1, -1}, {1, 0.5}, {0.5, 1}};
        for (int j = 0; j < 3; ++j) {
            MultiIndex ej(j == 0, j == 1, j == 2);
            for (const auto& tp : tpat) {
                FamilyMember m;
                m.parts = {{zero, tp[0]}, {ej, tp[1]}};
                SPVector f0, fj;
                for (const auto& pair : fam.pairs) {
                    if (pair.profile == zero) f0 = pair_generator(pair, tp[0]);
                    if (pair.profile == ej) fj = pair_generator(pair, tp[1]);
                }
                m.f = f0 + fj;
                m.label = "b" + zero.to_string() + "+b" + ej.to_string() + "_t" +
                          std::to_string(tp[0]) + "_" + std::to_string(tp[1]);
                fam.members.push_back(std::move(m));
            }
        }
    }
    return fam;
}

SeminormEstimate local_seminorm(const Functional& sigma, const LocalFamily& fam,
                                std::size_t dense_cap) {
    if (fam.members.empty()) throw ConfigError("local_seminorm: empty family");
    const auto& basis = sigma.basis();
    const std::size_t B = fam.members.size();

    Eigen::VectorXcd vals(B);
    for (std::size_t b = 0; b < B; ++b) vals(b) = sigma.eval_weyl(fam.members[b].f);

    SeminormEstimate est;
    est.family_size = B;
    est.witness.assign(B, cd(0.0, 0.0));
    for (std::size_t b = 0; b < B; ++b) {
        double v = std::abs(vals(b)) / fam.members[b].norm_bound;
        if (v > est.value) {
            est.value = v;
            std::fill(est.witness.begin(), est.witness.end(), cd(0.0, 0.0));
            est.witness[b] = 1.0 / fam.members[b].norm_bound;
        }
    }

    if (basis->size() <= dense_cap) {
        // refined direction: maximize |<vals, c>| over the span, normalized by
        // the true operator norm of the combination
        std::vector<Mat> dense;
        dense.reserve(B);
        for (std::size_t b = 0; b < B; ++b)
            dense.push_back(weyl(fam.members[b].f, basis).dense());
        Mat G(B, B);
        for (std::size_t a = 0; a < B; ++a)
            for (std::size_t b = 0; b < B; ++b)
                G(a, b) = (dense[a].adjoint() * dense[b]).trace();
        Eigen::VectorXcd c =
            (G + 1e-12 * G.norm() * Mat::Identity(B, B)).ldlt().solve(vals);
        Mat A = Mat::Zero(basis->size(), basis->size());
        for (std::size_t b = 0; b < B; ++b) A += c(b) * dense[b];
        double nrm = operator_norm(A);
        if (nrm > 0.0) {
            cd val = 0.0;
            for (std::size_t b = 0; b < B; ++b) val += c(b) * vals(b);
            double v = std::abs(val) / nrm;
            if (v > est.value) {
                est.value = v;
                for (std::size_t b = 0; b < B; ++b) est.witness[b] = c(b) / nrm;
            }
        }
    }
    return est;
}

SigmaMuResult sigma_mu(const MuIndex& mu, const std::vector<LocalFamily>& families,
                       const BasisPtr& basis) {
    SigmaMuResult res;
    res.mu = mu;
    if (mu.empty()) {
        res.sigma = vacuum_functional(basis);
        res.residual = 0.0;
        // residual of the vacuum functional against e^{-|f|^2/2} on held-out
        for (const auto& fam : families)
            for (std::size_t b = 1; b < fam.members.size(); b += 2) {
                Eigen::VectorXcd fo = fam.members[b].f.ortho();
                double tgt = std::exp(-0.5 * fo.squaredNorm());
                res.residual = std::max(
                    res.residual,
                    std::abs(res.sigma.eval_weyl(fam.members[b].f) - tgt));
                res.target_scale = std::max(res.target_scale, std::abs(tgt));
            }
        return res;
    }
    if (mu.total_order() > basis->n_max())
        throw ConfigError("sigma_mu: |mu| exceeds n_max headroom");
    if (families.size() < 2)
        throw ConfigError("sigma_mu: needs a family ensemble over radii");

    // radii used in the solve: the smallest few (sharpest Taylor structure);
    // held-out: odd-indexed members at the same radii
    std::vector<const LocalFamily*> fams;
    for (const auto& f : families) fams.push_back(&f);
    std::sort(fams.begin(), fams.end(),
              [](const LocalFamily* a, const LocalFamily* b) {
                  return a->radius < b->radius;
              });
    const std::size_t n_solve = std::min<std::size_t>(3, fams.size());

    const int M = fams[0]->members[0].f.size();
    const SpacePtr space = fams[0]->members[0].f.space();

    // slot-wise least squares: find b with i<b|f_m> = c_slot(f_m) on train set
    for (const auto& entry : mu.entries) {
        for (int copy = 0; copy < entry.count; ++copy) {
            std::vector<Eigen::VectorXcd> rows;
            std::vector<cd> rhs;
            for (std::size_t k = 0; k < n_solve; ++k) {
                const LocalFamily& fam = *fams[k];
                for (std::size_t b = 0; b < fam.members.size(); b += 2) {
                    const auto& m = fam.members[b];
                    // i <b|f> = i sum_mode w conj(b) f : unknowns x = conj(ortho b)
                    Eigen::VectorXcd row = cd(0.0, 1.0) * m.f.ortho();
                    rows.push_back(row);
                    rhs.push_back(fam.member_moment(m, entry.kappa, entry.sign));
                }
            }
            Mat Asys(rows.size(), M);
            Eigen::VectorXcd bsys(rows.size());
            for (std::size_t i = 0; i < rows.size(); ++i) {
                Asys.row(i) = rows[i].transpose();
                bsys(i) = rhs[i];
            }
            // minimum-norm least squares
            Eigen::CompleteOrthogonalDecomposition<Mat> cod(Asys);
            cod.setThreshold(1e-10);
            Eigen::VectorXcd x = cod.solve(bsys);
            // x = conj(ortho coords of b): convert back to node values
            SPVector bvec(space);
            for (int m = 0; m < M; ++m)
                bvec[m] = std::conj(x(m)) / space->sqrtw_mode(m);
            res.slot_vectors.push_back(std::move(bvec));
        }
    }

    // tau(A) = < prod a*(b_i) Omega | A | Omega >, sigma = (tau + tau*)/2
    const std::size_t n = basis->size();
    Vec cur = Vec::Zero(n);
    cur(basis->vacuum()) = 1.0;
    for (const auto& bvec : res.slot_vectors) {
        Vec next = Vec::Zero(n);
        apply_creator(*basis, bvec.ortho(), cur, next);
        cur = next;
    }
    Functional tau(basis, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        if (cur(i) != cd(0.0, 0.0)) tau.add(i, basis->vacuum(), std::conj(cur(i)));
    Functional sig = tau;
    sig.scale(0.5);
    sig.accumulate(tau.adjoint_functional(), 0.5);
    res.sigma = sig;

    // residual on held-out members (odd indices) at the solve radii
    for (std::size_t k = 0; k < n_solve; ++k) {
        const LocalFamily& fam = *fams[k];
        for (std::size_t b = 1; b < fam.members.size(); b += 2) {
            const auto& m = fam.members[b];
            Eigen::VectorXcd fo = m.f.ortho();
            double pref = std::exp(-0.5 * fo.squaredNorm());
            cd tgt = pref;
            for (const auto& entry : mu.entries)
                for (int c = 0; c < entry.count; ++c)
                    tgt *= fam.member_moment(m, entry.kappa, entry.sign);
            cd got = res.sigma.eval_weyl(m.f);
            res.residual = std::max(res.residual, std::abs(got - tgt));
            res.target_scale = std::max(res.target_scale, std::abs(tgt));
        }
    }
    return res;
}

} // namespace pflab
