#include "pflab/extraction.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pflab/errors.hpp"

namespace pflab {

namespace {
constexpr double kInf = 1e300;
constexpr double kPi = 3.14159265358979323846;

Mat orthonormal_columns(const Mat& X, double tol = 1e-12) {
    if (X.cols() == 0) return X;
    Eigen::JacobiSVD<Mat> svd(X, Eigen::ComputeThinU);
    const auto& s = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < s.size(); ++i)
        if (s(i) > tol * s(0)) ++rank;
    return svd.matrixU().leftCols(rank);
}

// canonical orientation: first significant entry made positive real
void orient_columns(Mat& X) {
    for (Eigen::Index c = 0; c < X.cols(); ++c) {
        double mx = X.col(c).cwiseAbs().maxCoeff();
        if (mx == 0.0) continue;
        for (Eigen::Index r = 0; r < X.rows(); ++r) {
            if (std::abs(X(r, c)) > 1e-8 * mx) {
                cd ph = X(r, c) / std::abs(X(r, c));
                X.col(c) *= std::conj(ph);
                break;
            }
        }
    }
}
} // namespace

FitResult fit_exponent(const std::vector<std::pair<double, double>>& samples) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& [r, v] : samples) {
        if (!(r > 0.0)) throw NumericsError("fit_exponent: nonpositive radius");
        if (!(v > 0.0))
            throw NumericsError("fit_exponent: nonpositive value (undefined fit)");
        pts.emplace_back(std::log(r), std::log(v));
    }
    if (pts.size() < 3)
        throw NumericsError("fit_exponent: need at least 3 samples");
    double mx = 0, my = 0;
    for (auto& [x, y] : pts) {
        mx += x;
        my += y;
    }
    mx /= pts.size();
    my /= pts.size();
    double sxx = 0, sxy = 0;
    for (auto& [x, y] : pts) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    FitResult f;
    f.slope = sxy / sxx;
    f.n_points = static_cast<int>(pts.size());
    double rss = 0;
    for (auto& [x, y] : pts) {
        double e = y - my - f.slope * (x - mx);
        rss += e * e;
    }
    f.residual = std::sqrt(rss / pts.size());
    return f;
}

double match_spaces(const Mat& X, const Mat& Y) {
    Mat Qx = orthonormal_columns(X), Qy = orthonormal_columns(Y);
    if (Qx.cols() == 0 || Qy.cols() == 0)
        throw NumericsError("match_spaces: degenerate span");
    Eigen::JacobiSVD<Mat> svd(Qx.adjoint() * Qy);
    int d = static_cast<int>(std::min(Qx.cols(), Qy.cols()));
    double smin = svd.singularValues()(d - 1);
    smin = std::clamp(smin, -1.0, 1.0);
    return std::acos(smin) * 180.0 / kPi;
}

double angle_to_span(const Vec& v, const Mat& X) {
    Mat m(v.size(), 1);
    m.col(0) = v;
    return match_spaces(m, X);
}

namespace {
struct SlopeSample {
    double theta = kInf;
    double residual = 0.0;
    bool resolved = false;
};

SlopeSample fit_direction(const std::vector<double>& radii,
                          const std::vector<double>& vals, double floor_abs) {
    SlopeSample out;
    std::vector<std::pair<double, double>> pts, tail;
    for (std::size_t k = 0; k < radii.size(); ++k)
        if (vals[k] > floor_abs) pts.emplace_back(radii[k], vals[k]);
    if (pts.size() < 3) return out; // decays below floor: beyond resolution
    std::size_t half = pts.size() - (pts.size() / 2 + 1);
    for (std::size_t k = half; k < pts.size(); ++k) tail.push_back(pts[k]);
    FitResult full = fit_exponent(pts);
    out.theta = full.slope;
    out.residual = full.residual;
    out.resolved = true;
    if (tail.size() >= 3) {
        FitResult tf = fit_exponent(tail);
        // crossings at large radii corrupt the full-range fit; prefer the tail
        if (std::abs(tf.slope - full.slope) > 0.125) {
            out.theta = tf.slope;
            out.residual = tf.residual;
        }
    }
    return out;
}
} // namespace

ExtractionResult extract(const PairingTensor& tensor, const ExtractOptions& opt) {
    const std::size_t K = tensor.values.size();
    if (K < 4) throw ConfigError("extract: at least 4 radii required");
    const auto& radii = tensor.radii;
    const Eigen::Index B = tensor.values[0].cols();

    ExtractionResult ex;
    ex.eps_gap = opt.eps_gap;
    ex.floor_tol = opt.floor_tol;

    // global singular floor
    double s_scale = 0.0;
    std::vector<Eigen::JacobiSVD<Mat>> svds;
    svds.reserve(K);
    for (std::size_t k = 0; k < K; ++k) {
        svds.emplace_back(tensor.values[k],
                          Eigen::ComputeThinU | Eigen::ComputeThinV);
        s_scale = std::max(s_scale, svds[k].singularValues()(0));
    }
    const double floor_abs = opt.floor_tol * s_scale;

    // initial per-index slopes on the raw tensor decide cluster sizes
    std::vector<SlopeSample> raw(B);
    for (Eigen::Index i = 0; i < B; ++i) {
        std::vector<double> vals(K);
        for (std::size_t k = 0; k < K; ++k) vals[k] = svds[k].singularValues()(i);
        raw[i] = fit_direction(radii, vals, floor_abs);
    }
    // indices sorted by slope; unresolved tail excluded
    std::vector<int> order;
    for (int i = 0; i < B; ++i)
        if (raw[i].resolved) order.push_back(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return raw[a].theta < raw[b].theta; });

    // cluster sizes from slope gaps
    std::vector<int> sizes;
    {
        int start = 0;
        for (std::size_t i = 1; i <= order.size(); ++i) {
            bool brk = (i == order.size()) ||
                       (raw[order[i]].theta - raw[order[i - 1]].theta >
                        2.0 * opt.eps_gap);
            if (brk) {
                sizes.push_back(static_cast<int>(i) - start);
                start = static_cast<int>(i);
            }
        }
    }

    // peel cluster by cluster with per-radius projections
    std::vector<Mat> resid;
    for (std::size_t k = 0; k < K; ++k) resid.push_back(tensor.values[k]);
    ex.resolved_theta_max = kInf;

    int direction_id = 0;
    for (int d : sizes) {
        // re-measure on the current residual
        std::vector<Eigen::JacobiSVD<Mat>> rs;
        rs.reserve(K);
        for (std::size_t k = 0; k < K; ++k)
            rs.emplace_back(resid[k], Eigen::ComputeThinU | Eigen::ComputeThinV);

        Cluster c;
        c.dim = d;
        double tmin = kInf, tmax = -kInf, tsum = 0.0;
        int nres = 0;
        for (int i = 0; i < d; ++i) {
            std::vector<double> vals(K);
            for (std::size_t k = 0; k < K; ++k) vals[k] = rs[k].singularValues()(i);
            SlopeSample s = fit_direction(radii, vals, floor_abs);
            c.member_slopes.push_back(s.theta);
            c.member_residuals.push_back(s.residual);
            if (s.resolved) {
                tmin = std::min(tmin, s.theta);
                tmax = std::max(tmax, s.theta);
                tsum += s.theta;
                ++nres;
            }
        }
        if (nres == 0) break; // residual fell below the floor
        c.theta = tsum / nres;
        c.theta_min = tmin;
        c.theta_max = tmax;

        if (c.theta > opt.gamma_max + 2.0 * opt.eps_gap) {
            ex.resolved_theta_max = c.theta;
            break; // beyond requested range; leave unpeeled
        }

        // germ basis at the smallest radius; cross-radius tracking confidence
        c.germ_basis = rs[K - 1].matrixU().leftCols(d);
        for (std::size_t k = 0; k + 1 < K; ++k) {
            double ang = match_spaces(rs[k].matrixU().leftCols(d),
                                      rs[k + 1].matrixU().leftCols(d));
            c.track_angle_deg = std::max(c.track_angle_deg, ang);
        }
        orient_columns(c.germ_basis);

        // operator-side coefficients: least squares against the original
        // tensor at the smallest radius (oblique reconstruction)
        {
            Eigen::JacobiSVD<Mat> tmin_svd(tensor.values[K - 1],
                                           Eigen::ComputeThinU | Eigen::ComputeThinV);
            c.field_coeffs = tmin_svd.solve(c.germ_basis);
            c.field_frames = tensor.values[K - 1] * c.field_coeffs;
            orient_columns(c.field_frames);
        }

        for (int i = 0; i < d; ++i) {
            ScalingRow row;
            row.direction_id = direction_id++;
            row.theta_hat = c.member_slopes[i];
            row.residual = c.member_residuals[i];
            row.cluster = static_cast<int>(ex.clusters.size());
            ex.report.push_back(row);
        }

        // project the cluster out of every radius
        for (std::size_t k = 0; k < K; ++k) {
            Mat P = rs[k].matrixU().leftCols(d);
            resid[k] -= P * (P.adjoint() * resid[k]);
        }
        ex.clusters.push_back(std::move(c));
    }
    return ex;
}

int ExtractionResult::n_gamma(double gamma) const {
    double cut = gamma + eps_gap;
    if (cut >= resolved_theta_max)
        throw GapError("n_gamma: requested gamma beyond resolved exponent range\n" +
                       cluster_table());
    int n = 0;
    for (const auto& c : clusters) {
        if (c.theta_min <= cut && c.theta_max > cut)
            throw GapError("n_gamma: exponent cluster straddles the cut at gamma=" +
                           std::to_string(gamma) + "\n" + cluster_table());
        if (c.theta <= cut) n += c.dim;
    }
    return n;
}

std::pair<double, double> ExtractionResult::gap_at(double gamma) const {
    double cut = gamma + eps_gap;
    double lo = 0.0, hi = kInf;
    for (const auto& c : clusters) {
        if (c.theta <= cut) lo = std::max(lo, c.theta);
        if (c.theta > cut) hi = std::min(hi, c.theta);
    }
    return {lo, hi};
}

Mat ExtractionResult::field_space(double gamma) const {
    double cut = gamma + eps_gap;
    std::vector<const Mat*> blocks;
    int cols = 0;
    for (const auto& c : clusters)
        if (c.theta <= cut) {
            blocks.push_back(&c.field_frames);
            cols += c.dim;
        }
    if (blocks.empty()) throw GapError("field_space: no clusters at this gamma");
    Mat out(blocks[0]->rows(), cols);
    int at = 0;
    for (const Mat* b : blocks) {
        out.middleCols(at, b->cols()) = *b;
        at += static_cast<int>(b->cols());
    }
    return out;
}

Mat ExtractionResult::germ_space(double gamma) const {
    double cut = gamma + eps_gap;
    std::vector<const Mat*> blocks;
    int cols = 0;
    for (const auto& c : clusters)
        if (c.theta <= cut) {
            blocks.push_back(&c.germ_basis);
            cols += c.dim;
        }
    if (blocks.empty()) throw GapError("germ_space: no clusters at this gamma");
    Mat out(blocks[0]->rows(), cols);
    int at = 0;
    for (const Mat* b : blocks) {
        out.middleCols(at, b->cols()) = *b;
        at += static_cast<int>(b->cols());
    }
    return out;
}

std::vector<int> ExtractionResult::cluster_dims(double gamma) const {
    std::vector<int> dims;
    for (const auto& c : clusters)
        if (c.theta <= gamma + eps_gap) dims.push_back(c.dim);
    return dims;
}

std::string ExtractionResult::cluster_table() const {
    std::ostringstream os;
    os << "cluster  dim  theta  [min,max]  track_deg\n";
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        const auto& c = clusters[i];
        os << i << "  " << c.dim << "  " << c.theta << "  [" << c.theta_min << ","
           << c.theta_max << "]  " << c.track_angle_deg << "\n";
    }
    return os.str();
}

std::vector<std::pair<double, double>> residual_curve(const PairingTensor& tensor,
                                                      const FiniteRankMap& psi) {
    std::vector<std::pair<double, double>> curve;
    for (std::size_t k = 0; k < tensor.values.size(); ++k) {
        Mat M = tensor.values[k];
        const auto& fam = tensor.families[k];
        for (const auto& term : psi) {
            Eigen::RowVectorXcd row(fam.members.size());
            for (std::size_t b = 0; b < fam.members.size(); ++b)
                row(b) = term.sigma.eval_weyl(fam.members[b].f);
            M -= term.form_frame * row;
        }
        Eigen::JacobiSVD<Mat> svd(M);
        curve.emplace_back(tensor.radii[k], svd.singularValues()(0));
    }
    return curve;
}

DeltaResult delta_gamma(const std::vector<std::pair<double, double>>& curve,
                        double gamma, double eps_gap) {
    DeltaResult res;
    double vmax = 0.0;
    for (const auto& [r, v] : curve) vmax = std::max(vmax, v);
    if (vmax <= 1e-13) {
        res.gamma_star = kInf;
        res.delta = 0;
        return res;
    }
    // asymptotic tail: smallest half of the schedule (plus one)
    std::vector<std::pair<double, double>> tail;
    std::size_t n = curve.size();
    for (std::size_t k = n - (n / 2 + 1); k < n; ++k)
        if (curve[k].second > 1e-15 * vmax) tail.push_back(curve[k]);
    if (tail.size() < 3) {
        res.gamma_star = kInf;
        res.delta = 0;
        return res;
    }
    res.fit = fit_exponent(tail);
    res.gamma_star = res.fit.slope;
    res.delta = (res.gamma_star > gamma + eps_gap) ? 0 : 1;
    return res;
}

double delta_hat_xi(const PairingTensor& tensor, const FiniteRankMap& psi) {
    auto curve = residual_curve(tensor, psi);
    DeltaResult d = delta_gamma(curve, 0.0);
    if (d.gamma_star >= kInf) return 0.0;
    return std::exp(-d.gamma_star);
}

double delta_hat(const PairingTensor& tensor, const FiniteRankMap& psi,
                 const FiniteRankMap& psi_prime) {
    // difference map: Xi cancels, rows subtract
    std::vector<std::pair<double, double>> curve;
    for (std::size_t k = 0; k < tensor.values.size(); ++k) {
        const auto& fam = tensor.families[k];
        Mat M = Mat::Zero(tensor.values[k].rows(), tensor.values[k].cols());
        auto addterms = [&](const FiniteRankMap& map, double sgn) {
            for (const auto& term : map) {
                Eigen::RowVectorXcd row(fam.members.size());
                for (std::size_t b = 0; b < fam.members.size(); ++b)
                    row(b) = term.sigma.eval_weyl(fam.members[b].f);
                M += sgn * (term.form_frame * row);
            }
        };
        addterms(psi, 1.0);
        addterms(psi_prime, -1.0);
        Eigen::JacobiSVD<Mat> svd(M);
        curve.emplace_back(tensor.radii[k], svd.singularValues()(0));
    }
    DeltaResult d = delta_gamma(curve, 0.0);
    if (d.gamma_star >= kInf) return 0.0;
    return std::exp(-d.gamma_star);
}

std::vector<ReconstructResult> reconstruct_many(
    const std::vector<ReconstructTarget>& targets, const PairingTensor& tensor,
    double gamma, const ExtractionResult& ex, double ell, double membership_deg,
    std::size_t dense_cap) {
    const auto& basis = tensor.probes.basis;
    if (basis->size() > dense_cap)
        throw ResourceError("reconstruct: basis too large for dense error norms");
    const std::size_t K = tensor.values.size();

    Mat fs = ex.field_space(gamma);
    for (const auto& t : targets) {
        double ang = angle_to_span(t.frame, fs);
        if (ang > membership_deg)
            throw NumericsError(
                "reconstruct: form not in the extracted field space (" +
                std::to_string(ang) + " deg)");
    }

    Vec dvec = damping_diagonal(*basis, ell);

    // dense family operators, one pass per radius
    std::vector<std::vector<Mat>> fam_dense(K);
    for (std::size_t k = 0; k < K; ++k)
        for (const auto& m : tensor.families[k].members)
            fam_dense[k].push_back(weyl(m.f, basis).dense());

    std::vector<Eigen::JacobiSVD<Mat>> svds;
    svds.reserve(K);
    for (std::size_t k = 0; k < K; ++k)
        svds.emplace_back(tensor.values[k],
                          Eigen::ComputeThinU | Eigen::ComputeThinV);

    std::vector<ReconstructResult> results;
    for (const auto& tgt : targets) {
        Mat phi_dense;
        if (tgt.form)
            phi_dense = wick_operator(*tgt.form, basis).dense();
        else if (tgt.dense)
            phi_dense = *tgt.dense;
        else
            throw ConfigError("reconstruct: target needs a form or dense kernel");

        ReconstructResult out;
        for (std::size_t k = 0; k < K; ++k) {
            Eigen::VectorXcd c = svds[k].solve(tgt.frame);
            Mat A = Mat::Zero(basis->size(), basis->size());
            for (std::size_t b = 0; b < fam_dense[k].size(); ++b)
                A += c(b) * fam_dense[k][b];
            Mat diff = phi_dense - A;
            for (Eigen::Index i = 0; i < diff.rows(); ++i)
                for (Eigen::Index j = 0; j < diff.cols(); ++j)
                    diff(i, j) *= dvec(i) * dvec(j);
            ReconstructRow row;
            row.radius = tensor.radii[k];
            row.error = operator_norm(diff);
            row.norm = operator_norm(A);
            out.rows.push_back(row);
            out.coeffs.push_back(c);
        }

        std::vector<std::pair<double, double>> epts, npts;
        double emax = 0.0;
        for (const auto& r : out.rows) emax = std::max(emax, r.error);
        for (const auto& r : out.rows) {
            if (r.error > std::max(1e-14, 1e-10 * emax))
                epts.emplace_back(r.radius, r.error);
            if (r.norm > 0.0) npts.emplace_back(r.radius, r.norm);
        }
        if (epts.size() >= 3)
            out.error_fit = fit_exponent(epts);
        else {
            out.error_fit.slope = kInf; // exact reconstruction at every radius
            out.error_fit.n_points = static_cast<int>(epts.size());
        }
        if (npts.size() >= 3) out.norm_fit = fit_exponent(npts);
        results.push_back(std::move(out));
    }
    return results;
}

ReconstructResult reconstruct(const WickForm& phi, const PairingTensor& tensor,
                              double gamma, const ExtractionResult& ex, double ell,
                              double membership_deg, std::size_t dense_cap) {
    ReconstructTarget t;
    t.form = phi;
    t.frame = tensor.probes.frame_wick(phi);
    return reconstruct_many({t}, tensor, gamma, ex, ell, membership_deg,
                            dense_cap)[0];
}

Lemma35Result lemma35(const GridPtr& grid, const BasisPtr& basis,
                      const RadiusSchedule& schedule, double ell) {
    Lemma35Result out;
    const std::size_t n = basis->size();
    if (n > 4096) throw ResourceError("lemma35: basis too large for dense spectra");

    Vec d4 = damping_diagonal(*basis, 4.0 * ell);
    Vec d41 = damping_diagonal(*basis, 4.0 * ell + 1.0);

    SPVector g0 = improper_vector(grid, MultiIndex(0, 0, 0), +1);
    Mat phi0 = wick_operator(field_form(g0), basis).dense();

    for (double r : schedule.radii()) {
        SmearedVectorSpec spec;
        spec.radius = r;
        SPVector w = smeared_vector(grid, spec);
        Mat phir = wick_operator(field_form(w), basis).dense();
        phir = 0.5 * (phir + phir.adjoint().eval()); // hermitian by construction

        Eigen::SelfAdjointEigenSolver<Mat> eig(phir);
        const auto& lam = eig.eigenvalues();
        const Mat& Q = eig.eigenvectors();

        double eps = std::pow(r, 4.0 * ell + 1.0);
        // spectral difference  eps^{-1} sin(eps x) - x, series for small eps x
        Eigen::VectorXd dspec(lam.size());
        for (Eigen::Index i = 0; i < lam.size(); ++i) {
            double x = lam(i), ex = eps * x;
            if (std::abs(ex) < 1e-4)
                dspec(i) = -ex * ex * x / 6.0 * (1.0 - ex * ex / 20.0);
            else
                dspec(i) = std::sin(ex) / eps - x;
        }
        Mat diff = Q * dspec.asDiagonal() * Q.adjoint(); // A_{r,eps} - phi(f_r)

        Lemma35Row row;
        row.radius = r;
        row.eps = eps;
        Mat m = diff;
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) *= d4(i) * d4(j);
        row.err_damped = operator_norm(m);

        Mat bb = phir.adjoint() * phir;
        for (Eigen::Index j = 0; j < bb.cols(); ++j) bb.col(j) *= d4(j);
        row.bound = eps * operator_norm(bb);

        Mat total = (phi0 - phir) - diff; // phi - A_r
        for (Eigen::Index i = 0; i < total.rows(); ++i)
            for (Eigen::Index j = 0; j < total.cols(); ++j)
                total(i, j) *= d41(i) * d41(j);
        row.err_total = operator_norm(total);
        out.rows.push_back(row);
    }

    std::vector<std::pair<double, double>> pts;
    for (const auto& row : out.rows)
        if (row.err_total > 0.0) pts.emplace_back(row.radius, row.err_total);
    if (pts.size() >= 3) out.total_fit = fit_exponent(pts);
    return out;
}

StabilityReport stability_check(const PairingTensor& tensor, double gamma,
                                const ExtractOptions& opt,
                                double angle_threshold_deg) {
    if (tensor.radii.size() < 8)
        throw ConfigError("stability_check: at least 8 radii required");
    StabilityReport rep;

    ExtractionResult full;
    try {
        full = extract(tensor, opt);
        (void)full.n_gamma(gamma);
    } catch (const GapError& e) {
        rep.unstable = true;
        rep.detail = std::string("full extraction gap error: ") + e.what();
        return rep;
    }

    for (int offset = 0; offset < 2; ++offset) {
        PairingTensor sub;
        sub.schedule = tensor.schedule;
        sub.probes = tensor.probes;
        sub.config_digest = tensor.config_digest;
        for (std::size_t k = offset; k < tensor.radii.size(); k += 2) {
            sub.radii.push_back(tensor.radii[k]);
            sub.families.push_back(tensor.families[k]);
            sub.values.push_back(tensor.values[k]);
        }
        try {
            ExtractionResult exs = extract(sub, opt);
            double ang = match_spaces(exs.field_space(gamma), full.field_space(gamma));
            rep.max_angle_deg = std::max(rep.max_angle_deg, ang);
            if (exs.n_gamma(gamma) != full.n_gamma(gamma)) {
                rep.unstable = true;
                rep.detail += "rank differs on stride-2 subsequence; ";
            }
        } catch (const GapError& e) {
            rep.unstable = true;
            rep.detail += std::string("subsequence gap error: ") + e.what() + "; ";
        } catch (const NumericsError& e) {
            rep.unstable = true;
            rep.detail += std::string("subsequence fit failure: ") + e.what() + "; ";
        }
    }
    if (rep.max_angle_deg > angle_threshold_deg) {
        rep.unstable = true;
        rep.detail += "subspace drift above threshold; ";
    }
    return rep;
}

std::string to_string(ShortDistanceClass c) {
    switch (c) {
        case ShortDistanceClass::RegularPointlike: return "RegularPointlike";
        case ShortDistanceClass::DegenerateBounded: return "DegenerateBounded";
        case ShortDistanceClass::NonRegular: return "NonRegular";
        default: return "Inconclusive";
    }
}

ClassifyResult classify_extraction(const ExtractionResult& ex,
                                   const std::vector<double>& gamma_grid) {
    ClassifyResult res;
    if (gamma_grid.size() < 2) {
        res.evidence = "gamma grid too coarse";
        return res;
    }
    for (double g : gamma_grid) {
        try {
            res.n_of_gamma.emplace_back(g, ex.n_gamma(g));
        } catch (const GapError& e) {
            res.verdict = ShortDistanceClass::NonRegular;
            res.evidence = std::string("gap error at gamma=") + std::to_string(g) +
                           ": rank not finite/separable";
            return res;
        }
    }
    int n0 = res.n_of_gamma.front().second;
    int n1 = res.n_of_gamma.back().second;
    bool all_one = true;
    for (auto& [g, n] : res.n_of_gamma) all_one = all_one && (n == 1);
    if (all_one) {
        res.verdict = ShortDistanceClass::DegenerateBounded;
        res.evidence = "N_gamma = 1 throughout";
    } else if (n1 > n0) {
        res.verdict = ShortDistanceClass::RegularPointlike;
        res.evidence = "N_gamma finite and growing";
    } else {
        res.verdict = ShortDistanceClass::Inconclusive;
        res.evidence = "no growth visible on the gamma grid";
    }
    return res;
}

ClassifyResult classify_family(const std::vector<std::pair<double, int>>& n1_of_k) {
    ClassifyResult res;
    res.n_of_gamma = n1_of_k;
    if (n1_of_k.size() < 3) {
        res.evidence = "need at least 3 family points";
        return res;
    }
    bool increasing = true;
    for (std::size_t i = 1; i < n1_of_k.size(); ++i)
        increasing = increasing && (n1_of_k[i].second > n1_of_k[i - 1].second);
    if (increasing) {
        res.verdict = ShortDistanceClass::NonRegular;
        res.evidence = "N_1(K) grows without bound along the family";
    } else {
        res.verdict = ShortDistanceClass::Inconclusive;
        res.evidence = "no unbounded trend detected";
    }
    return res;
}

} // namespace pflab
