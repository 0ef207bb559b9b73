#include "pflab/fock_ops.hpp"

#include <cmath>

#include "pflab/errors.hpp"

namespace pflab {

Mat FockOperator::dense() const {
    const std::size_t n = basis_->size();
    Mat m(n, n);
    Vec e = Vec::Zero(n);
    for (std::size_t j = 0; j < n; ++j) {
        e(j) = 1.0;
        m.col(j) = apply(e);
        e(j) = 0.0;
    }
    return m;
}

Eigen::VectorXcd ortho_coords(const SPVector& f) { return f.ortho(); }

void apply_annihilator(const FockBasis& basis, const Eigen::VectorXcd& f_ortho,
                       const Vec& in, Vec& out) {
    std::vector<int> buf;
    for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        cd c = in(idx);
        if (c == cd(0.0, 0.0)) continue;
        auto modes = basis.state_modes(idx);
        std::size_t i = 0;
        while (i < modes.size()) {
            std::size_t j = i;
            while (j < modes.size() && modes[j] == modes[i]) ++j;
            int mult = static_cast<int>(j - i);
            cd amp = std::conj(f_ortho(modes[i])) * std::sqrt(double(mult));
            if (amp != cd(0.0, 0.0)) {
                buf.assign(modes.begin(), modes.end());
                buf.erase(buf.begin() + i);
                auto tgt = basis.index_of(buf);
                if (tgt) out(*tgt) += amp * c;
            }
            i = j;
        }
    }
}

void apply_creator(const FockBasis& basis, const Eigen::VectorXcd& f_ortho,
                   const Vec& in, Vec& out) {
    const int M = static_cast<int>(f_ortho.size());
    std::vector<int> buf;
    for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        cd c = in(idx);
        if (c == cd(0.0, 0.0)) continue;
        auto modes = basis.state_modes(idx);
        if (static_cast<int>(modes.size()) >= basis.n_max()) continue; // dropped
        for (int m = 0; m < M; ++m) {
            if (f_ortho(m) == cd(0.0, 0.0)) continue;
            buf.assign(modes.begin(), modes.end());
            buf.insert(std::upper_bound(buf.begin(), buf.end(), m), m);
            auto tgt = basis.index_of(buf);
            if (!tgt) continue; // e_cut drop
            int mult = 0;
            for (int mm : buf)
                if (mm == m) ++mult;
            out(*tgt) += f_ortho(m) * std::sqrt(double(mult)) * c;
        }
    }
}

namespace {
void check_grid(const SPVector& f, const BasisPtr& basis) {
    if (f.space().get() != basis->space().get())
        throw ConfigError("operator: single-particle vector lives on a different grid");
}
} // namespace

FockOperator annihilator(const SPVector& f, BasisPtr basis) {
    check_grid(f, basis);
    Eigen::VectorXcd fo = f.ortho();
    const FockBasis* b = basis.get();
    return FockOperator(
        basis, [b, fo](const Vec& in, Vec& out) { apply_annihilator(*b, fo, in, out); });
}

FockOperator creator(const SPVector& f, BasisPtr basis) {
    check_grid(f, basis);
    Eigen::VectorXcd fo = f.ortho();
    const FockBasis* b = basis.get();
    return FockOperator(
        basis, [b, fo](const Vec& in, Vec& out) { apply_creator(*b, fo, in, out); });
}

FockOperator weyl(const SPVector& f, BasisPtr basis) {
    check_grid(f, basis);
    Eigen::VectorXcd fo = f.ortho();
    double pref = std::exp(-0.5 * fo.squaredNorm());
    const FockBasis* b = basis.get();
    int nmax = basis->n_max();
    return FockOperator(basis, [b, fo, pref, nmax](const Vec& in, Vec& out) {
        // e^{i a(f)}: terminating lowering series
        Vec acc = in, term = in;
        for (int k = 1; k <= nmax; ++k) {
            Vec next = Vec::Zero(in.size());
            apply_annihilator(*b, fo, term, next);
            term = (cd(0.0, 1.0) / double(k)) * next;
            acc += term;
            if (term.norm() == 0.0) break;
        }
        // e^{i a*(f)}: truncates at n_max
        Vec acc2 = acc;
        term = acc;
        for (int k = 1; k <= nmax; ++k) {
            Vec next = Vec::Zero(in.size());
            apply_creator(*b, fo, term, next);
            term = (cd(0.0, 1.0) / double(k)) * next;
            acc2 += term;
        }
        out += pref * acc2;
    });
}

cd weyl_element(const FockBasis& basis, std::size_t chi, std::size_t xi,
                const Eigen::VectorXcd& f_ortho, double f_norm2) {
    auto cm = basis.state_modes(chi);
    auto xm = basis.state_modes(xi);

    // per-mode factor: <m| e^{i a*} e^{i a} |n> with per-mode amplitude z
    // S = sum_k (i z)^{m-n+k} (i conj z)^k sqrt(m! n!) / ((m-n+k)! k! (n-k)!)
    auto cpow = [](cd base, int e) {
        cd r = 1.0;
        for (int i = 0; i < e; ++i) r *= base;
        return r;
    };
    cd result = std::exp(-0.5 * f_norm2);
    std::size_t ic = 0, ix = 0;
    static const double fact[] = {1, 1, 2, 6, 24, 120, 720, 5040};
    while (ic < cm.size() || ix < xm.size()) {
        int mode;
        int m = 0, n = 0;
        if (ic < cm.size() && (ix >= xm.size() || cm[ic] <= xm[ix]))
            mode = cm[ic];
        else
            mode = xm[ix];
        while (ic < cm.size() && cm[ic] == mode) { ++m; ++ic; }
        while (ix < xm.size() && xm[ix] == mode) { ++n; ++ix; }
        cd z = f_ortho(mode);
        cd S = 0.0;
        for (int k = std::max(0, n - m); k <= n; ++k) {
            int j = m - n + k;
            cd num = cpow(cd(0.0, 1.0) * z, j) * cpow(cd(0.0, 1.0) * std::conj(z), k);
            S += num * std::sqrt(fact[m] * fact[n]) / (fact[j] * fact[k] * fact[n - k]);
        }
        result *= S;
    }
    return result;
}

Vec damping_diagonal(const FockBasis& basis, double ell) {
    Vec d(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) d(i) = basis.damp(i, ell);
    return d;
}

DampedForm DampedForm::adjoint() const {
    DampedForm out;
    out.basis = basis;
    out.ell = ell;
    out.kernel = kernel.adjoint();
    return out;
}

cd hs_inner(const DampedForm& a, const DampedForm& b) {
    return (a.kernel.adjoint() * b.kernel).trace();
}

DampedForm redamp(const DampedForm& f, double ell_new) {
    DampedForm out;
    out.basis = f.basis;
    out.ell = ell_new;
    out.kernel = f.kernel;
    const auto& b = *f.basis;
    for (std::size_t i = 0; i < b.size(); ++i) {
        double ri = std::pow(1.0 + b.energy(i), f.ell - ell_new);
        out.kernel.row(i) *= ri;
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
        double rj = std::pow(1.0 + b.energy(j), f.ell - ell_new);
        out.kernel.col(j) *= rj;
    }
    return out;
}

double operator_norm(const Mat& m) {
    if (m.rows() == 0) return 0.0;
    Eigen::JacobiSVD<Mat> svd(m);
    return svd.singularValues()(0);
}

} // namespace pflab
