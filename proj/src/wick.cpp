#include "pflab/wick.hpp"

#include <cmath>
#include <map>

#include "pflab/errors.hpp"
#include "pflab/wave_packets.hpp"

namespace pflab {

namespace {
constexpr double kPi = 3.14159265358979323846;

cd ipow(int n) { // i^n for n >= 0
    static const cd tab[4] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};
    return tab[n % 4];
}

double fact(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}
} // namespace

WickForm WickForm::adjoint() const {
    WickForm out;
    out.space = space;
    for (const auto& t : terms) {
        WickTerm a;
        a.coef = std::conj(t.coef);
        a.creators = t.annihilators;
        a.annihilators = t.creators;
        out.terms.push_back(std::move(a));
    }
    return out;
}

WickForm wick_monomial(const MuIndex& mu, const GridPtr& grid) {
    for (const auto& e : mu.entries)
        if (grid->l_max() < e.kappa.order())
            throw ResolutionError("wick_monomial: grid l_max below |kappa| in mu");

    WickForm form;
    form.space = grid;
    const int ne = static_cast<int>(mu.entries.size());

    // cache the g vectors
    std::vector<SPVector> g(ne);
    for (int i = 0; i < ne; ++i)
        g[i] = improper_vector(grid, mu.entries[i].kappa, mu.entries[i].sign);

    // enumerate creator/annihilator splits m_e + n_e = count_e
    std::vector<int> m(ne, 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == ne) {
            WickTerm t;
            int phase = 0;
            double denom = 1.0;
            for (int i = 0; i < ne; ++i) {
                int mi = m[i], ni = mu.entries[i].count - m[i];
                denom *= fact(mi) * fact(ni);
                if (mu.entries[i].sign > 0)
                    phase += mi + ni;
                else
                    phase += 2 * mi;
                for (int c = 0; c < mi; ++c) t.creators.push_back(g[i]);
                for (int c = 0; c < ni; ++c) t.annihilators.push_back(g[i]);
            }
            t.coef = ipow(phase) / denom;
            form.terms.push_back(std::move(t));
            return;
        }
        for (int mi = 0; mi <= mu.entries[pos].count; ++mi) {
            m[pos] = mi;
            rec(pos + 1);
        }
    };
    rec(0);
    if (mu.empty()) {
        WickTerm unit;
        form.terms = {unit};
    }
    return form;
}

WickForm field_form(const SPVector& w) {
    WickForm form;
    form.space = w.space();
    WickTerm cr, an;
    cr.creators.push_back(w);
    an.annihilators.push_back(w);
    form.terms = {cr, an};
    return form;
}

namespace {
using SmallVec = std::map<std::vector<int>, cd>;

// apply a(v) to a small state expansion (mode lists sorted)
SmallVec lower(const Eigen::VectorXcd& v_ortho, const SmallVec& in) {
    SmallVec out;
    for (const auto& [modes, c] : in) {
        size_t i = 0;
        while (i < modes.size()) {
            size_t j = i;
            while (j < modes.size() && modes[j] == modes[i]) ++j;
            int mult = static_cast<int>(j - i);
            cd amp = std::conj(v_ortho(modes[i])) * std::sqrt(double(mult)) * c;
            if (amp != cd(0.0, 0.0)) {
                std::vector<int> rest(modes);
                rest.erase(rest.begin() + i);
                out[rest] += amp;
            }
            i = j;
        }
    }
    return out;
}
} // namespace

cd wick_element(const FockBasis& basis, std::size_t chi, std::size_t xi,
                const WickForm& form) {
    cd total = 0.0;
    auto cm = basis.state_modes(chi);
    auto xm = basis.state_modes(xi);
    for (const auto& t : form.terms) {
        if (static_cast<int>(xm.size()) - static_cast<int>(t.annihilators.size()) !=
            static_cast<int>(cm.size()) - static_cast<int>(t.creators.size()))
            continue;
        SmallVec left, right;
        left[std::vector<int>(cm.begin(), cm.end())] = 1.0;
        right[std::vector<int>(xm.begin(), xm.end())] = 1.0;
        for (const auto& u : t.creators) {
            left = lower(u.ortho(), left);
            if (left.empty()) break;
        }
        if (left.empty() && !t.creators.empty()) continue;
        for (const auto& v : t.annihilators) {
            right = lower(v.ortho(), right);
            if (right.empty()) break;
        }
        cd acc = 0.0;
        for (const auto& [modes, cl] : left) {
            auto it = right.find(modes);
            if (it != right.end()) acc += std::conj(cl) * it->second;
        }
        total += t.coef * acc;
    }
    return total;
}

FockOperator wick_operator(const WickForm& form, BasisPtr basis) {
    struct Prepared {
        cd coef;
        std::vector<Eigen::VectorXcd> creators, annihilators;
    };
    auto prep = std::make_shared<std::vector<Prepared>>();
    for (const auto& t : form.terms) {
        Prepared p;
        p.coef = t.coef;
        for (const auto& u : t.creators) p.creators.push_back(u.ortho());
        for (const auto& v : t.annihilators) p.annihilators.push_back(v.ortho());
        prep->push_back(std::move(p));
    }
    const FockBasis* b = basis.get();
    return FockOperator(basis, [b, prep](const Vec& in, Vec& out) {
        for (const auto& t : *prep) {
            Vec cur = in;
            for (const auto& v : t.annihilators) {
                Vec next = Vec::Zero(in.size());
                apply_annihilator(*b, v, cur, next);
                cur = next;
            }
            for (auto it = t.creators.rbegin(); it != t.creators.rend(); ++it) {
                Vec next = Vec::Zero(in.size());
                apply_creator(*b, *it, cur, next);
                cur = next;
            }
            out += t.coef * cur;
        }
    });
}

DampedForm wick_damped_form(const WickForm& form, BasisPtr basis, double ell) {
    DampedForm df;
    df.basis = basis;
    df.ell = ell;
    const std::size_t n = basis->size();
    df.kernel.resize(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            df.kernel(i, j) = basis->damp(i, ell) * basis->damp(j, ell) *
                              wick_element(*basis, i, j, form);
    return df;
}

SPVector smeared_vector(const GridPtr& grid, const SmearedVectorSpec& spec) {
    if (spec.radius <= 0.0) throw ConfigError("smeared_vector: radius must be positive");
    const double r = spec.radius;
    const double rho = 0.5 * r;

    std::vector<double> glx, glw;
    gauss_legendre(64, glx, glw);
    auto tau_hat = [&](double om) {
        // time bump (2/r) c (1-(2t/r)^2)^4, unit integral
        double acc = 0.0;
        for (size_t q = 0; q < glx.size(); ++q) {
            double y = 0.5 * (glx[q] + 1.0);
            double om2 = 1.0 - y * y;
            double pw = om2 * om2;
            pw *= pw;
            acc += 0.5 * glw[q] * pw * std::cos(om * rho * y);
        }
        return acc / bump::radial_moment(0);
    };

    const double c00 = std::sqrt(4.0 * kPi); // l=0 channel coefficient of 1
    const int ch0 = AngularBasis::channel_index(0, 0);
    SPVector w(grid);
    for (int ir = 0; ir < grid->n_r(); ++ir) {
        double om = grid->omega_node(ir);
        double ghat = 4.0 * kPi * bump::c_norm() * bump::hankel(0, 0, rho * grid->p(ir));
        cd amp = c00 * std::pow(2.0 * kPi, -1.5) / std::sqrt(2.0 * om) * tau_hat(om) * ghat;
        for (int d = 0; d < spec.time_derivs; ++d) amp *= cd(0.0, -om);
        w[grid->mode(ir, ch0)] = amp;
    }
    return w;
}

FockOperator smeared_field(const GridPtr& grid, const SmearedVectorSpec& spec,
                           BasisPtr basis) {
    return wick_operator(field_form(smeared_vector(grid, spec)), std::move(basis));
}

} // namespace pflab
