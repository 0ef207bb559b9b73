#include "pflab/mode_space.hpp"

#include <cmath>

#include "pflab/errors.hpp"

namespace pflab {

double SPVector::norm() const { return std::sqrt(std::abs(inner(*this, *this))); }

cd inner(const SPVector& u, const SPVector& v) {
    const auto& sp = *u.space();
    cd acc = 0.0;
    for (int m = 0; m < u.size(); ++m)
        acc += sp.weight_mode(m) * std::conj(u[m]) * v[m];
    return acc;
}

double energy_restricted_norm(const SPVector& v, double E) {
    const auto& sp = *v.space();
    double acc = 0.0;
    for (int m = 0; m < v.size(); ++m)
        if (sp.omega_mode(m) <= E) acc += sp.weight_mode(m) * std::norm(v[m]);
    return std::sqrt(acc);
}

CompositeSpace::CompositeSpace(std::vector<SpacePtr> parts) : parts_(std::move(parts)) {
    for (const auto& p : parts_) {
        offsets_.push_back(total_);
        total_ += p->n_modes();
    }
    offsets_.push_back(total_);
}

std::pair<int, int> CompositeSpace::locate(int m) const {
    for (int i = 0; i + 1 < static_cast<int>(offsets_.size()); ++i)
        if (m < offsets_[i + 1]) return {i, m - offsets_[i]};
    throw NumericsError("CompositeSpace: mode index out of range");
}

double CompositeSpace::omega_mode(int m) const {
    auto [i, loc] = locate(m);
    return parts_[i]->omega_mode(loc);
}

double CompositeSpace::weight_mode(int m) const {
    auto [i, loc] = locate(m);
    return parts_[i]->weight_mode(loc);
}

SPVector embed(const SPVector& v, const std::shared_ptr<const CompositeSpace>& comp,
               int which) {
    SPVector out(comp);
    for (int m = 0; m < v.size(); ++m) out[comp->offset(which) + m] = v[m];
    return out;
}

HalfLineSpace::HalfLineSpace(double q_max, int n_q) {
    if (n_q < 1 || q_max <= 0.0) throw ConfigError("HalfLineSpace: bad parameters");
    const double ratio = 2.0, h = std::log(ratio);
    for (int i = 0; i < n_q; ++i) {
        double qi = q_max * std::pow(ratio, double(i - (n_q - 1)));
        q_.push_back(qi);
        w_.push_back(2.0 * h * qi); // int dq over both half-lines, midpoint in log q
    }
}

ProductSpace::ProductSpace(SpacePtr base, SpacePtr extra)
    : base_(std::move(base)), extra_(std::move(extra)) {
    nb_ = base_->n_modes();
    ne_ = extra_->n_modes();
}

double ProductSpace::omega_mode(int m) const {
    double ob = base_->omega_mode(m / ne_);
    double q = extra_->omega_mode(m % ne_);
    return std::sqrt(ob * ob + q * q);
}

double ProductSpace::weight_mode(int m) const {
    return base_->weight_mode(m / ne_) * extra_->weight_mode(m % ne_);
}

SPVector tensor_embed(const SPVector& v_base, const Eigen::VectorXcd& extra_profile,
                      const std::shared_ptr<const ProductSpace>& prod) {
    SPVector out(prod);
    int ne = prod->n_extra();
    for (int mb = 0; mb < v_base.size(); ++mb)
        for (int ie = 0; ie < ne; ++ie) out[mb * ne + ie] = v_base[mb] * extra_profile(ie);
    return out;
}

} // namespace pflab
