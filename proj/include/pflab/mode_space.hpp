#ifndef PFLAB_MODE_SPACE_HPP
#define PFLAB_MODE_SPACE_HPP

#include <complex>
#include <memory>
#include <vector>

#include <Eigen/Dense>

namespace pflab {

using cd = std::complex<double>;

// Single-particle mode set as seen by second quantization: per-mode energy
// and integration weight. Momentum grids, species sums and tensor products
// with extra dimensions all present this interface.
class ModeSpace {
public:
    virtual ~ModeSpace() = default;
    virtual int n_modes() const = 0;
    virtual double omega_mode(int m) const = 0;
    virtual double weight_mode(int m) const = 0;
    double sqrtw_mode(int m) const { return std::sqrt(weight_mode(m)); }
};

using SpacePtr = std::shared_ptr<const ModeSpace>;

// Complex wave function on modes; inner products use the space weights,
// <u|v> = sum_m w_m conj(u_m) v_m.
class SPVector {
public:
    SPVector() = default;
    explicit SPVector(SpacePtr space)
        : space_(std::move(space)), a_(Eigen::VectorXcd::Zero(space_->n_modes())) {}
    SPVector(SpacePtr space, Eigen::VectorXcd amps)
        : space_(std::move(space)), a_(std::move(amps)) {}

    const SpacePtr& space() const { return space_; }
    int size() const { return static_cast<int>(a_.size()); }
    cd& operator[](int m) { return a_(m); }
    cd operator[](int m) const { return a_(m); }
    const Eigen::VectorXcd& amps() const { return a_; }
    Eigen::VectorXcd& amps() { return a_; }

    SPVector& operator*=(cd c) { a_ *= c; return *this; }
    SPVector& operator+=(const SPVector& o) { a_ += o.a_; return *this; }
    friend SPVector operator*(cd c, SPVector v) { v *= c; return v; }
    friend SPVector operator+(SPVector u, const SPVector& v) { u += v; return u; }

    // orthonormal-mode coordinates sqrt(w_m) * a_m (CCR-normalized)
    Eigen::VectorXcd ortho() const {
        Eigen::VectorXcd o(a_.size());
        for (int m = 0; m < a_.size(); ++m) o(m) = space_->sqrtw_mode(m) * a_(m);
        return o;
    }

    double norm() const;

private:
    SpacePtr space_;
    Eigen::VectorXcd a_;
};

cd inner(const SPVector& u, const SPVector& v);

// Weighted norm of v restricted to modes with omega <= E (sharp cutoff).
double energy_restricted_norm(const SPVector& v, double E);

// Direct sum of mode spaces (multi-species models).
class CompositeSpace : public ModeSpace {
public:
    explicit CompositeSpace(std::vector<SpacePtr> parts);
    int n_modes() const override { return total_; }
    double omega_mode(int m) const override;
    double weight_mode(int m) const override;

    int n_parts() const { return static_cast<int>(parts_.size()); }
    const SpacePtr& part(int i) const { return parts_[i]; }
    int offset(int i) const { return offsets_[i]; }

private:
    std::vector<SpacePtr> parts_;
    std::vector<int> offsets_;
    int total_ = 0;
    std::pair<int, int> locate(int m) const;
};

// v on part `which`, embedded into the composite space.
SPVector embed(const SPVector& v, const std::shared_ptr<const CompositeSpace>& comp,
               int which);

// One-dimensional positive half-line momentum factor with geometric nodes
// (the Lutz model's extra spatial coordinate; weights doubled for +/-).
class HalfLineSpace : public ModeSpace {
public:
    HalfLineSpace(double q_max, int n_q);
    int n_modes() const override { return static_cast<int>(q_.size()); }
    double omega_mode(int m) const override { return q_[m]; }
    double weight_mode(int m) const override { return w_[m]; }
    double q(int m) const { return q_[m]; }

private:
    std::vector<double> q_, w_;
};

// Tensor product (base x extra): omega = sqrt(omega_base^2 + q_extra^2).
// Mode index = m_base * n_extra + m_extra.
class ProductSpace : public ModeSpace {
public:
    ProductSpace(SpacePtr base, SpacePtr extra);
    int n_modes() const override { return nb_ * ne_; }
    double omega_mode(int m) const override;
    double weight_mode(int m) const override;

    const SpacePtr& base() const { return base_; }
    const SpacePtr& extra() const { return extra_; }
    int n_extra() const { return ne_; }

private:
    SpacePtr base_, extra_;
    int nb_, ne_;
};

SPVector tensor_embed(const SPVector& v_base, const Eigen::VectorXcd& extra_profile,
                      const std::shared_ptr<const ProductSpace>& prod);

} // namespace pflab

#endif
