#include "pflab/fock_basis.hpp"

#include <cmath>
#include <functional>
#include <string>

#include "pflab/errors.hpp"

namespace pflab {

std::uint64_t FockBasis::pack_key(std::span<const int> sorted_modes) {
    std::uint64_t key = 0;
    for (int m : sorted_modes) key = (key << 8) | static_cast<std::uint64_t>(m + 1);
    return key;
}

FockBasis::FockBasis(SpacePtr space, int n_max, std::optional<double> e_cut,
                     std::size_t max_states)
    : space_(std::move(space)), n_max_(n_max), e_cut_(e_cut) {
    if (n_max < 0) throw ConfigError("fock: n_max must be >= 0");
    if (n_max > 7) throw ConfigError("fock: n_max above packing limit 7");
    if (space_->n_modes() >= 255) throw ConfigError("fock: mode count above 254");

    offsets_.push_back(0);
    std::vector<int> cur;
    double ecap = e_cut_ ? *e_cut_ : -1.0;

    // graded lexicographic: particle number ascending, mode lists lexicographic
    auto emit = [&](double en) {
        if (size() + 1 > max_states)
            throw ResourceError("fock: state count exceeds cap " +
                                std::to_string(max_states));
        modes_.insert(modes_.end(), cur.begin(), cur.end());
        offsets_.push_back(modes_.size());
        energy_.push_back(en);
        index_.emplace(pack_key(cur), energy_.size() - 1);
    };

    const int M = space_->n_modes();
    std::vector<double> om(M);
    for (int m = 0; m < M; ++m) om[m] = space_->omega_mode(m);

    std::function<void(int, int, double)> rec = [&](int n_left, int min_mode,
                                                    double en) {
        if (n_left == 0) {
            emit(en);
            return;
        }
        for (int m = min_mode; m < M; ++m) {
            double e2 = en + om[m];
            if (ecap >= 0.0 && e2 > ecap) continue;
            cur.push_back(m);
            rec(n_left - 1, m, e2);
            cur.pop_back();
        }
    };
    for (int n = 0; n <= n_max_; ++n) rec(n, 0, 0.0);
}

double FockBasis::damp(std::size_t idx, double ell) const {
    return std::pow(1.0 + energy_[idx], -ell);
}

std::optional<std::size_t> FockBasis::index_of(std::span<const int> sorted_modes) const {
    auto it = index_.find(pack_key(sorted_modes));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

BasisPtr build_fock(SpacePtr space, int n_max, std::optional<double> e_cut,
                    std::size_t max_states) {
    return std::make_shared<FockBasis>(std::move(space), n_max, e_cut, max_states);
}

} // namespace pflab
