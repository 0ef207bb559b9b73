#ifndef PFLAB_FOCK_BASIS_HPP
#define PFLAB_FOCK_BASIS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "pflab/mode_space.hpp"

namespace pflab {

// Truncated symmetric Fock space over the grid modes: occupation states with
// total particle number <= n_max (and total free energy <= e_cut when set),
// enumerated graded-lexicographically. State 0 is the vacuum.
//
// States are stored as sorted mode lists (with repetition); lookup keys pack
// the list into a u64, which restricts to n_max <= 7 and < 255 modes.
class FockBasis {
public:
    FockBasis(SpacePtr space, int n_max, std::optional<double> e_cut,
              std::size_t max_states = 4'000'000);

    const SpacePtr& space() const { return space_; }
    int n_max() const { return n_max_; }
    std::optional<double> e_cut() const { return e_cut_; }
    std::size_t size() const { return offsets_.size() - 1; }
    std::size_t vacuum() const { return 0; }

    std::span<const int> state_modes(std::size_t idx) const {
        return {modes_.data() + offsets_[idx],
                static_cast<std::size_t>(offsets_[idx + 1] - offsets_[idx])};
    }
    int particles(std::size_t idx) const {
        return static_cast<int>(offsets_[idx + 1] - offsets_[idx]);
    }
    double energy(std::size_t idx) const { return energy_[idx]; }

    // (1 + E)^(-ell)
    double damp(std::size_t idx, double ell) const;

    std::optional<std::size_t> index_of(std::span<const int> sorted_modes) const;

    static std::uint64_t pack_key(std::span<const int> sorted_modes);

private:
    SpacePtr space_;
    int n_max_;
    std::optional<double> e_cut_;
    std::vector<int> modes_;
    std::vector<std::size_t> offsets_;
    std::vector<double> energy_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

using BasisPtr = std::shared_ptr<const FockBasis>;

BasisPtr build_fock(SpacePtr space, int n_max, std::optional<double> e_cut = {},
                    std::size_t max_states = 4'000'000);

} // namespace pflab

#endif
