#ifndef PFLAB_MU_INDEX_HPP
#define PFLAB_MU_INDEX_HPP

#include <string>
#include <vector>

#include "pflab/multi_index.hpp"

namespace pflab {

// Expansion label mu = (mu^+, mu^-): finitely supported multiplicity maps
// over Taylor multi-indices kappa, one per sign. Entries are kept sorted by
// (sign desc, kappa) with positive counts.
struct MuIndex {
    struct Entry {
        MultiIndex kappa;
        int sign = +1; // +1 or -1
        int count = 0;
    };
    std::vector<Entry> entries;

    int total_order() const {
        int n = 0;
        for (const auto& e : entries) n += e.count;
        return n;
    }
    bool empty() const { return entries.empty(); }

    MuIndex& add(const MultiIndex& kappa, int sign, int count = 1);

    // canonical comparison used for deterministic ordering
    bool operator==(const MuIndex& o) const;
    bool less_canonical(const MuIndex& o) const;

    std::string to_string() const;
};

// 2 * theta(mu) as an exact integer:
//   theta = sum_kappa mu^+_k (|k| + (s-1)/2) + mu^-_k (|k| + (s+1)/2).
long long twice_theta(const MuIndex& mu, int s);

inline double theta(const MuIndex& mu, int s) { return 0.5 * twice_theta(mu, s); }

// All mu with theta(mu) <= gamma (ties included), sorted by (theta, canonical
// order). Rejects s < 2, where the set may be infinite.
std::vector<MuIndex> enumerate_mu(double gamma, int s);

} // namespace pflab

#endif
