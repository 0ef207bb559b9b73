#ifndef PFLAB_MULTI_INDEX_HPP
#define PFLAB_MULTI_INDEX_HPP

#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace pflab {

// Spatial multi-index kappa = (k_1, ..., k_s), s <= 3.
struct MultiIndex {
    std::array<int, 3> k{0, 0, 0};
    int dim = 3;

    MultiIndex() = default;
    MultiIndex(int k1, int k2, int k3) : k{k1, k2, k3}, dim(3) {}
    explicit MultiIndex(const std::vector<int>& v) {
        dim = static_cast<int>(v.size());
        for (int i = 0; i < dim && i < 3; ++i) k[i] = v[i];
    }

    int order() const { return k[0] + k[1] + k[2]; }

    double factorial() const;

    bool operator==(const MultiIndex& o) const { return k == o.k; }
    bool operator<(const MultiIndex& o) const {
        if (order() != o.order()) return order() < o.order();
        return k < o.k;
    }

    std::string to_string() const;
};

// All kappa with |kappa| == n over s coordinates, lexicographic.
std::vector<MultiIndex> multi_indices_of_order(int n, int s);

// All kappa with |kappa| <= n over s coordinates, sorted by (order, lex).
std::vector<MultiIndex> multi_indices_up_to(int n, int s);

} // namespace pflab

#endif
