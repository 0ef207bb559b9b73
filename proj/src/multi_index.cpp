#include "pflab/multi_index.hpp"

#include <functional>
#include <sstream>

namespace pflab {

double MultiIndex::factorial() const {
    double f = 1.0;
    for (int i = 0; i < dim; ++i)
        for (int j = 2; j <= k[i]; ++j) f *= j;
    return f;
}

std::string MultiIndex::to_string() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < dim; ++i) os << k[i] << (i + 1 < dim ? "," : "");
    os << ")";
    return os.str();
}

std::vector<MultiIndex> multi_indices_of_order(int n, int s) {
    std::vector<MultiIndex> out;
    if (s == 1) {
        out.push_back(MultiIndex({n}));
        return out;
    }
    std::vector<int> v(s, 0);
    // lexicographic enumeration of compositions of n into s parts
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == s - 1) {
            v[pos] = rem;
            out.push_back(MultiIndex(v));
            return;
        }
        for (int c = 0; c <= rem; ++c) {
            v[pos] = c;
            rec(pos + 1, rem - c);
        }
    };
    rec(0, n);
    return out;
}

std::vector<MultiIndex> multi_indices_up_to(int n, int s) {
    std::vector<MultiIndex> out;
    for (int o = 0; o <= n; ++o) {
        auto part = multi_indices_of_order(o, s);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

} // namespace pflab
