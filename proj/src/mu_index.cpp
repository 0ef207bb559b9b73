#include "pflab/mu_index.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "pflab/errors.hpp"

namespace pflab {

namespace {
bool entry_less(const MuIndex::Entry& a, const MuIndex::Entry& b) {
    if (a.sign != b.sign) return a.sign > b.sign; // plus entries first
    return a.kappa < b.kappa;
}
} // namespace

MuIndex& MuIndex::add(const MultiIndex& kappa, int sign, int count) {
    for (auto& e : entries)
        if (e.sign == sign && e.kappa == kappa) {
            e.count += count;
            return *this;
        }
    entries.push_back({kappa, sign, count});
    std::sort(entries.begin(), entries.end(), entry_less);
    return *this;
}

bool MuIndex::operator==(const MuIndex& o) const {
    if (entries.size() != o.entries.size()) return false;
    for (size_t i = 0; i < entries.size(); ++i) {
        const auto& a = entries[i];
        const auto& b = o.entries[i];
        if (a.sign != b.sign || !(a.kappa == b.kappa) || a.count != b.count)
            return false;
    }
    return true;
}

bool MuIndex::less_canonical(const MuIndex& o) const {
    if (total_order() != o.total_order()) return total_order() < o.total_order();
    for (size_t i = 0; i < std::min(entries.size(), o.entries.size()); ++i) {
        const auto& a = entries[i];
        const auto& b = o.entries[i];
        if (entry_less(a, b)) return true;
        if (entry_less(b, a)) return false;
        if (a.count != b.count) return a.count > b.count;
    }
    return entries.size() < o.entries.size();
}

std::string MuIndex::to_string() const {
    if (entries.empty()) return "1";
    std::ostringstream os;
    for (const auto& e : entries) {
        os << (e.sign > 0 ? "+" : "-") << e.kappa.to_string();
        if (e.count > 1) os << "^" << e.count;
    }
    return os.str();
}

long long twice_theta(const MuIndex& mu, int s) {
    long long t = 0;
    for (const auto& e : mu.entries) {
        long long w = 2LL * e.kappa.order() + s + (e.sign > 0 ? -1 : +1);
        t += w * e.count;
    }
    return t;
}

std::vector<MuIndex> enumerate_mu(double gamma, int s) {
    if (s < 2)
        throw ConfigError("enumerate_mu: requires s >= 2 (set may be infinite)");
    if (gamma < 0.0) throw ConfigError("enumerate_mu: gamma must be >= 0");
    const long long budget = static_cast<long long>(std::floor(2.0 * gamma + 1e-9));

    // slot list: (kappa, sign) with weight <= budget, canonical order
    struct Slot {
        MultiIndex kappa;
        int sign;
        long long weight;
    };
    std::vector<Slot> slots;
    for (int sign : {+1, -1}) {
        long long base = s + (sign > 0 ? -1 : +1);
        int kmax = static_cast<int>((budget - base) / 2);
        if (budget < base) continue;
        for (const auto& kappa : multi_indices_up_to(std::max(kmax, 0), s))
            slots.push_back({kappa, sign, base + 2LL * kappa.order()});
    }
    std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
        if (a.sign != b.sign) return a.sign > b.sign;
        return a.kappa < b.kappa;
    });

    std::vector<MuIndex> out;
    MuIndex cur;
    std::function<void(size_t, long long)> rec = [&](size_t pos, long long rem) {
        if (pos == slots.size()) {
            out.push_back(cur);
            return;
        }
        // count = 0 branch
        rec(pos + 1, rem);
        const auto& sl = slots[pos];
        MuIndex saved = cur;
        for (int c = 1; c * sl.weight <= rem; ++c) {
            cur.entries.push_back({sl.kappa, sl.sign, c});
            std::sort(cur.entries.begin(), cur.entries.end(), entry_less);
            rec(pos + 1, rem - c * sl.weight);
            cur = saved;
        }
    };
    rec(0, budget);

    std::stable_sort(out.begin(), out.end(), [s](const MuIndex& a, const MuIndex& b) {
        long long ta = twice_theta(a, s), tb = twice_theta(b, s);
        if (ta != tb) return ta < tb;
        return a.less_canonical(b);
    });
    return out;
}

} // namespace pflab
