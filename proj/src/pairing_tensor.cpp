#include "pflab/pairing_tensor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <thread>

#include "pflab/errors.hpp"

namespace pflab {

std::vector<double> RadiusSchedule::radii() const {
    validate();
    std::vector<double> r(count);
    for (int k = 0; k < count; ++k) r[k] = r0 * std::pow(q, double(k));
    return r;
}

void RadiusSchedule::validate() const {
    if (!(r0 > 0.0) || !(q > 0.0) || !(q < 1.0))
        throw ConfigError("schedule: need r0 > 0 and 0 < q < 1");
    if (count < 4) throw ConfigError("schedule: at least 4 radii required");
}

double ProbeSet::damp_pair(std::size_t a) const {
    std::size_t n = states.size();
    return basis->damp(states[a / n], ell) * basis->damp(states[a % n], ell);
}

Vec ProbeSet::frame_weyl(const SPVector& f) const {
    Eigen::VectorXcd fo = f.ortho();
    double n2 = fo.squaredNorm();
    const std::size_t n = states.size();
    Vec v(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            v(i * n + j) = basis->damp(states[i], ell) * basis->damp(states[j], ell) *
                           weyl_element(*basis, states[i], states[j], fo, n2);
    return v;
}

Vec ProbeSet::frame_wick(const WickForm& form) const {
    const std::size_t n = states.size();
    Vec v(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            v(i * n + j) = basis->damp(states[i], ell) * basis->damp(states[j], ell) *
                           wick_element(*basis, states[i], states[j], form);
    return v;
}

Vec ProbeSet::frame_identity() const {
    const std::size_t n = states.size();
    Vec v = Vec::Zero(n * n);
    for (std::size_t i = 0; i < n; ++i)
        v(i * n + i) = basis->damp(states[i], ell) * basis->damp(states[i], ell);
    return v;
}

Vec ProbeSet::frame_dense(const Mat& op) const {
    const std::size_t n = states.size();
    Vec v(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            v(i * n + j) = basis->damp(states[i], ell) * basis->damp(states[j], ell) *
                           op(states[i], states[j]);
    return v;
}

Functional ProbeSet::functional(std::size_t a) const {
    const std::size_t n = states.size();
    return rank_one_damped(basis, states[a / n], states[a % n], ell);
}

ProbeSet build_probes(const BasisPtr& basis, double ell, const ProbeSpec& spec) {
    ProbeSet ps;
    ps.basis = basis;
    ps.ell = ell;
    ps.states.push_back(basis->vacuum());

    auto push = [&](std::vector<int> modes) {
        std::sort(modes.begin(), modes.end());
        auto idx = basis->index_of(modes);
        if (idx) ps.states.push_back(*idx);
    };
    if (basis->n_max() >= 1)
        for (int m : spec.modes_1p) push({m});
    if (basis->n_max() >= 2)
        for (std::size_t i = 0; i < spec.modes_2p.size(); ++i)
            for (std::size_t j = i; j < spec.modes_2p.size(); ++j)
                push({spec.modes_2p[i], spec.modes_2p[j]});
    if (basis->n_max() >= 3)
        for (std::size_t i = 0; i < spec.modes_3p.size(); ++i)
            for (std::size_t j = i; j < spec.modes_3p.size(); ++j)
                for (std::size_t k = j; k < spec.modes_3p.size(); ++k)
                    push({spec.modes_3p[i], spec.modes_3p[j], spec.modes_3p[k]});
    return ps;
}

PairingTensor assemble_tensor(const RadiusSchedule& schedule, const ProbeSet& probes,
                              std::vector<LocalFamily> families,
                              std::uint64_t config_digest, int threads) {
    PairingTensor t;
    t.schedule = schedule;
    t.radii = schedule.radii();
    t.probes = probes;
    t.families = std::move(families);
    t.config_digest = config_digest;
    if (t.families.size() != t.radii.size())
        throw ConfigError("assemble: one family per radius required");

    const std::size_t F = probes.n_probes();
    for (std::size_t k = 0; k < t.radii.size(); ++k) {
        const auto& fam = t.families[k];
        Mat vals(F, fam.members.size());
        auto work = [&](std::size_t b0, std::size_t b1) {
            for (std::size_t b = b0; b < b1; ++b)
                vals.col(b) = probes.frame_weyl(fam.members[b].f);
        };
        int nt = std::max(1, threads);
        if (nt == 1 || fam.members.size() < 2) {
            work(0, fam.members.size());
        } else {
            std::vector<std::thread> pool;
            std::size_t B = fam.members.size();
            std::size_t chunk = (B + nt - 1) / nt;
            for (int th = 0; th < nt; ++th) {
                std::size_t b0 = th * chunk, b1 = std::min(B, b0 + chunk);
                if (b0 < b1) pool.emplace_back(work, b0, b1);
            }
            for (auto& th : pool) th.join();
        }
        t.values.push_back(std::move(vals));
    }
    return t;
}

namespace {
constexpr char kMagic[4] = {'P', 'F', 'L', 'B'};
constexpr std::uint8_t kVersion = 1;

void put_u64(std::ofstream& os, std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = (v >> (8 * i)) & 0xff;
    os.write(reinterpret_cast<char*>(b), 8);
}
std::uint64_t get_u64(std::ifstream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t(b[i]) << (8 * i);
    return v;
}
void put_f64(std::ofstream& os, double d) {
    std::uint64_t v;
    std::memcpy(&v, &d, 8);
    put_u64(os, v);
}
double get_f64(std::ifstream& is) {
    std::uint64_t v = get_u64(is);
    double d;
    std::memcpy(&d, &v, 8);
    return d;
}
} // namespace

void save_tensor(const PairingTensor& t, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ConfigError("cache: cannot open for writing: " + path);
    os.write(kMagic, 4);
    os.put(char(kVersion));
    put_u64(os, t.config_digest);
    put_u64(os, t.radii.size());
    put_u64(os, t.values.empty() ? 0 : std::uint64_t(t.values[0].rows()));
    put_u64(os, t.values.empty() ? 0 : std::uint64_t(t.values[0].cols()));
    for (double r : t.radii) put_f64(os, r);
    for (const auto& m : t.values)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            for (Eigen::Index r = 0; r < m.rows(); ++r) {
                put_f64(os, m(r, c).real());
                put_f64(os, m(r, c).imag());
            }
}

std::uint64_t peek_tensor_digest(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ConfigError("cache: cannot open: " + path);
    char magic[4];
    is.read(magic, 4);
    if (std::memcmp(magic, kMagic, 4) != 0)
        throw ConfigError("cache: bad magic in " + path);
    int ver = is.get();
    if (ver != kVersion) throw ConfigError("cache: unsupported version");
    return get_u64(is);
}

void load_tensor_values(PairingTensor& t, const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ConfigError("cache: cannot open: " + path);
    char magic[4];
    is.read(magic, 4);
    if (std::memcmp(magic, kMagic, 4) != 0)
        throw ConfigError("cache: bad magic in " + path);
    int ver = is.get();
    if (ver != kVersion) throw ConfigError("cache: unsupported version");
    std::uint64_t digest = get_u64(is);
    if (digest != t.config_digest)
        throw ConfigError("cache: config digest mismatch, refusing " + path);
    std::uint64_t K = get_u64(is), F = get_u64(is), B = get_u64(is);
    t.radii.assign(K, 0.0);
    for (auto& r : t.radii) r = get_f64(is);
    t.values.assign(K, Mat(F, B));
    for (auto& m : t.values)
        for (std::uint64_t c = 0; c < B; ++c)
            for (std::uint64_t r = 0; r < F; ++r) {
                double re = get_f64(is), im = get_f64(is);
                m(r, c) = cd(re, im);
            }
    if (!is) throw ConfigError("cache: truncated file " + path);
}

std::uint64_t tensor_value_digest(const PairingTensor& t) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](double d) {
        std::uint64_t v;
        std::memcpy(&v, &d, 8);
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    for (const auto& m : t.values)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            for (Eigen::Index r = 0; r < m.rows(); ++r) {
                mix(m(r, c).real());
                mix(m(r, c).imag());
            }
    return h;
}

} // namespace pflab
