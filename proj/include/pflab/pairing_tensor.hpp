#ifndef PFLAB_PAIRING_TENSOR_HPP
#define PFLAB_PAIRING_TENSOR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pflab/functionals.hpp"

namespace pflab {

// Geometric radius schedule r_k = r0 * q^k, k = 0..count-1.
struct RadiusSchedule {
    double r0 = 0.5;
    double q = 0.5;
    int count = 6;

    std::vector<double> radii() const;
    void validate() const;
};

// Rank-one damped probe functionals sigma_{chi,xi}(A) = damp * <chi|A|xi>
// over all ordered pairs of a fixed probe-state set. Index a = i_chi * n + i_xi.
struct ProbeSet {
    BasisPtr basis;
    double ell = 0.0;
    std::vector<std::size_t> states;

    std::size_t n_probes() const { return states.size() * states.size(); }
    double damp_pair(std::size_t a) const;

    Vec frame_weyl(const SPVector& f) const;
    Vec frame_wick(const WickForm& form) const;
    Vec frame_identity() const;
    Vec frame_dense(const Mat& op) const;
    Functional functional(std::size_t a) const;
};

// Probe states: vacuum, one-particle states over modes_1p, two-particle
// multisets over modes_2p, three-particle multisets over modes_3p (particle
// sectors beyond n_max are skipped).
struct ProbeSpec {
    std::vector<int> modes_1p, modes_2p, modes_3p;
};

ProbeSet build_probes(const BasisPtr& basis, double ell, const ProbeSpec& spec);

// sigma_a(A_b(r_k)) over the schedule; values[k] is n_probes x n_members.
struct PairingTensor {
    RadiusSchedule schedule;
    std::vector<double> radii;
    ProbeSet probes;
    std::vector<LocalFamily> families; // one per radius
    std::vector<Mat> values;
    std::uint64_t config_digest = 0;
};

// Deterministic assembly; cells are computed independently (parallelizable
// over members with preassigned output slots).
PairingTensor assemble_tensor(const RadiusSchedule& schedule, const ProbeSet& probes,
                              std::vector<LocalFamily> families,
                              std::uint64_t config_digest, int threads = 1);

// Binary cache, magic "PFLB" version 1, little-endian f64, header carries the
// config digest; loading refuses a digest mismatch.
void save_tensor(const PairingTensor& t, const std::string& path);
// loads values/radii/digest into an assembled-shape tensor (probes/families
// must be rebuilt from the same config by the caller)
void load_tensor_values(PairingTensor& t, const std::string& path);
std::uint64_t peek_tensor_digest(const std::string& path);

// FNV-1a 64-bit content digest of the value block (determinism checks).
std::uint64_t tensor_value_digest(const PairingTensor& t);

} // namespace pflab

#endif
