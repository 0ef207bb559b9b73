#ifndef PFLAB_MODELS_HPP
#define PFLAB_MODELS_HPP

#include <optional>
#include <string>

#include "pflab/pairing_tensor.hpp"

namespace pflab {

// Scenario parameters for the three short-distance classes.
struct ModelConfig {
    std::string kind = "FreeScalar"; // FreeScalar | Lutz | MultiSpecies
    int s = 3;
    double mass = 1.0;
    std::vector<double> masses;      // MultiSpecies
    double p_max = 8.0;
    int n_r = 4;
    int l_max = 1;
    int n_max = 2;
    std::optional<double> e_cut;
    double ell = 4.0;
    RadiusSchedule schedule;
    bool cross_pairs = true;

    // probe shells (rotation-block closed): node/l caps per particle sector
    int probe_1p_nodes = -1; // -1: all nodes
    int probe_2p_nodes = 2;
    int probe_2p_lmax = 1;
    int probe_3p_nodes = 3;
    int probe_3p_lmax = 0;

    // Lutz extra dimension
    int lutz_extra_nodes = 3;
    double lutz_q_max = 8.0;
    std::string lutz_n_schedule = "ceil_inv_r"; // or "zero"

    std::size_t max_states = 4'000'000;

    std::string canonical_string() const;
    std::uint64_t digest() const;
};

struct Model {
    ModelConfig cfg;
    GridPtr grid;                     // base grid (species 0 for MultiSpecies)
    std::vector<GridPtr> species_grids;
    SpacePtr space;
    BasisPtr basis;
    ProbeSet probes;
    std::vector<LocalFamily> families; // per schedule radius, members on `space`
};

Model free_scalar(const ModelConfig& cfg);
Model lutz(const ModelConfig& cfg);
Model multi_species(const ModelConfig& cfg);
Model build_model(const ModelConfig& cfg); // dispatch on cfg.kind

PairingTensor assemble_model(const Model& model, int threads = 1);

// Lutz exponent schedule n(r).
int lutz_n_of_r(const ModelConfig& cfg, double r);

} // namespace pflab

#endif
