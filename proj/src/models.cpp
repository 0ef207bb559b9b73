#include "pflab/models.hpp"

#include <cmath>
#include <sstream>

#include "pflab/errors.hpp"

namespace pflab {

std::string ModelConfig::canonical_string() const {
    std::ostringstream os;
    os.precision(17);
    os << "kind=" << kind << ";s=" << s << ";mass=" << mass << ";masses=";
    for (double m : masses) os << m << ",";
    os << ";p_max=" << p_max << ";n_r=" << n_r << ";l_max=" << l_max
       << ";n_max=" << n_max << ";e_cut=" << (e_cut ? *e_cut : -1.0)
       << ";ell=" << ell << ";schedule=" << schedule.r0 << "," << schedule.q << ","
       << schedule.count << ";cross=" << cross_pairs << ";p1=" << probe_1p_nodes
       << ";p2=" << probe_2p_nodes << "," << probe_2p_lmax << ";p3="
       << probe_3p_nodes << "," << probe_3p_lmax << ";lutz=" << lutz_extra_nodes
       << "," << lutz_q_max << "," << lutz_n_schedule;
    return os.str();
}

std::uint64_t ModelConfig::digest() const {
    std::string s = canonical_string();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {
ProbeSpec probe_spec_for_grid(const MomentumGrid& grid, const ModelConfig& cfg,
                              int mode_offset = 0) {
    ProbeSpec spec;
    const int nch = grid.angular().n_channels();
    int cap1 = cfg.probe_1p_nodes < 0 ? grid.n_r()
                                      : std::min(cfg.probe_1p_nodes, grid.n_r());
    for (int ir = 0; ir < cap1; ++ir)
        for (int ch = 0; ch < nch; ++ch)
            spec.modes_1p.push_back(mode_offset + grid.mode(ir, ch));
    for (int ir = 0; ir < std::min(cfg.probe_2p_nodes, grid.n_r()); ++ir)
        for (int ch = 0; ch < nch; ++ch)
            if (grid.angular().channel_l(ch) <= cfg.probe_2p_lmax)
                spec.modes_2p.push_back(mode_offset + grid.mode(ir, ch));
    for (int ir = 0; ir < std::min(cfg.probe_3p_nodes, grid.n_r()); ++ir)
        for (int ch = 0; ch < nch; ++ch)
            if (grid.angular().channel_l(ch) <= cfg.probe_3p_lmax)
                spec.modes_3p.push_back(mode_offset + grid.mode(ir, ch));
    return spec;
}
} // namespace

Model free_scalar(const ModelConfig& cfg) {
    Model m;
    m.cfg = cfg;
    m.grid = build_grid(cfg.s, cfg.mass, cfg.p_max, cfg.n_r, cfg.l_max);
    m.space = m.grid;
    m.basis = build_fock(m.space, cfg.n_max, cfg.e_cut, cfg.max_states);
    m.probes = build_probes(m.basis, cfg.ell, probe_spec_for_grid(*m.grid, cfg));
    for (double r : cfg.schedule.radii())
        m.families.push_back(make_local_family(m.grid, r, cfg.cross_pairs));
    return m;
}

int lutz_n_of_r(const ModelConfig& cfg, double r) {
    if (cfg.lutz_n_schedule == "zero") return 0;
    if (cfg.lutz_n_schedule == "ceil_inv_r")
        return static_cast<int>(std::ceil(1.0 / r - 1e-12));
    throw ConfigError("lutz: unknown n(r) schedule " + cfg.lutz_n_schedule);
}

Model lutz(const ModelConfig& cfg) {
    Model m;
    m.cfg = cfg;
    if (cfg.mass != 0.0)
        throw ConfigError("lutz: base theory is massless (set mass = 0)");
    m.grid = build_grid(cfg.s, 0.0, cfg.p_max, cfg.n_r, cfg.l_max);
    auto extra = std::make_shared<HalfLineSpace>(cfg.lutz_q_max, cfg.lutz_extra_nodes);
    auto prod = std::make_shared<ProductSpace>(m.grid, extra);
    m.space = prod;
    m.basis = build_fock(m.space, cfg.n_max, cfg.e_cut, cfg.max_states);

    // probes: base selection at the two lowest extra nodes
    ProbeSpec base = probe_spec_for_grid(*m.grid, cfg);
    ProbeSpec spec;
    const int ne = extra->n_modes();
    for (int m3 : base.modes_1p)
        for (int ie = 0; ie < std::min(2, ne); ++ie)
            spec.modes_1p.push_back(m3 * ne + ie);
    for (int m3 : base.modes_2p) spec.modes_2p.push_back(m3 * ne + 0);
    for (int m3 : base.modes_3p) spec.modes_3p.push_back(m3 * ne + 0);
    m.probes = build_probes(m.basis, cfg.ell, spec);

    for (double r : cfg.schedule.radii()) {
        LocalFamily fam3 = make_local_family(m.grid, r, cfg.cross_pairs);
        int n = lutz_n_of_r(cfg, r);
        // extra-dimension factor (p_extra)^{2n} on the ground profile,
        // renormalized; amplitudes relative to the top node avoid overflow
        Eigen::VectorXcd prof(ne);
        double nrm2 = 0.0;
        for (int ie = 0; ie < ne; ++ie) {
            double rel = extra->q(ie) / extra->q(ne - 1);
            double a = std::pow(rel, 2.0 * n);
            prof(ie) = a;
            nrm2 += extra->weight_mode(ie) * a * a;
        }
        prof /= std::sqrt(nrm2);
        LocalFamily fam;
        fam.radius = r;
        fam.pairs = fam3.pairs;
        for (const auto& mem : fam3.members) {
            FamilyMember fm;
            fm.parts = mem.parts;
            fm.label = mem.label + "_n" + std::to_string(n);
            fm.f = tensor_embed(mem.f, prof, prod);
            fam.members.push_back(std::move(fm));
        }
        m.families.push_back(std::move(fam));
    }
    return m;
}

Model multi_species(const ModelConfig& cfg) {
    Model m;
    m.cfg = cfg;
    if (cfg.masses.empty()) throw ConfigError("multi_species: masses list empty");
    std::vector<SpacePtr> parts;
    for (double mass : cfg.masses) {
        auto g = build_grid(cfg.s, mass, cfg.p_max, cfg.n_r, cfg.l_max);
        m.species_grids.push_back(g);
        parts.push_back(g);
    }
    m.grid = m.species_grids[0];
    auto comp = std::make_shared<CompositeSpace>(parts);
    m.space = comp;
    m.basis = build_fock(m.space, cfg.n_max, cfg.e_cut, cfg.max_states);

    ProbeSpec spec;
    for (std::size_t sp = 0; sp < m.species_grids.size(); ++sp) {
        ProbeSpec one =
            probe_spec_for_grid(*m.species_grids[sp], cfg, comp->offset(int(sp)));
        spec.modes_1p.insert(spec.modes_1p.end(), one.modes_1p.begin(),
                             one.modes_1p.end());
        spec.modes_2p.insert(spec.modes_2p.end(), one.modes_2p.begin(),
                             one.modes_2p.end());
        spec.modes_3p.insert(spec.modes_3p.end(), one.modes_3p.begin(),
                             one.modes_3p.end());
    }
    m.probes = build_probes(m.basis, cfg.ell, spec);

    for (double r : cfg.schedule.radii()) {
        LocalFamily fam;
        fam.radius = r;
        for (std::size_t sp = 0; sp < m.species_grids.size(); ++sp) {
            LocalFamily one = make_local_family(m.species_grids[sp], r, cfg.cross_pairs);
            if (sp == 0) fam.pairs = one.pairs; // mu machinery: species 0 only
            for (const auto& mem : one.members) {
                FamilyMember fm;
                fm.parts = mem.parts;
                fm.label = "s" + std::to_string(sp) + "_" + mem.label;
                fm.f = embed(mem.f, comp, int(sp));
                fam.members.push_back(std::move(fm));
            }
        }
        m.families.push_back(std::move(fam));
    }
    return m;
}

Model build_model(const ModelConfig& cfg) {
    if (cfg.kind == "FreeScalar") return free_scalar(cfg);
    if (cfg.kind == "Lutz") return lutz(cfg);
    if (cfg.kind == "MultiSpecies") return multi_species(cfg);
    throw ConfigError("unknown model kind: " + cfg.kind);
}

PairingTensor assemble_model(const Model& model, int threads) {
    return assemble_tensor(model.cfg.schedule, model.probes, model.families,
                           model.cfg.digest(), threads);
}

} // namespace pflab
