#include "pflab/config.hpp"

#include <fstream>
#include <sstream>

#include "pflab/errors.hpp"

namespace pflab {

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

namespace {
std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}
} // namespace

Config Config::from_string(const std::string& text) {
    Config c;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: missing '=' on line " + std::to_string(lineno));
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("config: empty key on line " + std::to_string(lineno));
        c.kv_[key] = val;
    }
    return c;
}

Config Config::from_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("config: cannot open " + path);
    std::stringstream ss;
    ss << is.rdbuf();
    return from_string(ss.str());
}

std::string Config::get_str(const std::string& key, const std::string& dflt) const {
    auto it = kv_.find(key);
    return it == kv_.end() ? dflt : it->second;
}

std::string Config::require_str(const std::string& key) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) throw ConfigError("config: missing required key " + key);
    return it->second;
}

double Config::get_num(const std::string& key, double dflt) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) return dflt;
    try {
        std::size_t pos = 0;
        double v = std::stod(it->second, &pos);
        if (pos != it->second.size())
            throw ConfigError("config: bad numeric value for " + key);
        return v;
    } catch (const std::invalid_argument&) {
        throw ConfigError("config: bad numeric value for " + key);
    }
}

int Config::get_int(const std::string& key, int dflt) const {
    double v = get_num(key, dflt);
    int i = static_cast<int>(v);
    if (double(i) != v) throw ConfigError("config: expected integer for " + key);
    return i;
}

bool Config::get_bool(const std::string& key, bool dflt) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) return dflt;
    if (it->second == "true" || it->second == "1") return true;
    if (it->second == "false" || it->second == "0") return false;
    throw ConfigError("config: expected boolean for " + key);
}

std::string Config::canonical() const {
    std::ostringstream os;
    for (const auto& [k, v] : kv_) os << k << " = " << v << "\n";
    return os.str();
}

std::uint64_t Config::digest() const { return fnv1a64(canonical()); }

ModelConfig model_from_config(const Config& c) {
    ModelConfig m;
    m.kind = c.get_str("model.kind", "FreeScalar");
    m.s = c.get_int("grid.s", 3);
    m.mass = c.get_num("model.mass", m.kind == "Lutz" ? 0.0 : 1.0);
    if (c.has("model.masses")) {
        std::istringstream is(c.require_str("model.masses"));
        std::string tok;
        while (std::getline(is, tok, ','))
            if (!tok.empty()) m.masses.push_back(std::stod(tok));
    }
    m.p_max = c.get_num("grid.p_max", 8.0);
    m.n_r = c.get_int("grid.n_r", 4);
    m.l_max = c.get_int("grid.l_max", 1);
    m.n_max = c.get_int("fock.n_max", 2);
    if (c.has("fock.e_cut")) m.e_cut = c.get_num("fock.e_cut", 0.0);
    m.max_states = static_cast<std::size_t>(c.get_num("fock.max_states", 4e6));
    m.ell = c.get_num("extract.ell", 4.0);
    m.schedule.r0 = c.get_num("schedule.r0", 0.5);
    m.schedule.q = c.get_num("schedule.q", 0.5);
    m.schedule.count = c.get_int("schedule.count", 6);
    m.cross_pairs = c.get_bool("family.cross_pairs", true);
    m.probe_1p_nodes = c.get_int("probe.1p_nodes", -1);
    m.probe_2p_nodes = c.get_int("probe.2p_nodes", 2);
    m.probe_2p_lmax = c.get_int("probe.2p_lmax", 1);
    m.probe_3p_nodes = c.get_int("probe.3p_nodes", 3);
    m.probe_3p_lmax = c.get_int("probe.3p_lmax", 0);
    m.lutz_extra_nodes = c.get_int("lutz.extra_nodes", 3);
    m.lutz_q_max = c.get_num("lutz.q_max", 8.0);
    m.lutz_n_schedule = c.get_str("lutz.n_schedule", "ceil_inv_r");
    return m;
}

} // namespace pflab
