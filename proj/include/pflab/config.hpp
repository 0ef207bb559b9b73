#ifndef PFLAB_CONFIG_HPP
#define PFLAB_CONFIG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "pflab/models.hpp"

namespace pflab {

// Flat `key = value` configuration file, '#' comments, keys namespaced like
// grid.n_r, fock.n_max, schedule.r0, extract.ell, model.kind.
class Config {
public:
    static Config from_file(const std::string& path);
    static Config from_string(const std::string& text);

    bool has(const std::string& key) const { return kv_.count(key) > 0; }
    std::string get_str(const std::string& key, const std::string& dflt) const;
    std::string require_str(const std::string& key) const;
    double get_num(const std::string& key, double dflt) const;
    int get_int(const std::string& key, int dflt) const;
    bool get_bool(const std::string& key, bool dflt) const;

    void set(const std::string& key, const std::string& value) { kv_[key] = value; }

    std::string canonical() const; // sorted "key = value" lines
    std::uint64_t digest() const;

    const std::map<std::string, std::string>& items() const { return kv_; }

private:
    std::map<std::string, std::string> kv_;
};

ModelConfig model_from_config(const Config& c);

std::uint64_t fnv1a64(const std::string& data);
std::string hex64(std::uint64_t v);

} // namespace pflab

#endif
