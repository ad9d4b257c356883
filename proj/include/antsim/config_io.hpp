#pragma once
// Configuration ingestion: a flat JSON object of parameter names (the model
// symbols: n, N, W, H, c, ... f_d, m, rho_max, t_p), every field optional,
// unknown keys rejected. CLI --set overrides reuse the same typed table.

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "antsim/config.hpp"

namespace antsim {

namespace detail {

using json = nlohmann::json;

inline double as_number(const json& v, const std::string& key) {
    if (!v.is_number()) throw ConfigError("config key '" + key + "' must be a number");
    return v.get<double>();
}

inline long long as_integer(const json& v, const std::string& key) {
    if (!v.is_number_integer())
        throw ConfigError("config key '" + key + "' must be an integer");
    return v.get<long long>();
}

inline bool as_bool(const json& v, const std::string& key) {
    if (!v.is_boolean()) throw ConfigError("config key '" + key + "' must be a boolean");
    return v.get<bool>();
}

inline Vec2 as_point(const json& v, const std::string& key) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        throw ConfigError("config key '" + key + "' must be a [x, y] array");
    return {v[0].get<double>(), v[1].get<double>()};
}

using FieldSetter = std::function<void(SimConfig&, const json&, const std::string&)>;

inline const std::map<std::string, FieldSetter>& config_fields() {
    static const std::map<std::string, FieldSetter> fields = {
        {"n", [](SimConfig& c, const json& v, const std::string& k) { c.ant_count = static_cast<int>(as_integer(v, k)); }},
        {"N", [](SimConfig& c, const json& v, const std::string& k) { c.steps = as_integer(v, k); }},
        {"W", [](SimConfig& c, const json& v, const std::string& k) { c.world_w = as_number(v, k); }},
        {"H", [](SimConfig& c, const json& v, const std::string& k) { c.world_h = as_number(v, k); }},
        {"c", [](SimConfig& c, const json& v, const std::string& k) { c.cell_size = as_number(v, k); }},
        {"L_food", [](SimConfig& c, const json& v, const std::string& k) { c.food_center = as_point(v, k); }},
        {"r_food", [](SimConfig& c, const json& v, const std::string& k) { c.food_radius = as_number(v, k); }},
        {"L_nest", [](SimConfig& c, const json& v, const std::string& k) { c.nest_center = as_point(v, k); }},
        {"r_nest", [](SimConfig& c, const json& v, const std::string& k) { c.nest_radius = as_number(v, k); }},
        {"v", [](SimConfig& c, const json& v, const std::string& k) { c.speed = as_number(v, k); }},
        {"dt", [](SimConfig& c, const json& v, const std::string& k) { c.dt = as_number(v, k); }},
        {"theta_s_max", [](SimConfig& c, const json& v, const std::string& k) { c.probe_angle_range = as_number(v, k); }},
        {"ls_max", [](SimConfig& c, const json& v, const std::string& k) { c.probe_max_len = as_number(v, k); }},
        {"eta", [](SimConfig& c, const json& v, const std::string& k) { c.noise_half_width = as_number(v, k); }},
        {"lambda", [](SimConfig& c, const json& v, const std::string& k) { c.intensity_decay = as_number(v, k); }},
        {"tau_turn", [](SimConfig& c, const json& v, const std::string& k) { c.turn_period = static_cast<int>(as_integer(v, k)); }},
        {"tau_attack", [](SimConfig& c, const json& v, const std::string& k) { c.attack_delay = static_cast<int>(as_integer(v, k)); }},
        {"chi", [](SimConfig& c, const json& v, const std::string& k) { c.probe_count = static_cast<int>(as_integer(v, k)); }},
        {"k", [](SimConfig& c, const json& v, const std::string& k) { c.evaporation_rate = as_number(v, k); }},
        {"m", [](SimConfig& c, const json& v, const std::string& k) { c.mislead_multiplier = as_number(v, k); }},
        {"f_d", [](SimConfig& c, const json& v, const std::string& k) { c.detractor_fraction = as_number(v, k); }},
        {"defense_enabled", [](SimConfig& c, const json& v, const std::string& k) { c.defense_enabled = as_bool(v, k); }},
        {"rho_max", [](SimConfig& c, const json& v, const std::string& k) { c.patience_max = as_number(v, k); }},
        {"t_p", [](SimConfig& c, const json& v, const std::string& k) { c.patience_refill_steps = static_cast<int>(as_integer(v, k)); }},
        {"food_capacity", [](SimConfig& c, const json& v, const std::string& k) { c.food_capacity = as_integer(v, k); }},
        {"seed", [](SimConfig& c, const json& v, const std::string& k) { c.seed = static_cast<std::uint64_t>(as_integer(v, k)); }},
        {"sample_every", [](SimConfig& c, const json& v, const std::string& k) { c.sample_every = static_cast<int>(as_integer(v, k)); }},
    };
    return fields;
}

inline void apply_field(SimConfig& cfg, const std::string& key, const json& value) {
    const auto& fields = config_fields();
    const auto it = fields.find(key);
    if (it == fields.end()) throw ConfigError("unknown config key '" + key + "'");
    it->second(cfg, value, key);
}

}  // namespace detail

// key=value override, e.g. "f_d=0.5" or "L_food=[372,36]". The value is
// parsed as JSON and type-checked against the field.
inline void apply_override(SimConfig& cfg, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0)
        throw ConfigError("override must look like key=value, got '" + assignment + "'");
    const std::string key = assignment.substr(0, eq);
    const std::string raw = assignment.substr(eq + 1);
    detail::json value = detail::json::parse(raw, nullptr, false);
    if (value.is_discarded())
        throw ConfigError("override value for '" + key + "' is not valid: '" + raw + "'");
    detail::apply_field(cfg, key, value);
}

// Load a config: Table-default values, overlaid with the JSON file (when a
// path is given), then with key=value overrides, then validated.
inline SimConfig load_config(const std::string& path,
                             const std::vector<std::string>& overrides = {}) {
    SimConfig cfg;
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open config file '" + path + "'");
        detail::json doc;
        try {
            in >> doc;
        } catch (const detail::json::parse_error& e) {
            throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
        }
        if (!doc.is_object())
            throw ConfigError("config file '" + path + "' must hold a JSON object");
        for (const auto& [key, value] : doc.items()) detail::apply_field(cfg, key, value);
    }
    for (const std::string& assignment : overrides) apply_override(cfg, assignment);
    cfg.validate();
    return cfg;
}

}  // namespace antsim
