#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lossyspdc/model.hpp"

namespace lossyspdc {

struct LoadedConfig {
    SimulationConfig sim;
    // Optional separate amplitude grid for Schmidt decompositions.
    std::optional<GridSpec> schmidt_grid;
    std::string name;
};

// Builds a config from a JSON document with unit-suffixed keys; missing
// entries fall back to the reference device. Throws Error(Config).
LoadedConfig config_from_json(const nlohmann::json& doc);
LoadedConfig load_config(const std::string& path);

std::vector<std::string> preset_names();
// Throws Error(Config) for unknown names.
nlohmann::json preset(const std::string& name);

// Resolved config in internal units (um, ps, rad/ps, 1/um).
nlohmann::json to_json(const SimulationConfig& cfg);
nlohmann::json to_json(const GridSpec& g);

}  // namespace lossyspdc
