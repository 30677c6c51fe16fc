#include "diffpath/config.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace diffpath {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::string& scope,
                         std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw std::domain_error("unknown config key '" +
                                    (scope.empty() ? item.key() : scope + "." + item.key()) +
                                    "'");
        }
    }
}

double require_number(const json& obj, const std::string& scope, const char* key) {
    if (!obj.contains(key)) {
        throw std::domain_error("missing config key '" + scope + "." + key + "'");
    }
    if (!obj[key].is_number()) {
        throw std::domain_error("config key '" + scope + "." + key + "' must be a number");
    }
    return obj[key].get<double>();
}

double optional_number(const json& obj, const std::string& scope, const char* key,
                       double fallback) {
    if (!obj.contains(key)) {
        return fallback;
    }
    if (!obj[key].is_number()) {
        throw std::domain_error("config key '" + scope + "." + key + "' must be a number");
    }
    return obj[key].get<double>();
}

std::size_t optional_count(const json& obj, const std::string& scope, const char* key,
                           std::size_t fallback) {
    if (!obj.contains(key)) {
        return fallback;
    }
    if (!obj[key].is_number_unsigned()) {
        throw std::domain_error("config key '" + scope + "." + key +
                                "' must be a non-negative integer");
    }
    return obj[key].get<std::size_t>();
}

// ---- shipped presets ----------------------------------------------------

// Reference run: water at 20 C past a plate heated to 25 C from x0 = 0.05 m,
// entity tracked from x1 = 0.10 m. The schedule starts from the 0.00125 m x
// 1.64337e-5 m first cell and grows 5% per step for a 38-point trajectory
// ending near x = 0.235 m.
const char* const kPaperTable1 = R"json({
  "fluid": {
    "dynamic_viscosity": 0.001002,
    "density": 998.0,
    "heat_capacity_kj": 4.182,
    "thermal_conductivity": 0.603,
    "reference_temperature": 20.0,
    "table_prandtl": 6.935296
  },
  "scenario": {
    "approach_velocity": 0.2,
    "wall_temperature": 25.0,
    "freestream_temperature": 20.0,
    "heated_start": 0.05,
    "tracking_start": 0.10
  },
  "schedule": {
    "dx0": 0.00125,
    "dy0": 1.64337e-5,
    "growth_x": 1.05,
    "growth_y": 1.05,
    "max_steps": 38
  },
  "profile": "quartic",
  "thermal_model": "momentum-scaled",
  "epsilon_exit": 0.01,
  "field_grid": { "x_max": 0.32, "nx": 1100, "ny": 600 },
  "mesh_grid": { "nx": 120, "ny": 80, "x_max": 0.32 }
})json";

}  // namespace

RunConfig parse_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& err) {
        throw std::invalid_argument(std::string("config is not well-formed JSON: ") +
                                    err.what());
    }
    if (!doc.is_object()) {
        throw std::domain_error("config root must be a JSON object");
    }
    reject_unknown_keys(doc, "",
                        {"fluid", "scenario", "schedule", "profile", "thermal_model",
                         "epsilon_exit", "output_dir", "field_grid", "mesh_grid",
                         "kernel_grid"});

    RunConfig config;

    // fluid
    if (!doc.contains("fluid") || !doc["fluid"].is_object()) {
        throw std::domain_error("missing config section 'fluid'");
    }
    const json& fluid = doc["fluid"];
    reject_unknown_keys(fluid, "fluid",
                        {"dynamic_viscosity", "density", "heat_capacity_kj",
                         "thermal_conductivity", "reference_temperature", "table_prandtl"});
    config.fluid.dynamic_viscosity = require_number(fluid, "fluid", "dynamic_viscosity");
    config.fluid.density = require_number(fluid, "fluid", "density");
    config.fluid.heat_capacity = 1000.0 * require_number(fluid, "fluid", "heat_capacity_kj");
    config.fluid.thermal_conductivity =
        require_number(fluid, "fluid", "thermal_conductivity");
    config.fluid.reference_temperature =
        optional_number(fluid, "fluid", "reference_temperature", 20.0);
    if (fluid.contains("table_prandtl")) {
        config.table_prandtl = require_number(fluid, "fluid", "table_prandtl");
    }
    validate(config.fluid);

    // scenario
    if (!doc.contains("scenario") || !doc["scenario"].is_object()) {
        throw std::domain_error("missing config section 'scenario'");
    }
    const json& scenario = doc["scenario"];
    reject_unknown_keys(scenario, "scenario",
                        {"approach_velocity", "wall_temperature", "freestream_temperature",
                         "heated_start", "tracking_start", "plate_length"});
    config.scenario.approach_velocity =
        require_number(scenario, "scenario", "approach_velocity");
    config.scenario.wall_temperature =
        require_number(scenario, "scenario", "wall_temperature");
    config.scenario.freestream_temperature =
        require_number(scenario, "scenario", "freestream_temperature");
    config.scenario.heated_start = require_number(scenario, "scenario", "heated_start");
    config.scenario.tracking_start = require_number(scenario, "scenario", "tracking_start");
    config.plate_length = optional_number(scenario, "scenario", "plate_length", 0.0);
    validate(config.scenario);
    if (config.plate_length != 0.0 && config.plate_length <= config.scenario.tracking_start) {
        throw std::domain_error("scenario.plate_length must exceed scenario.tracking_start");
    }

    // schedule
    if (!doc.contains("schedule") || !doc["schedule"].is_object()) {
        throw std::domain_error("missing config section 'schedule'");
    }
    const json& schedule = doc["schedule"];
    reject_unknown_keys(schedule, "schedule",
                        {"dx0", "dy0", "growth_x", "growth_y", "max_steps"});
    config.schedule.dx0 = require_number(schedule, "schedule", "dx0");
    config.schedule.dy0 = require_number(schedule, "schedule", "dy0");
    config.schedule.growth_x = optional_number(schedule, "schedule", "growth_x", 1.0);
    config.schedule.growth_y = optional_number(schedule, "schedule", "growth_y", 1.0);
    config.schedule.max_steps = optional_count(schedule, "schedule", "max_steps", 200);
    validate(config.schedule);

    // scalar options
    if (doc.contains("profile")) {
        const std::string name = doc["profile"].get<std::string>();
        if (name == "quartic") {
            config.profile = VelocityProfile::Quartic;
        } else if (name == "cubic") {
            config.profile = VelocityProfile::Cubic;
        } else if (name == "blasius") {
            config.profile = VelocityProfile::Blasius;
        } else {
            throw std::domain_error("profile must be quartic, cubic or blasius");
        }
    }
    if (doc.contains("thermal_model")) {
        const std::string name = doc["thermal_model"].get<std::string>();
        if (name == "momentum-scaled") {
            config.thermal_model = ThermalLayerModel::MomentumScaled;
        } else if (name == "squire") {
            config.thermal_model = ThermalLayerModel::Squire;
        } else {
            throw std::domain_error("thermal_model must be momentum-scaled or squire");
        }
    }
    config.epsilon_exit = optional_number(doc, "", "epsilon_exit", 0.01);
    if (!(config.epsilon_exit > 0.0) || config.epsilon_exit > 0.1) {
        throw std::domain_error("epsilon_exit must be in (0, 0.1]");
    }
    if (doc.contains("output_dir")) {
        config.output_dir = doc["output_dir"].get<std::string>();
    }

    // grids
    if (doc.contains("field_grid")) {
        const json& grid = doc["field_grid"];
        reject_unknown_keys(grid, "field_grid", {"x_max", "nx", "ny"});
        config.field_grid.x_max =
            optional_number(grid, "field_grid", "x_max", config.field_grid.x_max);
        config.field_grid.nx = optional_count(grid, "field_grid", "nx", config.field_grid.nx);
        config.field_grid.ny = optional_count(grid, "field_grid", "ny", config.field_grid.ny);
    }
    if (config.field_grid.x_max <= config.scenario.tracking_start) {
        throw std::domain_error("field_grid.x_max must exceed scenario.tracking_start");
    }
    if (doc.contains("mesh_grid")) {
        const json& grid = doc["mesh_grid"];
        reject_unknown_keys(grid, "mesh_grid", {"nx", "ny", "x_max"});
        config.mesh_grid.nx = optional_count(grid, "mesh_grid", "nx", config.mesh_grid.nx);
        config.mesh_grid.ny = optional_count(grid, "mesh_grid", "ny", config.mesh_grid.ny);
        config.mesh_grid.x_max =
            optional_number(grid, "mesh_grid", "x_max", config.mesh_grid.x_max);
        if (config.mesh_grid.nx < 2 || config.mesh_grid.ny < 2) {
            throw std::domain_error("mesh_grid.nx and mesh_grid.ny must be >= 2");
        }
    }
    if (doc.contains("kernel_grid")) {
        const json& grid = doc["kernel_grid"];
        reject_unknown_keys(grid, "kernel_grid", {"y_count", "y_max", "times"});
        config.kernel_grid.y_count =
            optional_count(grid, "kernel_grid", "y_count", config.kernel_grid.y_count);
        config.kernel_grid.y_max =
            optional_number(grid, "kernel_grid", "y_max", config.kernel_grid.y_max);
        if (grid.contains("times")) {
            if (!grid["times"].is_array() || grid["times"].empty()) {
                throw std::domain_error("kernel_grid.times must be a non-empty array");
            }
            config.kernel_grid.times.clear();
            for (const auto& v : grid["times"]) {
                if (!v.is_number() || !(v.get<double>() > 0.0)) {
                    throw std::domain_error("kernel_grid.times entries must be positive");
                }
                config.kernel_grid.times.push_back(v.get<double>());
            }
        }
        if (config.kernel_grid.y_count < 2) {
            throw std::domain_error("kernel_grid.y_count must be >= 2");
        }
    }

    return config;
}

RunConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::vector<std::string> preset_names() { return {"paper-table1"}; }

std::string preset_text(const std::string& name) {
    if (name == "paper-table1") {
        return kPaperTable1;
    }
    throw std::invalid_argument("unknown preset '" + name + "'");
}

std::string canonical_json(const RunConfig& config) {
    json doc;
    doc["fluid"]["dynamic_viscosity"] = config.fluid.dynamic_viscosity;
    doc["fluid"]["density"] = config.fluid.density;
    doc["fluid"]["heat_capacity"] = config.fluid.heat_capacity;
    doc["fluid"]["thermal_conductivity"] = config.fluid.thermal_conductivity;
    doc["fluid"]["reference_temperature"] = config.fluid.reference_temperature;
    if (config.table_prandtl) {
        doc["fluid"]["table_prandtl"] = *config.table_prandtl;
    }
    doc["scenario"]["approach_velocity"] = config.scenario.approach_velocity;
    doc["scenario"]["wall_temperature"] = config.scenario.wall_temperature;
    doc["scenario"]["freestream_temperature"] = config.scenario.freestream_temperature;
    doc["scenario"]["heated_start"] = config.scenario.heated_start;
    doc["scenario"]["tracking_start"] = config.scenario.tracking_start;
    doc["scenario"]["plate_length"] = config.plate_length;
    doc["schedule"]["dx0"] = config.schedule.dx0;
    doc["schedule"]["dy0"] = config.schedule.dy0;
    doc["schedule"]["growth_x"] = config.schedule.growth_x;
    doc["schedule"]["growth_y"] = config.schedule.growth_y;
    doc["schedule"]["max_steps"] = config.schedule.max_steps;
    doc["profile"] = to_string(config.profile);
    doc["thermal_model"] = to_string(config.thermal_model);
    doc["epsilon_exit"] = config.epsilon_exit;
    doc["field_grid"]["x_max"] = config.field_grid.x_max;
    doc["field_grid"]["nx"] = config.field_grid.nx;
    doc["field_grid"]["ny"] = config.field_grid.ny;
    doc["mesh_grid"]["nx"] = config.mesh_grid.nx;
    doc["mesh_grid"]["ny"] = config.mesh_grid.ny;
    doc["mesh_grid"]["x_max"] = config.mesh_grid.x_max;
    doc["kernel_grid"]["y_count"] = config.kernel_grid.y_count;
    doc["kernel_grid"]["y_max"] = config.kernel_grid.y_max;
    doc["kernel_grid"]["times"] = config.kernel_grid.times;
    return doc.dump();  // nlohmann::json orders object keys lexicographically
}

std::string config_hash(const RunConfig& config) {
    const std::string text = canonical_json(config);
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

}  // namespace diffpath
