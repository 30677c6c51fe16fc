#ifndef DIFFPATH_CONFIG_HPP
#define DIFFPATH_CONFIG_HPP

/**
 * @file config.hpp
 * @brief Run configuration: strict JSON ingestion, preset, content hash.
 */

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "diffpath/diffusion_path.hpp"
#include "diffpath/eulerian_thermal.hpp"
#include "diffpath/properties.hpp"
#include "diffpath/velocity_field.hpp"

namespace diffpath {

/// Finite-difference field grid knobs; x_min and y_max are derived from the
/// scenario (x_min = heated_start, y_max = 2.2 delta_h(x_max)).
struct FieldGridConfig {
    double x_max = 0.32;
    std::size_t nx = 1100;
    std::size_t ny = 600;
};

/// Analytic mesh export sampling.
struct MeshGridConfig {
    std::size_t nx = 120;
    std::size_t ny = 80;
    double x_max = 0.32;
};

/// (y, t) evaluation grid for the kernel dump subcommands.
struct KernelGridConfig {
    std::size_t y_count = 81;
    double y_max = 0.0;  ///< 0 -> auto, 6 sqrt(4 nu t_max)
    std::vector<double> times = {0.025, 0.05, 0.1};
};

struct RunConfig {
    FluidProperties fluid;  ///< SI units after ingestion
    std::optional<double> table_prandtl;  ///< tabulated Pr for cross-checking
    PlateScenario scenario;
    double plate_length = 0.0;  ///< 0 -> unbounded
    GridSchedule schedule;
    VelocityProfile profile = VelocityProfile::Quartic;
    ThermalLayerModel thermal_model = ThermalLayerModel::MomentumScaled;
    double epsilon_exit = 0.01;
    std::string output_dir;  ///< empty -> resolved by the CLI
    FieldGridConfig field_grid;
    MeshGridConfig mesh_grid;
    KernelGridConfig kernel_grid;
};

/**
 * @brief Parses and fully validates a JSON config document.
 *
 * Strict: unknown keys anywhere are rejected. Constraint violations raise
 * std::domain_error naming the field (e.g. "fluid.dynamic_viscosity");
 * malformed JSON raises std::invalid_argument with the parser's position.
 * Heat capacity is ingested from the `heat_capacity_kj` key in kJ/(kg K)
 * and stored in J/(kg K).
 */
RunConfig parse_config(const std::string& json_text);

/// parse_config over a file's contents.
RunConfig load_config_file(const std::filesystem::path& path);

/// Names of the shipped presets ("paper-table1").
std::vector<std::string> preset_names();

/// JSON text of a shipped preset. Throws std::invalid_argument for an
/// unknown name.
std::string preset_text(const std::string& name);

/// Canonical (key-sorted, fully resolved) JSON rendering of a config.
/// Identical configs canonicalize identically.
std::string canonical_json(const RunConfig& config);

/// FNV-1a 64-bit digest of canonical_json, as 16 hex characters.
std::string config_hash(const RunConfig& config);

}  // namespace diffpath

#endif  // DIFFPATH_CONFIG_HPP
