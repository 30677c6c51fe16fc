#ifndef DIFFPATH_VALIDATION_HPP
#define DIFFPATH_VALIDATION_HPP

/**
 * @file validation.hpp
 * @brief Path-versus-field comparison statistics and dataset serialization.
 *
 * Residuals are r_i = theta_path,i - theta_field(x_i, y_i). Against an
 * analytic model the field value is re-evaluated exactly at each path point
 * (no interpolation); against a sampled FD field bilinear interpolation is
 * used. Reports carry both raw Celsius statistics and percentages of the
 * driving temperature difference.
 *
 * CSV formats:
 *   mesh:  x_m,y_m,theta_C                       (row-major, x outer)
 *   path:  step,x_m,y_m,dt_s,t_s,u_mean_m_per_s,theta_C
 * Numbers are written with 17 significant digits so parse -> format is
 * idempotent and round-trips are byte-identical.
 */

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "diffpath/diffusion_path.hpp"
#include "diffpath/eulerian_thermal.hpp"

namespace diffpath {

struct ComparisonReport {
    std::size_t point_count = 0;
    std::vector<double> residuals;   ///< theta_path - theta_field [C]
    double rms_C = 0.0;
    double rms_pct_dtheta = 0.0;     ///< RMS as percent of |theta_w - theta_inf|
    double max_abs_C = 0.0;
    double stddev_C = 0.0;           ///< population std dev of the residuals
    std::string field_source;        ///< "analytic" | "fd-oracle"
    std::string layer_model;
    std::string profile;
};

/// Residuals by direct analytic re-evaluation at every path point.
ComparisonReport compare_path_to_field(const DiffusionPath& path, const ThermalModel& model);

/// Residuals by bilinear interpolation in a sampled field. Throws
/// std::domain_error listing the first path point outside the grid.
ComparisonReport compare_path_to_field(const DiffusionPath& path, const ThermalField& field);

/// Writes the mesh CSV; returns the data row count.
std::size_t export_field_mesh(const ThermalField& field, const std::filesystem::path& dest);

/// Writes the path CSV; returns the data row count.
std::size_t export_path(std::span<const PathPoint> points, const std::filesystem::path& dest);

/// Parses a path CSV written by export_path.
std::vector<PathPoint> import_path(const std::filesystem::path& src);

/// Reads a two-column y_m,t_s CSV (header optional) for replays.
void read_y_t_csv(const std::filesystem::path& src, std::vector<double>& y_values,
                  std::vector<double>& t_values);

/// Emits a gnuplot script rendering the mesh as a surface with the path
/// overlaid as a scatter. Text templating only.
void write_overlay_script(const std::filesystem::path& dest, const std::string& mesh_csv,
                          const std::string& path_csv, std::size_t mesh_nx,
                          std::size_t mesh_ny);

}  // namespace diffpath

#endif  // DIFFPATH_VALIDATION_HPP
