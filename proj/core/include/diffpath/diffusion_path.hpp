#ifndef DIFFPATH_DIFFUSION_PATH_HPP
#define DIFFPATH_DIFFUSION_PATH_HPP

/**
 * @file diffusion_path.hpp
 * @brief Lagrangian march of a heat entity along its diffusion path.
 *
 * The entity leaves the wall at (x1, 0). Each step crosses one cell of a
 * rectangular grid of fluid elements: the cell's convection speed is the
 * arithmetic mean of the streamwise velocity at its four corners, the
 * residence time is dt = dx / u_mean, and the temperature at the new corner
 * follows the transient conduction kernel
 *
 *     theta = theta_w - (theta_w - theta_inf) erf(y / sqrt(4 alpha t)),
 *
 * with t the elapsed time summed over all cells so far. The march records
 * the trajectory, the accumulated diffusion period and the exit position.
 *
 * The discrete rate (theta_{i+1} - theta_i) / dt_{i+1} is the diffusion-path
 * derivative of the temperature: the rate of change seen by an observer
 * riding the heat entity rather than a fluid element.
 */

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "diffpath/eulerian_thermal.hpp"
#include "diffpath/properties.hpp"
#include "diffpath/velocity_field.hpp"

namespace diffpath {

/// Cell schedule: first cell size plus geometric growth factors.
struct GridSchedule {
    double dx0 = 0.00125;       ///< first streamwise cell width [m]
    double dy0 = 1.64337e-5;    ///< first wall-normal cell height [m]
    double growth_x = 1.0;      ///< per-step factor on dx
    double growth_y = 1.0;      ///< per-step factor on dy
    std::size_t max_steps = 200;
};

/// Throws std::domain_error naming the offending field.
void validate(const GridSchedule& schedule);

/// One recorded corner of the diffusion path. The entries for a marched
/// path are the corners *after* each cell crossing; step is 1-based.
struct PathPoint {
    std::size_t step = 0;
    double x = 0.0;        ///< [m]
    double y = 0.0;        ///< [m]
    double u_mean = 0.0;   ///< cell mean velocity crossed on this step [m/s]
    double dt = 0.0;       ///< residence time in that cell [s]
    double t_elapsed = 0.0;
    double theta = 0.0;    ///< [C]
};

enum class ExitReason { ReachedFreestream, MaxSteps };

const char* to_string(ExitReason reason);

struct DiffusionPath {
    std::vector<PathPoint> points;
    double diffusion_period = 0.0;  ///< t_d, equals points.back().t_elapsed
    double exit_x = 0.0;
    ExitReason exit_reason = ExitReason::MaxSteps;
    PlateScenario scenario;
    GridSchedule schedule;
    double epsilon_exit = 0.0;
};

/**
 * @brief Mean of u at the four corners of the cell anchored at (x, y).
 *
 * u_mean = [u(x,y) + u(x,y+dy) + u(x+dx,y+dy) + u(x+dx,y)] / 4.
 */
double cell_mean_velocity(const VelocityField& velocity, double x, double y, double dx,
                          double dy);

/**
 * @brief Runs the Lagrangian march.
 *
 * Stops when the dimensionless excess (theta - theta_inf)/(theta_w -
 * theta_inf) drops below epsilon_exit, or at max_steps. A degenerate
 * scenario with theta_w == theta_inf exits at the first step with the
 * freestream temperature everywhere.
 *
 * @param plate_length  optional guard; a schedule that would march past it
 *                      raises std::domain_error.
 * @throws numerical_error if a cell's mean velocity vanishes.
 */
DiffusionPath march(const VelocityField& velocity, const GridSchedule& schedule,
                    double epsilon_exit = 0.01,
                    double plate_length = std::numeric_limits<double>::infinity());

/**
 * @brief Applies only the temperature map to an explicit (y, t) sequence.
 *
 * Verification entry point: no velocity evaluation, each pair maps to
 * theta = theta_w - (theta_w - theta_inf) erf(y / sqrt(4 alpha t)). Both
 * sequences must be strictly increasing and positive.
 */
std::vector<PathPoint> replay_march(const PlateScenario& scenario,
                                    const DerivedCoefficients& coeffs,
                                    std::span<const double> y_values,
                                    std::span<const double> t_values);

/// Discrete diffusion-path derivative (theta_{i+1} - theta_i) / dt_{i+1}
/// at 0 <= i < size - 1. Throws std::out_of_range otherwise.
double material_rate_along_path(std::span<const PathPoint> points, std::size_t i);

/**
 * @brief Eulerian convective term u * dtheta/dx at a grid node.
 *
 * Snaps (x, y) to the nearest node of the field grid and central-differences
 * theta in x there; u comes from the velocity field at that node. Boundary
 * nodes raise std::domain_error (no one-sided differences offered).
 */
double eulerian_convective_term(const ThermalField& field, const VelocityField& velocity,
                                double x, double y);

}  // namespace diffpath

#endif  // DIFFPATH_DIFFUSION_PATH_HPP
