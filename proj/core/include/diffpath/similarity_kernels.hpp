#ifndef DIFFPATH_SIMILARITY_KERNELS_HPP
#define DIFFPATH_SIMILARITY_KERNELS_HPP

/**
 * @file similarity_kernels.hpp
 * @brief Closed-form unsteady similarity solutions.
 *
 * Stokes impulsive start: u/U = erf(y / sqrt(4 nu t)), with a
 * finite-difference check of du/dt = nu d2u/dy2. The same kernel serves for
 * smoothed sweep-phase velocities; no separate machinery is needed.
 *
 * Higbie penetration: cubic temperature profile in eta_h = y/delta_h(t),
 * delta_h(t) = 2 sqrt(2 alpha t). The printed flux expression is
 * dimensionally inconsistent as usually quoted; the form implemented here,
 * q_w = 1.5 k dtheta / delta_h(t) = (1.5/(2 sqrt 2)) k dtheta / sqrt(alpha t),
 * is the one consistent with the profile and thickness.
 *
 * The penetration time scale based on the thermal layer thickness
 * (delta_h(t*) = delta_h(x)) maps the transient kernel onto the steady
 * boundary-layer solution.
 */

#include "diffpath/eulerian_thermal.hpp"
#include "diffpath/properties.hpp"

namespace diffpath {

/// Impulsively started layer parameters.
struct StokesLayer {
    double kinematic_viscosity = 0.0;  ///< nu [m^2/s]
    double freestream_velocity = 0.0;  ///< U (or smoothed sweep velocity scale) [m/s]
};

/// Transient penetration profile parameters.
struct HigbieProfile {
    double thermal_diffusivity = 0.0;  ///< alpha [m^2/s]
    double wall_temperature = 0.0;     ///< theta_w [C]
    double driving_temperature = 0.0;  ///< unpenetrated-fluid temperature [C]
    double conductivity = 0.0;         ///< k [W/(m K)]
};

/// u(y, t) = U erf(y / sqrt(4 nu t)). Throws std::domain_error for t <= 0
/// or y < 0.
double stokes_velocity(double y, double t, const StokesLayer& layer);

/// Grid for the Stokes finite-difference check.
struct StokesGridSpec {
    std::size_t ny = 400;   ///< wall-normal points
    std::size_t nt = 400;   ///< implicit time steps to t_end
};

/**
 * @brief Implicit FD solve of du/dt = nu d2u/dy2 against the erf solution.
 *
 * Impulsive initial data (u = U for y > 0), wall u = 0, far field u = U.
 * Backward-Euler in time, centered second differences in y; returns the
 * L-infinity difference against stokes_velocity at t_end. Refining ny and
 * nt together with dt proportional to dy^2 gives second-order convergence
 * in dy.
 *
 * When t_start > 0 the solve is seeded with the exact profile at t_start
 * instead of the impulsive data and marched from there, so the error tends
 * to zero as t_end approaches t_start.
 *
 * Requires y_max >= 6 sqrt(4 nu t_end) so the far-field boundary is inert.
 */
double stokes_fd_check(const StokesLayer& layer, double y_max, double t_end,
                       const StokesGridSpec& grid, double t_start = 0.0);

/// Cubic profile value 1.5 eta - 0.5 eta^3 for eta in [0, 1].
double higbie_temperature_ratio(double eta_h);

/// delta_h(t) = 2 sqrt(2 alpha t). Throws std::domain_error for t <= 0.
double higbie_thickness(double t, const HigbieProfile& profile);

/// q_w(t) = 1.5 k |dtheta| / delta_h(t). Throws std::domain_error for t <= 0.
double higbie_wall_flux(double t, const HigbieProfile& profile);

/// Exposure time from streamwise convection, t = x / U.
double higbie_timescale(double x, double approach_velocity);

/// Diffusion time t* with delta_h(t*) equal to the steady thermal thickness
/// at x, i.e. t* = delta_h(x)^2 / (8 alpha). Throws std::domain_error for
/// x <= heated_start.
double trinh_keey_timescale(double x, const ThermalModel& thermal);

}  // namespace diffpath

#endif  // DIFFPATH_SIMILARITY_KERNELS_HPP
