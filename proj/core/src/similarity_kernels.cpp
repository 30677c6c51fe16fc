#include "diffpath/similarity_kernels.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "diffpath/errors.hpp"
#include "diffpath/special_functions.hpp"

namespace diffpath {

double stokes_velocity(double y, double t, const StokesLayer& layer) {
    if (!(t > 0.0)) {
        throw std::domain_error("stokes_velocity: t must be positive");
    }
    if (y < 0.0) {
        throw std::domain_error("stokes_velocity: y must be non-negative");
    }
    const double eta = y / std::sqrt(4.0 * layer.kinematic_viscosity * t);
    return layer.freestream_velocity * erf(eta);
}

double stokes_fd_check(const StokesLayer& layer, double y_max, double t_end,
                       const StokesGridSpec& grid, double t_start) {
    if (!(t_end > 0.0) || t_start < 0.0 || t_start >= t_end) {
        throw std::domain_error("stokes_fd_check: need 0 <= t_start < t_end");
    }
    const double diffusion_span = 6.0 * std::sqrt(4.0 * layer.kinematic_viscosity * t_end);
    if (y_max < diffusion_span) {
        throw std::domain_error("stokes_fd_check: y_max must be >= 6 sqrt(4 nu t_end)");
    }
    if (grid.ny < 3 || grid.nt < 1) {
        throw std::domain_error("stokes_fd_check: degenerate grid");
    }

    const std::size_t ny = grid.ny;
    const double dy = y_max / static_cast<double>(ny - 1);
    const double dt = (t_end - t_start) / static_cast<double>(grid.nt);
    const double u_inf = layer.freestream_velocity;
    const double r = layer.kinematic_viscosity * dt / (dy * dy);

    std::vector<double> u(ny, u_inf);
    u[0] = 0.0;  // wall applies from the first step on
    if (t_start > 0.0) {
        for (std::size_t j = 0; j < ny; ++j) {
            u[j] = stokes_velocity(dy * static_cast<double>(j), t_start, layer);
        }
    }
    std::vector<double> cp(ny), dp(ny);

    // Backward Euler: (1 + 2r) u_j - r u_{j-1} - r u_{j+1} = u_j^old.
    for (std::size_t step = 0; step < grid.nt; ++step) {
        cp[0] = 0.0;
        dp[0] = 0.0;  // wall
        for (std::size_t j = 1; j + 1 < ny; ++j) {
            const double m = (1.0 + 2.0 * r) - (-r) * cp[j - 1];
            cp[j] = -r / m;
            dp[j] = (u[j] - (-r) * dp[j - 1]) / m;
        }
        u[ny - 1] = u_inf;
        for (std::size_t j = ny - 1; j-- > 1;) {
            u[j] = dp[j] - cp[j] * u[j + 1];
        }
        u[0] = 0.0;
    }

    double max_err = 0.0;
    for (std::size_t j = 0; j < ny; ++j) {
        const double exact = stokes_velocity(dy * static_cast<double>(j), t_end, layer);
        max_err = std::max(max_err, std::fabs(u[j] - exact));
    }
    return max_err;
}

double higbie_temperature_ratio(double eta_h) {
    if (eta_h < 0.0 || eta_h > 1.0) {
        throw std::domain_error("higbie_temperature_ratio: eta_h must be in [0, 1]");
    }
    return 1.5 * eta_h - 0.5 * eta_h * eta_h * eta_h;
}

double higbie_thickness(double t, const HigbieProfile& profile) {
    if (!(t > 0.0)) {
        throw std::domain_error("higbie_thickness: t must be positive");
    }
    return 2.0 * std::sqrt(2.0 * profile.thermal_diffusivity * t);
}

double higbie_wall_flux(double t, const HigbieProfile& profile) {
    if (!(t > 0.0)) {
        throw std::domain_error("higbie_wall_flux: t must be positive");
    }
    const double dtheta = std::fabs(profile.driving_temperature - profile.wall_temperature);
    return 1.5 * profile.conductivity * dtheta / higbie_thickness(t, profile);
}

double higbie_timescale(double x, double approach_velocity) {
    if (!(x > 0.0)) {
        throw std::domain_error("higbie_timescale: x must be positive");
    }
    if (!(approach_velocity > 0.0)) {
        throw std::domain_error("higbie_timescale: approach velocity must be positive");
    }
    return x / approach_velocity;
}

double trinh_keey_timescale(double x, const ThermalModel& thermal) {
    const double delta_h = thermal.thermal_thickness(x);  // checks x > heated_start
    return delta_h * delta_h / (8.0 * thermal.coefficients().thermal_diffusivity);
}

}  // namespace diffpath
