#include "diffpath/diffusion_path.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "diffpath/errors.hpp"
#include "diffpath/special_functions.hpp"

namespace diffpath {

void validate(const GridSchedule& schedule) {
    if (!(schedule.dx0 > 0.0)) {
        throw std::domain_error("schedule.dx0 must be positive");
    }
    if (!(schedule.dy0 > 0.0)) {
        throw std::domain_error("schedule.dy0 must be positive");
    }
    if (!(schedule.growth_x >= 1.0) || !(schedule.growth_y >= 1.0)) {
        throw std::domain_error("schedule growth factors must be >= 1");
    }
    if (schedule.max_steps < 1) {
        throw std::domain_error("schedule.max_steps must be >= 1");
    }
}

const char* to_string(ExitReason reason) {
    switch (reason) {
        case ExitReason::ReachedFreestream: return "reached-freestream";
        case ExitReason::MaxSteps: return "max-steps";
    }
    return "unknown";
}

double cell_mean_velocity(const VelocityField& velocity, double x, double y, double dx,
                          double dy) {
    if (!(dx > 0.0) || !(dy > 0.0)) {
        throw std::domain_error("cell_mean_velocity: dx and dy must be positive");
    }
    const double u00 = velocity.at(x, y).u;
    const double u01 = velocity.at(x, y + dy).u;
    const double u11 = velocity.at(x + dx, y + dy).u;
    const double u10 = velocity.at(x + dx, y).u;
    return 0.25 * (u00 + u01 + u11 + u10);
}

DiffusionPath march(const VelocityField& velocity, const GridSchedule& schedule,
                    double epsilon_exit, double plate_length) {
    validate(schedule);
    if (!(epsilon_exit > 0.0) || epsilon_exit > 0.1) {
        throw std::domain_error("march: epsilon_exit must be in (0, 0.1]");
    }

    const PlateScenario& sc = velocity.scenario();
    const double alpha = velocity.coefficients().thermal_diffusivity;
    const double dtheta = sc.wall_temperature - sc.freestream_temperature;

    DiffusionPath path;
    path.scenario = sc;
    path.schedule = schedule;
    path.epsilon_exit = epsilon_exit;
    path.points.reserve(std::min<std::size_t>(schedule.max_steps, 4096));

    double x = sc.tracking_start;
    double y = 0.0;
    double t = 0.0;
    double dx = schedule.dx0;
    double dy = schedule.dy0;
    path.exit_reason = ExitReason::MaxSteps;

    for (std::size_t step = 1; step <= schedule.max_steps; ++step) {
        if (x + dx > plate_length) {
            throw std::domain_error("march: schedule extends past the plate length at step " +
                                    std::to_string(step));
        }
        const double u_mean = cell_mean_velocity(velocity, x, y, dx, dy);
        if (!(u_mean > 0.0)) {
            throw numerical_error("march: stationary cell (u_mean = 0) at step " +
                                  std::to_string(step));
        }
        const double dt = dx / u_mean;
        t += dt;
        x += dx;
        y += dy;

        const double excess = erf(y / std::sqrt(4.0 * alpha * t));  // (theta_w - theta)/dtheta
        const double theta = sc.wall_temperature - dtheta * excess;

        path.points.push_back({step, x, y, u_mean, dt, t, theta});

        const double excess_over_freestream = 1.0 - excess;
        if (dtheta == 0.0 || excess_over_freestream < epsilon_exit) {
            path.exit_reason = ExitReason::ReachedFreestream;
            break;
        }
        dx *= schedule.growth_x;
        dy *= schedule.growth_y;
    }

    path.diffusion_period = path.points.back().t_elapsed;
    path.exit_x = path.points.back().x;
    return path;
}

std::vector<PathPoint> replay_march(const PlateScenario& scenario,
                                    const DerivedCoefficients& coeffs,
                                    std::span<const double> y_values,
                                    std::span<const double> t_values) {
    if (y_values.size() != t_values.size() || y_values.empty()) {
        throw std::domain_error("replay_march: y and t sequences must be non-empty and equal");
    }
    for (std::size_t i = 0; i < y_values.size(); ++i) {
        if (!(t_values[i] > 0.0) || y_values[i] < 0.0) {
            throw std::domain_error("replay_march: y must be >= 0 and t > 0");
        }
        if (i > 0 && (y_values[i] <= y_values[i - 1] || t_values[i] <= t_values[i - 1])) {
            throw std::domain_error("replay_march: sequences must be strictly increasing");
        }
    }

    const double dtheta = scenario.wall_temperature - scenario.freestream_temperature;
    const double alpha = coeffs.thermal_diffusivity;
    const double nan = std::numeric_limits<double>::quiet_NaN();

    std::vector<PathPoint> points;
    points.reserve(y_values.size());
    for (std::size_t i = 0; i < y_values.size(); ++i) {
        const double t = t_values[i];
        const double theta =
            scenario.wall_temperature -
            dtheta * erf(y_values[i] / std::sqrt(4.0 * alpha * t));
        const double dt = i == 0 ? t : t - t_values[i - 1];
        points.push_back({i + 1, nan, y_values[i], nan, dt, t, theta});
    }
    return points;
}

double material_rate_along_path(std::span<const PathPoint> points, std::size_t i) {
    if (points.size() < 2 || i + 1 >= points.size()) {
        throw std::out_of_range("material_rate_along_path: need 0 <= i < size - 1");
    }
    return (points[i + 1].theta - points[i].theta) / points[i + 1].dt;
}

double eulerian_convective_term(const ThermalField& field, const VelocityField& velocity,
                                double x, double y) {
    if (field.nx() < 3 || field.ny() < 1) {
        throw std::domain_error("eulerian_convective_term: field grid too small");
    }
    const auto nearest = [](const std::vector<double>& grid, double q) {
        const auto it = std::lower_bound(grid.begin(), grid.end(), q);
        if (it == grid.begin()) return std::size_t{0};
        if (it == grid.end()) return grid.size() - 1;
        const auto hi = static_cast<std::size_t>(it - grid.begin());
        return (q - grid[hi - 1] <= grid[hi] - q) ? hi - 1 : hi;
    };
    const std::size_t i = nearest(field.x, x);
    const std::size_t j = nearest(field.y, y);
    if (i == 0 || i + 1 >= field.nx()) {
        throw std::domain_error("eulerian_convective_term: streamwise boundary node");
    }

    const double dtheta_dx =
        (field.at(i + 1, j) - field.at(i - 1, j)) / (field.x[i + 1] - field.x[i - 1]);
    return velocity.at(field.x[i], field.y[j]).u * dtheta_dx;
}

}  // namespace diffpath
