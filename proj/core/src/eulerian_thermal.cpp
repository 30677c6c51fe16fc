#include "diffpath/eulerian_thermal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "diffpath/errors.hpp"

namespace diffpath {

namespace {

// [1 - (x0/x)^(3/4)]^(1/3) for x > x0 >= 0.
double unheated_start_factor(double x, double x0) {
    if (x0 <= 0.0) {
        return 1.0;
    }
    return std::cbrt(1.0 - std::pow(x0 / x, 0.75));
}

}  // namespace

const char* to_string(ThermalLayerModel model) {
    switch (model) {
        case ThermalLayerModel::MomentumScaled: return "momentum-scaled";
        case ThermalLayerModel::Squire: return "squire";
    }
    return "unknown";
}

ThermalModel::ThermalModel(const PlateScenario& scenario, const DerivedCoefficients& coeffs,
                           ThermalLayerModel model, double velocity_c_delta)
    : scenario_(scenario), coeffs_(coeffs), model_(model) {
    validate_flow(scenario_);
    c_h_ = model == ThermalLayerModel::Squire ? kSquireThicknessCoefficient : velocity_c_delta;
}

ThermalModel::ThermalModel(const VelocityField& velocity, ThermalLayerModel model)
    : ThermalModel(velocity.scenario(), velocity.coefficients(), model,
                   velocity.thickness_coefficient()) {}

double ThermalModel::thermal_thickness(double x) const {
    if (!(x > scenario_.heated_start)) {
        throw std::domain_error("thermal_thickness: x must exceed heated_start");
    }
    const double scale =
        std::sqrt(coeffs_.kinematic_viscosity * x / scenario_.approach_velocity);
    return c_h_ * scale * std::pow(coeffs_.prandtl, -prandtl_exponent()) *
           unheated_start_factor(x, scenario_.heated_start);
}

double ThermalModel::temperature(double x, double y) const {
    if (y < 0.0) {
        throw std::domain_error("pohlhausen_temperature: y must be non-negative");
    }
    if (x <= scenario_.heated_start) {
        return scenario_.freestream_temperature;  // fluid still unheated here
    }
    const double eta = std::min(y / thermal_thickness(x), 1.0);
    const double ratio = 1.5 * eta - 0.5 * eta * eta * eta;
    return scenario_.wall_temperature +
           (scenario_.freestream_temperature - scenario_.wall_temperature) * ratio;
}

double local_nusselt(double x, const PlateScenario& scenario,
                     const DerivedCoefficients& coeffs) {
    if (!(x > scenario.heated_start)) {
        throw std::domain_error("local_nusselt: x must exceed heated_start");
    }
    const double re_x = scenario.approach_velocity * x / coeffs.kinematic_viscosity;
    return 0.332 * std::sqrt(re_x) * std::cbrt(coeffs.prandtl) /
           unheated_start_factor(x, scenario.heated_start);
}

double ThermalField::interpolate(double xq, double yq) const {
    if (xq < x.front() || xq > x.back() || yq < y.front() || yq > y.back()) {
        throw std::domain_error("ThermalField::interpolate: point (" + std::to_string(xq) +
                                ", " + std::to_string(yq) + ") outside field grid");
    }
    const auto ix_hi = std::upper_bound(x.begin(), x.end(), xq);
    const std::size_t i = std::min<std::size_t>(
        x.size() - 2, ix_hi == x.begin() ? 0 : static_cast<std::size_t>(ix_hi - x.begin()) - 1);
    const auto iy_hi = std::upper_bound(y.begin(), y.end(), yq);
    const std::size_t j = std::min<std::size_t>(
        y.size() - 2, iy_hi == y.begin() ? 0 : static_cast<std::size_t>(iy_hi - y.begin()) - 1);

    const double tx = (xq - x[i]) / (x[i + 1] - x[i]);
    const double ty = (yq - y[j]) / (y[j + 1] - y[j]);
    const double t00 = at(i, j), t01 = at(i, j + 1);
    const double t10 = at(i + 1, j), t11 = at(i + 1, j + 1);
    return (1.0 - tx) * ((1.0 - ty) * t00 + ty * t01) + tx * ((1.0 - ty) * t10 + ty * t11);
}

FieldGridSpec default_field_grid(const ThermalModel& model, double x_max, std::size_t nx,
                                 std::size_t ny) {
    FieldGridSpec grid;
    grid.x_min = model.scenario().heated_start;
    grid.x_max = x_max;
    grid.nx = nx;
    grid.y_max = 2.2 * model.thermal_thickness(x_max);
    grid.ny = ny;
    return grid;
}

namespace {

void check_grid(const FieldGridSpec& grid, const VelocityField& velocity) {
    const PlateScenario& sc = velocity.scenario();
    if (grid.nx < 100) {
        throw std::domain_error("fd_energy_march: grid.nx must be >= 100");
    }
    if (grid.ny < 200) {
        throw std::domain_error("fd_energy_march: grid.ny must be >= 200");
    }
    if (!(grid.x_min > 0.0) || !(grid.x_max > grid.x_min)) {
        throw std::domain_error("fd_energy_march: need 0 < x_min < x_max");
    }
    if (grid.x_min > sc.heated_start) {
        throw std::domain_error(
            "fd_energy_march: x_min must not exceed heated_start (uniform inlet)");
    }
    // The wall-normal span must cover the thermal layer with headroom.
    const ThermalModel squire(velocity.scenario(), velocity.coefficients(),
                              ThermalLayerModel::Squire);
    if (grid.y_max < 2.0 * squire.thermal_thickness(grid.x_max)) {
        throw std::domain_error(
            "fd_energy_march: y_max must span at least twice delta_h(x_max)");
    }
}

}  // namespace

ThermalField fd_energy_march(const VelocityField& velocity, const FieldGridSpec& grid) {
    check_grid(grid, velocity);

    const PlateScenario& sc = velocity.scenario();
    const double alpha = velocity.coefficients().thermal_diffusivity;
    const double theta_w = sc.wall_temperature;
    const double theta_inf = sc.freestream_temperature;

    const std::size_t nx = grid.nx;
    const std::size_t ny = grid.ny;
    const double dy = grid.y_max / static_cast<double>(ny - 1);
    const double dx = (grid.x_max - grid.x_min) / static_cast<double>(nx - 1);

    ThermalField field;
    field.x.resize(nx);
    field.y.resize(ny);
    field.theta.assign(nx * ny, theta_inf);
    field.origin = "fd-oracle";
    field.profile = to_string(velocity.profile());
    field.layer_model = "fd";
    field.c_delta = velocity.thickness_coefficient();
    field.c_thermal = 0.0;

    for (std::size_t i = 0; i < nx; ++i) {
        field.x[i] = grid.x_min + dx * static_cast<double>(i);
    }
    for (std::size_t j = 0; j < ny; ++j) {
        field.y[j] = dy * static_cast<double>(j);
    }

    std::vector<double> prev(field.theta.begin(), field.theta.begin() + ny);  // inlet column
    std::vector<double> lower(ny), diag(ny), upper(ny), rhs(ny), work(ny), col(ny);

    for (std::size_t i = 1; i < nx; ++i) {
        const double x = field.x[i];
        const bool heated = x > sc.heated_start;

        // Wall and far-field rows are Dirichlet.
        diag[0] = 1.0;
        upper[0] = 0.0;
        rhs[0] = heated ? theta_w : theta_inf;
        diag[ny - 1] = 1.0;
        lower[ny - 1] = 0.0;
        rhs[ny - 1] = theta_inf;

        for (std::size_t j = 1; j + 1 < ny; ++j) {
            const VelocitySample vel = velocity.at(x, field.y[j]);
            const double adv_x = vel.u / dx;
            const double dif = alpha / (dy * dy);

            double lo = -dif;
            double di = adv_x + 2.0 * dif;
            double up = -dif;
            if (vel.v >= 0.0) {
                lo -= vel.v / dy;
                di += vel.v / dy;
            } else {
                di -= vel.v / dy;
                up += vel.v / dy;
            }
            lower[j] = lo;
            diag[j] = di;
            upper[j] = up;
            rhs[j] = adv_x * prev[j];
        }

        // Thomas sweep.
        double piv = diag[0];
        col[0] = rhs[0] / piv;
        for (std::size_t j = 1; j < ny; ++j) {
            work[j] = upper[j - 1] / piv;
            piv = diag[j] - lower[j] * work[j];
            if (std::fabs(piv) < 1e-300) {
                throw numerical_error("fd_energy_march: tridiagonal breakdown at station " +
                                      std::to_string(i));
            }
            col[j] = (rhs[j] - lower[j] * col[j - 1]) / piv;
        }
        for (std::size_t j = ny - 1; j-- > 0;) {
            col[j] -= work[j + 1] * col[j + 1];
        }

        std::copy(col.begin(), col.end(), field.theta.begin() + i * ny);
        prev = col;
    }
    return field;
}

ThermalField sample_field(const ThermalModel& model, const FieldGridSpec& grid) {
    if (grid.nx < 2 || grid.ny < 2 || !(grid.x_max > grid.x_min) || !(grid.y_max > 0.0)) {
        throw std::domain_error("sample_field: degenerate grid spec");
    }
    ThermalField field;
    field.x.resize(grid.nx);
    field.y.resize(grid.ny);
    field.theta.resize(grid.nx * grid.ny);
    field.origin = "analytic";
    field.profile = "";
    field.layer_model = to_string(model.layer_model());
    field.c_thermal = model.thickness_coefficient();
    field.pr_exponent = model.prandtl_exponent();

    const double dx = (grid.x_max - grid.x_min) / static_cast<double>(grid.nx - 1);
    const double dy = grid.y_max / static_cast<double>(grid.ny - 1);
    for (std::size_t i = 0; i < grid.nx; ++i) {
        field.x[i] = grid.x_min + dx * static_cast<double>(i);
    }
    for (std::size_t j = 0; j < grid.ny; ++j) {
        field.y[j] = dy * static_cast<double>(j);
    }
    for (std::size_t i = 0; i < grid.nx; ++i) {
        for (std::size_t j = 0; j < grid.ny; ++j) {
            field.theta[i * grid.ny + j] = model.temperature(field.x[i], field.y[j]);
        }
    }
    return field;
}

}  // namespace diffpath
