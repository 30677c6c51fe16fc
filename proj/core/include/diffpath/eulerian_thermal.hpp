#ifndef DIFFPATH_EULERIAN_THERMAL_HPP
#define DIFFPATH_EULERIAN_THERMAL_HPP

/**
 * @file eulerian_thermal.hpp
 * @brief Steady Eulerian temperature field over the heated flat plate.
 *
 * Analytic side: cubic temperature profile (3/2 eta_h - 1/2 eta_h^3) in
 * eta_h = y/delta_h(x), with the unheated-starting-length factor
 * [1 - (x0/x)^(3/4)]^(1/3). Two conventions for the thickness scale are
 * supported:
 *
 *  - squire: delta_h = (4.64/1.026) sqrt(nu x/U) Pr^(-1/3) [...]^(1/3),
 *    the classical integral result whose wall gradient reproduces
 *    Nu = 0.332 Re^(1/2) Pr^(1/3) [...]^(-1/3). This is what the
 *    finite-difference energy solve converges to.
 *  - momentum-scaled: delta_h = delta(x) Pr^(-1/3) [...]^(1/3), i.e. the
 *    thermal layer scaled directly off the momentum thickness of the
 *    selected velocity profile (C = 5.836 for the quartic). The Lagrangian
 *    marcher's temperatures ride this thicker surface.
 *
 * Oracle side: fd_energy_march space-marches u T_x + v T_y = alpha T_yy
 * with an implicit (tridiagonal) wall-normal solve per station.
 */

#include <string>
#include <vector>

#include "diffpath/properties.hpp"
#include "diffpath/velocity_field.hpp"

namespace diffpath {

enum class ThermalLayerModel { MomentumScaled, Squire };

const char* to_string(ThermalLayerModel model);

/// Classical integral-method thermal thickness coefficient, 4.64/1.026.
inline constexpr double kSquireThicknessCoefficient = 4.64 / 1.026;

/// Analytic thermal-field evaluator. Pure once constructed.
class ThermalModel {
public:
    ThermalModel(const PlateScenario& scenario, const DerivedCoefficients& coeffs,
                 ThermalLayerModel model = ThermalLayerModel::MomentumScaled,
                 double velocity_c_delta = 5.836);

    /// Construct with the thickness scale tied to a velocity field's profile.
    ThermalModel(const VelocityField& velocity, ThermalLayerModel model);

    /// delta_h(x). Throws std::domain_error for x <= heated_start.
    double thermal_thickness(double x) const;

    /// Cubic-profile temperature at (x, y). Returns the freestream value for
    /// x <= heated_start (unheated upstream region, not an error) and for
    /// y >= delta_h(x).
    double temperature(double x, double y) const;

    const PlateScenario& scenario() const { return scenario_; }
    const DerivedCoefficients& coefficients() const { return coeffs_; }
    ThermalLayerModel layer_model() const { return model_; }
    double thickness_coefficient() const { return c_h_; }
    double prandtl_exponent() const { return 1.0 / 3.0; }

private:
    PlateScenario scenario_;
    DerivedCoefficients coeffs_;
    ThermalLayerModel model_;
    double c_h_;  ///< coefficient multiplying sqrt(nu x / U)
};

/// Nu_x = 0.332 Re_x^(1/2) Pr^(1/3) [1 - (x0/x)^(3/4)]^(-1/3).
/// Throws std::domain_error for x <= heated_start.
double local_nusselt(double x, const PlateScenario& scenario,
                     const DerivedCoefficients& coeffs);

/// Sampled temperature field on a rectangular mesh.
struct ThermalField {
    std::vector<double> x;       ///< strictly increasing [m]
    std::vector<double> y;       ///< strictly increasing from 0 [m]
    std::vector<double> theta;   ///< row-major, theta[ix * ny + iy] [C]
    std::string origin;          ///< "analytic" | "fd-oracle"
    std::string profile;         ///< velocity profile name
    std::string layer_model;     ///< thermal thickness convention
    double c_delta = 0.0;        ///< velocity thickness coefficient
    double c_thermal = 0.0;      ///< thermal thickness coefficient
    double pr_exponent = 1.0 / 3.0;

    std::size_t nx() const { return x.size(); }
    std::size_t ny() const { return y.size(); }
    double at(std::size_t ix, std::size_t iy) const { return theta[ix * ny() + iy]; }

    /// Bilinear interpolation. Throws std::domain_error outside the grid.
    double interpolate(double xq, double yq) const;
};

/// Grid for the marching energy solve: nx stations over [x_min, x_max],
/// ny wall-normal points over [0, y_max].
struct FieldGridSpec {
    double x_min = 0.0;
    double x_max = 0.0;
    std::size_t nx = 0;
    double y_max = 0.0;
    std::size_t ny = 0;
};

/// A grid that resolves the thermal layer of the given analytic model over
/// [heated_start, x_max] with y_max = 2.2 * delta_h(x_max).
FieldGridSpec default_field_grid(const ThermalModel& model, double x_max,
                                 std::size_t nx = 1100, std::size_t ny = 600);

/**
 * @brief Finite-difference solve of u T_x + v T_y = alpha T_yy.
 *
 * Space-marching in x (first order, fully implicit), upwind v-advection and
 * centered diffusion in y solved by a tridiagonal sweep per station. The
 * resulting system is an M-matrix, so the discrete maximum principle holds
 * unconditionally. Boundary conditions: wall temperature for x > x0, else
 * freestream; freestream at y_max and at the inlet.
 *
 * Preconditions (std::domain_error): nx >= 100, ny >= 200, y_max at least
 * twice the squire-model delta_h(x_max), x_min <= heated_start... see source.
 * Throws numerical_error with the station index on tridiagonal breakdown.
 */
ThermalField fd_energy_march(const VelocityField& velocity, const FieldGridSpec& grid);

/// Samples an analytic model onto a mesh (origin "analytic").
ThermalField sample_field(const ThermalModel& model, const FieldGridSpec& grid);

}  // namespace diffpath

#endif  // DIFFPATH_EULERIAN_THERMAL_HPP
