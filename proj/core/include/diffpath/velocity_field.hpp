#ifndef DIFFPATH_VELOCITY_FIELD_HPP
#define DIFFPATH_VELOCITY_FIELD_HPP

/**
 * @file velocity_field.hpp
 * @brief Laminar flat-plate boundary-layer velocity field.
 *
 * The working profile is the Pohlhausen quartic f(eta) = 2 eta - 2 eta^3 +
 * eta^4 on eta = y/delta(x), delta = 5.836 sqrt(nu x / U). A cubic profile
 * and an exact Blasius evaluation are available behind the same interface;
 * the Blasius shooting solver doubles as the oracle for the polynomial
 * profiles. The wall-normal component v comes from continuity for the same
 * profile family (closed-form antiderivative in eta), so each choice is
 * self-consistent.
 */

#include <memory>
#include <vector>

#include "diffpath/properties.hpp"

namespace diffpath {

/// Flat-plate configuration: geometry, temperatures, approach flow.
struct PlateScenario {
    double approach_velocity = 0.0;       ///< U_inf [m/s]
    double wall_temperature = 0.0;        ///< theta_w [C], for x > heated_start
    double freestream_temperature = 0.0;  ///< theta_inf [C]
    double heated_start = 0.0;            ///< x0 [m], plate is unheated upstream
    double tracking_start = 0.0;          ///< x1 [m], where the heat entity leaves the wall
};

/// Throws std::domain_error naming the offending field. Checks the flow
/// fields and additionally requires distinct wall/freestream temperatures.
void validate(const PlateScenario& scenario);

/// Flow-only subset of validate(): velocity evaluation does not care about
/// the temperatures.
void validate_flow(const PlateScenario& scenario);

struct VelocitySample {
    double u = 0.0;  ///< streamwise [m/s]
    double v = 0.0;  ///< wall-normal [m/s]
};

enum class VelocityProfile { Quartic, Cubic, Blasius };

const char* to_string(VelocityProfile profile);

/// Similarity table for the Blasius equation f''' + f f''/2 = 0 with
/// eta = y sqrt(U / (nu x)). Immutable once built.
struct BlasiusTable {
    std::vector<double> eta;
    std::vector<double> f;
    std::vector<double> fp;   ///< f'
    std::vector<double> fpp;  ///< f''
    double wall_shear_slope() const { return fpp.front(); }  ///< f''(0)
};

/**
 * @brief Shooting solve of the Blasius equation.
 *
 * Fixed-step classical RK4 with bisection on f''(0) until
 * |f'(eta_max) - 1| < 1e-8. Requires eta_max >= 8 and step <= 0.01.
 *
 * @throws std::domain_error on bad arguments, numerical_error if the
 *         shooting bracket fails.
 */
BlasiusTable blasius_solve(double eta_max, double step);

/// Evaluates (u, v) from a Blasius table: u = U f'(eta),
/// v = 0.5 sqrt(nu U / x) (eta f' - f). Linear interpolation; arguments
/// beyond the table clamp to the far-field values.
VelocitySample blasius_velocity_at(double x, double y, const PlateScenario& scenario,
                                   const DerivedCoefficients& coeffs,
                                   const BlasiusTable& table);

/**
 * @brief Velocity evaluator with a pluggable profile.
 *
 * Pure once constructed; a Blasius table is solved at construction when
 * that profile is selected and shared immutably afterwards.
 */
class VelocityField {
public:
    VelocityField(const PlateScenario& scenario, const DerivedCoefficients& coeffs,
                  VelocityProfile profile = VelocityProfile::Quartic);

    /// delta(x) = C sqrt(nu x / U). C is 5.836 (quartic), 4.64 (cubic) or
    /// 4.91 (Blasius 99% thickness). Throws std::domain_error for x <= 0.
    double thickness(double x) const;

    /// (u, v) at (x, y). Throws std::domain_error for x <= 0 or y < 0.
    VelocitySample at(double x, double y) const;

    const PlateScenario& scenario() const { return scenario_; }
    const DerivedCoefficients& coefficients() const { return coeffs_; }
    VelocityProfile profile() const { return profile_; }
    double thickness_coefficient() const { return c_delta_; }

private:
    PlateScenario scenario_;
    DerivedCoefficients coeffs_;
    VelocityProfile profile_;
    double c_delta_;
    std::shared_ptr<const BlasiusTable> table_;
};

/// Quartic-profile boundary-layer thickness, delta = 5.836 sqrt(nu x / U).
double bl_thickness(double x, const PlateScenario& scenario,
                    const DerivedCoefficients& coeffs);

/// Quartic-profile velocity sample at (x, y).
VelocitySample velocity_at(double x, double y, const PlateScenario& scenario,
                           const DerivedCoefficients& coeffs);

}  // namespace diffpath

#endif  // DIFFPATH_VELOCITY_FIELD_HPP
