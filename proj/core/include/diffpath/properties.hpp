#ifndef DIFFPATH_PROPERTIES_HPP
#define DIFFPATH_PROPERTIES_HPP

/**
 * @file properties.hpp
 * @brief Fluid constants and the derived transport coefficients.
 *
 * All quantities are SI. Heat capacity is stored in J/(kg K); property
 * tables usually quote kJ/(kg K), so convert at ingestion (the config
 * layer does this for its `heat_capacity_kj` key).
 */

namespace diffpath {

/// Raw fluid constants, as read from a property table.
struct FluidProperties {
    double dynamic_viscosity = 0.0;      ///< mu  [kg/(m s)]
    double density = 0.0;                ///< rho [kg/m^3]
    double heat_capacity = 0.0;          ///< c_p [J/(kg K)]
    double thermal_conductivity = 0.0;   ///< k   [W/(m K)]
    double reference_temperature = 0.0;  ///< temperature the constants were read at [C]
};

/// Transport coefficients derived from FluidProperties.
struct DerivedCoefficients {
    double kinematic_viscosity = 0.0;  ///< nu = mu/rho        [m^2/s]
    double thermal_diffusivity = 0.0;  ///< alpha = k/(rho c_p) [m^2/s]
    double prandtl = 0.0;              ///< Pr = nu/alpha
};

/// Throws std::domain_error naming the offending field if any physical
/// constant is non-positive or any field is non-finite.
void validate(const FluidProperties& props);

/// nu = mu/rho, alpha = k/(rho c_p), Pr = nu/alpha. Pure and deterministic.
DerivedCoefficients derive_coefficients(const FluidProperties& props);

}  // namespace diffpath

#endif  // DIFFPATH_PROPERTIES_HPP
