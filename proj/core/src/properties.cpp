#include "diffpath/properties.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace diffpath {

namespace {

void require_positive(double value, const char* field) {
    if (!std::isfinite(value) || value <= 0.0) {
        throw std::domain_error(std::string("fluid.") + field + " must be positive and finite");
    }
}

}  // namespace

void validate(const FluidProperties& props) {
    require_positive(props.dynamic_viscosity, "dynamic_viscosity");
    require_positive(props.density, "density");
    require_positive(props.heat_capacity, "heat_capacity");
    require_positive(props.thermal_conductivity, "thermal_conductivity");
    if (!std::isfinite(props.reference_temperature)) {
        throw std::domain_error("fluid.reference_temperature must be finite");
    }
}

DerivedCoefficients derive_coefficients(const FluidProperties& props) {
    validate(props);
    DerivedCoefficients out;
    out.kinematic_viscosity = props.dynamic_viscosity / props.density;
    out.thermal_diffusivity =
        props.thermal_conductivity / (props.density * props.heat_capacity);
    out.prandtl = out.kinematic_viscosity / out.thermal_diffusivity;
    return out;
}

}  // namespace diffpath
