#include "diffpath/velocity_field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "diffpath/errors.hpp"

namespace diffpath {

namespace {

// -------------------------------------------------------------
// Polynomial profile shapes on eta = y/delta in [0, 1]
// -------------------------------------------------------------

// f(eta): u/U. F(eta) = integral of f, used for v via continuity.
double quartic_f(double eta) { return 2.0 * eta - 2.0 * eta * eta * eta + eta * eta * eta * eta; }
double quartic_F(double eta) {
    const double e2 = eta * eta;
    return e2 - 0.5 * e2 * e2 + 0.2 * e2 * e2 * eta;
}

double cubic_f(double eta) { return 1.5 * eta - 0.5 * eta * eta * eta; }
double cubic_F(double eta) {
    const double e2 = eta * eta;
    return 0.75 * e2 - 0.125 * e2 * e2;
}

double profile_c_delta(VelocityProfile profile) {
    switch (profile) {
        case VelocityProfile::Quartic: return 5.836;
        case VelocityProfile::Cubic: return 4.64;
        case VelocityProfile::Blasius: return 4.91;  // 99% thickness
    }
    throw std::logic_error("profile_c_delta: unknown profile");
}

struct BlasiusState {
    double f, fp, fpp;
};

BlasiusState blasius_rhs(const BlasiusState& s) {
    // f''' = -f f'' / 2 for eta = y sqrt(U/(nu x))
    return {s.fp, s.fpp, -0.5 * s.f * s.fpp};
}

BlasiusState rk4_step(const BlasiusState& s, double h) {
    auto add = [](const BlasiusState& a, const BlasiusState& b, double w) {
        return BlasiusState{a.f + w * b.f, a.fp + w * b.fp, a.fpp + w * b.fpp};
    };
    const BlasiusState k1 = blasius_rhs(s);
    const BlasiusState k2 = blasius_rhs(add(s, k1, 0.5 * h));
    const BlasiusState k3 = blasius_rhs(add(s, k2, 0.5 * h));
    const BlasiusState k4 = blasius_rhs(add(s, k3, h));
    BlasiusState out = s;
    out.f += h / 6.0 * (k1.f + 2.0 * k2.f + 2.0 * k3.f + k4.f);
    out.fp += h / 6.0 * (k1.fp + 2.0 * k2.fp + 2.0 * k3.fp + k4.fp);
    out.fpp += h / 6.0 * (k1.fpp + 2.0 * k2.fpp + 2.0 * k3.fpp + k4.fpp);
    return out;
}

// Integrates to eta_max and returns f'(eta_max) for a trial f''(0).
double shoot(double fpp0, double eta_max, double step) {
    BlasiusState s{0.0, 0.0, fpp0};
    const int n = static_cast<int>(std::llround(eta_max / step));
    for (int i = 0; i < n; ++i) {
        s = rk4_step(s, step);
    }
    return s.fp;
}

}  // namespace

void validate_flow(const PlateScenario& scenario) {
    if (!std::isfinite(scenario.approach_velocity) || scenario.approach_velocity <= 0.0) {
        throw std::domain_error("scenario.approach_velocity must be positive");
    }
    if (!std::isfinite(scenario.heated_start) || scenario.heated_start < 0.0) {
        throw std::domain_error("scenario.heated_start must be non-negative");
    }
    if (!std::isfinite(scenario.tracking_start) ||
        scenario.tracking_start <= scenario.heated_start) {
        throw std::domain_error("scenario.tracking_start must exceed scenario.heated_start");
    }
}

void validate(const PlateScenario& scenario) {
    validate_flow(scenario);
    if (!std::isfinite(scenario.wall_temperature) ||
        !std::isfinite(scenario.freestream_temperature)) {
        throw std::domain_error("scenario temperatures must be finite");
    }
    if (scenario.wall_temperature == scenario.freestream_temperature) {
        throw std::domain_error(
            "scenario.wall_temperature must differ from scenario.freestream_temperature");
    }
}

const char* to_string(VelocityProfile profile) {
    switch (profile) {
        case VelocityProfile::Quartic: return "quartic";
        case VelocityProfile::Cubic: return "cubic";
        case VelocityProfile::Blasius: return "blasius";
    }
    return "unknown";
}

BlasiusTable blasius_solve(double eta_max, double step) {
    if (!(eta_max >= 8.0)) {
        throw std::domain_error("blasius_solve: eta_max must be >= 8");
    }
    if (!(step > 0.0) || step > 0.01) {
        throw std::domain_error("blasius_solve: step must be in (0, 0.01]");
    }

    double lo = 0.1, hi = 1.0;
    double r_lo = shoot(lo, eta_max, step) - 1.0;
    double r_hi = shoot(hi, eta_max, step) - 1.0;
    if (r_lo * r_hi > 0.0) {
        throw numerical_error("blasius_solve: shooting failed to bracket f''(0)");
    }

    double mid = 0.5 * (lo + hi);
    double r_mid = 0.0;
    for (int iter = 0; iter < 200; ++iter) {
        mid = 0.5 * (lo + hi);
        r_mid = shoot(mid, eta_max, step) - 1.0;
        if (std::fabs(r_mid) < 1e-8) {
            break;
        }
        if (r_lo * r_mid <= 0.0) {
            hi = mid;
        } else {
            lo = mid;
            r_lo = r_mid;
        }
    }
    if (std::fabs(r_mid) >= 1e-8) {
        throw numerical_error("blasius_solve: bisection did not reach |f'(eta_max)-1| < 1e-8");
    }

    const int n = static_cast<int>(std::llround(eta_max / step));
    BlasiusTable table;
    table.eta.reserve(n + 1);
    table.f.reserve(n + 1);
    table.fp.reserve(n + 1);
    table.fpp.reserve(n + 1);
    BlasiusState s{0.0, 0.0, mid};
    for (int i = 0; i <= n; ++i) {
        table.eta.push_back(i * step);
        table.f.push_back(s.f);
        table.fp.push_back(s.fp);
        table.fpp.push_back(s.fpp);
        if (i < n) {
            s = rk4_step(s, step);
        }
    }
    return table;
}

VelocitySample blasius_velocity_at(double x, double y, const PlateScenario& scenario,
                                   const DerivedCoefficients& coeffs,
                                   const BlasiusTable& table) {
    if (!(x > 0.0)) {
        throw std::domain_error("blasius_velocity_at: x must be positive");
    }
    if (y < 0.0) {
        throw std::domain_error("blasius_velocity_at: y must be non-negative");
    }
    const double u_inf = scenario.approach_velocity;
    const double nu = coeffs.kinematic_viscosity;
    const double eta = y * std::sqrt(u_inf / (nu * x));

    double f, fp;
    if (eta >= table.eta.back()) {
        // Far field: f' = 1 and (eta f' - f) frozen at the table edge.
        fp = 1.0;
        f = table.f.back() + (eta - table.eta.back());
    } else {
        const auto it = std::upper_bound(table.eta.begin(), table.eta.end(), eta);
        const auto i = static_cast<std::size_t>(std::distance(table.eta.begin(), it)) - 1;
        const double w = (eta - table.eta[i]) / (table.eta[i + 1] - table.eta[i]);
        f = table.f[i] + w * (table.f[i + 1] - table.f[i]);
        fp = table.fp[i] + w * (table.fp[i + 1] - table.fp[i]);
    }

    VelocitySample out;
    out.u = u_inf * fp;
    out.v = 0.5 * std::sqrt(nu * u_inf / x) * (eta * fp - f);
    return out;
}

VelocityField::VelocityField(const PlateScenario& scenario, const DerivedCoefficients& coeffs,
                             VelocityProfile profile)
    : scenario_(scenario), coeffs_(coeffs), profile_(profile),
      c_delta_(profile_c_delta(profile)) {
    validate_flow(scenario_);
    if (profile_ == VelocityProfile::Blasius) {
        table_ = std::make_shared<const BlasiusTable>(blasius_solve(10.0, 0.005));
    }
}

double VelocityField::thickness(double x) const {
    if (!(x > 0.0)) {
        throw std::domain_error("bl_thickness: x must be positive");
    }
    return c_delta_ *
           std::sqrt(coeffs_.kinematic_viscosity * x / scenario_.approach_velocity);
}

VelocitySample VelocityField::at(double x, double y) const {
    if (!(x > 0.0)) {
        throw std::domain_error("velocity_at: x must be positive");
    }
    if (y < 0.0) {
        throw std::domain_error("velocity_at: y must be non-negative");
    }
    if (profile_ == VelocityProfile::Blasius) {
        return blasius_velocity_at(x, y, scenario_, coeffs_, *table_);
    }

    const double u_inf = scenario_.approach_velocity;
    const double delta = thickness(x);
    const double eta = std::min(y / delta, 1.0);
    const double f = profile_ == VelocityProfile::Quartic ? quartic_f(eta) : cubic_f(eta);
    const double F = profile_ == VelocityProfile::Quartic ? quartic_F(eta) : cubic_F(eta);

    // v from continuity: v = U delta'(x) [eta f - F] inside the layer,
    // constant above it (u_x = 0 there). delta' = delta / (2x).
    const double ddelta_dx = 0.5 * delta / x;
    VelocitySample out;
    if (y <= delta) {
        out.u = u_inf * f;
        out.v = u_inf * ddelta_dx * (eta * f - F);
    } else {
        out.u = u_inf;
        const double F1 = profile_ == VelocityProfile::Quartic ? quartic_F(1.0) : cubic_F(1.0);
        out.v = u_inf * ddelta_dx * (1.0 - F1);
    }
    return out;
}

double bl_thickness(double x, const PlateScenario& scenario,
                    const DerivedCoefficients& coeffs) {
    return VelocityField(scenario, coeffs).thickness(x);
}

VelocitySample velocity_at(double x, double y, const PlateScenario& scenario,
                           const DerivedCoefficients& coeffs) {
    return VelocityField(scenario, coeffs).at(x, y);
}

}  // namespace diffpath
