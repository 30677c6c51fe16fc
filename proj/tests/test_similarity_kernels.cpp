#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "diffpath/eulerian_thermal.hpp"
#include "diffpath/properties.hpp"
#include "diffpath/similarity_kernels.hpp"
#include "diffpath/velocity_field.hpp"
#include "test_support.hpp"

using namespace diffpath;

namespace {

StokesLayer water_layer() {
    return {derive_coefficients(testsupport::water()).kinematic_viscosity, 0.2};
}

HigbieProfile water_profile() {
    return {derive_coefficients(testsupport::water()).thermal_diffusivity, 25.0, 20.0, 0.603};
}

}  // namespace

TEST_CASE("impulsive-start velocity honours both boundary conditions") {
    const StokesLayer layer = water_layer();
    CHECK(stokes_velocity(0.0, 1.0, layer) == 0.0);
    CHECK(stokes_velocity(1.0, 1.0, layer) == doctest::Approx(0.2).epsilon(1e-12));

    // eta_s = 1 at y = sqrt(4 nu t)
    const double y1 = std::sqrt(4.0 * layer.kinematic_viscosity * 2.0);
    CHECK(stokes_velocity(y1, 2.0, layer) == doctest::Approx(0.2 * 0.8427008).epsilon(1e-6));

    CHECK_THROWS_AS(stokes_velocity(1e-3, 0.0, layer), std::domain_error);
    CHECK_THROWS_AS(stokes_velocity(-1e-3, 1.0, layer), std::domain_error);
}

TEST_CASE("impulsive-start solution is self-similar in y/sqrt(t)") {
    const StokesLayer layer = water_layer();
    for (double t : {0.01, 0.1, 1.0, 10.0}) {
        for (double frac : {0.1, 0.5, 1.0, 2.0}) {
            const double y = frac * std::sqrt(4.0 * layer.kinematic_viscosity * t);
            const double a = stokes_velocity(y, t, layer);
            const double b = stokes_velocity(2.0 * y, 4.0 * t, layer);
            CHECK(std::fabs(a - b) <= 1e-12 * 0.2);
        }
    }
}

TEST_CASE("diffusion-equation solve converges on the erf solution") {
    const StokesLayer layer = water_layer();
    const double t_end = 0.1;
    const double y_max = 6.0 * std::sqrt(4.0 * layer.kinematic_viscosity * t_end);

    const double base = stokes_fd_check(layer, y_max, t_end, {400, 400});
    CHECK(base <= 1e-3 * layer.freestream_velocity);

    // Refinement with dt ~ dy^2 decreases the error monotonically.
    const double fine = stokes_fd_check(layer, y_max, t_end, {800, 1600});
    const double finest = stokes_fd_check(layer, y_max, t_end, {1600, 6400});
    CHECK(fine < base);
    CHECK(finest < fine);

    CHECK_THROWS_AS(stokes_fd_check(layer, 0.5 * y_max, t_end, {400, 400}),
                    std::domain_error);
}

TEST_CASE("seeding the solve with the exact profile leaves almost no error") {
    const StokesLayer layer = water_layer();
    const double t_end = 0.1;
    const double y_max = 6.0 * std::sqrt(4.0 * layer.kinematic_viscosity * t_end);

    const double near = stokes_fd_check(layer, y_max, t_end, {400, 50}, 0.0999);
    const double far = stokes_fd_check(layer, y_max, t_end, {400, 50}, 0.09);
    CHECK(near < far);
    CHECK(near <= 1e-5 * layer.freestream_velocity);
}

TEST_CASE("cubic penetration profile evaluates its landmarks") {
    CHECK(higbie_temperature_ratio(0.0) == 0.0);
    CHECK(higbie_temperature_ratio(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(higbie_temperature_ratio(0.5) == doctest::Approx(0.6875).epsilon(1e-15));
    CHECK_THROWS_AS(higbie_temperature_ratio(-0.01), std::domain_error);
    CHECK_THROWS_AS(higbie_temperature_ratio(1.01), std::domain_error);
}

TEST_CASE("penetration thickness follows 2 sqrt(2 alpha t)") {
    const HigbieProfile profile = water_profile();
    CHECK(higbie_thickness(4.0, profile) ==
          doctest::Approx(2.0 * higbie_thickness(1.0, profile)).epsilon(1e-14));
    // alpha = 1.4448e-7: 2 sqrt(2.8896e-7) = 1.0751e-3
    CHECK(higbie_thickness(1.0, profile) == doctest::Approx(1.0752e-3).epsilon(5e-4));
    CHECK_THROWS_AS(higbie_thickness(0.0, profile), std::domain_error);
}

TEST_CASE("wall flux is the cubic gradient through the transient thickness") {
    const HigbieProfile profile = water_profile();
    for (double t : {0.01, 0.5, 1.0, 30.0}) {
        const double q = higbie_wall_flux(t, profile);
        const double identity =
            q * higbie_thickness(t, profile) / (profile.conductivity * 5.0);
        CHECK(identity == doctest::Approx(1.5).epsilon(1e-14));
    }
    CHECK(higbie_wall_flux(4.0, profile) ==
          doctest::Approx(0.5 * higbie_wall_flux(1.0, profile)).epsilon(1e-14));
    // 0.53 k dtheta / sqrt(alpha t) at t = 1 is about 4.204e3 W/m^2
    CHECK(higbie_wall_flux(1.0, profile) == doctest::Approx(4.204e3).epsilon(1e-3));
    CHECK_THROWS_AS(higbie_wall_flux(-1.0, profile), std::domain_error);
}

TEST_CASE("exposure time is streamwise distance over approach velocity") {
    CHECK(higbie_timescale(0.2, 0.2) == 1.0);
    CHECK(higbie_timescale(0.1, 0.2) == 0.5);
    CHECK_THROWS_AS(higbie_timescale(0.0, 0.2), std::domain_error);
    CHECK_THROWS_AS(higbie_timescale(0.1, 0.0), std::domain_error);
}

TEST_CASE("layer-thickness time scale is quadratic in the thickness") {
    const VelocityField vel(testsupport::scenario(),
                            derive_coefficients(testsupport::water()));
    const ThermalModel sq(vel, ThermalLayerModel::Squire);

    CHECK(trinh_keey_timescale(0.05 * 1.0000001, sq) < 1e-4);
    const double t1 = trinh_keey_timescale(0.15, sq);
    const double d1 = sq.thermal_thickness(0.15);
    const double t2 = trinh_keey_timescale(0.25, sq);
    const double d2 = sq.thermal_thickness(0.25);
    CHECK(t2 / t1 == doctest::Approx((d2 * d2) / (d1 * d1)).epsilon(1e-12));
    CHECK_THROWS_AS(trinh_keey_timescale(0.05, sq), std::domain_error);
}

TEST_CASE("penetration flux at the layer time scale reproduces the steady flux") {
    const auto sc = testsupport::scenario();
    const auto co = derive_coefficients(testsupport::water());
    const VelocityField vel(sc, co);
    const ThermalModel sq(vel, ThermalLayerModel::Squire);
    const HigbieProfile profile = water_profile();

    double worst = 0.0;
    for (double x = 0.10; x <= 0.301; x += 0.01) {
        const double q_pen = higbie_wall_flux(trinh_keey_timescale(x, sq), profile);
        const double q_steady = local_nusselt(x, sc, co) * 0.603 * 5.0 / x;
        worst = std::max(worst, std::fabs(q_pen - q_steady) / q_steady);
    }
    CHECK(worst < 0.08);
}

TEST_CASE("layer time scale differs from the exposure time in general") {
    const auto sc = testsupport::scenario();
    const VelocityField vel(sc, derive_coefficients(testsupport::water()));
    const ThermalModel sq(vel, ThermalLayerModel::Squire);
    const double t_layer = trinh_keey_timescale(0.2, sq);
    const double t_exposure = higbie_timescale(0.2, sc.approach_velocity);
    CHECK(std::fabs(t_layer - t_exposure) / t_exposure > 0.1);
}
