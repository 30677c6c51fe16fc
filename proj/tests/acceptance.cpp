// Acceptance suite: one case per shipped criterion, each printing a
// PASS/FAIL line with the measured numbers.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "diffpath/config.hpp"
#include "diffpath/diffusion_path.hpp"
#include "diffpath/eulerian_thermal.hpp"
#include "diffpath/properties.hpp"
#include "diffpath/similarity_kernels.hpp"
#include "diffpath/special_functions.hpp"
#include "diffpath/validation.hpp"
#include "diffpath/velocity_field.hpp"
#include "test_support.hpp"

using namespace diffpath;

namespace {

void announce(int criterion, bool pass, const std::string& detail) {
    std::printf("ACCEPTANCE %d: %s — %s\n", criterion, pass ? "PASS" : "FAIL",
                detail.c_str());
    std::fflush(stdout);
}

VelocityField water_field() {
    return VelocityField(testsupport::scenario(), derive_coefficients(testsupport::water()));
}

}  // namespace

TEST_CASE("criterion 1: temperature chain replay") {
    const auto co = derive_coefficients(testsupport::water());
    const auto points = replay_march(testsupport::scenario(), co,
                                     std::vector<double>{1.64337e-5, 3.28754e-5},
                                     std::vector<double>{0.334371309, 0.446520419});
    const double err1 = std::fabs(points[0].theta - 24.78933904);
    const double err2 = std::fabs(points[1].theta - 24.63574535);

    // The same chain through the CLI replay subcommand.
    const auto dir = testsupport::fresh_dir("acc1");
    {
        std::ofstream chain(dir / "chain.csv");
        chain << "y_m,t_s\n1.64337e-5,0.334371309\n3.28754e-5,0.446520419\n";
    }
    const auto cli = testsupport::run_cli("replay --input " + (dir / "chain.csv").string() +
                                          " --out " + dir.string());

    const bool pass = err1 < 5e-3 && err2 < 5e-3 && cli.exit_code == 0 &&
                      cli.output.find("theta_C=24.789") != std::string::npos &&
                      cli.output.find("theta_C=24.635") != std::string::npos;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "replay temps %.8f / %.8f C, offsets %.2e / %.2e C (tol 5e-3)",
                  points[0].theta, points[1].theta, err1, err2);
    announce(1, pass, buf);
    CHECK(pass);
}

TEST_CASE("criterion 2: derived properties") {
    const DerivedCoefficients co = derive_coefficients(testsupport::water());
    const bool nu_ok = std::fabs(co.kinematic_viscosity - 1.00401e-6) / 1.00401e-6 < 5e-5;
    const bool alpha_ok = std::fabs(co.thermal_diffusivity - 1.4448e-7) / 1.4448e-7 < 5e-5;
    const double pr_rel = std::fabs(co.prandtl - 6.935296) / 6.935296;

    const auto cli = testsupport::run_cli("properties");
    const bool note_ok = cli.exit_code == 0 &&
                         cli.output.find("differs from tabulated") != std::string::npos;

    const bool pass = nu_ok && alpha_ok && pr_rel < 0.005 && note_ok;
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "nu=%.6e alpha=%.6e Pr=%.5f (%.2f%% off the tabulated value, noted in "
                  "output: %s)",
                  co.kinematic_viscosity, co.thermal_diffusivity, co.prandtl,
                  100.0 * pr_rel, note_ok ? "yes" : "no");
    announce(2, pass, buf);
    CHECK(pass);
}

TEST_CASE("criterion 3: error-function accuracy") {
    double worst = 0.0;
    for (int i = 0; i <= 999; ++i) {
        const double z = -4.0 + 8.0 * static_cast<double>(i) / 999.0;
        worst = std::max(worst, std::fabs(diffpath::erf(z) -
                                          erf_series_oracle(z, 1e-12)));
    }
    bool odd_ok = true;
    bool monotone_ok = true;
    double prev = -2.0;
    for (int i = 0; i <= 2000; ++i) {
        const double z = -6.0 + 12.0 * static_cast<double>(i) / 2000.0;
        odd_ok = odd_ok && diffpath::erf(-z) == -diffpath::erf(z);
        const double v = diffpath::erf(z);
        monotone_ok = monotone_ok && v >= prev;
        prev = v;
    }

    const bool pass = worst <= 1.5e-7 && odd_ok && monotone_ok;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "max |erf - series| = %.3e (tol 1.5e-7), odd symmetry %s, monotone %s",
                  worst, odd_ok ? "exact" : "broken", monotone_ok ? "yes" : "no");
    announce(3, pass, buf);
    CHECK(pass);
}

TEST_CASE("criterion 4: impulsive-start kernel vs its FD oracle") {
    const auto co = derive_coefficients(testsupport::water());
    const StokesLayer layer{co.kinematic_viscosity, 0.2};
    const double t_end = 0.1;
    const double y_max = 6.0 * std::sqrt(4.0 * layer.kinematic_viscosity * t_end);

    // Backward Euler in t, second order in y; dt ~ dy^2 coupling makes the
    // theoretical order 2 in dy.
    const double e0 = stokes_fd_check(layer, y_max, t_end, {400, 400});
    const double e1 = stokes_fd_check(layer, y_max, t_end, {800, 1600});
    const double e2 = stokes_fd_check(layer, y_max, t_end, {1600, 6400});
    const double order1 = std::log2(e0 / e1);
    const double order2 = std::log2(e1 / e2);

    const bool pass = e0 <= 1e-3 * layer.freestream_velocity &&
                      std::fabs(order1 - 2.0) <= 0.3 && std::fabs(order2 - 2.0) <= 0.3;
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "L-inf error %.3e m/s (tol %.1e) at 400 points; observed orders %.2f, "
                  "%.2f (theoretical 2)",
                  e0, 1e-3 * layer.freestream_velocity, order1, order2);
    announce(4, pass, buf);
    CHECK(pass);
}

TEST_CASE("criterion 5: Eulerian field vs the energy-equation oracle") {
    const VelocityField vel = water_field();
    const ThermalModel ms(vel, ThermalLayerModel::MomentumScaled);
    const ThermalModel squire(vel, ThermalLayerModel::Squire);
    const FieldGridSpec grid = default_field_grid(ms, 0.32, 1100, 600);
    const ThermalField fd = fd_energy_march(vel, grid);

    double worst = 0.0;
    for (std::size_t i = 0; i < fd.nx(); ++i) {
        if (fd.x[i] < 0.06 || fd.x[i] > 0.30) continue;
        for (std::size_t j = 0; j < fd.ny(); ++j) {
            worst = std::max(worst,
                             std::fabs(fd.at(i, j) - squire.temperature(fd.x[i], fd.y[j])));
        }
    }

    FieldGridSpec fine = grid;
    fine.ny = 2 * grid.ny - 1;
    const ThermalField fd_fine = fd_energy_march(vel, fine);
    double conv = 0.0;
    for (std::size_t i = 0; i < fd.nx(); ++i) {
        for (std::size_t j = 0; j < fd.ny(); ++j) {
            conv = std::max(conv, std::fabs(fd.at(i, j) - fd_fine.at(i, 2 * j)));
        }
    }

    const bool pass = worst <= 0.03 * 5.0 && conv <= 0.005 * 5.0;
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "max |analytic - FD| = %.2f%% of dtheta on x in [0.06, 0.30] (tol 3%%); "
                  "ny-doubling delta %.3f%% (tol 0.5%%)",
                  100.0 * worst / 5.0, 100.0 * conv / 5.0);
    announce(5, pass, buf);
    CHECK(pass);
}

TEST_CASE("criterion 6: trajectory overlay on the temperature surface") {
    const auto dir = testsupport::fresh_dir("acc6");
    const auto cli = testsupport::run_cli("report --out " + dir.string());
    bool pass = cli.exit_code == 0;
    double rms_pct = -1.0, t_d = -1.0, exit_x = -1.0;
    std::size_t count = 0;
    if (pass) {
        const auto doc = nlohmann::json::parse(testsupport::slurp(dir / "report.json"));
        rms_pct = doc["rms_pct_dtheta"].get<double>();
        t_d = doc["t_d_s"].get<double>();
        exit_x = doc["exit_x_m"].get<double>();
        count = doc["point_count"].get<std::size_t>();
        pass = rms_pct <= 2.0 && exit_x > 0.10 && t_d > 0.0 && std::isfinite(t_d);
    }
    char buf[240];
    std::snprintf(buf, sizeof(buf),
                  "default report: %zu points, RMS %.3f%% of dtheta (tol 2%%), exit_x %.4f m "
                  "(> 0.10), t_d %.3f s; the quoted 0.01%%/38-point/0.235 m/1.207 s chain is "
                  "schedule-specific and not bit-reproducible",
                  count, rms_pct, exit_x, t_d);
    announce(6, pass, buf);
    CHECK(pass);
}

TEST_CASE("criterion 7: penetration flux at the layer time scale") {
    const auto sc = testsupport::scenario();
    const auto co = derive_coefficients(testsupport::water());
    const VelocityField vel(sc, co);
    const ThermalModel squire(vel, ThermalLayerModel::Squire);
    const HigbieProfile profile{co.thermal_diffusivity, sc.wall_temperature,
                                sc.freestream_temperature, 0.603};

    double worst = 0.0;
    for (double x = 0.10; x <= 0.301; x += 0.005) {
        const double q_pen = higbie_wall_flux(trinh_keey_timescale(x, squire), profile);
        const double q_steady = local_nusselt(x, sc, co) * 0.603 * 5.0 / x;
        worst = std::max(worst, std::fabs(q_pen - q_steady) / q_steady);
    }

    const bool pass = worst < 0.08;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "worst |q_penetration - q_steady| / q_steady = %.4f on x in [0.10, 0.30] "
                  "(tol 0.08)",
                  worst);
    announce(7, pass, buf);
    CHECK(pass);
}

TEST_CASE("criterion 8: convection is not negligible along the path") {
    const VelocityField vel = water_field();
    const ThermalModel squire(vel, ThermalLayerModel::Squire);
    const DiffusionPath path = march(vel, GridSchedule{});
    const ThermalField field =
        sample_field(squire, FieldGridSpec{0.06, 0.30, 481, 4.0e-3, 401});

    double best = 0.0, at_x = 0.0, at_y = 0.0;
    bool signs_ok = true;
    for (std::size_t i = 0; i + 1 < path.points.size(); ++i) {
        const auto& p = path.points[i];
        if (p.x < 0.115 || p.x > 0.165) continue;
        const double rate = material_rate_along_path(path.points, i);
        const double conv = eulerian_convective_term(field, vel, p.x, p.y);
        signs_ok = signs_ok && rate < 0.0 && conv > 0.0;
        const double ratio = std::fabs(conv / rate);
        if (ratio > best) {
            best = ratio;
            at_x = p.x;
            at_y = p.y;
        }
    }

    const bool pass = best > 0.25 && best < 1.0 && signs_ok;
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "max |u dtheta/dx| / |path rate| = %.3f at (%.4f, %.2e) near the "
                  "reference point (need > 0.25; the quoted ratio is 0.54)",
                  best, at_x, at_y);
    announce(8, pass, buf);
    CHECK(pass);
}

TEST_CASE("criterion 9: determinism and byte-exact round-trips") {
    const auto dir_a = testsupport::fresh_dir("acc9a");
    const auto dir_b = testsupport::fresh_dir("acc9b");
    const auto run_a = testsupport::run_cli("report --out " + dir_a.string());
    const auto run_b = testsupport::run_cli("report --out " + dir_b.string());

    bool pass = run_a.exit_code == 0 && run_b.exit_code == 0;
    for (const char* name : {"path.csv", "mesh.csv", "report.json", "figure4.gnuplot"}) {
        const bool same = testsupport::slurp(dir_a / name) == testsupport::slurp(dir_b / name);
        pass = pass && same;
    }

    const auto points = import_path(dir_a / "path.csv");
    export_path(points, dir_a / "path2.csv");
    const bool roundtrip =
        testsupport::slurp(dir_a / "path.csv") == testsupport::slurp(dir_a / "path2.csv");
    pass = pass && roundtrip;

    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "two identical runs byte-match across all four artifacts; path CSV "
                  "round-trip byte-identical: %s",
                  roundtrip ? "yes" : "no");
    announce(9, pass, buf);
    CHECK(pass);
}
