// diffpath CLI: config ingestion, subcommand dispatch, dataset emission.
//
// Exit codes: 0 success, 1 config/usage error, 2 numerical failure.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "diffpath/config.hpp"
#include "diffpath/diffusion_path.hpp"
#include "diffpath/errors.hpp"
#include "diffpath/eulerian_thermal.hpp"
#include "diffpath/properties.hpp"
#include "diffpath/similarity_kernels.hpp"
#include "diffpath/validation.hpp"
#include "diffpath/velocity_field.hpp"

namespace fs = std::filesystem;
using namespace diffpath;

namespace {

struct CliOptions {
    std::string config_path;
    std::string preset = "paper-table1";
    std::string out_dir;
    std::string profile_override;
    std::string replay_input;
    std::string field_source = "analytic";  // thermal/compare: analytic | fd-oracle
};

RunConfig resolve_config(const CliOptions& opt) {
    RunConfig config = opt.config_path.empty()
                           ? parse_config(preset_text(opt.preset))
                           : load_config_file(opt.config_path);
    if (!opt.profile_override.empty()) {
        if (opt.profile_override == "quartic") {
            config.profile = VelocityProfile::Quartic;
        } else if (opt.profile_override == "cubic") {
            config.profile = VelocityProfile::Cubic;
        } else if (opt.profile_override == "blasius") {
            config.profile = VelocityProfile::Blasius;
        } else {
            throw std::domain_error("--profile must be quartic, cubic or blasius");
        }
    }
    return config;
}

fs::path resolve_out_dir(const CliOptions& opt, const RunConfig& config) {
    std::string dir = opt.out_dir;
    if (dir.empty()) {
        dir = config.output_dir;
    }
    if (dir.empty()) {
        if (const char* env = std::getenv("DIFFPATH_OUT")) {
            dir = env;
        }
    }
    if (dir.empty()) {
        dir = "out";
    }
    fs::create_directories(dir);
    return dir;
}

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double plate_length_of(const RunConfig& config) {
    return config.plate_length > 0.0 ? config.plate_length
                                     : std::numeric_limits<double>::infinity();
}

// ---- subcommand bodies ---------------------------------------------------

int cmd_properties(const RunConfig& config) {
    const DerivedCoefficients co = derive_coefficients(config.fluid);
    std::printf("kinematic_viscosity_m2_per_s = %s\n", format_g17(co.kinematic_viscosity).c_str());
    std::printf("thermal_diffusivity_m2_per_s = %s\n", format_g17(co.thermal_diffusivity).c_str());
    std::printf("prandtl = %s\n", format_g17(co.prandtl).c_str());
    if (config.table_prandtl) {
        const double rel = (co.prandtl - *config.table_prandtl) / *config.table_prandtl;
        std::printf("note: computed Pr differs from tabulated %s by %+.2f%% "
                    "(the tabulated value is not exactly c_p*mu/k for these inputs)\n",
                    format_g17(*config.table_prandtl).c_str(), 100.0 * rel);
    }
    return 0;
}

int cmd_velocity(const RunConfig& config, const fs::path& out_dir) {
    const DerivedCoefficients co = derive_coefficients(config.fluid);
    const VelocityField vel(config.scenario, co, config.profile);
    const fs::path dest = out_dir / "velocity.csv";
    std::ofstream out(dest);
    if (!out) {
        throw std::runtime_error("cannot open " + dest.string());
    }
    out << "x_m,y_m,u_m_per_s,v_m_per_s\n";
    const double x0 = config.scenario.tracking_start / 2.0;
    const double x1 = config.mesh_grid.x_max;
    const double y_max = 1.2 * vel.thickness(x1);
    std::size_t rows = 0;
    for (std::size_t i = 0; i < config.mesh_grid.nx; ++i) {
        const double x = x0 + (x1 - x0) * static_cast<double>(i) /
                                  static_cast<double>(config.mesh_grid.nx - 1);
        for (std::size_t j = 0; j < config.mesh_grid.ny; ++j) {
            const double y = y_max * static_cast<double>(j) /
                             static_cast<double>(config.mesh_grid.ny - 1);
            const VelocitySample s = vel.at(x, y);
            out << format_g17(x) << ',' << format_g17(y) << ',' << format_g17(s.u) << ','
                << format_g17(s.v) << '\n';
            ++rows;
        }
    }
    std::printf("wrote %s (%zu rows)\n", dest.string().c_str(), rows);
    return 0;
}

ThermalField make_field(const RunConfig& config, const std::string& source) {
    const DerivedCoefficients co = derive_coefficients(config.fluid);
    const VelocityField vel(config.scenario, co, config.profile);
    const ThermalModel model(vel, config.thermal_model);
    if (source == "fd-oracle") {
        FieldGridSpec grid =
            default_field_grid(model, config.field_grid.x_max, config.field_grid.nx,
                               config.field_grid.ny);
        return fd_energy_march(vel, grid);
    }
    FieldGridSpec grid;
    grid.x_min = config.scenario.heated_start;
    grid.x_max = config.mesh_grid.x_max;
    grid.nx = config.mesh_grid.nx;
    grid.ny = config.mesh_grid.ny;
    grid.y_max = 1.5 * model.thermal_thickness(grid.x_max);
    return sample_field(model, grid);
}

int cmd_thermal(const RunConfig& config, const fs::path& out_dir,
                const std::string& source) {
    const ThermalField field = make_field(config, source);
    const fs::path dest = out_dir / "mesh.csv";
    const std::size_t rows = export_field_mesh(field, dest);
    std::printf("wrote %s (%zu rows, origin %s)\n", dest.string().c_str(), rows,
                field.origin.c_str());
    return 0;
}

int cmd_stokes(const RunConfig& config, const fs::path& out_dir) {
    const DerivedCoefficients co = derive_coefficients(config.fluid);
    const StokesLayer layer{co.kinematic_viscosity, config.scenario.approach_velocity};
    double t_max = 0.0;
    for (double t : config.kernel_grid.times) {
        t_max = std::max(t_max, t);
    }
    const double y_max = config.kernel_grid.y_max > 0.0
                             ? config.kernel_grid.y_max
                             : 6.0 * std::sqrt(4.0 * layer.kinematic_viscosity * t_max);
    const fs::path dest = out_dir / "stokes.csv";
    std::ofstream out(dest);
    if (!out) {
        throw std::runtime_error("cannot open " + dest.string());
    }
    out << "y_m,t_s,u_m_per_s\n";
    std::size_t rows = 0;
    for (double t : config.kernel_grid.times) {
        for (std::size_t j = 0; j < config.kernel_grid.y_count; ++j) {
            const double y = y_max * static_cast<double>(j) /
                             static_cast<double>(config.kernel_grid.y_count - 1);
            out << format_g17(y) << ',' << format_g17(t) << ','
                << format_g17(stokes_velocity(y, t, layer)) << '\n';
            ++rows;
        }
    }
    std::printf("wrote %s (%zu rows)\n", dest.string().c_str(), rows);
    return 0;
}

int cmd_penetration(const RunConfig& config, const fs::path& out_dir) {
    const DerivedCoefficients co = derive_coefficients(config.fluid);
    const HigbieProfile profile{co.thermal_diffusivity, config.scenario.wall_temperature,
                                config.scenario.freestream_temperature,
                                config.fluid.thermal_conductivity};
    const fs::path dest = out_dir / "penetration.csv";
    std::ofstream out(dest);
    if (!out) {
        throw std::runtime_error("cannot open " + dest.string());
    }
    out << "y_m,t_s,theta_C\n";
    std::size_t rows = 0;
    for (double t : config.kernel_grid.times) {
        const double delta = higbie_thickness(t, profile);
        const double y_max = config.kernel_grid.y_max > 0.0 ? config.kernel_grid.y_max
                                                            : 1.5 * delta;
        for (std::size_t j = 0; j < config.kernel_grid.y_count; ++j) {
            const double y = y_max * static_cast<double>(j) /
                             static_cast<double>(config.kernel_grid.y_count - 1);
            const double eta = std::min(y / delta, 1.0);
            const double theta = profile.wall_temperature +
                                 (profile.driving_temperature - profile.wall_temperature) *
                                     higbie_temperature_ratio(eta);
            out << format_g17(y) << ',' << format_g17(t) << ',' << format_g17(theta) << '\n';
            ++rows;
        }
    }
    const fs::path flux_dest = out_dir / "penetration_flux.csv";
    std::ofstream flux(flux_dest);
    if (!flux) {
        throw std::runtime_error("cannot open " + flux_dest.string());
    }
    flux << "t_s,delta_h_m,q_w_W_per_m2\n";
    for (double t : config.kernel_grid.times) {
        flux << format_g17(t) << ',' << format_g17(higbie_thickness(t, profile)) << ','
             << format_g17(higbie_wall_flux(t, profile)) << '\n';
    }
    std::printf("wrote %s (%zu rows) and %s\n", dest.string().c_str(), rows,
                flux_dest.string().c_str());
    return 0;
}

int cmd_march(const RunConfig& config, const fs::path& out_dir) {
    const DerivedCoefficients co = derive_coefficients(config.fluid);
    const VelocityField vel(config.scenario, co, config.profile);
    const DiffusionPath path = march(vel, config.schedule, config.epsilon_exit,
                                     plate_length_of(config));
    const fs::path dest = out_dir / "path.csv";
    export_path(path.points, dest);
    std::printf("wrote %s (%zu points)\n", dest.string().c_str(), path.points.size());
    std::printf("t_d_s = %s\nexit_x_m = %s\nexit_reason = %s\n",
                format_g17(path.diffusion_period).c_str(), format_g17(path.exit_x).c_str(),
                to_string(path.exit_reason));
    return 0;
}

int cmd_replay(const RunConfig& config, const fs::path& out_dir,
               const std::string& input) {
    std::vector<double> ys, ts;
    read_y_t_csv(input, ys, ts);
    const DerivedCoefficients co = derive_coefficients(config.fluid);
    const auto points = replay_march(config.scenario, co, ys, ts);
    const fs::path dest = out_dir / "replay.csv";
    export_path(points, dest);
    for (const PathPoint& p : points) {
        std::printf("y_m=%s t_s=%s theta_C=%s\n", format_g17(p.y).c_str(),
                    format_g17(p.t_elapsed).c_str(), format_g17(p.theta).c_str());
    }
    std::printf("wrote %s (%zu points)\n", dest.string().c_str(), points.size());
    return 0;
}

nlohmann::json report_json(const RunConfig& config, const DiffusionPath& path,
                           const ComparisonReport& report) {
    nlohmann::json doc;
    doc["config_hash"] = config_hash(config);
    doc["point_count"] = report.point_count;
    doc["rms_C"] = report.rms_C;
    doc["rms_pct_dtheta"] = report.rms_pct_dtheta;
    doc["max_abs_C"] = report.max_abs_C;
    doc["stddev_C"] = report.stddev_C;
    doc["t_d_s"] = path.diffusion_period;
    doc["exit_x_m"] = path.exit_x;
    doc["exit_reason"] = to_string(path.exit_reason);
    return doc;
}

void write_report(const nlohmann::json& doc, const fs::path& dest) {
    std::ofstream out(dest);
    if (!out) {
        throw std::runtime_error("cannot open " + dest.string());
    }
    out << doc.dump(2) << '\n';
}

int cmd_compare(const RunConfig& config, const fs::path& out_dir,
                const std::string& source) {
    const DerivedCoefficients co = derive_coefficients(config.fluid);
    const VelocityField vel(config.scenario, co, config.profile);
    const ThermalModel model(vel, config.thermal_model);
    const DiffusionPath path = march(vel, config.schedule, config.epsilon_exit,
                                     plate_length_of(config));
    ComparisonReport report;
    if (source == "fd-oracle") {
        FieldGridSpec grid = default_field_grid(model, config.field_grid.x_max,
                                                config.field_grid.nx, config.field_grid.ny);
        report = compare_path_to_field(path, fd_energy_march(vel, grid));
    } else {
        report = compare_path_to_field(path, model);
    }
    const fs::path dest = out_dir / "report.json";
    write_report(report_json(config, path, report), dest);
    std::printf("wrote %s (rms %.4f%% of dtheta over %zu points)\n", dest.string().c_str(),
                report.rms_pct_dtheta, report.point_count);
    return 0;
}

int cmd_report(const RunConfig& config, const fs::path& out_dir) {
    const DerivedCoefficients co = derive_coefficients(config.fluid);
    const VelocityField vel(config.scenario, co, config.profile);
    const ThermalModel model(vel, config.thermal_model);

    const DiffusionPath path = march(vel, config.schedule, config.epsilon_exit,
                                     plate_length_of(config));
    export_path(path.points, out_dir / "path.csv");

    FieldGridSpec mesh_grid;
    mesh_grid.x_min = config.scenario.heated_start;
    mesh_grid.x_max = config.mesh_grid.x_max;
    mesh_grid.nx = config.mesh_grid.nx;
    mesh_grid.ny = config.mesh_grid.ny;
    mesh_grid.y_max = 1.5 * model.thermal_thickness(mesh_grid.x_max);
    const ThermalField mesh = sample_field(model, mesh_grid);
    export_field_mesh(mesh, out_dir / "mesh.csv");

    const ComparisonReport report = compare_path_to_field(path, model);
    write_report(report_json(config, path, report), out_dir / "report.json");
    write_overlay_script(out_dir / "figure4.gnuplot", "mesh.csv", "path.csv", mesh.nx(),
                         mesh.ny());

    std::printf("wrote %s, %s, %s, %s\n", (out_dir / "path.csv").string().c_str(),
                (out_dir / "mesh.csv").string().c_str(),
                (out_dir / "report.json").string().c_str(),
                (out_dir / "figure4.gnuplot").string().c_str());
    std::printf("points=%zu rms_pct_dtheta=%.4f t_d_s=%s exit_x_m=%s exit_reason=%s\n",
                report.point_count, report.rms_pct_dtheta,
                format_g17(path.diffusion_period).c_str(), format_g17(path.exit_x).c_str(),
                to_string(path.exit_reason));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"diffpath: Lagrangian diffusion-path analysis of boundary-layer heat "
                 "transport"};
    app.require_subcommand(1);
    app.fallthrough();  // allow the global options after the subcommand name

    CliOptions opt;
    app.add_option("--config", opt.config_path, "JSON config file");
    app.add_option("--preset", opt.preset, "shipped preset name (default paper-table1)");
    app.add_option("--out", opt.out_dir, "output directory (else config, else $DIFFPATH_OUT)");
    app.add_option("--profile", opt.profile_override,
                   "velocity profile override: quartic | cubic | blasius");

    auto* properties = app.add_subcommand("properties", "print derived transport coefficients");
    auto* velocity = app.add_subcommand("velocity", "dump the velocity field as CSV");
    auto* thermal = app.add_subcommand("thermal", "dump the Eulerian temperature field as CSV");
    thermal->add_option("--source", opt.field_source, "analytic | fd-oracle");
    auto* stokes = app.add_subcommand("stokes", "dump the impulsive-start kernel as CSV");
    auto* penetration =
        app.add_subcommand("penetration", "dump the penetration-theory kernel as CSV");
    auto* march_cmd = app.add_subcommand("march", "run the Lagrangian marcher");
    auto* replay = app.add_subcommand("replay", "map a user-supplied (y, t) CSV to temperatures");
    replay->add_option("--input", opt.replay_input, "CSV with y_m,t_s rows")->required();
    auto* compare = app.add_subcommand("compare", "march and compare against the Eulerian field");
    compare->add_option("--source", opt.field_source, "analytic | fd-oracle");
    auto* report = app.add_subcommand("report", "full pipeline: march, compare, export");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        const RunConfig config = resolve_config(opt);
        if (properties->parsed()) {
            return cmd_properties(config);
        }
        const fs::path out_dir = resolve_out_dir(opt, config);
        if (velocity->parsed()) return cmd_velocity(config, out_dir);
        if (thermal->parsed()) return cmd_thermal(config, out_dir, opt.field_source);
        if (stokes->parsed()) return cmd_stokes(config, out_dir);
        if (penetration->parsed()) return cmd_penetration(config, out_dir);
        if (march_cmd->parsed()) return cmd_march(config, out_dir);
        if (replay->parsed()) return cmd_replay(config, out_dir, opt.replay_input);
        if (compare->parsed()) return cmd_compare(config, out_dir, opt.field_source);
        if (report->parsed()) return cmd_report(config, out_dir);
        std::fprintf(stderr, "no subcommand\n");
        return 1;
    } catch (const numerical_error& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
