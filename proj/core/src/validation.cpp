#include "diffpath/validation.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace diffpath {

namespace {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

ComparisonReport finalize_report(const DiffusionPath& path, std::vector<double> residuals,
                                 std::string source) {
    ComparisonReport report;
    report.point_count = residuals.size();
    report.residuals = std::move(residuals);
    report.field_source = std::move(source);

    double sum = 0.0, sum_sq = 0.0;
    for (double r : report.residuals) {
        sum += r;
        sum_sq += r * r;
        report.max_abs_C = std::max(report.max_abs_C, std::fabs(r));
    }
    const double n = static_cast<double>(report.point_count);
    report.rms_C = std::sqrt(sum_sq / n);
    const double mean = sum / n;
    report.stddev_C = std::sqrt(std::max(0.0, sum_sq / n - mean * mean));
    const double dtheta =
        std::fabs(path.scenario.wall_temperature - path.scenario.freestream_temperature);
    report.rms_pct_dtheta = dtheta > 0.0 ? 100.0 * report.rms_C / dtheta : 0.0;
    return report;
}

double parse_double(const std::string& token, const std::filesystem::path& src) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(token, &pos);
        if (pos != token.size()) {
            throw std::invalid_argument(token);
        }
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("malformed number '" + token + "' in " + src.string());
    }
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        out.push_back(tok);
    }
    return out;
}

}  // namespace

ComparisonReport compare_path_to_field(const DiffusionPath& path, const ThermalModel& model) {
    if (path.points.empty()) {
        throw std::domain_error("compare_path_to_field: empty path");
    }
    std::vector<double> residuals;
    residuals.reserve(path.points.size());
    for (const PathPoint& p : path.points) {
        residuals.push_back(p.theta - model.temperature(p.x, p.y));
    }
    ComparisonReport report = finalize_report(path, std::move(residuals), "analytic");
    report.layer_model = to_string(model.layer_model());
    return report;
}

ComparisonReport compare_path_to_field(const DiffusionPath& path, const ThermalField& field) {
    if (path.points.empty()) {
        throw std::domain_error("compare_path_to_field: empty path");
    }
    std::vector<double> residuals;
    residuals.reserve(path.points.size());
    for (const PathPoint& p : path.points) {
        try {
            residuals.push_back(p.theta - field.interpolate(p.x, p.y));
        } catch (const std::domain_error&) {
            throw std::domain_error("compare_path_to_field: path point (" +
                                    std::to_string(p.x) + ", " + std::to_string(p.y) +
                                    ") outside the field grid");
        }
    }
    ComparisonReport report = finalize_report(path, std::move(residuals), field.origin);
    report.layer_model = field.layer_model;
    report.profile = field.profile;
    return report;
}

std::size_t export_field_mesh(const ThermalField& field, const std::filesystem::path& dest) {
    if (field.nx() == 0 || field.ny() == 0) {
        throw std::domain_error("export_field_mesh: empty grid");
    }
    std::ofstream out(dest);
    if (!out) {
        throw std::runtime_error("export_field_mesh: cannot open " + dest.string());
    }
    out << "x_m,y_m,theta_C\n";
    for (std::size_t i = 0; i < field.nx(); ++i) {
        for (std::size_t j = 0; j < field.ny(); ++j) {
            out << format_g17(field.x[i]) << ',' << format_g17(field.y[j]) << ','
                << format_g17(field.at(i, j)) << '\n';
        }
    }
    if (!out) {
        throw std::runtime_error("export_field_mesh: write failed for " + dest.string());
    }
    return field.nx() * field.ny();
}

std::size_t export_path(std::span<const PathPoint> points, const std::filesystem::path& dest) {
    if (points.empty()) {
        throw std::domain_error("export_path: empty path");
    }
    std::ofstream out(dest);
    if (!out) {
        throw std::runtime_error("export_path: cannot open " + dest.string());
    }
    out << "step,x_m,y_m,dt_s,t_s,u_mean_m_per_s,theta_C\n";
    for (const PathPoint& p : points) {
        out << p.step << ',' << format_g17(p.x) << ',' << format_g17(p.y) << ','
            << format_g17(p.dt) << ',' << format_g17(p.t_elapsed) << ','
            << format_g17(p.u_mean) << ',' << format_g17(p.theta) << '\n';
    }
    if (!out) {
        throw std::runtime_error("export_path: write failed for " + dest.string());
    }
    return points.size();
}

std::vector<PathPoint> import_path(const std::filesystem::path& src) {
    std::ifstream in(src);
    if (!in) {
        throw std::runtime_error("import_path: cannot open " + src.string());
    }
    std::string line;
    if (!std::getline(in, line) || line != "step,x_m,y_m,dt_s,t_s,u_mean_m_per_s,theta_C") {
        throw std::runtime_error("import_path: missing or unexpected header in " +
                                 src.string());
    }
    std::vector<PathPoint> points;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto tok = split_csv_line(line);
        if (tok.size() != 7) {
            throw std::runtime_error("import_path: expected 7 columns in " + src.string());
        }
        PathPoint p;
        p.step = static_cast<std::size_t>(parse_double(tok[0], src));
        p.x = parse_double(tok[1], src);
        p.y = parse_double(tok[2], src);
        p.dt = parse_double(tok[3], src);
        p.t_elapsed = parse_double(tok[4], src);
        p.u_mean = parse_double(tok[5], src);
        p.theta = parse_double(tok[6], src);
        points.push_back(p);
    }
    return points;
}

void read_y_t_csv(const std::filesystem::path& src, std::vector<double>& y_values,
                  std::vector<double>& t_values) {
    std::ifstream in(src);
    if (!in) {
        throw std::runtime_error("read_y_t_csv: cannot open " + src.string());
    }
    y_values.clear();
    t_values.clear();
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        if (first && line.find("y_m") != std::string::npos) {
            first = false;
            continue;  // header
        }
        first = false;
        const auto tok = split_csv_line(line);
        if (tok.size() != 2) {
            throw std::runtime_error("read_y_t_csv: expected y_m,t_s rows in " + src.string());
        }
        y_values.push_back(parse_double(tok[0], src));
        t_values.push_back(parse_double(tok[1], src));
    }
    if (y_values.empty()) {
        throw std::runtime_error("read_y_t_csv: no data rows in " + src.string());
    }
}

void write_overlay_script(const std::filesystem::path& dest, const std::string& mesh_csv,
                          const std::string& path_csv, std::size_t mesh_nx,
                          std::size_t mesh_ny) {
    std::ofstream out(dest);
    if (!out) {
        throw std::runtime_error("write_overlay_script: cannot open " + dest.string());
    }
    out << "# Temperature surface with the diffusion path overlaid.\n"
        << "# Usage: gnuplot " << dest.filename().string() << "\n"
        << "# Mesh is " << mesh_nx << " x " << mesh_ny << " nodes, row-major in x.\n";
    out << "set datafile separator \",\"\n"
        << "set xlabel \"x [m]\"\n"
        << "set ylabel \"y [m]\"\n"
        << "set zlabel \"theta [C]\"\n"
        << "set view 60, 140\n"
        << "set palette rgbformulae 33,13,10\n"
        << "splot \"" << mesh_csv << "\" every ::1 using 1:2:3 with dots palette "
        << "title \"field\", \\\n"
        << "      \"" << path_csv << "\" every ::1 using 2:3:7 with points pt 7 ps 1.2 "
        << "lc rgb \"red\" title \"diffusion path\"\n"
        << "pause -1 \"press enter\"\n";
}

}  // namespace diffpath
