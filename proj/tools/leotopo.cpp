#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "leotopo/errors.hpp"
#include "leotopo/experiment.hpp"

namespace fs = std::filesystem;
using namespace leotopo;

namespace {

// Raised for argument problems detected after CLI11 parsing (exit code 1).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string known_shells() {
    std::string names;
    for (const ShellConfig& s : shell_catalog()) {
        if (!names.empty()) names += ", ";
        names += s.name;
    }
    return names;
}

const ShellConfig& shell_or_die(const std::string& name) {
    const ShellConfig* s = find_shell(name);
    if (!s) {
        throw UsageError("unknown shell '" + name + "'; valid shells: " + known_shells());
    }
    return *s;
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

struct RunFlags {
    std::vector<std::string> shells;
    std::string config_file;
    double duration = 400.0;
    double step = 1.0;
    std::string cities;
    double min_elev = 25.0;
    std::string out;
    int workers = 0;
    unsigned seed = 0;
    std::string format = "csv";
    std::string ecdf;
    bool heatmap = false;
    bool dump_paths = false;
};

void add_run_flags(CLI::App* cmd, RunFlags& f, bool want_shell) {
    if (want_shell) {
        cmd->add_option("--shell", f.shells, "shell name from the catalog (repeatable)");
        cmd->add_option("--config", f.config_file, "flat key=value config file");
    }
    cmd->add_option("--duration", f.duration, "run window in seconds");
    cmd->add_option("--step", f.step, "snapshot step in seconds");
    cmd->add_option("--cities", f.cities, "city dataset CSV (default: bundled top-100)")
        ->envname("LEO_TOPO_CITIES");
    cmd->add_option("--min-elev", f.min_elev, "GSL minimum elevation angle, degrees");
    cmd->add_option("--out", f.out, "output directory")->required();
    cmd->add_option("--workers", f.workers, "worker threads (0 = all cores, 1 = serial)");
    cmd->add_option("--seed", f.seed, "reserved; no stochastic components yet");
    cmd->add_option("--format", f.format, "output format (csv)");
    cmd->add_option("--ecdf", f.ecdf, "comma-separated metric names to emit as ECDF CSVs");
    cmd->add_flag("--heatmap", f.heatmap, "emit the distance x hops heatmap CSV");
    cmd->add_flag("--dump-paths", f.dump_paths, "dump per-snapshot routed paths");
}

// Flags the user typed win over config-file values.
ExperimentSpec spec_from_flags(const CLI::App* cmd, RunFlags& f) {
    if (!f.config_file.empty()) {
        const RunConfigFile cfg = read_run_config(f.config_file);
        if (f.shells.empty() && cfg.shell) f.shells = {*cfg.shell};
        if (!cmd->count("--duration") && cfg.duration_s) f.duration = *cfg.duration_s;
        if (!cmd->count("--step") && cfg.step_s) f.step = *cfg.step_s;
        if (!cmd->count("--cities") && cfg.cities) f.cities = *cfg.cities;
        if (!cmd->count("--min-elev") && cfg.min_elevation_deg) f.min_elev = *cfg.min_elevation_deg;
        if (!cmd->count("--workers") && cfg.workers) f.workers = *cfg.workers;
        if (!cmd->count("--out") && cfg.out_dir) f.out = *cfg.out_dir;
        if (!cmd->count("--ecdf") && cfg.ecdf_metrics) f.ecdf = *cfg.ecdf_metrics;
        if (!cmd->count("--heatmap") && cfg.heatmap) f.heatmap = *cfg.heatmap;
        if (!cmd->count("--dump-paths") && cfg.dump_paths) f.dump_paths = *cfg.dump_paths;
        if (cfg.format && *cfg.format != "csv") throw UsageError("config format must be csv");
    }
    if (f.format != "csv") {
        throw UsageError("unsupported --format '" + f.format + "'; only csv is available");
    }
    ExperimentSpec spec;
    for (const std::string& name : f.shells) spec.shells.push_back(shell_or_die(name));
    spec.duration_s = f.duration;
    spec.step_s = f.step;
    spec.cities_path = f.cities;
    spec.gsl.min_elevation_deg = f.min_elev;
    spec.out_dir = f.out;
    spec.workers = f.workers;
    spec.seed = f.seed;
    spec.outputs.ecdf_metrics = split_list(f.ecdf);
    const std::vector<std::string> valid = metric_names();
    for (const std::string& m : spec.outputs.ecdf_metrics) {
        if (std::find(valid.begin(), valid.end(), m) == valid.end()) {
            throw UsageError("unknown ECDF metric '" + m + "'");
        }
    }
    spec.outputs.heatmap = f.heatmap;
    spec.outputs.dump_paths = f.dump_paths;
    (void)snapshot_count(spec.duration_s, spec.step_s);  // validates timing
    return spec;
}

int cmd_list_shells() {
    std::printf("%-12s %8s %7s %10s %7s %7s\n", "name", "alt_km", "orbits", "sats/orbit",
                "total", "incl");
    for (const ShellConfig& s : shell_catalog()) {
        std::printf("%-12s %8.0f %7d %10d %7d %7.2f\n", s.name.c_str(), s.altitude_km,
                    s.num_orbits, s.sats_per_orbit, s.total_sats(), s.inclination_deg);
    }
    std::printf("\nsweep sets: sats (16 shells), incl (4), alt (4), fine (16)\n");
    return 0;
}

int cmd_propagate(const std::string& shell_name, double t, const std::string& cities_path,
                  const std::string& out) {
    const ShellConfig& shell = shell_or_die(shell_name);
    fs::create_directories(out);
    {
        std::ofstream os(fs::path(out) / "tles.txt");
        os << export_tle(shell);
    }
    {
        std::ofstream os(fs::path(out) / "isls.txt");
        write_isl_file(build_plus_grid(shell), os);
    }
    {
        std::ofstream os(fs::path(out) / "tm.csv");
        write_tm_file(resolve_cities(cities_path), os);
    }
    {
        const auto pos = propagate(shell, t);
        std::ofstream os(fs::path(out) / "positions.csv");
        os << "sat,x_m,y_m,z_m\n";
        char buf[128];
        for (size_t i = 0; i < pos.size(); ++i) {
            std::snprintf(buf, sizeof(buf), "%zu,%.3f,%.3f,%.3f\n", i, pos[i].x_m, pos[i].y_m,
                          pos[i].z_m);
            os << buf;
        }
    }
    std::printf("wrote tles.txt, isls.txt, tm.csv, positions.csv to %s\n", out.c_str());
    return 0;
}

int run_spec(const ExperimentSpec& spec) {
    const int failures = run(spec);
    if (failures) {
        std::cerr << failures << " shell(s) failed\n";
        return 2;
    }
    return 0;
}

int cmd_sweep(const std::string& set, RunFlags& f, const CLI::App* cmd) {
    std::vector<std::string> names;
    if (set == "sats") names = sats_sweep_shells();
    else if (set == "incl") names = incl_sweep_shells();
    else if (set == "alt") names = alt_sweep_shells();
    else if (set == "fine") names = fine_sweep_shells();
    else throw UsageError("unknown sweep set '" + set + "'; use sats, incl, alt or fine");

    f.shells = names;
    const ExperimentSpec spec = spec_from_flags(cmd, f);
    const int rc = run_spec(spec);
    if (rc) return rc;

    std::ofstream os(fs::path(spec.out_dir) / "sweep_summary.csv");
    os << "shell,orbits,sats_per_orbit,incl_deg,alt_km,pairs,median_max_rtt_ms,mean_max_rtt_ms,"
          "median_path_changes,median_slowdown_g\n";
    for (const std::string& name : names) {
        const auto rows = read_metrics_csv((fs::path(spec.out_dir) / name / "metrics.csv").string());
        const ShellConfig& s = *find_shell(name);
        char buf[256];
        std::snprintf(buf, sizeof(buf), "%s,%d,%d,%.2f,%.0f,%zu,%.4f,%.4f,%.1f,%.4f\n",
                      name.c_str(), s.num_orbits, s.sats_per_orbit, s.inclination_deg,
                      s.altitude_km, rows.size(),
                      percentile(metric_column(rows, "max_rtt_ms"), 50),
                      [&] {
                          double sum = 0;
                          for (const auto& r : rows) sum += r.max_rtt_ms;
                          return rows.empty() ? 0.0 : sum / rows.size();
                      }(),
                      percentile(metric_column(rows, "path_changes"), 50),
                      percentile(metric_column(rows, "slowdown_g"), 50));
        os << buf;
    }
    std::printf("sweep '%s' complete: %zu shells under %s\n", set.c_str(), names.size(),
                spec.out_dir.c_str());
    return 0;
}

int cmd_angle_study(RunFlags& f, const CLI::App* cmd) {
    const ExperimentSpec spec = spec_from_flags(cmd, f);
    run_angle_study(spec);
    std::printf("angle study complete under %s/angle_study\n", spec.out_dir.c_str());
    return 0;
}

int cmd_compare(const std::string& a, const std::string& b, const std::string& out) {
    const CompareReport rep = compare_shells(a, b);
    if (out.empty()) {
        std::cout << rep.text();
    } else {
        std::ofstream os(out);
        os << rep.text();
    }
    return 0;
}

int cmd_ecdf(const std::string& in, const std::string& metric, const std::string& out) {
    const auto rows = read_metrics_csv(in);
    const auto col = metric_column(rows, metric);
    std::ofstream os(out);
    if (col.empty()) {
        os << "value,fraction\n";
    } else {
        write_ecdf_csv(ecdf(col, metric), os);
    }
    return 0;
}

int cmd_heatmap(const std::string& in, double dist_bin_km, double hop_bin,
                const std::string& out) {
    const auto rows = read_metrics_csv(in);
    std::vector<std::pair<double, double>> points;
    points.reserve(rows.size());
    for (const PairSummary& r : rows) points.emplace_back(r.geodesic_km, r.avg_hops);
    std::ofstream os(out);
    write_heatmap_csv(heatmap_bins(points, dist_bin_km, hop_bin), os);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"leotopo: LEO constellation topology simulator and metric toolkit"};
    app.require_subcommand(1);

    CLI::App* list_cmd = app.add_subcommand("list-shells", "print the shell catalog");

    CLI::App* prop_cmd = app.add_subcommand("propagate", "export TLE/ISL/TM files for a shell");
    std::string prop_shell, prop_cities, prop_out;
    double prop_t = 0.0;
    prop_cmd->add_option("--shell", prop_shell, "shell name")->required();
    prop_cmd->add_option("--t", prop_t, "snapshot time for positions.csv, seconds");
    prop_cmd->add_option("--cities", prop_cities, "city dataset for the TM file")
        ->envname("LEO_TOPO_CITIES");
    prop_cmd->add_option("--out", prop_out, "output directory")->required();

    RunFlags run_flags;
    CLI::App* run_cmd = app.add_subcommand("run", "simulate shell(s) and write metric CSVs");
    add_run_flags(run_cmd, run_flags, true);

    RunFlags sweep_flags;
    std::string sweep_set;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "run a synthetic parameter sweep");
    sweep_cmd->add_option("--set", sweep_set, "sats | incl | alt | fine")->required();
    add_run_flags(sweep_cmd, sweep_flags, false);

    RunFlags angle_flags;
    CLI::App* angle_cmd =
        app.add_subcommand("angle-study", "inclination sweep grouped by geographic angle");
    add_run_flags(angle_cmd, angle_flags, false);

    CLI::App* cmp_cmd = app.add_subcommand("compare", "compare two finished runs");
    std::string cmp_a, cmp_b, cmp_out;
    cmp_cmd->add_option("--a", cmp_a, "run directory A")->required();
    cmp_cmd->add_option("--b", cmp_b, "run directory B")->required();
    cmp_cmd->add_option("--out", cmp_out, "write the report here instead of stdout");

    CLI::App* ecdf_cmd = app.add_subcommand("ecdf", "ECDF CSV from a metrics CSV column");
    std::string ecdf_in, ecdf_metric, ecdf_out;
    ecdf_cmd->add_option("--in", ecdf_in, "metrics.csv path")->required();
    ecdf_cmd->add_option("--metric", ecdf_metric, "metric column name")->required();
    ecdf_cmd->add_option("--out", ecdf_out, "output CSV")->required();

    CLI::App* heat_cmd = app.add_subcommand("heatmap", "distance x hops heatmap from a metrics CSV");
    std::string heat_in, heat_out;
    double heat_dist_bin = 2500.0, heat_hop_bin = 1.0;
    heat_cmd->add_option("--in", heat_in, "metrics.csv path")->required();
    heat_cmd->add_option("--dist-bin-km", heat_dist_bin, "distance bin width, km");
    heat_cmd->add_option("--hop-bin", heat_hop_bin, "hop bin width");
    heat_cmd->add_option("--out", heat_out, "output CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (list_cmd->parsed()) return cmd_list_shells();
        if (prop_cmd->parsed()) return cmd_propagate(prop_shell, prop_t, prop_cities, prop_out);
        if (run_cmd->parsed()) {
            if (run_flags.shells.empty() && run_flags.config_file.empty()) {
                throw UsageError("run needs --shell or --config");
            }
            ExperimentSpec spec = spec_from_flags(run_cmd, run_flags);
            if (spec.shells.empty()) throw UsageError("no shell selected");
            return run_spec(spec);
        }
        if (sweep_cmd->parsed()) return cmd_sweep(sweep_set, sweep_flags, sweep_cmd);
        if (angle_cmd->parsed()) return cmd_angle_study(angle_flags, angle_cmd);
        if (cmp_cmd->parsed()) return cmd_compare(cmp_a, cmp_b, cmp_out);
        if (ecdf_cmd->parsed()) return cmd_ecdf(ecdf_in, ecdf_metric, ecdf_out);
        if (heat_cmd->parsed()) return cmd_heatmap(heat_in, heat_dist_bin, heat_hop_bin, heat_out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
