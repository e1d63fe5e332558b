#include "leotopo/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "leotopo/errors.hpp"

namespace fs = std::filesystem;

namespace leotopo {

uint64_t fnv1a64(std::string_view bytes) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

int snapshot_count(double duration_s, double step_s) {
    if (!(step_s > 0.0) || !(duration_s >= step_s)) {
        throw ConfigError("need duration_s >= step_s > 0");
    }
    return static_cast<int>(std::floor(duration_s / step_s + 1e-9));
}

std::vector<City> resolve_cities(const std::string& cities_path) {
    if (cities_path.empty()) return bundled_cities();
    return load_cities(cities_path);
}

namespace {

uint64_t route_fingerprint(const PairRoute& r) {
    if (!r.reachable) return 0x9e3779b97f4a7c15ULL;
    uint64_t h = 1469598103934665603ULL;
    for (int n : r.path.nodes) {
        h ^= static_cast<uint64_t>(n) + 0x100;
        h *= 1099511628211ULL;
    }
    return h;
}

void dump_paths_snapshot(std::ostream& os, double t, std::span<const PairRoute> routes,
                         const TrafficMatrix& matrix, int num_cities) {
    char buf[64];
    for (size_t k = 0; k < matrix.pairs.size(); ++k) {
        const auto& [src, dst] = matrix.pairs[k];
        const PairRoute& r = routes[static_cast<size_t>(src) * num_cities + dst];
        if (!r.reachable) continue;
        std::snprintf(buf, sizeof(buf), "%.0f,%zu,", t, k);
        os << buf;
        for (size_t i = 0; i < r.path.nodes.size(); ++i) {
            if (i) os << '|';
            os << r.path.nodes[i];
        }
        std::snprintf(buf, sizeof(buf), ",%.6f\n", r.path.length_m());
        os << buf;
    }
}

}  // namespace

ShellRunResult run_shell(const ShellConfig& shell, std::span<const City> cities,
                         const TrafficMatrix& matrix, const GslPolicy& gsl, double duration_s,
                         double step_s, int workers, std::ostream* path_dump) {
    const int snapshots = snapshot_count(duration_s, step_s);
    const int num_cities = static_cast<int>(cities.size());
    const size_t num_pairs = matrix.pairs.size();

    std::vector<GeoCoord> coords(cities.size());
    for (size_t i = 0; i < cities.size(); ++i) coords[i] = cities[i].coord;

    const std::vector<IslEdge> isl = build_plus_grid(shell);

    std::vector<PairTimeSeries> series(num_pairs);
    for (size_t k = 0; k < num_pairs; ++k) {
        series[k].pair_id = static_cast<int>(k);
        series[k].src_city_id = cities[matrix.pairs[k].first].id;
        series[k].dst_city_id = cities[matrix.pairs[k].second].id;
        series[k].rtt_s.assign(snapshots, std::numeric_limits<double>::quiet_NaN());
        series[k].hops.assign(snapshots, -1);
    }

    std::vector<PairRoute> prev;
    std::vector<uint64_t> snapshot_prints(snapshots);
    if (path_dump) {
        *path_dump << "t,pair_id,nodes,length_m\n";
    }

    for (int i = 0; i < snapshots; ++i) {
        const double t = i * step_s;
        const SnapshotGraph g = snapshot_graph(shell, isl, coords, gsl, t);
        std::vector<PairRoute> routes = (workers == 1) ? shortest_paths_snapshot(g)
                                                       : shortest_paths_snapshot_omp(g, workers);
        uint64_t print = 1469598103934665603ULL;
        for (size_t k = 0; k < num_pairs; ++k) {
            const auto& [src, dst] = matrix.pairs[k];
            const PairRoute& r = routes[static_cast<size_t>(src) * num_cities + dst];
            if (r.reachable) {
                series[k].rtt_s[i] = rtt_of_path(r.path);
                series[k].hops[i] = r.path.hop_count();
            }
            if (i > 0 &&
                !same_route(prev[static_cast<size_t>(src) * num_cities + dst], r)) {
                ++series[k].path_changes;
            }
            print ^= route_fingerprint(r) + 0x9e3779b97f4a7c15ULL + (print << 6) + (print >> 2);
        }
        snapshot_prints[i] = print;
        if (path_dump) dump_paths_snapshot(*path_dump, t, routes, matrix, num_cities);
        prev = std::move(routes);
    }

    ShellRunResult result;
    result.shell_name = shell.name;
    result.snapshots = snapshots;
    result.summaries.reserve(num_pairs);
    for (size_t k = 0; k < num_pairs; ++k) {
        const auto& [src, dst] = matrix.pairs[k];
        const double ideal = ideal_rtt_s(coords[src], coords[dst]);
        try {
            PairSummary s = summarize_pair(series[k], ideal);
            s.geodesic_km = geodesic_distance(coords[src], coords[dst]) / 1000.0;
            s.geo_angle_deg = geographic_angle_deg(coords[src], coords[dst]);
            result.summaries.push_back(s);
        } catch (const NeverReachable&) {
            result.never_reachable_pair_ids.push_back(static_cast<int>(k));
        }
    }

    // Empirical recurrence of the whole path pattern, if any.
    for (int lag = 1; lag < snapshots && result.recurrence_steps < 0; ++lag) {
        bool repeats = true;
        for (int i = 0; i + lag < snapshots; ++i) {
            if (snapshot_prints[i] != snapshot_prints[i + lag]) {
                repeats = false;
                break;
            }
        }
        if (repeats) result.recurrence_steps = lag;
    }
    return result;
}

namespace {

std::string cities_label(const ExperimentSpec& spec) {
    return spec.cities_path.empty() ? std::string("bundled") : spec.cities_path;
}

uint64_t cities_hash(const ExperimentSpec& spec) {
    if (spec.cities_path.empty()) return fnv1a64(bundled_cities_csv());
    std::ifstream in(spec.cities_path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return fnv1a64(ss.str());
}

void write_manifest(const ExperimentSpec& spec, const ShellConfig& shell,
                    const ShellRunResult& result, size_t pair_count, std::ostream& os) {
    char buf[128];
    os << "# leotopo run manifest; usable as `leotopo run --config <this file>`\n";
    os << "shell=" << shell.name << "\n";
    os << "duration=" << spec.duration_s << "\n";
    os << "step=" << spec.step_s << "\n";
    os << "min-elev=" << spec.gsl.min_elevation_deg << "\n";
    os << "cities=" << cities_label(spec) << "\n";
    os << "workers=" << spec.workers << "\n";
    os << "out=" << spec.out_dir << "\n";
    if (!spec.outputs.ecdf_metrics.empty()) {
        os << "ecdf=";
        for (size_t i = 0; i < spec.outputs.ecdf_metrics.size(); ++i) {
            if (i) os << ",";
            os << spec.outputs.ecdf_metrics[i];
        }
        os << "\n";
    }
    os << "heatmap=" << (spec.outputs.heatmap ? "true" : "false") << "\n";
    os << "dump-paths=" << (spec.outputs.dump_paths ? "true" : "false") << "\n";
    os << "format=csv\n";
    os << "# constants checked on reload\n";
    os << "earth_radius_m=6371000\n";
    os << "earth_mu_m3s2=3.986004418e14\n";
    os << "earth_rotation_rad_s=7.2921159e-5\n";
    os << "speed_of_light_mps=3e8\n";
    os << "weight_quantum_m=1e-06\n";
    os << "tie_break=lexicographic-node-sequence\n";
    os << "rtt_convention=double-one-way-path\n";
    os << "percentile_convention=lower-nearest\n";
    os << "catalog_version=1\n";
    os << "# run facts\n";
    os << "# shell_params: alt_km=" << shell.altitude_km << " orbits=" << shell.num_orbits
       << " sats_per_orbit=" << shell.sats_per_orbit << " incl_deg=" << shell.inclination_deg
       << " phase=" << shell.inter_plane_phase_fraction << "\n";
    std::snprintf(buf, sizeof(buf), "# cities_hash=%016llx\n",
                  static_cast<unsigned long long>(cities_hash(spec)));
    os << buf;
    os << "# snapshots=" << result.snapshots << "\n";
    os << "# pairs=" << pair_count << "\n";
    os << "# pairs_summarized=" << result.summaries.size() << "\n";
    os << "# pairs_never_reachable=" << result.never_reachable_pair_ids.size() << "\n";
    os << "# path_pattern_recurrence_steps="
       << (result.recurrence_steps > 0 ? std::to_string(result.recurrence_steps) : "none")
       << "\n";
}

void write_shell_outputs(const ExperimentSpec& spec, const ShellConfig& shell,
                         const ShellRunResult& result, size_t pair_count, const fs::path& dir) {
    fs::create_directories(dir);
    if (spec.outputs.metrics) {
        std::ofstream os(dir / "metrics.csv");
        write_metrics_csv(result.summaries, os);
    }
    for (const std::string& metric : spec.outputs.ecdf_metrics) {
        std::ofstream os(dir / ("ecdf_" + metric + ".csv"));
        const std::vector<double> col = metric_column(result.summaries, metric);
        if (col.empty()) {
            os << "value,fraction\n";
        } else {
            write_ecdf_csv(ecdf(col, metric), os);
        }
    }
    if (spec.outputs.heatmap) {
        std::vector<std::pair<double, double>> points;
        points.reserve(result.summaries.size());
        for (const PairSummary& s : result.summaries) {
            points.emplace_back(s.geodesic_km, s.avg_hops);
        }
        std::ofstream os(dir / "heatmap_dist_hops.csv");
        write_heatmap_csv(heatmap_bins(points), os);
    }
    if (!result.never_reachable_pair_ids.empty()) {
        std::ofstream os(dir / "never_reachable.csv");
        os << "pair_id\n";
        for (int id : result.never_reachable_pair_ids) os << id << "\n";
    }
    std::ofstream manifest(dir / "manifest.txt");
    write_manifest(spec, shell, result, pair_count, manifest);
}

}  // namespace

int run(const ExperimentSpec& spec) {
    const std::vector<City> cities = resolve_cities(spec.cities_path);
    const TrafficMatrix matrix = build_matrix(cities);
    int failures = 0;
    for (const ShellConfig& shell : spec.shells) {
        try {
            const fs::path dir = fs::path(spec.out_dir) / shell.name;
            std::ofstream path_dump;
            if (spec.outputs.dump_paths) {
                fs::create_directories(dir);
                path_dump.open(dir / "paths.csv");
            }
            const ShellRunResult result =
                run_shell(shell, cities, matrix, spec.gsl, spec.duration_s, spec.step_s,
                          spec.workers, spec.outputs.dump_paths ? &path_dump : nullptr);
            write_shell_outputs(spec, shell, result, matrix.pairs.size(), dir);
        } catch (const std::exception& e) {
            std::cerr << "shell " << shell.name << " failed: " << e.what() << "\n";
            ++failures;
        }
    }
    return failures;
}

AngleStudyResult run_angle_study(const ExperimentSpec& spec) {
    const std::vector<City> cities = resolve_cities(spec.cities_path);
    const TrafficMatrix matrix = build_matrix(cities);
    const BucketedPairs buckets = bucket_pairs(cities, matrix);

    std::vector<ShellConfig> shells = spec.shells;
    if (shells.empty()) {
        for (const std::string& name : incl_sweep_shells()) shells.push_back(*find_shell(name));
    }

    const fs::path dir = fs::path(spec.out_dir) / "angle_study";
    fs::create_directories(dir);

    AngleStudyResult out;
    out.histogram = buckets.histogram;
    {
        std::ofstream os(dir / "angle_histogram.csv");
        os << "bucket_lo_deg,bucket_hi_deg,count\n";
        for (int b = 0; b < kNumAngleBuckets; ++b) {
            const AngleBucket ab = angle_bucket(b);
            os << ab.lo_deg << "," << ab.hi_deg << "," << buckets.histogram[b] << "\n";
        }
    }

    std::ofstream mean_os(dir / "mean_hops.csv");
    mean_os << "inclination_deg,bucket_lo_deg,bucket_hi_deg,pair_count,mean_avg_hops\n";

    for (const ShellConfig& shell : shells) {
        const ShellRunResult result = run_shell(shell, cities, matrix, spec.gsl,
                                                spec.duration_s, spec.step_s, spec.workers);
        // summaries indexed by pair id for unordered lookup
        std::vector<const PairSummary*> by_pair(matrix.pairs.size(), nullptr);
        for (const PairSummary& s : result.summaries) by_pair[s.pair_id] = &s;
        // map (src,dst) -> pair id for the src<dst direction
        std::vector<std::vector<int>> id_of(cities.size(), std::vector<int>(cities.size(), -1));
        for (size_t k = 0; k < matrix.pairs.size(); ++k) {
            id_of[matrix.pairs[k].first][matrix.pairs[k].second] = static_cast<int>(k);
        }
        for (int b = 0; b < kNumAngleBuckets; ++b) {
            double hop_sum = 0.0;
            long count = 0;
            std::vector<double> sg;
            std::vector<std::pair<double, double>> heat;
            for (const auto& [src, dst] : buckets.pairs[b]) {
                const PairSummary* s = by_pair[id_of[src][dst]];
                if (!s) continue;  // never reachable
                hop_sum += s->avg_hops;
                ++count;
                sg.push_back(s->slowdown_g);
                heat.emplace_back(s->geodesic_km, s->avg_hops);
            }
            const AngleBucket ab = angle_bucket(b);
            AngleStudyCell cell;
            cell.inclination_deg = shell.inclination_deg;
            cell.bucket = b;
            cell.pair_count = count;
            cell.mean_avg_hops = count ? hop_sum / count : 0.0;
            out.cells.push_back(cell);
            mean_os << shell.inclination_deg << "," << ab.lo_deg << "," << ab.hi_deg << ","
                    << count << "," << cell.mean_avg_hops << "\n";

            char suffix[64];
            std::snprintf(suffix, sizeof(suffix), "_i%g_b%g_%g.csv", shell.inclination_deg,
                          ab.lo_deg, ab.hi_deg);
            {
                std::ofstream os(dir / (std::string("sg_ecdf") + suffix));
                if (sg.empty()) {
                    os << "value,fraction\n";
                } else {
                    write_ecdf_csv(ecdf(std::move(sg), "slowdown_g"), os);
                }
            }
            {
                std::ofstream os(dir / (std::string("heatmap") + suffix));
                write_heatmap_csv(heatmap_bins(heat), os);
            }
        }
    }
    return out;
}

std::vector<PairSummary> read_metrics_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw MissingRun("metrics CSV not found: " + path);
    }
    std::string line;
    if (!std::getline(in, line) || line != kMetricsCsvHeader) {
        throw ParseError(path + ": unexpected metrics CSV header");
    }
    std::vector<PairSummary> rows;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        PairSummary s;
        const int n = std::sscanf(line.c_str(),
                                  "%d,%d,%d,%lf,%lf,%lf,%lf,%lf,%lf,%lf,%d,%lf,%d,%lf,%lf",
                                  &s.pair_id, &s.src_city_id, &s.dst_city_id, &s.geodesic_km,
                                  &s.geo_angle_deg, &s.max_rtt_ms, &s.min_rtt_ms,
                                  &s.rtt_spread_ms, &s.slowdown_m, &s.slowdown_g,
                                  &s.path_changes, &s.avg_hops, &s.hop_spread, &s.hop_ratio,
                                  &s.reachable_fraction);
        if (n != 15) {
            throw ParseError(path + ":" + std::to_string(line_no) + ": bad metrics row");
        }
        rows.push_back(s);
    }
    return rows;
}

namespace {

MetricStats stats_of(std::vector<double> v) {
    MetricStats st;
    if (v.empty()) return st;
    double sum = 0.0;
    for (double x : v) sum += x;
    st.mean = sum / static_cast<double>(v.size());
    st.median = percentile(v, 50.0);
    st.p90 = percentile(std::move(v), 90.0);
    return st;
}

std::string shell_name_from_manifest(const fs::path& dir) {
    std::ifstream in(dir / "manifest.txt");
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("shell=", 0) == 0) return line.substr(6);
    }
    return dir.filename().string();
}

}  // namespace

CompareReport compare_shells(const std::string& run_dir_a, const std::string& run_dir_b) {
    CompareReport rep;
    const std::vector<PairSummary> a = read_metrics_csv((fs::path(run_dir_a) / "metrics.csv").string());
    const std::vector<PairSummary> b = read_metrics_csv((fs::path(run_dir_b) / "metrics.csv").string());
    rep.shell_a = shell_name_from_manifest(run_dir_a);
    rep.shell_b = shell_name_from_manifest(run_dir_b);
    if (const ShellConfig* s = find_shell(rep.shell_a)) rep.total_sats_a = s->total_sats();
    if (const ShellConfig* s = find_shell(rep.shell_b)) rep.total_sats_b = s->total_sats();
    rep.metrics = metric_names();
    for (const std::string& m : rep.metrics) {
        rep.stats_a.push_back(stats_of(metric_column(a, m)));
        rep.stats_b.push_back(stats_of(metric_column(b, m)));
    }
    const double mean_max_a = rep.stats_a[0].mean;
    const double mean_max_b = rep.stats_b[0].mean;
    if (rep.total_sats_a > 0 && rep.total_sats_b > 0 && rep.total_sats_a != rep.total_sats_b) {
        const bool b_fewer = rep.total_sats_b < rep.total_sats_a;
        rep.fewer_sats_faster = b_fewer ? (mean_max_b < mean_max_a) : (mean_max_a < mean_max_b);
    }
    return rep;
}

std::string CompareReport::text() const {
    std::ostringstream os;
    os << "comparison: " << shell_a << " (" << total_sats_a << " sats) vs " << shell_b << " ("
       << total_sats_b << " sats)\n";
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%-16s %12s %12s %12s %12s %12s %12s %9s\n", "metric",
                  "mean_a", "mean_b", "median_a", "median_b", "p90_a", "p90_b", "d_mean%");
    os << buf;
    for (size_t i = 0; i < metrics.size(); ++i) {
        const double delta = stats_a[i].mean != 0.0
                                 ? (stats_b[i].mean - stats_a[i].mean) / stats_a[i].mean * 100.0
                                 : 0.0;
        std::snprintf(buf, sizeof(buf), "%-16s %12.4f %12.4f %12.4f %12.4f %12.4f %12.4f %8.2f%%\n",
                      metrics[i].c_str(), stats_a[i].mean, stats_b[i].mean, stats_a[i].median,
                      stats_b[i].median, stats_a[i].p90, stats_b[i].p90, delta);
        os << buf;
    }
    if (fewer_sats_faster) {
        os << "note: the shell with fewer satellites has the lower mean max RTT\n";
    }
    return os.str();
}

namespace {

bool parse_bool(const std::string& v, const std::string& key) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw ParseError("config key '" + key + "': expected true/false, got '" + v + "'");
}

}  // namespace

RunConfigFile read_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open config file: " + path);
    }
    RunConfigFile cfg;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError(path + ":" + std::to_string(line_no) + ": expected key=value");
        }
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 1);
        if (key == "shell") cfg.shell = value;
        else if (key == "duration") cfg.duration_s = std::stod(value);
        else if (key == "step") cfg.step_s = std::stod(value);
        else if (key == "cities") cfg.cities = (value == "bundled" ? "" : value);
        else if (key == "min-elev") cfg.min_elevation_deg = std::stod(value);
        else if (key == "workers") cfg.workers = std::stoi(value);
        else if (key == "out") cfg.out_dir = value;
        else if (key == "ecdf") cfg.ecdf_metrics = value;
        else if (key == "heatmap") cfg.heatmap = parse_bool(value, key);
        else if (key == "dump-paths") cfg.dump_paths = parse_bool(value, key);
        else if (key == "format") cfg.format = value;
        // constants recorded in manifests: reject a manifest from a different build
        else if (key == "earth_radius_m") {
            if (value != "6371000") throw ConfigError("manifest earth_radius_m mismatch");
        } else if (key == "earth_mu_m3s2") {
            if (value != "3.986004418e14") throw ConfigError("manifest earth_mu_m3s2 mismatch");
        } else if (key == "earth_rotation_rad_s") {
            if (value != "7.2921159e-5") throw ConfigError("manifest earth_rotation_rad_s mismatch");
        } else if (key == "speed_of_light_mps") {
            if (value != "3e8") throw ConfigError("manifest speed_of_light_mps mismatch");
        } else if (key == "weight_quantum_m") {
            if (value != "1e-06") throw ConfigError("manifest weight_quantum_m mismatch");
        } else if (key == "tie_break") {
            if (value != "lexicographic-node-sequence") throw ConfigError("manifest tie_break mismatch");
        } else if (key == "rtt_convention") {
            if (value != "double-one-way-path") throw ConfigError("manifest rtt_convention mismatch");
        } else if (key == "percentile_convention") {
            if (value != "lower-nearest") throw ConfigError("manifest percentile_convention mismatch");
        } else if (key == "catalog_version") {
            if (value != "1") throw ConfigError("manifest catalog_version mismatch");
        } else {
            throw ParseError(path + ":" + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }
    return cfg;
}

}  // namespace leotopo
