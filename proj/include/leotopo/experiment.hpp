#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "leotopo/metrics.hpp"
#include "leotopo/topology.hpp"
#include "leotopo/traffic.hpp"

namespace leotopo {

struct RunOutputs {
    bool metrics = true;
    std::vector<std::string> ecdf_metrics;  // metric column names to emit as ECDF CSVs
    bool heatmap = false;
    bool dump_paths = false;
};

struct ExperimentSpec {
    std::vector<ShellConfig> shells;
    double duration_s = 400.0;
    double step_s = 1.0;
    GslPolicy gsl;
    std::string cities_path;  // empty = bundled dataset
    RunOutputs outputs;
    int workers = 0;  // 0 = all hardware threads; 1 = serial reference path
    std::string out_dir;
    unsigned seed = 0;  // reserved; no stochastic components yet
};

struct ShellRunResult {
    std::string shell_name;
    int snapshots = 0;
    std::vector<PairSummary> summaries;        // never-reachable pairs excluded
    std::vector<int> never_reachable_pair_ids;
    // Smallest snapshot lag at which the whole path pattern repeats, or -1.
    int recurrence_steps = -1;
};

// Core snapshot loop for one shell: propagate, build graphs, route, assemble
// per-pair series, summarize. Pure compute except for the optional path dump.
ShellRunResult run_shell(const ShellConfig& shell, std::span<const City> cities,
                         const TrafficMatrix& matrix, const GslPolicy& gsl, double duration_s,
                         double step_s, int workers, std::ostream* path_dump = nullptr);

// Runs every shell in the spec and writes its artifact directory under
// spec.out_dir/<shell name>/. A failing shell is reported on stderr and does
// not stop the others. Returns the number of failed shells.
int run(const ExperimentSpec& spec);

int snapshot_count(double duration_s, double step_s);

std::vector<City> resolve_cities(const std::string& cities_path);

struct AngleStudyCell {
    double inclination_deg = 0.0;
    int bucket = 0;  // index into the nine geographic-angle buckets
    long pair_count = 0;
    double mean_avg_hops = 0.0;
};

struct AngleStudyResult {
    std::vector<AngleStudyCell> cells;  // inclination-major, bucket-minor
    std::array<long, kNumAngleBuckets> histogram{};
};

// Experiment (iii): per (inclination, angle bucket) aggregation over the
// inclination sweep, with S_g ECDFs and distance-vs-hops heatmaps per cell.
AngleStudyResult run_angle_study(const ExperimentSpec& spec);

struct MetricStats {
    double mean = 0.0;
    double median = 0.0;
    double p90 = 0.0;
};

struct CompareReport {
    std::string shell_a, shell_b;
    int total_sats_a = 0, total_sats_b = 0;
    std::vector<std::string> metrics;
    std::vector<MetricStats> stats_a, stats_b;
    // Set when the shell with fewer satellites has the lower mean max RTT.
    bool fewer_sats_faster = false;
    std::string text() const;
};

// Compares two previously written run directories. Throws MissingRun when a
// metrics CSV is absent.
CompareReport compare_shells(const std::string& run_dir_a, const std::string& run_dir_b);

std::vector<PairSummary> read_metrics_csv(const std::string& path);

// Flat key=value config/manifest text. Unknown keys are rejected; constant
// keys recorded in manifests are checked against the current build.
struct RunConfigFile {
    std::optional<std::string> shell;
    std::optional<double> duration_s;
    std::optional<double> step_s;
    std::optional<std::string> cities;
    std::optional<double> min_elevation_deg;
    std::optional<int> workers;
    std::optional<std::string> out_dir;
    std::optional<std::string> ecdf_metrics;  // comma separated
    std::optional<bool> heatmap;
    std::optional<bool> dump_paths;
    std::optional<std::string> format;
};

RunConfigFile read_run_config(const std::string& path);

uint64_t fnv1a64(std::string_view bytes);

}  // namespace leotopo
