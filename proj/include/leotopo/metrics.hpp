#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "leotopo/geo.hpp"
#include "leotopo/routing.hpp"

namespace leotopo {

// Propagation speed used for every RTT in this artifact.
inline constexpr double kSpeedOfLightMps = 3.0e8;

// Round trip doubles the one-way shortest path (forward and reverse share the
// undirected path).
inline double rtt_from_length_m(double length_m) {
    return 2.0 * length_m / kSpeedOfLightMps;
}

double rtt_of_path(const RoutePath& p);

// RTT of transmitting along the surface great circle at light speed. Throws
// DegeneratePair for identical endpoints.
double ideal_rtt_s(const GeoCoord& a, const GeoCoord& b);

// Per-snapshot observations for one ordered city pair across a run.
// rtt_s is NaN and hops is -1 on snapshots where the pair was unreachable.
// path_changes is maintained with the routing-module node-sequence rule,
// including transitions into and out of unreachability.
struct PairTimeSeries {
    int pair_id = 0;
    int src_city_id = 0;
    int dst_city_id = 0;
    std::vector<double> rtt_s;
    std::vector<int> hops;
    int path_changes = 0;
};

struct PairSummary {
    int pair_id = 0;
    int src_city_id = 0;
    int dst_city_id = 0;
    double geodesic_km = 0.0;
    double geo_angle_deg = 0.0;
    double max_rtt_ms = 0.0;
    double min_rtt_ms = 0.0;
    double rtt_spread_ms = 0.0;
    double slowdown_m = 1.0;   // max RTT / min RTT
    double slowdown_g = 1.0;   // max RTT / ideal RTT
    int path_changes = 0;
    double avg_hops = 0.0;
    int hop_spread = 0;
    double hop_ratio = 1.0;
    double reachable_fraction = 0.0;
};

// Extrema and means over reachable snapshots only. Throws NeverReachable when
// every snapshot is unreachable, and MetricInvariant if a computed summary
// violates S_m >= 1, S_g > 1, spread >= 0 or hop_ratio >= 1.
PairSummary summarize_pair(const PairTimeSeries& series, double ideal_rtt_seconds);

struct EcdfSeries {
    std::string metric;
    std::vector<double> values;     // strictly increasing
    std::vector<double> fractions;  // non-decreasing, last value 1.0
};

// Step ECDF with fraction k/n at the k-th sorted value; duplicate values are
// merged to the highest fraction. Throws EmptyInput.
EcdfSeries ecdf(std::vector<double> values, std::string metric = "");

// Lower-nearest percentile: the sample at sorted index ceil(p/100 * n) - 1.
// p50 of {10,20,30,40} is 20.
double percentile(std::vector<double> values, double p);

struct HeatmapCell {
    double dist_bin_lo_km = 0.0;
    double hop_bin_lo = 0.0;
    long count = 0;
};

// Counts of (geodesic distance, average hops) samples per bin cell. Only
// occupied cells are returned, sorted by (distance bin, hop bin).
std::vector<HeatmapCell> heatmap_bins(std::span<const std::pair<double, double>> dist_km_hops,
                                      double dist_bin_km = 2500.0, double hop_bin = 1.0);

void write_ecdf_csv(const EcdfSeries& s, std::ostream& os);
void write_heatmap_csv(std::span<const HeatmapCell> cells, std::ostream& os);

extern const char* const kMetricsCsvHeader;
void write_metrics_csv(std::span<const PairSummary> rows, std::ostream& os);

// Pulls one metric column out of summaries, in row order.
std::vector<double> metric_column(std::span<const PairSummary> rows, const std::string& name);
std::vector<std::string> metric_names();

}  // namespace leotopo
