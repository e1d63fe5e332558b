#include "leotopo/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "leotopo/errors.hpp"

namespace leotopo {

double rtt_of_path(const RoutePath& p) { return rtt_from_length_m(p.length_m()); }

double ideal_rtt_s(const GeoCoord& a, const GeoCoord& b) {
    const double d = geodesic_distance(a, b);
    if (d <= 0.0) {
        throw DegeneratePair("ideal RTT undefined for identical endpoints");
    }
    return 2.0 * d / kSpeedOfLightMps;
}

PairSummary summarize_pair(const PairTimeSeries& series, double ideal_rtt_seconds) {
    if (series.rtt_s.size() != series.hops.size()) {
        throw Error("pair series RTT and hop vectors disagree in length");
    }
    PairSummary s;
    s.pair_id = series.pair_id;
    s.src_city_id = series.src_city_id;
    s.dst_city_id = series.dst_city_id;
    s.path_changes = series.path_changes;

    double max_rtt = -1.0, min_rtt = -1.0;
    int max_hops = -1, min_hops = -1;
    long hop_sum = 0;
    int reachable = 0;
    for (size_t i = 0; i < series.rtt_s.size(); ++i) {
        const double rtt = series.rtt_s[i];
        if (std::isnan(rtt)) continue;
        ++reachable;
        if (max_rtt < 0.0 || rtt > max_rtt) max_rtt = rtt;
        if (min_rtt < 0.0 || rtt < min_rtt) min_rtt = rtt;
        const int h = series.hops[i];
        if (max_hops < 0 || h > max_hops) max_hops = h;
        if (min_hops < 0 || h < min_hops) min_hops = h;
        hop_sum += h;
    }
    if (reachable == 0) {
        throw NeverReachable("pair " + std::to_string(series.pair_id) +
                             " unreachable in every snapshot");
    }

    s.max_rtt_ms = max_rtt * 1e3;
    s.min_rtt_ms = min_rtt * 1e3;
    s.rtt_spread_ms = s.max_rtt_ms - s.min_rtt_ms;
    s.slowdown_m = max_rtt / min_rtt;
    s.slowdown_g = max_rtt / ideal_rtt_seconds;
    s.avg_hops = static_cast<double>(hop_sum) / reachable;
    s.hop_spread = max_hops - min_hops;
    s.hop_ratio = static_cast<double>(max_hops) / static_cast<double>(min_hops);
    s.reachable_fraction = static_cast<double>(reachable) / series.rtt_s.size();

    if (!(s.slowdown_m >= 1.0) || !(s.slowdown_g > 1.0) || !(s.rtt_spread_ms >= 0.0) ||
        !(s.hop_ratio >= 1.0) || !std::isfinite(s.slowdown_g)) {
        throw MetricInvariant("pair " + std::to_string(series.pair_id) +
                              " violates a summary invariant (S_m=" +
                              std::to_string(s.slowdown_m) +
                              ", S_g=" + std::to_string(s.slowdown_g) + ")");
    }
    return s;
}

EcdfSeries ecdf(std::vector<double> values, std::string metric) {
    if (values.empty()) {
        throw EmptyInput("ECDF of an empty sample");
    }
    std::sort(values.begin(), values.end());
    EcdfSeries s;
    s.metric = std::move(metric);
    const size_t n = values.size();
    for (size_t i = 0; i < n; ++i) {
        // keep only the last of a run of duplicates: highest cumulative fraction
        if (i + 1 < n && values[i + 1] == values[i]) continue;
        s.values.push_back(values[i]);
        s.fractions.push_back(static_cast<double>(i + 1) / static_cast<double>(n));
    }
    return s;
}

double percentile(std::vector<double> values, double p) {
    if (values.empty()) {
        throw EmptyInput("percentile of an empty sample");
    }
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(values.size());
    long idx = static_cast<long>(std::ceil(p / 100.0 * n)) - 1;
    idx = std::clamp(idx, 0L, static_cast<long>(values.size()) - 1);
    return values[static_cast<size_t>(idx)];
}

std::vector<HeatmapCell> heatmap_bins(std::span<const std::pair<double, double>> dist_km_hops,
                                      double dist_bin_km, double hop_bin) {
    if (!(dist_bin_km > 0.0) || !(hop_bin > 0.0)) {
        throw ConfigError("heatmap bin widths must be positive");
    }
    std::vector<std::pair<long, long>> keys;
    keys.reserve(dist_km_hops.size());
    for (const auto& [dist_km, hops] : dist_km_hops) {
        keys.emplace_back(static_cast<long>(std::floor(dist_km / dist_bin_km)),
                          static_cast<long>(std::floor(hops / hop_bin)));
    }
    std::sort(keys.begin(), keys.end());
    std::vector<HeatmapCell> cells;
    for (size_t i = 0; i < keys.size();) {
        size_t j = i;
        while (j < keys.size() && keys[j] == keys[i]) ++j;
        cells.push_back({keys[i].first * dist_bin_km, keys[i].second * hop_bin,
                         static_cast<long>(j - i)});
        i = j;
    }
    return cells;
}

void write_ecdf_csv(const EcdfSeries& s, std::ostream& os) {
    os << "value,fraction\n";
    char buf[96];
    for (size_t i = 0; i < s.values.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.9g,%.9g\n", s.values[i], s.fractions[i]);
        os << buf;
    }
}

void write_heatmap_csv(std::span<const HeatmapCell> cells, std::ostream& os) {
    os << "dist_bin_lo_km,hop_bin_lo,count\n";
    char buf[96];
    for (const HeatmapCell& c : cells) {
        std::snprintf(buf, sizeof(buf), "%.9g,%.9g,%ld\n", c.dist_bin_lo_km, c.hop_bin_lo,
                      c.count);
        os << buf;
    }
}

const char* const kMetricsCsvHeader =
    "pair_id,src,dst,geodesic_km,geo_angle_deg,max_rtt_ms,min_rtt_ms,spread_ms,"
    "slowdown_m,slowdown_g,path_changes,avg_hops,hop_spread,hop_ratio,reachable_frac";

void write_metrics_csv(std::span<const PairSummary> rows, std::ostream& os) {
    os << kMetricsCsvHeader << '\n';
    char buf[512];
    for (const PairSummary& r : rows) {
        std::snprintf(buf, sizeof(buf),
                      "%d,%d,%d,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%d,%.6f,%d,%.6f,%.6f\n",
                      r.pair_id, r.src_city_id, r.dst_city_id, r.geodesic_km, r.geo_angle_deg,
                      r.max_rtt_ms, r.min_rtt_ms, r.rtt_spread_ms, r.slowdown_m, r.slowdown_g,
                      r.path_changes, r.avg_hops, r.hop_spread, r.hop_ratio,
                      r.reachable_fraction);
        os << buf;
    }
}

std::vector<std::string> metric_names() {
    return {"max_rtt_ms", "min_rtt_ms", "spread_ms",  "slowdown_m",    "slowdown_g",
            "path_changes", "avg_hops",   "hop_spread", "hop_ratio",   "reachable_frac"};
}

std::vector<double> metric_column(std::span<const PairSummary> rows, const std::string& name) {
    std::vector<double> out;
    out.reserve(rows.size());
    for (const PairSummary& r : rows) {
        if (name == "max_rtt_ms") out.push_back(r.max_rtt_ms);
        else if (name == "min_rtt_ms") out.push_back(r.min_rtt_ms);
        else if (name == "spread_ms") out.push_back(r.rtt_spread_ms);
        else if (name == "slowdown_m") out.push_back(r.slowdown_m);
        else if (name == "slowdown_g") out.push_back(r.slowdown_g);
        else if (name == "path_changes") out.push_back(r.path_changes);
        else if (name == "avg_hops") out.push_back(r.avg_hops);
        else if (name == "hop_spread") out.push_back(r.hop_spread);
        else if (name == "hop_ratio") out.push_back(r.hop_ratio);
        else if (name == "reachable_frac") out.push_back(r.reachable_fraction);
        else if (name == "geodesic_km") out.push_back(r.geodesic_km);
        else if (name == "geo_angle_deg") out.push_back(r.geo_angle_deg);
        else throw Error("unknown metric column: " + name);
    }
    return out;
}

}  // namespace leotopo
