// Acceptance suite: one pass/fail line per criterion, measured values printed
// alongside each claim so a failing criterion can be adjudicated by hand.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <map>
#include <random>
#include <sstream>

#include "leotopo/errors.hpp"
#include "leotopo/experiment.hpp"

using namespace leotopo;
namespace fs = std::filesystem;
using steady = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %2d %-24s %s\n", pass ? "PASS" : "FAIL", id, name,
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double elapsed_s(steady::time_point start) {
    return std::chrono::duration<double>(steady::now() - start).count();
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof(buf), f, args);
    va_end(args);
    return buf;
}

// ---- shared full-run cache (bundled cities, 400 s window, 1 s steps) ----

const std::vector<City>& cities() { return bundled_cities(); }

const TrafficMatrix& matrix() {
    static const TrafficMatrix tm = build_matrix(cities());
    return tm;
}

const ShellRunResult& cached_run(const std::string& name) {
    static std::map<std::string, ShellRunResult> cache;
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    const ShellConfig* shell = find_shell(name);
    std::fprintf(stderr, "  running %s (%d sats, 400 snapshots)...\n", name.c_str(),
                 shell->total_sats());
    const auto start = steady::now();
    ShellRunResult r = run_shell(*shell, cities(), matrix(), GslPolicy{}, 400.0, 1.0, 4);
    std::fprintf(stderr, "  %s done in %.1f s (%zu summaries, %zu never reachable)\n",
                 name.c_str(), elapsed_s(start), r.summaries.size(),
                 r.never_reachable_pair_ids.size());
    return cache.emplace(name, std::move(r)).first->second;
}

double median_of(const ShellRunResult& r, const std::string& metric) {
    return percentile(metric_column(r.summaries, metric), 50.0);
}

double mean_max_rtt(const ShellRunResult& r) {
    double sum = 0.0;
    for (const PairSummary& s : r.summaries) sum += s.max_rtt_ms;
    return sum / static_cast<double>(r.summaries.size());
}

double fraction_below(const ShellRunResult& r, const std::string& metric, double bound) {
    const auto col = metric_column(r.summaries, metric);
    long n = 0;
    for (double v : col) {
        if (v < bound) ++n;
    }
    return static_cast<double>(n) / static_cast<double>(col.size());
}

GeoCoord random_coord(std::mt19937& rng) {
    std::uniform_real_distribution<double> lat(-90.0, 90.0);
    std::uniform_real_distribution<double> lon(-179.999, 180.0);
    return geo_coord(lat(rng), lon(rng));
}

ShellConfig random_shell(std::mt19937& rng, int max_orbits, int max_sats) {
    std::uniform_int_distribution<int> orbits(3, max_orbits);
    std::uniform_int_distribution<int> sats(3, max_sats);
    std::uniform_real_distribution<double> alt(350.0, 1500.0);
    std::uniform_real_distribution<double> incl(20.0, 100.0);
    static int counter = 0;
    return make_shell("rand" + std::to_string(counter++), alt(rng), orbits(rng), sats(rng),
                      incl(rng));
}

// ---- criteria ----

void criterion_1_geometry() {
    const auto start = steady::now();
    std::mt19937 rng(1001);
    bool ok = true;
    std::string why;
    for (int i = 0; i < 1000 && ok; ++i) {
        const GeoCoord a = random_coord(rng);
        const GeoCoord b = random_coord(rng);
        const GeoCoord c = random_coord(rng);
        if (geodesic_distance(a, b) != geodesic_distance(b, a)) {
            ok = false;
            why = "geodesic symmetry violated";
        }
        if (geodesic_distance(a, b) >
            geodesic_distance(a, c) + geodesic_distance(c, b) + 1e-6) {
            ok = false;
            why = "triangle inequality violated";
        }
        try {
            const double ang = geographic_angle_deg(a, b);
            if (ang < 0.0 || ang > 90.0) {
                ok = false;
                why = "angle outside [0,90]";
            }
            if (std::abs(ang - geographic_angle_deg(b, a)) > 1e-9) {
                ok = false;
                why = "angle not swap-invariant";
            }
            const GeoCoord am = geo_coord(-a.latitude_deg, a.longitude_deg);
            const GeoCoord bm = geo_coord(-b.latitude_deg, b.longitude_deg);
            if (std::abs(ang - geographic_angle_deg(am, bm)) > 1e-9) {
                ok = false;
                why = "angle not hemisphere-invariant";
            }
        } catch (const DegeneratePair&) {
        }
    }
    const double secs = elapsed_s(start);
    if (secs >= 1.0) {
        ok = false;
        why = "runtime budget exceeded";
    }
    report(1, "geometry-oracle", ok,
           fmt("1000 random pairs in %.3f s (budget 1 s)%s%s", secs, ok ? "" : ": ",
               why.c_str()));
}

void criterion_2_routing_oracle() {
    const auto start = steady::now();
    std::mt19937 rng(2002);
    std::uniform_real_distribution<double> tdist(0.0, 6000.0);
    std::uniform_int_distribution<int> ncities(2, 10);
    long compared = 0;
    int mismatches = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const ShellConfig shell = random_shell(rng, 10, 10);
        std::vector<GeoCoord> cs;
        const int n = ncities(rng);
        for (int i = 0; i < n; ++i) cs.push_back(random_coord(rng));
        const SnapshotGraph g =
            snapshot_graph(shell, build_plus_grid(shell), cs, GslPolicy{}, tdist(rng));
        const auto routes = shortest_paths_snapshot(g);
        const auto fw = floyd_warshall_distances(g);
        const size_t v = g.node_count();
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                const PairRoute& r = routes[i * n + j];
                const double oracle = fw[g.city_node(i) * v + g.city_node(j)];
                ++compared;
                if (r.reachable ? (r.path.length_um != oracle) : std::isfinite(oracle)) {
                    ++mismatches;
                }
            }
        }
    }
    const double secs = elapsed_s(start);
    const bool ok = mismatches == 0 && secs < 30.0;
    report(2, "routing-oracle", ok,
           fmt("%ld pair distances over 50 random shells, %d mismatches (zero tolerance), "
               "%.1f s (budget 30 s)",
               compared, mismatches, secs));
}

void criterion_3_plus_grid() {
    std::mt19937 rng(3003);
    bool ok = true;
    std::string why;
    for (int trial = 0; trial < 20 && ok; ++trial) {
        const ShellConfig shell = random_shell(rng, 24, 24);
        const auto edges = build_plus_grid(shell);
        if (edges.size() != static_cast<size_t>(2 * shell.num_orbits * shell.sats_per_orbit)) {
            ok = false;
            why = fmt("edge count %zu != 2MN for %s", edges.size(), shell.name.c_str());
            break;
        }
        std::vector<int> degree(shell.total_sats(), 0);
        for (const IslEdge& e : edges) {
            ++degree[e.a];
            ++degree[e.b];
        }
        for (int d : degree) {
            if (d != 4) {
                ok = false;
                why = "degree != 4";
            }
        }
        // intra-orbit weights time-invariant to 1e-3 m across 10 snapshots
        const std::vector<GeoCoord> none;
        std::vector<double> base;
        for (int k = 0; k < 10 && ok; ++k) {
            const SnapshotGraph g = snapshot_graph(shell, edges, none, GslPolicy{}, k * 37.0);
            std::vector<double> intra;
            for (const IslEdge& e : edges) {
                if (e.kind != IslKind::intra_orbit) continue;
                for (int off = g.offsets[e.a]; off < g.offsets[e.a + 1]; ++off) {
                    if (g.neighbors[off] == e.b) {
                        intra.push_back(g.weight_um[off]);
                        break;
                    }
                }
            }
            if (base.empty()) {
                base = intra;
            } else {
                for (size_t i = 0; i < intra.size(); ++i) {
                    if (std::abs(intra[i] - base[i]) > 1000.0) {  // 1e-3 m in micrometers
                        ok = false;
                        why = "intra-orbit weight drifted across snapshots";
                    }
                }
            }
        }
    }
    report(3, "plus-grid-structure", ok,
           ok ? "20 random shells: 2MN edges, degree 4, intra-orbit weights static to 1e-3 m"
              : why);
}

void criterion_4_metric_invariants() {
    const ShellRunResult& r = cached_run("S2");
    bool ok = true;
    std::string why;
    for (const PairSummary& s : r.summaries) {
        if (!(s.slowdown_m >= 1.0) || !(s.slowdown_g > 1.0) || !(s.rtt_spread_ms >= 0.0) ||
            !(s.hop_ratio >= 1.0)) {
            ok = false;
            why = fmt("pair %d: S_m=%.4f S_g=%.4f spread=%.4f hop_ratio=%.4f", s.pair_id,
                      s.slowdown_m, s.slowdown_g, s.rtt_spread_ms, s.hop_ratio);
            break;
        }
    }
    for (const char* metric : {"max_rtt_ms", "slowdown_g", "path_changes"}) {
        const EcdfSeries e = ecdf(metric_column(r.summaries, metric), metric);
        for (size_t i = 1; i < e.fractions.size(); ++i) {
            if (e.values[i] <= e.values[i - 1] || e.fractions[i] < e.fractions[i - 1]) {
                ok = false;
                why = fmt("ECDF of %s not monotone", metric);
            }
        }
        if (e.fractions.back() != 1.0) {
            ok = false;
            why = fmt("ECDF of %s does not end at 1", metric);
        }
    }
    report(4, "metric-invariants", ok,
           ok ? fmt("S2 full run, %zu pairs: S_m>=1, S_g>1, spread>=0, hop_ratio>=1, ECDFs "
                    "monotone to 1",
                    r.summaries.size())
              : why);
}

void criterion_5_determinism() {
    const ShellRunResult& parallel = cached_run("S2");  // workers = 4
    const ShellConfig& shell = *find_shell("S2");
    std::fprintf(stderr, "  running S2 again with 1 worker...\n");
    const ShellRunResult serial =
        run_shell(shell, cities(), matrix(), GslPolicy{}, 400.0, 1.0, 1);
    std::ostringstream a, b;
    write_metrics_csv(parallel.summaries, a);
    write_metrics_csv(serial.summaries, b);
    const bool ok = a.str() == b.str();
    report(5, "worker-determinism", ok,
           fmt("S2 metrics CSV with 1 vs 4 workers: %s (%zu bytes)",
               ok ? "byte-identical" : "DIFFER", a.str().size()));
}

void criterion_6_s1_vs_e1() {
    const double s1 = mean_max_rtt(cached_run("S1"));
    const double e1 = mean_max_rtt(cached_run("E1"));
    const double gap = (s1 - e1) / s1;
    const bool ok = e1 < s1 && gap >= 0.05 && gap <= 0.25;
    report(6, "s1-vs-e1-inversion", ok,
           fmt("mean max-RTT: S1=%.2f ms (1584 sats), E1=%.2f ms (720 sats), gap=%.1f%% "
               "(claim: E1 lower by 5-25%%, reported ~13.5%%)",
               s1, e1, gap * 100.0));
}

void criterion_7_geodesic_slowdown() {
    bool ok = true;
    std::string detail;
    for (const char* name : {"S1", "S2", "S4", "K1", "K2", "K3", "T2"}) {
        const double frac = fraction_below(cached_run(name), "slowdown_g", 2.5);
        detail += fmt("%s=%.1f%% ", name, frac * 100.0);
        if (frac < 0.75) ok = false;
    }
    report(7, "geodesic-slowdown", ok,
           fmt("pairs with S_g<2.5: %s(claim: >=75%% each, reported >80%%)", detail.c_str()));
}

void criterion_8_rtt_stability() {
    bool ok = true;
    std::string detail;
    for (const char* name : {"S1", "S2", "S4"}) {
        const double frac = fraction_below(cached_run(name), "spread_ms", 25.0);
        detail += fmt("%s<25ms=%.1f%% ", name, frac * 100.0);
        if (frac < 0.85) ok = false;
    }
    for (const char* name : {"K1", "K2", "K3"}) {
        const double frac = fraction_below(cached_run(name), "spread_ms", 20.0);
        detail += fmt("%s<20ms=%.1f%% ", name, frac * 100.0);
        if (frac < 0.85) ok = false;
    }
    const double t2 = fraction_below(cached_run("T2"), "spread_ms", 12.0);
    detail += fmt("T2<12ms=%.1f%%", t2 * 100.0);
    if (t2 < 0.95) ok = false;
    report(8, "rtt-stability", ok, fmt("%s (claims: >=85%%, >=85%%, >=95%%)", detail.c_str()));
}

void criterion_9_sats_threshold() {
    const double m20 = median_of(cached_run("syn-o20-s20"), "max_rtt_ms");
    const double m28 = median_of(cached_run("syn-o20-s28"), "max_rtt_ms");
    const double m36 = median_of(cached_run("syn-o20-s36"), "max_rtt_ms");
    const double m44 = median_of(cached_run("syn-o20-s44"), "max_rtt_ms");
    const double improvement_36_44 = (m36 - m44) / m36;
    const bool ok = m20 >= 1.5 * m28 && improvement_36_44 <= 0.05;
    report(9, "sats-per-orbit-threshold", ok,
           fmt("20 orbits, median max-RTT: s20=%.1f s28=%.1f (ratio %.2f, claim >=1.5; reported "
               "2x), s36=%.1f s44=%.1f (gain %.1f%%, claim <=5%%, reported <2%%)",
               m20, m28, m20 / m28, m36, m44, improvement_36_44 * 100.0));
}

void criterion_10_orbit_threshold() {
    const double o20 = median_of(cached_run("syn-o20-s20"), "max_rtt_ms");
    const double o33 = median_of(cached_run("syn-o33-s20"), "max_rtt_ms");
    const double o46 = median_of(cached_run("syn-o46-s20"), "max_rtt_ms");
    const double reduction = (o20 - o46) / o20;
    bool ok = o20 > o33 && o33 > o46 && reduction >= 0.35;
    std::string detail =
        fmt("at 20 sats/orbit: o20=%.1f o33=%.1f o46=%.1f (monotone: %s, reduction %.1f%%, "
            "claim >=35%%; reported 20/50%%); ",
            o20, o33, o46, (o20 > o33 && o33 > o46) ? "yes" : "NO", reduction * 100.0);
    for (int sats : {28, 36, 44}) {
        const double a = median_of(cached_run(fmt("syn-o20-s%d", sats)), "max_rtt_ms");
        const double b = median_of(cached_run(fmt("syn-o59-s%d", sats)), "max_rtt_ms");
        const double red = (a - b) / a;
        detail += fmt("s%d:o20->o59=%.1f%% ", sats, red * 100.0);
        if (red > 0.20) ok = false;
    }
    report(10, "orbit-count-threshold", ok, detail + "(claim <=20% each)");
}

void criterion_11_angle_alignment(const AngleStudyResult& study) {
    const std::vector<double> incls = {45.0, 55.0, 65.0, 75.0};
    double hops[4][kNumAngleBuckets] = {};
    long counts[4][kNumAngleBuckets] = {};
    for (const AngleStudyCell& c : study.cells) {
        for (size_t i = 0; i < incls.size(); ++i) {
            if (c.inclination_deg == incls[i]) {
                hops[i][c.bucket] = c.mean_avg_hops;
                counts[i][c.bucket] = c.pair_count;
            }
        }
    }
    bool ok = true;
    std::string detail;
    // buckets 40-50 .. 70-80: the minimizing inclination is the nearest one
    for (int b = 4; b <= 7; ++b) {
        if (counts[0][b] == 0) continue;
        int best = 0;
        for (int i = 1; i < 4; ++i) {
            if (hops[i][b] < hops[best][b]) best = i;
        }
        detail += fmt("b%d0:best=i%g ", b, incls[best]);
        if (best != b - 4) ok = false;
    }
    // monotone decrease above 70 degrees, monotone increase below 40
    for (int b = 7; b <= 8; ++b) {
        for (int i = 1; i < 4; ++i) {
            if (counts[0][b] && hops[i][b] > hops[i - 1][b]) ok = false;
        }
    }
    for (int b = 0; b <= 3; ++b) {
        for (int i = 1; i < 4; ++i) {
            if (counts[0][b] && hops[i][b] < hops[i - 1][b]) ok = false;
        }
    }
    detail += "hops(i45,i55,i65,i75): ";
    for (int b = 0; b < kNumAngleBuckets; ++b) {
        detail += fmt("b%d0[%.2f %.2f %.2f %.2f n=%ld] ", b, hops[0][b], hops[1][b], hops[2][b],
                      hops[3][b], counts[0][b]);
    }
    report(11, "angle-inclination", ok,
           detail + "(claim: argmin at nearest incl for 40-80; monotone outside)");
}

void criterion_12_path_change_regime() {
    const double s1 = median_of(cached_run("S1"), "path_changes");
    const double s2 = median_of(cached_run("S2"), "path_changes");
    const double s3 = median_of(cached_run("S3"), "path_changes");
    const double s4 = median_of(cached_run("S4"), "path_changes");
    const double s5 = median_of(cached_run("S5"), "path_changes");
    const double dense_max = std::max({s1, s2, s4});
    const bool ok = s3 > dense_max && s5 > dense_max;
    report(12, "path-change-regime", ok,
           fmt("median path changes: S1=%.0f S2=%.0f S4=%.0f vs sparse S3=%.0f S5=%.0f "
               "(claim: S3,S5 greatest)",
               s1, s2, s4, s3, s5));
}

void criterion_13_altitude_insensitivity() {
    std::vector<double> medians;
    std::string detail;
    for (const std::string& name : alt_sweep_shells()) {
        medians.push_back(median_of(cached_run(name), "max_rtt_ms"));
        detail += fmt("%s=%.1f ", name.c_str(), medians.back());
    }
    bool ok = true;
    for (size_t i = 0; i < medians.size(); ++i) {
        for (size_t j = i + 1; j < medians.size(); ++j) {
            if (std::abs(medians[i] - medians[j]) >= 0.10 * std::max(medians[i], medians[j])) {
                ok = false;
            }
        }
    }
    report(13, "altitude-insensitivity", ok,
           fmt("median max-RTT: %s(claim: pairwise gap <10%%)", detail.c_str()));
}

void criterion_14_fine_sweep() {
    // pool pairs across the four orbit counts at each sats/orbit level
    auto pooled_median = [&](int sats) {
        std::vector<double> values;
        for (int orbits : {20, 33, 46, 59}) {
            const ShellRunResult& r = cached_run(fmt("syn-o%d-s%d", orbits, sats));
            for (const PairSummary& s : r.summaries) values.push_back(s.max_rtt_ms);
        }
        return percentile(std::move(values), 50.0);
    };
    const double m20 = pooled_median(20);
    const double m22 = pooled_median(22);
    const double m26 = pooled_median(26);
    const double imp1 = m20 - m22;
    const double imp2 = m22 - m26;
    const bool small_both = imp1 <= 0.05 * m20 && imp2 <= 0.05 * m22;
    const bool converged = imp2 <= 0.10 * std::abs(imp1);
    const bool ok = converged || small_both;
    report(14, "fine-sweep-convergence", ok,
           fmt("pooled median max-RTT: s20=%.1f s22=%.1f s26=%.1f; 20->22 gain %.1f ms, "
               "22->26 gain %.1f ms (claim: second <=10%% of first, or both <=5%%)",
               m20, m22, m26, imp1, imp2));
}

}  // namespace

int main() {
    std::printf("leotopo acceptance suite\n");
    const auto start = steady::now();

    criterion_1_geometry();
    criterion_2_routing_oracle();
    criterion_3_plus_grid();
    criterion_4_metric_invariants();
    criterion_5_determinism();
    criterion_6_s1_vs_e1();
    criterion_7_geodesic_slowdown();
    criterion_8_rtt_stability();
    criterion_9_sats_threshold();
    criterion_10_orbit_threshold();

    {
        std::fprintf(stderr, "  running angle study (4 inclination shells)...\n");
        ExperimentSpec spec;
        spec.out_dir = (fs::temp_directory_path() / "leotopo_acceptance_angle").string();
        spec.workers = 4;
        const AngleStudyResult study = run_angle_study(spec);
        criterion_11_angle_alignment(study);
    }

    criterion_12_path_change_regime();
    criterion_13_altitude_insensitivity();
    criterion_14_fine_sweep();

    std::printf("%d of 14 criteria failed; total runtime %.1f min\n", g_failures,
                elapsed_s(start) / 60.0);
    return g_failures == 0 ? 0 : 1;
}
