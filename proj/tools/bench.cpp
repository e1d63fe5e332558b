// Benchmark comparing the serial routing reference, the OpenMP kernel, and
// the Floyd-Warshall oracle on one shell.
//
//   bench [shell] [snapshots] [workers]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "leotopo/experiment.hpp"

using namespace leotopo;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    const std::string shell_name = argc > 1 ? argv[1] : "K3";
    const int snapshots = argc > 2 ? std::atoi(argv[2]) : 10;
    const int workers = argc > 3 ? std::atoi(argv[3]) : omp_get_max_threads();

    const ShellConfig* shell = find_shell(shell_name);
    if (!shell) {
        std::fprintf(stderr, "unknown shell %s\n", shell_name.c_str());
        return 1;
    }
    const auto& cities = bundled_cities();
    std::vector<GeoCoord> coords(cities.size());
    for (size_t i = 0; i < cities.size(); ++i) coords[i] = cities[i].coord;
    const auto isl = build_plus_grid(*shell);

    std::printf("shell %s: %d sats, %zu cities, %d snapshots, %d workers\n",
                shell->name.c_str(), shell->total_sats(), cities.size(), snapshots, workers);

    std::vector<SnapshotGraph> graphs;
    graphs.reserve(snapshots);
    {
        const auto start = clock_type::now();
        for (int i = 0; i < snapshots; ++i) {
            graphs.push_back(snapshot_graph(*shell, isl, coords, GslPolicy{}, i));
        }
        std::printf("graph build:      %8.3f s total, %7.2f ms/snapshot\n",
                    seconds_since(start), seconds_since(start) * 1e3 / snapshots);
    }

    std::vector<std::vector<PairRoute>> serial;
    {
        const auto start = clock_type::now();
        for (const SnapshotGraph& g : graphs) serial.push_back(shortest_paths_snapshot(g));
        std::printf("routing (serial): %8.3f s total, %7.2f ms/snapshot\n",
                    seconds_since(start), seconds_since(start) * 1e3 / snapshots);
    }

    double omp_total;
    {
        const auto start = clock_type::now();
        std::vector<std::vector<PairRoute>> parallel;
        for (const SnapshotGraph& g : graphs) {
            parallel.push_back(shortest_paths_snapshot_omp(g, workers));
        }
        omp_total = seconds_since(start);
        std::printf("routing (OpenMP): %8.3f s total, %7.2f ms/snapshot\n", omp_total,
                    omp_total * 1e3 / snapshots);
        // verify the kernels agree
        for (int i = 0; i < snapshots; ++i) {
            for (size_t k = 0; k < serial[i].size(); ++k) {
                if (!same_route(serial[i][k], parallel[i][k])) {
                    std::fprintf(stderr, "MISMATCH at snapshot %d pair %zu\n", i, k);
                    return 2;
                }
            }
        }
        std::printf("kernels agree on all %zu routes\n", serial.size() * serial[0].size());
    }

    {
        // Floyd-Warshall on one snapshot; O(V^3) dominates quickly, so run once.
        const auto start = clock_type::now();
        const auto fw = floyd_warshall_distances(graphs[0]);
        const double fw_s = seconds_since(start);
        const size_t v = graphs[0].node_count();
        int mismatches = 0;
        for (int i = 0; i < graphs[0].num_cities; ++i) {
            for (int j = 0; j < graphs[0].num_cities; ++j) {
                if (i == j) continue;
                const PairRoute& r = serial[0][i * graphs[0].num_cities + j];
                const double d = fw[graphs[0].city_node(i) * v + graphs[0].city_node(j)];
                if (r.reachable ? (r.path.length_um != d) : std::isfinite(d)) ++mismatches;
            }
        }
        std::printf("floyd-warshall:   %8.3f s for one %zu-node snapshot, %d mismatches\n",
                    fw_s, v, mismatches);
        if (mismatches) return 2;
    }
    return 0;
}
