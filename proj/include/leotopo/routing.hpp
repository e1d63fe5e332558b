#pragma once

#include <span>
#include <vector>

#include "leotopo/topology.hpp"

namespace leotopo {

// A route through the snapshot graph. nodes runs from the source city node
// through satellites (and, if ever cheaper, relay cities) to the destination
// city node. hop_count = number of edges = nodes.size() - 1.
struct RoutePath {
    std::vector<int> nodes;
    double length_um = 0.0;

    int hop_count() const { return static_cast<int>(nodes.size()) - 1; }
    double length_m() const { return um_to_m(length_um); }
};

struct PairRoute {
    bool reachable = false;
    RoutePath path;
};

// All-ordered-pairs shortest paths between city nodes, minimum total distance,
// ties broken by lexicographic comparison of the node sequences. Result is
// indexed [src_city * num_cities + dst_city]; the diagonal is left
// unreachable. Serial reference implementation.
std::vector<PairRoute> shortest_paths_snapshot(const SnapshotGraph& g);

// OpenMP kernel: parallel over source cities. Output is identical to the
// serial reference for any worker count. workers <= 0 means "all cores".
std::vector<PairRoute> shortest_paths_snapshot_omp(const SnapshotGraph& g, int workers = 0);

// Snapshot-to-snapshot comparison rule used for path-change counting: two
// unreachable routes are the same; a reachable and an unreachable route
// differ; two reachable routes are the same iff their node sequences match.
bool same_route(const PairRoute& a, const PairRoute& b);

// Number of indices i >= 1 where the route at i differs from i-1 under
// same_route. Throws EmptySeries for an empty series.
int count_path_changes(std::span<const PairRoute> series);

// All-pairs distances (micrometers; infinity when unreachable) computed with
// the Floyd-Warshall recurrence. Kept as the reference oracle for the
// production algorithm; distances agree exactly because edge weights are
// integer-valued.
std::vector<double> floyd_warshall_distances(const SnapshotGraph& g);

}  // namespace leotopo
