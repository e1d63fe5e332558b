#include "leotopo/routing.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>
#include <queue>

#include "leotopo/errors.hpp"

namespace leotopo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct SsspScratch {
    std::vector<double> dist;
    std::vector<int> parent;
    std::vector<char> settled;
    std::vector<int> path_a;  // reconstruction buffers for tie-breaking
    std::vector<int> path_b;
};

void reconstruct(const std::vector<int>& parent, int node, std::vector<int>& out) {
    out.clear();
    for (int x = node; x != -1; x = parent[x]) out.push_back(x);
    std::reverse(out.begin(), out.end());
}

// True iff path(u)+[v] is lexicographically smaller than path(cur_parent)+[v].
// Both u and cur_parent are settled, so their parent chains are final. Ties
// are rare; the O(path length) reconstruction here is off the hot path.
bool tie_prefers_candidate(const std::vector<int>& parent, int u, int cur_parent, int v,
                           SsspScratch& scratch) {
    reconstruct(parent, u, scratch.path_a);
    scratch.path_a.push_back(v);
    reconstruct(parent, cur_parent, scratch.path_b);
    scratch.path_b.push_back(v);
    return std::lexicographical_compare(scratch.path_a.begin(), scratch.path_a.end(),
                                        scratch.path_b.begin(), scratch.path_b.end());
}

// Dijkstra from one source over the snapshot graph. All weights are strictly
// positive, so every predecessor on a shortest path settles strictly before
// its successor; equal-distance tie updates can therefore never arrive after
// a node has settled.
void sssp_from(const SnapshotGraph& g, int src, SsspScratch& scratch) {
    const int v = g.node_count();
    scratch.dist.assign(v, kInf);
    scratch.parent.assign(v, -1);
    scratch.settled.assign(v, 0);

    using Entry = std::pair<double, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    scratch.dist[src] = 0.0;
    heap.push({0.0, src});

    while (!heap.empty()) {
        const auto [d, u] = heap.top();
        heap.pop();
        if (scratch.settled[u]) continue;
        scratch.settled[u] = 1;
        for (int e = g.offsets[u]; e < g.offsets[u + 1]; ++e) {
            const int w = g.neighbors[e];
            const double nd = d + g.weight_um[e];
            if (nd < scratch.dist[w]) {
                scratch.dist[w] = nd;
                scratch.parent[w] = u;
                heap.push({nd, w});
            } else if (nd == scratch.dist[w] && scratch.parent[w] != u &&
                       scratch.parent[w] != -1 &&
                       tie_prefers_candidate(scratch.parent, u, scratch.parent[w], w, scratch)) {
                scratch.parent[w] = u;
            }
        }
    }
}

void routes_from_source(const SnapshotGraph& g, int src_city, SsspScratch& scratch,
                        std::span<PairRoute> row) {
    const int c = g.num_cities;
    sssp_from(g, g.city_node(src_city), scratch);
    for (int dst = 0; dst < c; ++dst) {
        if (dst == src_city) continue;
        const int dst_node = g.city_node(dst);
        PairRoute& r = row[dst];
        if (scratch.dist[dst_node] == kInf) {
            r = PairRoute{};
            continue;
        }
        r.reachable = true;
        r.path.length_um = scratch.dist[dst_node];
        reconstruct(scratch.parent, dst_node, r.path.nodes);
    }
}

}  // namespace

std::vector<PairRoute> shortest_paths_snapshot(const SnapshotGraph& g) {
    const int c = g.num_cities;
    std::vector<PairRoute> result(static_cast<size_t>(c) * c);
    SsspScratch scratch;
    for (int src = 0; src < c; ++src) {
        routes_from_source(g, src, scratch,
                           std::span<PairRoute>(result).subspan(static_cast<size_t>(src) * c, c));
    }
    return result;
}

std::vector<PairRoute> shortest_paths_snapshot_omp(const SnapshotGraph& g, int workers) {
    const int c = g.num_cities;
    std::vector<PairRoute> result(static_cast<size_t>(c) * c);
    if (workers <= 0) workers = omp_get_max_threads();
#pragma omp parallel num_threads(workers)
    {
        SsspScratch scratch;
#pragma omp for schedule(dynamic)
        for (int src = 0; src < c; ++src) {
            routes_from_source(
                g, src, scratch,
                std::span<PairRoute>(result).subspan(static_cast<size_t>(src) * c, c));
        }
    }
    return result;
}

bool same_route(const PairRoute& a, const PairRoute& b) {
    if (!a.reachable && !b.reachable) return true;
    if (a.reachable != b.reachable) return false;
    return a.path.nodes == b.path.nodes;
}

int count_path_changes(std::span<const PairRoute> series) {
    if (series.empty()) {
        throw EmptySeries("path-change count needs at least one snapshot");
    }
    int changes = 0;
    for (size_t i = 1; i < series.size(); ++i) {
        if (!same_route(series[i - 1], series[i])) ++changes;
    }
    return changes;
}

std::vector<double> floyd_warshall_distances(const SnapshotGraph& g) {
    const size_t v = static_cast<size_t>(g.node_count());
    std::vector<double> dist(v * v, kInf);
    for (size_t i = 0; i < v; ++i) dist[i * v + i] = 0.0;
    for (int u = 0; u < static_cast<int>(v); ++u) {
        for (int e = g.offsets[u]; e < g.offsets[u + 1]; ++e) {
            const size_t w = static_cast<size_t>(g.neighbors[e]);
            dist[u * v + w] = std::min(dist[u * v + w], g.weight_um[e]);
        }
    }
    for (size_t k = 0; k < v; ++k) {
        for (size_t i = 0; i < v; ++i) {
            const double dik = dist[i * v + k];
            if (dik == kInf) continue;
            for (size_t j = 0; j < v; ++j) {
                const double alt = dik + dist[k * v + j];
                if (alt < dist[i * v + j]) dist[i * v + j] = alt;
            }
        }
    }
    return dist;
}

}  // namespace leotopo
