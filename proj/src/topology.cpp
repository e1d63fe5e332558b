#include "leotopo/topology.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "leotopo/errors.hpp"

namespace leotopo {

std::vector<IslEdge> build_plus_grid(const ShellConfig& shell) {
    const int m = shell.num_orbits;
    const int n = shell.sats_per_orbit;
    if (m < 3 || n < 3) {
        throw ConfigError("+Grid needs at least 3 orbits and 3 satellites per orbit, got " +
                          std::to_string(m) + "x" + std::to_string(n));
    }
    std::vector<IslEdge> edges;
    edges.reserve(static_cast<size_t>(2) * m * n);
    for (int p = 0; p < m; ++p) {
        for (int s = 0; s < n; ++s) {
            const int self = p * n + s;
            const int next_in_orbit = p * n + (s + 1) % n;
            const int next_plane = ((p + 1) % m) * n + s;
            edges.push_back({std::min(self, next_in_orbit), std::max(self, next_in_orbit),
                             IslKind::intra_orbit});
            edges.push_back({std::min(self, next_plane), std::max(self, next_plane),
                             IslKind::inter_orbit});
        }
    }
    return edges;
}

void write_isl_file(std::span<const IslEdge> edges, std::ostream& os) {
    for (const IslEdge& e : edges) {
        os << e.a << ' ' << e.b << '\n';
    }
}

double elevation_deg(const CartesianPos& sat, const CartesianPos& gs) {
    const CartesianPos d = sat - gs;
    const double s = dot(gs, d) / (gs.norm() * d.norm());
    return rad2deg(std::asin(std::clamp(s, -1.0, 1.0)));
}

bool visible(const CartesianPos& sat, const CartesianPos& gs, const GslPolicy& policy) {
    return elevation_deg(sat, gs) >= policy.min_elevation_deg;
}

SnapshotGraph snapshot_graph(const ShellConfig& shell, std::span<const IslEdge> isl_edges,
                             std::span<const GeoCoord> cities, const GslPolicy& policy,
                             double t_s) {
    const int num_sats = shell.total_sats();
    const int num_cities = static_cast<int>(cities.size());

    static thread_local std::vector<CartesianPos> sat_pos;
    propagate(shell, t_s, sat_pos);

    std::vector<CartesianPos> city_pos(num_cities);
    for (int c = 0; c < num_cities; ++c) {
        city_pos[c] = surface_to_cartesian(cities[c], t_s);
    }

    // Collect undirected edges, then build CSR with both directions.
    struct E {
        int a, b;
        double w_um;
    };
    std::vector<E> edges;
    edges.reserve(isl_edges.size() + static_cast<size_t>(num_cities) * 16);

    for (const IslEdge& e : isl_edges) {
        edges.push_back({e.a, e.b, quantize_um(distance_m(sat_pos[e.a], sat_pos[e.b]))});
    }
    for (int c = 0; c < num_cities; ++c) {
        const int cnode = num_sats + c;
        for (int s = 0; s < num_sats; ++s) {
            if (visible(sat_pos[s], city_pos[c], policy)) {
                edges.push_back({s, cnode, quantize_um(distance_m(sat_pos[s], city_pos[c]))});
            }
        }
    }

    SnapshotGraph g;
    g.t_s = t_s;
    g.num_sats = num_sats;
    g.num_cities = num_cities;
    const int v = g.node_count();
    g.offsets.assign(v + 1, 0);
    for (const E& e : edges) {
        ++g.offsets[e.a + 1];
        ++g.offsets[e.b + 1];
    }
    for (int i = 0; i < v; ++i) g.offsets[i + 1] += g.offsets[i];
    g.neighbors.resize(edges.size() * 2);
    g.weight_um.resize(edges.size() * 2);
    std::vector<int> cursor(g.offsets.begin(), g.offsets.end() - 1);
    for (const E& e : edges) {
        g.neighbors[cursor[e.a]] = e.b;
        g.weight_um[cursor[e.a]++] = e.w_um;
        g.neighbors[cursor[e.b]] = e.a;
        g.weight_um[cursor[e.b]++] = e.w_um;
    }
    return g;
}

}  // namespace leotopo
