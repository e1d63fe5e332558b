#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "leotopo/constellation.hpp"
#include "leotopo/geo.hpp"

namespace leotopo {

enum class IslKind { intra_orbit, inter_orbit };

// Undirected ISL, stored with a < b in flat satellite index.
struct IslEdge {
    int a = 0;
    int b = 0;
    IslKind kind = IslKind::intra_orbit;
};

// +Grid: each satellite links to its two in-orbit neighbors and to the
// same-slot satellite in each adjacent plane, with wraparound in both grid
// dimensions. Exactly 2*M*N edges, every node degree 4. The edge set is
// index-space topology and does not depend on time.
std::vector<IslEdge> build_plus_grid(const ShellConfig& shell);

// Newline-delimited "a b" lines with a < b.
void write_isl_file(std::span<const IslEdge> edges, std::ostream& os);

struct GslPolicy {
    double min_elevation_deg = 25.0;
    // attachment policy: every visible satellite gets a GSL edge.
};

// Elevation of the satellite above the station's local horizon, in degrees.
double elevation_deg(const CartesianPos& sat, const CartesianPos& gs);

// True iff elevation >= min_elevation_deg (inclusive boundary).
bool visible(const CartesianPos& sat, const CartesianPos& gs, const GslPolicy& policy);

// Weighted graph of one snapshot. Nodes 0..num_sats-1 are satellites in flat
// index order; nodes num_sats..num_sats+num_cities-1 are city endpoints in
// input order. Edge weights are straight-line distances quantized to integer
// micrometers (stored in a double), so that path-length sums are exact and
// independent of summation order.
struct SnapshotGraph {
    double t_s = 0.0;
    int num_sats = 0;
    int num_cities = 0;
    std::vector<int> offsets;     // CSR, size node_count()+1
    std::vector<int> neighbors;   // directed half-edges, both directions stored
    std::vector<double> weight_um;

    int node_count() const { return num_sats + num_cities; }
    int city_node(int city_index) const { return num_sats + city_index; }
};

inline double quantize_um(double meters) { return std::round(meters * 1e6); }
inline double um_to_m(double um) { return um * 1e-6; }

// Builds the weighted snapshot at time t: ISL weights from satellite positions,
// plus a GSL edge from every city to every satellite visible under the policy.
// A city with no visible satellite simply has no GSL edges.
SnapshotGraph snapshot_graph(const ShellConfig& shell, std::span<const IslEdge> isl_edges,
                             std::span<const GeoCoord> cities, const GslPolicy& policy,
                             double t_s);

}  // namespace leotopo
