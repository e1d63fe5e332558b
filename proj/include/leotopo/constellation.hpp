#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "leotopo/geo.hpp"

namespace leotopo {

// One shell: a set of satellites sharing altitude and inclination, arranged
// in evenly spaced circular orbital planes.
struct ShellConfig {
    std::string name;
    double altitude_km = 550.0;
    int num_orbits = 1;
    int sats_per_orbit = 1;
    double inclination_deg = 53.0;
    // Phase offset between adjacent planes, as a fraction of the in-orbit
    // satellite spacing. All catalog shells use 0.
    double inter_plane_phase_fraction = 0.0;

    int total_sats() const { return num_orbits * sats_per_orbit; }
    double semi_major_axis_m() const { return kEarthRadiusM + altitude_km * 1000.0; }
};

// Validating constructor; throws ConfigError outside the LEO regime guard.
ShellConfig make_shell(std::string name, double altitude_km, int num_orbits,
                       int sats_per_orbit, double inclination_deg,
                       double inter_plane_phase_fraction = 0.0);

struct SatelliteId {
    int orbit_index = 0;
    int slot_index = 0;
};

inline int flat_index(const SatelliteId& id, int sats_per_orbit) {
    return id.orbit_index * sats_per_orbit + id.slot_index;
}

inline SatelliteId from_flat(int flat, int sats_per_orbit) {
    return {flat / sats_per_orbit, flat % sats_per_orbit};
}

// Kepler circular-orbit period, 2*pi*sqrt(a^3/mu).
double orbital_period_s(const ShellConfig& shell);

// Inertial positions of all satellites at time t, indexed by flat index.
// Plane p sits at RAAN = 2*pi*p/num_orbits; slot s in plane p is at argument
// of latitude u = 2*pi*(s + p*phase)/sats_per_orbit + 2*pi*t/period.
void propagate(const ShellConfig& shell, double t_s, std::vector<CartesianPos>& out);
std::vector<CartesianPos> propagate(const ShellConfig& shell, double t_s);

struct TleEpoch {
    int year = 2000;
    double day_of_year = 1.0;
};

// NORAD two-line elements for the whole shell: one name line plus two 69-column
// data lines per satellite. Throws FormatError if a value exceeds its column
// budget.
std::string export_tle(const ShellConfig& shell, const TleEpoch& epoch = {});

struct TleRecord {
    std::string name;
    int satellite_number = 0;
    double inclination_deg = 0.0;
    double raan_deg = 0.0;
    double eccentricity = 0.0;
    double arg_perigee_deg = 0.0;
    double mean_anomaly_deg = 0.0;
    double mean_motion_rev_day = 0.0;
};

// Parses text produced by export_tle (or any 3-line TLE stream); validates
// line checksums and throws FormatError on malformed input.
std::vector<TleRecord> parse_tle(std::string_view text);

int tle_line_checksum(std::string_view line_without_checksum);

// Built-in catalog: the ten commercial shells (S1-S5, K1-K3, T1-T2), the
// custom example shell E1, and the synthetic sweep shells.
const std::vector<ShellConfig>& shell_catalog();
const ShellConfig* find_shell(std::string_view name);

// Named parameter grids over the synthetic catalog.
std::vector<std::string> sats_sweep_shells();  // orbits {20,33,46,59} x sats {20,28,36,44}
std::vector<std::string> incl_sweep_shells();  // inclination {45,55,65,75}
std::vector<std::string> alt_sweep_shells();   // altitude {540,740,940,1140} km
std::vector<std::string> fine_sweep_shells();  // orbits {20,33,46,59} x sats {20,22,24,26}

}  // namespace leotopo
