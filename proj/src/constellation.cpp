#include "leotopo/constellation.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <sstream>

#include "leotopo/errors.hpp"

namespace leotopo {

ShellConfig make_shell(std::string name, double altitude_km, int num_orbits,
                       int sats_per_orbit, double inclination_deg,
                       double inter_plane_phase_fraction) {
    if (num_orbits < 1 || sats_per_orbit < 1) {
        throw ConfigError("shell '" + name + "': orbit and satellite counts must be >= 1");
    }
    if (!(altitude_km >= 300.0 && altitude_km <= 2000.0)) {
        throw ConfigError("shell '" + name + "': altitude " + std::to_string(altitude_km) +
                          " km outside LEO guard [300, 2000]");
    }
    if (!(inclination_deg > 0.0 && inclination_deg < 180.0)) {
        throw ConfigError("shell '" + name + "': inclination must be in (0, 180)");
    }
    if (!(inter_plane_phase_fraction >= 0.0 && inter_plane_phase_fraction < 1.0)) {
        throw ConfigError("shell '" + name + "': phase fraction must be in [0, 1)");
    }
    return ShellConfig{std::move(name), altitude_km,       num_orbits,
                       sats_per_orbit,  inclination_deg,   inter_plane_phase_fraction};
}

double orbital_period_s(const ShellConfig& shell) {
    const double a = shell.semi_major_axis_m();
    return 2.0 * M_PI * std::sqrt(a * a * a / kEarthMuM3S2);
}

void propagate(const ShellConfig& shell, double t_s, std::vector<CartesianPos>& out) {
    const int m = shell.num_orbits;
    const int n = shell.sats_per_orbit;
    const double a = shell.semi_major_axis_m();
    const double incl = deg2rad(shell.inclination_deg);
    const double cos_i = std::cos(incl);
    const double sin_i = std::sin(incl);
    const double mean_motion = 2.0 * M_PI / orbital_period_s(shell);

    out.resize(static_cast<size_t>(m) * n);
    for (int p = 0; p < m; ++p) {
        const double raan = 2.0 * M_PI * p / m;
        const double cos_o = std::cos(raan);
        const double sin_o = std::sin(raan);
        const double plane_phase = 2.0 * M_PI * p * shell.inter_plane_phase_fraction / n;
        for (int s = 0; s < n; ++s) {
            const double u = 2.0 * M_PI * s / n + plane_phase + mean_motion * t_s;
            const double xp = a * std::cos(u);
            const double yp = a * std::sin(u) * cos_i;
            const double zp = a * std::sin(u) * sin_i;
            out[static_cast<size_t>(p) * n + s] = {xp * cos_o - yp * sin_o,
                                                   xp * sin_o + yp * cos_o, zp};
        }
    }
}

std::vector<CartesianPos> propagate(const ShellConfig& shell, double t_s) {
    std::vector<CartesianPos> out;
    propagate(shell, t_s, out);
    return out;
}

int tle_line_checksum(std::string_view line) {
    int sum = 0;
    for (char c : line) {
        if (c >= '0' && c <= '9') sum += c - '0';
        if (c == '-') sum += 1;
    }
    return sum % 10;
}

namespace {

void append_with_checksum(std::string& out, const char* line68) {
    out.append(line68);
    out.push_back(static_cast<char>('0' + tle_line_checksum(line68)));
    out.push_back('\n');
}

double wrap_deg(double deg) {
    double d = std::fmod(deg, 360.0);
    if (d < 0.0) d += 360.0;
    return d;
}

}  // namespace

std::string export_tle(const ShellConfig& shell, const TleEpoch& epoch) {
    const int total = shell.total_sats();
    if (total > 99999) {
        throw FormatError("satellite number exceeds the 5-digit TLE column budget");
    }
    if (!(epoch.day_of_year >= 0.0 && epoch.day_of_year < 367.0)) {
        throw FormatError("epoch day of year does not fit DDD.DDDDDDDD");
    }
    const double revs_per_day = 86400.0 / orbital_period_s(shell);
    if (!(revs_per_day > 0.0 && revs_per_day < 100.0)) {
        throw FormatError("mean motion does not fit the 11-column TLE field");
    }

    std::string out;
    out.reserve(static_cast<size_t>(total) * 160);
    char line[70];
    for (int idx = 0; idx < total; ++idx) {
        const SatelliteId id = from_flat(idx, shell.sats_per_orbit);
        const double raan_deg = wrap_deg(360.0 * id.orbit_index / shell.num_orbits);
        const double mean_anom_deg = wrap_deg(
            360.0 * (id.slot_index +
                     id.orbit_index * shell.inter_plane_phase_fraction) /
            shell.sats_per_orbit);

        out += shell.name + "-" + std::to_string(idx) + "\n";

        // Line 1, 69 columns. Zero drag and derivative terms: circular orbits,
        // no perturbation model.
        std::snprintf(line, sizeof(line),
                      "1 %05dU 00001A   %02d%012.8f  .00000000  00000-0  00000-0 0    1",
                      idx + 1, epoch.year % 100, epoch.day_of_year);
        if (std::strlen(line) != 68) {
            throw FormatError("TLE line 1 field overflow");
        }
        append_with_checksum(out, line);

        // Line 2: inclination, RAAN, e=0, argp=0, mean anomaly, mean motion.
        std::snprintf(line, sizeof(line),
                      "2 %05d %8.4f %8.4f 0000000 %8.4f %8.4f %11.8f    0",
                      idx + 1, shell.inclination_deg, raan_deg, 0.0, mean_anom_deg,
                      revs_per_day);
        if (std::strlen(line) != 68) {
            throw FormatError("TLE line 2 field overflow");
        }
        append_with_checksum(out, line);
    }
    return out;
}

std::vector<TleRecord> parse_tle(std::string_view text) {
    std::vector<std::string> lines;
    {
        std::string cur;
        for (char c : text) {
            if (c == '\n') {
                lines.push_back(cur);
                cur.clear();
            } else if (c != '\r') {
                cur.push_back(c);
            }
        }
        if (!cur.empty()) lines.push_back(cur);
    }

    auto field = [](const std::string& line, int col1, int col2) {
        return line.substr(col1 - 1, col2 - col1 + 1);  // 1-based inclusive columns
    };
    auto check = [&](const std::string& line) {
        if (line.size() != 69) {
            throw FormatError("TLE data line is not 69 columns: '" + line + "'");
        }
        const int expect = tle_line_checksum(std::string_view(line).substr(0, 68));
        if (line[68] - '0' != expect) {
            throw FormatError("TLE checksum mismatch on line: '" + line + "'");
        }
    };

    std::vector<TleRecord> records;
    size_t i = 0;
    while (i < lines.size()) {
        if (lines[i].empty()) {
            ++i;
            continue;
        }
        TleRecord rec;
        if (lines[i].rfind("1 ", 0) != 0) {
            rec.name = lines[i];
            ++i;
        }
        if (i + 1 >= lines.size() || lines[i].rfind("1 ", 0) != 0 ||
            lines[i + 1].rfind("2 ", 0) != 0) {
            throw FormatError("expected TLE line 1 / line 2 pair");
        }
        const std::string& l1 = lines[i];
        const std::string& l2 = lines[i + 1];
        check(l1);
        check(l2);
        rec.satellite_number = std::stoi(field(l1, 3, 7));
        rec.inclination_deg = std::stod(field(l2, 9, 16));
        rec.raan_deg = std::stod(field(l2, 18, 25));
        rec.eccentricity = std::stod("0." + field(l2, 27, 33));
        rec.arg_perigee_deg = std::stod(field(l2, 35, 42));
        rec.mean_anomaly_deg = std::stod(field(l2, 44, 51));
        rec.mean_motion_rev_day = std::stod(field(l2, 53, 63));
        records.push_back(std::move(rec));
        i += 2;
    }
    return records;
}

namespace {

std::vector<ShellConfig> build_catalog() {
    std::vector<ShellConfig> cat;
    // Commercial shells: Starlink phase I, Kuiper, Telesat.
    cat.push_back(make_shell("S1", 550, 72, 22, 53.0));
    cat.push_back(make_shell("S2", 570, 20, 36, 70.0));
    cat.push_back(make_shell("S3", 560, 6, 58, 97.6));
    cat.push_back(make_shell("S4", 540, 72, 22, 53.2));
    cat.push_back(make_shell("S5", 560, 4, 43, 97.6));
    cat.push_back(make_shell("K1", 630, 34, 34, 51.9));
    cat.push_back(make_shell("K2", 610, 36, 36, 42.0));
    cat.push_back(make_shell("K3", 590, 28, 28, 33.0));
    cat.push_back(make_shell("T1", 1015, 27, 13, 98.98));
    cat.push_back(make_shell("T2", 1325, 40, 33, 50.88));
    // Custom example shell: 720 satellites in 20 planes.
    cat.push_back(make_shell("E1", 570, 20, 36, 70.0));

    // Synthetic grid at 570 km / 53 deg: orbit counts x satellites per orbit.
    // Includes the finer 20-28 satellite steps.
    for (int orbits : {20, 33, 46, 59}) {
        for (int sats : {20, 22, 24, 26, 28, 36, 44}) {
            cat.push_back(make_shell("syn-o" + std::to_string(orbits) + "-s" + std::to_string(sats),
                                     570, orbits, sats, 53.0));
        }
    }
    // Inclination set at 33 x 28.
    for (int incl : {45, 55, 65, 75}) {
        cat.push_back(make_shell("syn-i" + std::to_string(incl), 570, 33, 28,
                                 static_cast<double>(incl)));
    }
    // Altitude set at 33 x 28 / 53 deg.
    for (int alt : {540, 740, 940, 1140}) {
        cat.push_back(make_shell("syn-a" + std::to_string(alt),
                                 static_cast<double>(alt), 33, 28, 53.0));
    }
    return cat;
}

}  // namespace

const std::vector<ShellConfig>& shell_catalog() {
    static const std::vector<ShellConfig> catalog = build_catalog();
    return catalog;
}

const ShellConfig* find_shell(std::string_view name) {
    for (const ShellConfig& s : shell_catalog()) {
        if (s.name == name) return &s;
    }
    return nullptr;
}

std::vector<std::string> sats_sweep_shells() {
    std::vector<std::string> names;
    for (int orbits : {20, 33, 46, 59})
        for (int sats : {20, 28, 36, 44})
            names.push_back("syn-o" + std::to_string(orbits) + "-s" + std::to_string(sats));
    return names;
}

std::vector<std::string> incl_sweep_shells() {
    return {"syn-i45", "syn-i55", "syn-i65", "syn-i75"};
}

std::vector<std::string> alt_sweep_shells() {
    return {"syn-a540", "syn-a740", "syn-a940", "syn-a1140"};
}

std::vector<std::string> fine_sweep_shells() {
    std::vector<std::string> names;
    for (int orbits : {20, 33, 46, 59})
        for (int sats : {20, 22, 24, 26})
            names.push_back("syn-o" + std::to_string(orbits) + "-s" + std::to_string(sats));
    return names;
}

}  // namespace leotopo
