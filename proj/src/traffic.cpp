#include "leotopo/traffic.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "leotopo/errors.hpp"

namespace leotopo {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_double(const std::string& s, const std::string& source, int line_no,
                    const char* what) {
    try {
        size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(source + ":" + std::to_string(line_no) + ": bad " + what + " '" + s +
                         "'");
    }
}

int parse_int(const std::string& s, const std::string& source, int line_no, const char* what) {
    try {
        size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(source + ":" + std::to_string(line_no) + ": bad " + what + " '" + s +
                         "'");
    }
}

}  // namespace

std::vector<City> parse_cities_csv(std::istream& in, const std::string& source_name) {
    std::vector<City> cities;
    std::set<int> seen_ids;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        if (line_no == 1 && line.rfind("id,", 0) == 0) continue;  // header
        const auto f = split_csv_line(line);
        if (f.size() != 5) {
            throw ParseError(source_name + ":" + std::to_string(line_no) +
                             ": expected 5 fields 'id,name,lat_deg,lon_deg,gdp_rank', got " +
                             std::to_string(f.size()));
        }
        City c;
        c.id = parse_int(f[0], source_name, line_no, "id");
        c.name = f[1];
        const double lat = parse_double(f[2], source_name, line_no, "latitude");
        const double lon = parse_double(f[3], source_name, line_no, "longitude");
        c.gdp_rank = parse_int(f[4], source_name, line_no, "gdp_rank");
        c.coord = geo_coord(lat, lon, 0.0);
        if (!seen_ids.insert(c.id).second) {
            throw DuplicateId(source_name + ":" + std::to_string(line_no) +
                              ": duplicate city id " + std::to_string(c.id));
        }
        if (c.gdp_rank < 1) {
            throw ParseError(source_name + ":" + std::to_string(line_no) + ": gdp_rank must be >= 1");
        }
        cities.push_back(std::move(c));
    }
    if (cities.empty()) {
        throw ParseError(source_name + ": no city rows");
    }
    std::sort(cities.begin(), cities.end(), [](const City& a, const City& b) { return a.id < b.id; });
    return cities;
}

std::vector<City> load_cities(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open city dataset: " + path);
    }
    return parse_cities_csv(in, path);
}

const std::vector<City>& bundled_cities() {
    static const std::vector<City> cities = [] {
        std::istringstream in(bundled_cities_csv());
        return parse_cities_csv(in, "<bundled>");
    }();
    return cities;
}

TrafficMatrix build_matrix(std::span<const City> cities) {
    if (cities.size() < 2) {
        throw ConfigError("traffic matrix needs at least 2 cities");
    }
    // Deterministic (src rank, dst rank) ordering.
    std::vector<int> by_rank(cities.size());
    for (size_t i = 0; i < cities.size(); ++i) by_rank[i] = static_cast<int>(i);
    std::sort(by_rank.begin(), by_rank.end(), [&](int a, int b) {
        return cities[a].gdp_rank < cities[b].gdp_rank;
    });
    TrafficMatrix tm;
    tm.pairs.reserve(cities.size() * (cities.size() - 1));
    for (int src : by_rank) {
        for (int dst : by_rank) {
            if (src != dst) tm.pairs.emplace_back(src, dst);
        }
    }
    return tm;
}

AngleBucket angle_bucket(int index) {
    return {index * 10.0, index * 10.0 + 10.0};
}

int angle_bucket_index(double angle_deg) {
    const int idx = static_cast<int>(angle_deg / 10.0);
    return std::clamp(idx, 0, kNumAngleBuckets - 1);  // 90 degrees exactly lands in [80, 90]
}

BucketedPairs bucket_pairs(std::span<const City> cities, const TrafficMatrix& matrix) {
    BucketedPairs out;
    for (const auto& [src, dst] : matrix.pairs) {
        if (src >= dst) continue;  // one bucket entry per unordered pair
        const double angle = geographic_angle_deg(cities[src].coord, cities[dst].coord);
        const int b = angle_bucket_index(angle);
        out.pairs[b].emplace_back(src, dst);
        ++out.histogram[b];
    }
    return out;
}

void write_tm_file(std::span<const City> cities, std::ostream& os) {
    char buf[96];
    for (const City& c : cities) {
        std::snprintf(buf, sizeof(buf), "%d,%.6f,%.6f\n", c.id, c.coord.latitude_deg,
                      c.coord.longitude_deg);
        os << buf;
    }
}

}  // namespace leotopo
