#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "leotopo/geo.hpp"

namespace leotopo {

struct City {
    int id = 0;
    std::string name;
    GeoCoord coord;  // altitude 0
    int gdp_rank = 0;
};

// CSV "id,name,lat_deg,lon_deg,gdp_rank" with an optional header line.
// Returns the cities sorted by id. Throws ParseError (with line number),
// DuplicateId, or CoordinateRange.
std::vector<City> load_cities(const std::string& path);
std::vector<City> parse_cities_csv(std::istream& in, const std::string& source_name);

// The dataset shipped with the artifact: the top 100 metro areas by GDP.
const std::vector<City>& bundled_cities();
const char* bundled_cities_csv();

// All ordered (src, dst) pairs, src != dst, in (src rank, dst rank) order.
// pairs holds indices into the city list that produced it.
struct TrafficMatrix {
    std::vector<std::pair<int, int>> pairs;
};

TrafficMatrix build_matrix(std::span<const City> cities);

// Nine geographic-angle intervals [0,10), [10,20), ..., [80,90]; the last is
// closed so same-meridian pairs land in it.
struct AngleBucket {
    double lo_deg = 0.0;
    double hi_deg = 0.0;
};

inline constexpr int kNumAngleBuckets = 9;
AngleBucket angle_bucket(int index);
int angle_bucket_index(double angle_deg);

// Unordered pairs grouped by geographic angle, plus the bucket histogram.
struct BucketedPairs {
    std::array<std::vector<std::pair<int, int>>, kNumAngleBuckets> pairs;
    std::array<long, kNumAngleBuckets> histogram{};
};

BucketedPairs bucket_pairs(std::span<const City> cities, const TrafficMatrix& matrix);

// TM file: "city_id,lat_deg,lon_deg" per endpoint.
void write_tm_file(std::span<const City> cities, std::ostream& os);

}  // namespace leotopo
