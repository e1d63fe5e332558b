#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "leotopo/errors.hpp"
#include "leotopo/traffic.hpp"

using namespace leotopo;

TEST_CASE("bundled dataset is the documented top-100 list") {
    const auto& cities = bundled_cities();
    REQUIRE(cities.size() == 100);
    std::set<int> ids, ranks;
    for (const City& c : cities) {
        ids.insert(c.id);
        ranks.insert(c.gdp_rank);
        CHECK(c.coord.latitude_deg >= -90.0);
        CHECK(c.coord.latitude_deg <= 90.0);
        CHECK(c.coord.altitude_m == 0.0);
    }
    CHECK(ids.size() == 100);
    CHECK(*ids.begin() == 1);
    CHECK(*ids.rbegin() == 100);
    CHECK(ranks.size() == 100);
    CHECK(*ranks.begin() == 1);
    CHECK(*ranks.rbegin() == 100);
}

#ifdef LEOTOPO_SOURCE_DATA_DIR
TEST_CASE("bundled dataset matches the shipped CSV") {
    std::ifstream in(std::string(LEOTOPO_SOURCE_DATA_DIR) + "/cities_top100_gdp.csv",
                     std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == bundled_cities_csv());
}
#endif

TEST_CASE("loader validation") {
    {
        std::istringstream in("id,name,lat_deg,lon_deg,gdp_rank\n1,A,95,0,1\n");
        CHECK_THROWS_AS((void)parse_cities_csv(in, "t"), CoordinateRange);
    }
    {
        std::istringstream in("");
        CHECK_THROWS_AS((void)parse_cities_csv(in, "t"), ParseError);
    }
    {
        std::istringstream in("1,A,10,0,1\n1,B,20,0,2\n");
        CHECK_THROWS_AS((void)parse_cities_csv(in, "t"), DuplicateId);
    }
    {
        std::istringstream in("1,A,10,zero,1\n");
        try {
            (void)parse_cities_csv(in, "t");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("t:1") != std::string::npos);
        }
    }
    {
        // ids sorted on load regardless of file order
        std::istringstream in("5,B,10,0,2\n2,A,20,0,1\n");
        const auto cities = parse_cities_csv(in, "t");
        CHECK(cities[0].id == 2);
        CHECK(cities[1].id == 5);
    }
    CHECK_THROWS_AS((void)load_cities("/nonexistent/cities.csv"), ParseError);
}

TEST_CASE("traffic matrix sizes") {
    const auto& cities = bundled_cities();
    CHECK(build_matrix(cities).pairs.size() == 9900);

    std::vector<City> two(cities.begin(), cities.begin() + 2);
    CHECK(build_matrix(two).pairs.size() == 2);
    std::vector<City> five(cities.begin(), cities.begin() + 5);
    CHECK(build_matrix(five).pairs.size() == 20);
    std::vector<City> one(cities.begin(), cities.begin() + 1);
    CHECK_THROWS_AS((void)build_matrix(one), ConfigError);
}

TEST_CASE("matrix ordering is deterministic by rank") {
    const auto& cities = bundled_cities();
    const TrafficMatrix tm = build_matrix(cities);
    // first pairs: rank 1 source to rank 2, 3, ... destinations
    CHECK(cities[tm.pairs[0].first].gdp_rank == 1);
    CHECK(cities[tm.pairs[0].second].gdp_rank == 2);
    CHECK(cities[tm.pairs[1].second].gdp_rank == 3);
    CHECK(cities[tm.pairs[99].first].gdp_rank == 2);
    const TrafficMatrix again = build_matrix(cities);
    CHECK(tm.pairs == again.pairs);
}

TEST_CASE("angle buckets partition [0, 90]") {
    CHECK(angle_bucket_index(0.0) == 0);
    CHECK(angle_bucket_index(9.999) == 0);
    CHECK(angle_bucket_index(10.0) == 1);
    CHECK(angle_bucket_index(89.9) == 8);
    CHECK(angle_bucket_index(90.0) == 8);  // closed upper bucket
    const AngleBucket last = angle_bucket(8);
    CHECK(last.lo_deg == 80.0);
    CHECK(last.hi_deg == 90.0);
}

TEST_CASE("pair bucketing") {
    std::istringstream in(
        "1,EquatorA,0,10,1\n"
        "2,EquatorB,0,50,2\n"
        "3,MeridianA,10,30,3\n"
        "4,MeridianB,40,30,4\n");
    const auto cities = parse_cities_csv(in, "t");
    const TrafficMatrix tm = build_matrix(cities);
    const BucketedPairs buckets = bucket_pairs(cities, tm);

    long total = 0;
    for (long h : buckets.histogram) total += h;
    CHECK(total == 6);  // unordered pairs of 4 cities

    // equatorial pair in [0,10), same-meridian pair in [80,90]
    auto contains = [&](int bucket, int a, int b) {
        for (const auto& p : buckets.pairs[bucket]) {
            if (p == std::make_pair(a, b)) return true;
        }
        return false;
    };
    CHECK(contains(0, 0, 1));
    CHECK(contains(8, 2, 3));
}

TEST_CASE("bundled dataset angle histogram") {
    const auto& cities = bundled_cities();
    const TrafficMatrix tm = build_matrix(cities);
    const BucketedPairs buckets = bucket_pairs(cities, tm);
    long total = 0;
    for (long h : buckets.histogram) total += h;
    CHECK(total == 4950);

    // the bulk of pairs sits between 20 and 90 degrees
    long above20 = 0;
    for (int b = 2; b < kNumAngleBuckets; ++b) above20 += buckets.histogram[b];
    CHECK(above20 > total / 2);

    int modal = 0;
    for (int b = 1; b < kNumAngleBuckets; ++b) {
        if (buckets.histogram[b] > buckets.histogram[modal]) modal = b;
    }
    MESSAGE("modal bucket: [", modal * 10, ",", modal * 10 + 10, ") with ",
            buckets.histogram[modal], " pairs");
    // which bucket wins depends on the exact city list; 30-60 covers the
    // plausible range for top-GDP datasets
    CHECK(modal >= 3);
    CHECK(modal <= 5);
    WARN_MESSAGE(modal == 3, "modal bucket is not 30-40 for this city list");
}

TEST_CASE("bucketing ignores pair order") {
    const auto& cities = bundled_cities();
    for (int i : {0, 11, 47}) {
        for (int j : {3, 29, 90}) {
            const double a = geographic_angle_deg(cities[i].coord, cities[j].coord);
            const double b = geographic_angle_deg(cities[j].coord, cities[i].coord);
            CHECK(angle_bucket_index(a) == angle_bucket_index(b));
        }
    }
}

TEST_CASE("TM file format") {
    const auto& cities = bundled_cities();
    std::ostringstream os;
    write_tm_file(cities, os);
    std::istringstream in(os.str());
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
        ++lines;
        CHECK(std::count(line.begin(), line.end(), ',') == 2);
    }
    CHECK(lines == 100);
    CHECK(os.str().rfind("1,31.230000,121.470000\n", 0) == 0);
}
