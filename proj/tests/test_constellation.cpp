#include <doctest.h>

#include <cmath>
#include <cstring>
#include <set>
#include <sstream>

#include "leotopo/constellation.hpp"
#include "leotopo/errors.hpp"

using namespace leotopo;

TEST_CASE("orbital period against the closed form") {
    // frozen from an independent evaluation of 2*pi*sqrt(a^3/mu)
    CHECK(orbital_period_s(make_shell("x", 550, 10, 10, 53)) ==
          doctest::Approx(5730.127089334606).epsilon(1e-12));

    // altitude 0 fixture bypasses the make_shell guard on purpose
    ShellConfig sea_level{"sea", 0.0, 1, 1, 53.0, 0.0};
    CHECK(orbital_period_s(sea_level) == doctest::Approx(5060.837447340496).epsilon(1e-12));

    // period depends only on the semi-major axis
    CHECK(orbital_period_s(make_shell("a", 700, 72, 22, 53)) ==
          orbital_period_s(make_shell("b", 700, 5, 9, 97.6)));
}

TEST_CASE("shell validation guards") {
    CHECK_THROWS_AS((void)make_shell("bad", 299, 10, 10, 53), ConfigError);
    CHECK_THROWS_AS((void)make_shell("bad", 2001, 10, 10, 53), ConfigError);
    CHECK_THROWS_AS((void)make_shell("bad", 550, 0, 10, 53), ConfigError);
    CHECK_THROWS_AS((void)make_shell("bad", 550, 10, 10, 0), ConfigError);
    CHECK_THROWS_AS((void)make_shell("bad", 550, 10, 10, 53, 1.0), ConfigError);
}

TEST_CASE("propagation periodicity and norms") {
    const ShellConfig s1 = *find_shell("S1");
    const auto at0 = propagate(s1, 0.0);
    CHECK(at0.size() == 1584);
    for (const CartesianPos& p : at0) {
        CHECK(p.norm() == doctest::Approx(6921000.0).epsilon(1e-9));
    }
    const auto at_period = propagate(s1, orbital_period_s(s1));
    for (size_t i = 0; i < at0.size(); ++i) {
        CHECK(std::abs(at0[i].x_m - at_period[i].x_m) < 1e-6);
        CHECK(std::abs(at0[i].y_m - at_period[i].y_m) < 1e-6);
        CHECK(std::abs(at0[i].z_m - at_period[i].z_m) < 1e-6);
    }
}

TEST_CASE("single polar plane symmetry") {
    ShellConfig polar{"polar", 550, 1, 4, 90.0, 0.0};
    const auto pos = propagate(polar, 0.0);
    REQUIRE(pos.size() == 4);
    const double a = polar.semi_major_axis_m();
    // four satellites 90 degrees apart in a polar plane
    for (int i = 0; i < 4; ++i) {
        const int j = (i + 1) % 4;
        const double chord = distance_m(pos[i], pos[j]);
        CHECK(chord == doctest::Approx(a * std::sqrt(2.0)).epsilon(1e-12));
        CHECK(std::abs(pos[i].y_m) < 1e-6);  // 90 degree inclination keeps plane 0 in x-z
    }
}

TEST_CASE("in-plane spacing is uniform at all times") {
    const ShellConfig shell = make_shell("s", 600, 3, 11, 62);
    for (double t : {0.0, 17.0, 311.5}) {
        const auto pos = propagate(shell, t);
        const double expected =
            2.0 * shell.semi_major_axis_m() * std::sin(M_PI / shell.sats_per_orbit);
        for (int s = 0; s < shell.sats_per_orbit; ++s) {
            const int next = (s + 1) % shell.sats_per_orbit;
            CHECK(distance_m(pos[s], pos[next]) == doctest::Approx(expected).epsilon(1e-9));
        }
    }
}

TEST_CASE("propagation is deterministic") {
    const ShellConfig shell = *find_shell("K2");
    const auto a = propagate(shell, 137.0);
    const auto b = propagate(shell, 137.0);
    CHECK(std::memcmp(a.data(), b.data(), a.size() * sizeof(CartesianPos)) == 0);
}

TEST_CASE("catalog contents") {
    CHECK(shell_catalog().size() == 47);
    const ShellConfig* s2 = find_shell("S2");
    REQUIRE(s2 != nullptr);
    CHECK(s2->total_sats() == 720);
    CHECK(s2->inclination_deg == 70.0);
    CHECK(find_shell("T1")->total_sats() == 351);
    CHECK(find_shell("nosuch") == nullptr);
    CHECK(sats_sweep_shells().size() == 16);
    CHECK(incl_sweep_shells().size() == 4);
    CHECK(alt_sweep_shells().size() == 4);
    CHECK(fine_sweep_shells().size() == 16);
    // the main synthetic study is 16 + 4 = 20 shells
    std::set<std::string> main_study;
    for (const auto& n : sats_sweep_shells()) main_study.insert(n);
    for (const auto& n : incl_sweep_shells()) main_study.insert(n);
    CHECK(main_study.size() == 20);
    for (const auto& n : main_study) CHECK(find_shell(n) != nullptr);
    for (const auto& n : fine_sweep_shells()) CHECK(find_shell(n) != nullptr);
    for (const auto& n : alt_sweep_shells()) CHECK(find_shell(n) != nullptr);
}

TEST_CASE("TLE export layout and checksums") {
    const ShellConfig s2 = *find_shell("S2");
    const std::string text = export_tle(s2);
    std::istringstream in(text);
    std::string line;
    int names = 0, l1 = 0, l2 = 0;
    while (std::getline(in, line)) {
        if (line.rfind("1 ", 0) == 0 || line.rfind("2 ", 0) == 0) {
            REQUIRE(line.size() == 69);
            const int expect = tle_line_checksum(std::string_view(line).substr(0, 68));
            CHECK(line[68] - '0' == expect);
            if (line[0] == '1') ++l1;
            if (line[0] == '2') {
                ++l2;
                // inclination field, columns 9-16
                std::string incl = line.substr(8, 8);
                CHECK(incl.find("70.0000") != std::string::npos);
            }
        } else {
            ++names;
        }
    }
    CHECK(names == 720);
    CHECK(l1 == 720);
    CHECK(l2 == 720);
}

TEST_CASE("TLE round trip") {
    const ShellConfig shell = *find_shell("T2");
    const auto records = parse_tle(export_tle(shell));
    REQUIRE(records.size() == 1320);
    const double revs = 86400.0 / orbital_period_s(shell);
    for (size_t i = 0; i < records.size(); ++i) {
        CHECK(records[i].inclination_deg == doctest::Approx(shell.inclination_deg).epsilon(5e-5));
        CHECK(records[i].mean_motion_rev_day == doctest::Approx(revs).epsilon(5e-9));
        CHECK(records[i].eccentricity == 0.0);
        CHECK(records[i].satellite_number == static_cast<int>(i) + 1);
    }
    // spot-check RAAN spacing: plane index advances every sats_per_orbit entries
    CHECK(records[0].raan_deg == doctest::Approx(0.0));
    CHECK(records[shell.sats_per_orbit].raan_deg == doctest::Approx(360.0 / shell.num_orbits));
}

TEST_CASE("TLE field overflow") {
    ShellConfig huge{"huge", 550, 1000, 150, 53.0, 0.0};  // 150000 sats
    CHECK_THROWS_AS((void)export_tle(huge), FormatError);
    CHECK_THROWS_AS((void)export_tle(*find_shell("S1"), TleEpoch{2000, 400.0}), FormatError);
}

TEST_CASE("TLE checksum validation on parse") {
    std::string text = export_tle(*find_shell("S5"));
    // corrupt one digit of the first line 2
    const size_t pos = text.find("\n2 ");
    text[pos + 10] = text[pos + 10] == '5' ? '6' : '5';
    CHECK_THROWS_AS((void)parse_tle(text), FormatError);
}
