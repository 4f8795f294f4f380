#include "doctest.h"

#include <sstream>
#include <string>

#include "vlisl/config.hpp"

namespace cfg = vlisl::config;

TEST_CASE("defaults describe the baseline scenario") {
    cfg::Config c;
    CHECK(c.scenario.geometry.distance_m == doctest::Approx(500.0));
    CHECK(c.scenario.rx.responsivity == doctest::Approx(0.51));
    CHECK(c.scenario.tx.power_w == doctest::Approx(2.0));
    CHECK(c.scenario.tx.semi_angle_deg == doctest::Approx(30.0));
    CHECK(c.scenario.concentrator.fov_semi_angle_deg == doctest::Approx(35.0));
    CHECK(c.scenario.rx.area_m2 == doctest::Approx(7.84e-4));
    CHECK(c.scenario.bandwidth_hz == doctest::Approx(0.5e6));
    CHECK(c.scenario.background_suppression == doctest::Approx(0.05));
    CHECK(c.ofdm.subcarriers == 64);
    CHECK(c.ofdm.guard == 16);
    CHECK(cfg::validate(c).ok());
}

TEST_CASE("set_value applies overrides and rejects junk by name") {
    cfg::Config c;
    cfg::set_value(c, "link.distance_m=1000");
    CHECK(c.scenario.geometry.distance_m == doctest::Approx(1000.0));
    cfg::set_value(c, "tx.power_w = 3.5");
    CHECK(c.scenario.tx.power_w == doctest::Approx(3.5));
    cfg::set_value(c, "ofdm.subcarriers=128");
    CHECK(c.ofdm.subcarriers == 128);

    CHECK_THROWS_WITH_AS(cfg::set_value(c, "link.warp_factor=9"),
                         doctest::Contains("link.warp_factor"),
                         cfg::ConfigError);
    CHECK_THROWS_WITH_AS(cfg::set_value(c, "tx.power_w=fast"),
                         doctest::Contains("tx.power_w"), cfg::ConfigError);
    CHECK_THROWS_AS(cfg::set_value(c, "no-equals-sign"), cfg::ConfigError);
}

TEST_CASE("validation names the offending key") {
    cfg::Config c;
    cfg::set_value(c, "detector.responsivity=-1");
    const auto v = cfg::validate(c);
    CHECK_FALSE(v.ok());
    REQUIRE(v.errors.size() == 1);
    CHECK(v.errors[0].find("detector.responsivity") != std::string::npos);

    cfg::Config c2;
    cfg::set_value(c2, "filter.upper_nm=600");
    const auto v2 = cfg::validate(c2);
    CHECK_FALSE(v2.ok());
    CHECK(v2.errors[0].find("filter.upper_nm") != std::string::npos);

    cfg::Config c3;
    cfg::set_value(c3, "background.suppression=1.5");
    CHECK_FALSE(cfg::validate(c3).ok());
}

TEST_CASE("baseline optics trigger the concentrator sizing warning") {
    cfg::Config c;
    const auto v = cfg::validate(c);
    REQUIRE(v.warnings.size() == 1);
    CHECK(v.warnings[0].find("concentrator.radius_m") != std::string::npos);
    // A lens bigger than n^2 times the detector radius silences it.
    cfg::set_value(c, "concentrator.radius_m=0.04");
    CHECK(cfg::validate(c).warnings.empty());
}

TEST_CASE("parse skips comments and blank lines") {
    cfg::Config c;
    std::istringstream in(
        "# scenario overrides\n"
        "\n"
        "link.distance_m = 750   # three quarters of a km\n"
        "tx.power_w=4\n");
    cfg::parse(c, in);
    CHECK(c.scenario.geometry.distance_m == doctest::Approx(750.0));
    CHECK(c.scenario.tx.power_w == doctest::Approx(4.0));
}

TEST_CASE("dump followed by parse is a fixed point") {
    cfg::Config c;
    cfg::set_value(c, "link.distance_m=1234.5");
    cfg::set_value(c, "background.suppression=0.07");
    std::ostringstream first;
    cfg::dump(c, first);

    cfg::Config reparsed;
    std::istringstream in(first.str());
    cfg::parse(reparsed, in);
    std::ostringstream second;
    cfg::dump(reparsed, second);
    CHECK(first.str() == second.str());
    CHECK(reparsed.scenario.geometry.distance_m == doctest::Approx(1234.5));
    CHECK(reparsed.scenario.background_suppression == doctest::Approx(0.07));
}
