#include "doctest.h"

#include <cmath>
#include <sstream>

#include "vlisl/fraunhofer.hpp"

namespace fh = vlisl::fraunhofer;

TEST_CASE("catalog shape and ordering") {
    REQUIRE(fh::line_catalog.size() == 12);
    for (std::size_t i = 1; i < fh::line_catalog.size(); ++i)
        CHECK(fh::line_catalog[i].center_nm >
              fh::line_catalog[i - 1].center_nm);
    // Every cataloged line clears the 250 GHz selection floor.
    for (const auto& ln : fh::line_catalog) CHECK(ln.bandwidth_ghz > 250.0);
}

TEST_CASE("specific catalog rows") {
    const auto& first = fh::line_catalog.front();
    CHECK(first.center_nm == doctest::Approx(381.5851));
    CHECK(first.width_nm == doctest::Approx(0.1272));
    CHECK(first.bandwidth_ghz == doctest::Approx(262.1));
    CHECK(first.element == "Fe");
    CHECK(first.color == fh::Color::violet);

    const auto& ca = fh::line_catalog[6];
    CHECK(ca.center_nm == doctest::Approx(393.3682));
    CHECK(ca.bandwidth_ghz == doctest::Approx(3926.6));
    CHECK(ca.element == "Ca");
    CHECK(ca.color == fh::Color::blue);

    const auto& red = fh::line_catalog.back();
    CHECK(red.center_nm == doctest::Approx(656.2808));
    CHECK(red.width_nm == doctest::Approx(0.4020));
    CHECK(red.element == "H");
    CHECK(red.color == fh::Color::red);
    CHECK(red.lower_nm() == doctest::Approx(656.0798));
    CHECK(red.upper_nm() == doctest::Approx(656.4818));
}

TEST_CASE("tabulated bandwidths agree with c * width / center^2") {
    for (const auto& ln : fh::line_catalog) {
        const double ghz = fh::width_to_bandwidth_ghz(ln.center_nm,
                                                      ln.width_nm);
        // The published column rounds c to 3e8 m/s (a systematic +0.07%)
        // and then to 0.1 GHz; allow both effects but nothing larger.
        CHECK(std::fabs(ghz - ln.bandwidth_ghz) <
              8e-4 * ln.bandwidth_ghz + 0.05);
        // Re-deriving with the same rounded constant lands on the table.
        const double rounded_c = ghz * 3e8 / 299792458.0;
        CHECK(std::fabs(rounded_c - ln.bandwidth_ghz) < 0.05 + 1e-9);
    }
}

TEST_CASE("csv export is stable") {
    std::ostringstream os;
    fh::write_line_catalog_csv(os);
    const std::string text = os.str();
    CHECK(text.rfind("center_nm,width_nm,bandwidth_ghz,element,color\n", 0) ==
          0);
    CHECK(text.find("656.2808,0.4020,280.0,H,red\n") != std::string::npos);
    CHECK(text.find("393.3682,2.0253,3926.6,Ca,blue\n") != std::string::npos);
    // Header plus one row per line.
    std::size_t rows = 0;
    for (char c : text)
        if (c == '\n') ++rows;
    CHECK(rows == 13);
}
