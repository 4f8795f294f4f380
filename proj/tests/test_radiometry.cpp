#include "doctest.h"

#include <cmath>

#include "vlisl/constants.hpp"
#include "vlisl/radiometry.hpp"

namespace rad = vlisl::radiometry;
namespace k = vlisl::constants;

// High-precision reference values computed independently with 50-digit
// arithmetic from the closed-form spectral model; they pin this
// implementation, not any published rounding of it.

TEST_CASE("spectral irradiance at reference wavelengths") {
    CHECK(rad::planck_spectral_irradiance(656.28e-9, 5780.0) ==
          doctest::Approx(7.08390880666e13).epsilon(1e-11));
    CHECK(rad::planck_spectral_irradiance(656.2808e-9, 5780.0) ==
          doctest::Approx(7.08389913836e13).epsilon(1e-11));
    // Deep Wien tail must not overflow or return junk.
    CHECK(rad::planck_spectral_irradiance(10e-9, 5780.0) >= 0.0);
    CHECK(rad::planck_spectral_irradiance(10e-9, 5780.0) < 1e-60);
    CHECK_THROWS_AS(rad::planck_spectral_irradiance(0.0, 5780.0),
                    std::domain_error);
    CHECK_THROWS_AS(rad::planck_spectral_irradiance(500e-9, 0.0),
                    std::domain_error);
}

TEST_CASE("peak emission wavelength follows the displacement law") {
    CHECK(rad::peak_wavelength_nm(5780.0) ==
          doctest::Approx(501.3446289).epsilon(1e-9));
    CHECK(rad::peak_wavelength_nm(2898.0) ==
          doctest::Approx(1e9 * k::wien_b / 2898.0).epsilon(1e-12));
}

TEST_CASE("orbit-scaled band irradiance, visible and infrared") {
    struct Ref {
        double a_nm, b_nm, value;
    };
    // 12 spectral bands of the validation table, 50-digit references.
    constexpr Ref refs[] = {
        {240.0, 400.0, 156.7010708},    {400.0, 800.0, 626.5323181},
        {800.0, 1310.0, 347.0246511},   {1310.0, 1860.0, 122.7063102},
        {1860.0, 2480.0, 50.5275399},   {2480.0, 3240.0, 24.08743681},
        {3240.0, 4500.0, 13.92895512},  {4500.0, 8000.0, 7.682577951},
        {8000.0, 12000.0, 1.292692493}, {12000.0, 24000.0, 0.5014232357},
        {24000.0, 60000.0, 0.07004169605},
        {60000.0, 1e6, 0.004910061604},
    };
    for (const auto& r : refs) {
        CHECK(rad::band_irradiance(r.a_nm, r.b_nm) ==
              doctest::Approx(r.value).epsilon(1e-8));
    }
}

TEST_CASE("0.4 nm filter band at the red line") {
    CHECK(rad::band_irradiance(656.0798, 656.4818) ==
          doctest::Approx(0.612372452718).epsilon(1e-10));
}

TEST_CASE("day and time scaling factors multiply through") {
    const double base = rad::band_irradiance(495.0, 750.0);
    CHECK(rad::band_irradiance(495.0, 750.0, 5780.0, {0.5, 1.0}) ==
          doctest::Approx(0.5 * base).epsilon(1e-12));
    CHECK(rad::band_irradiance(495.0, 750.0, 5780.0, {1.0, 0.25}) ==
          doctest::Approx(0.25 * base).epsilon(1e-12));
}

TEST_CASE("full-spectrum closure against the T^4 law") {
    const double integral = rad::band_irradiance(10.0, 1e6);
    const double closed_form = rad::stefan_boltzmann_total(5780.0);
    CHECK(closed_form ==
          doctest::Approx(2.15039e-5 * k::stefan_boltzmann * 5780.0 * 5780.0 *
                          5780.0 * 5780.0)
              .epsilon(1e-12));
    // Only the sliver outside [10 nm, 1 mm] separates the two.
    CHECK(integral == doctest::Approx(closed_form).epsilon(1e-8));
    CHECK(integral == doctest::Approx(1360.94420835).epsilon(1e-9));
}

TEST_CASE("validation table carries references and fresh computations") {
    const auto v = rad::validate_solar_model();
    REQUIRE(v.bands.size() == 12);
    CHECK(v.bands[0].observed == doctest::Approx(118.0));
    CHECK(v.bands[1].model == doctest::Approx(627.98));
    CHECK(v.bands[1].computed == doctest::Approx(626.5323181).epsilon(1e-8));
    // Rows whose observed column is non-numeric in the source table.
    for (int i = 7; i < 12; ++i)
        CHECK(std::isnan(v.bands[std::size_t(i)].observed));
    CHECK(v.computed_sum == doctest::Approx(1351.0599275).epsilon(1e-8));
    CHECK(v.model_sum == doctest::Approx(1354.02).epsilon(1e-12));
    // The model column is tracked within the larger of 1% and 0.05 W/m^2
    // on every row; the fresh integral even lands on the published 0.50
    // for the 12-24 um row, where the blackbody column says 0.9.
    for (int i = 0; i < 12; ++i) {
        const auto& b = v.bands[std::size_t(i)];
        CHECK(std::fabs(b.computed - b.model) <=
              std::max(0.01 * b.model, 0.05));
    }
}
