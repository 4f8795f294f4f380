#include "doctest.h"

#include <cmath>

#include "vlisl/constants.hpp"
#include "vlisl/quadrature.hpp"
#include "vlisl/radiometry.hpp"

using vlisl::quadrature::composite_simpson;
using vlisl::quadrature::integrate;

TEST_CASE("polynomials up to cubic are integrated exactly") {
    // Simpson's rule is exact for cubics, so no refinement error at all.
    auto cubic = [](double x) { return 3.0 * x * x * x - x + 2.0; };
    CHECK(integrate(cubic, -1.0, 3.0) ==
          doctest::Approx(3.0 / 4.0 * (81.0 - 1.0) - 0.5 * (9.0 - 1.0) + 8.0)
              .epsilon(1e-14));
}

TEST_CASE("known transcendental integrals") {
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0,
                    vlisl::constants::pi) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(integrate([](double x) { return std::exp(-x); }, 0.0, 50.0) ==
          doctest::Approx(1.0).epsilon(1e-12));
    // 5 decades of scale, as in spectral band work.
    CHECK(integrate([](double x) { return 1.0 / x; }, 1e-5, 1.0) ==
          doctest::Approx(std::log(1e5)).epsilon(1e-12));
}

TEST_CASE("adaptive result matches a dense composite grid on the hardest "
          "integrand in the project") {
    auto planck = [](double lambda) {
        return vlisl::radiometry::planck_spectral_irradiance(lambda, 5780.0);
    };
    const double adaptive = integrate(planck, 10e-9, 1e-3, 1e-12);
    const double dense = composite_simpson(planck, 10e-9, 1e-3, 1 << 22);
    CHECK(adaptive == doctest::Approx(dense).epsilon(1e-9));
}

TEST_CASE("degenerate and invalid ranges") {
    auto f = [](double x) { return x; };
    CHECK(integrate(f, 2.0, 2.0) == 0.0);
    CHECK_THROWS_AS(integrate(f, 3.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(integrate(f, 0.0, 1.0, -1.0), std::domain_error);
    CHECK_THROWS_AS(composite_simpson(f, 0.0, 1.0, 0), std::domain_error);
}

TEST_CASE("narrow band inside a huge dynamic range is not lost") {
    // A band only 0.4 nm wide: naive 3-point bootstrapping over metres-wide
    // ranges would see zero; the pre-split must resolve it.
    auto planck = [](double lambda) {
        return vlisl::radiometry::planck_spectral_irradiance(lambda, 5780.0);
    };
    const double narrow = integrate(planck, 656.0798e-9, 656.4818e-9);
    CHECK(narrow > 0.0);
    const double dense =
        composite_simpson(planck, 656.0798e-9, 656.4818e-9, 1 << 12);
    CHECK(narrow == doctest::Approx(dense).epsilon(1e-10));
}
