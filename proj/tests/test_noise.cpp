#include "doctest.h"

#include <cmath>
#include <string_view>

#include "vlisl/noise.hpp"
#include "vlisl/scenario.hpp"

namespace ns = vlisl::noise;
namespace sc = vlisl::scenario;

// Baseline operating point used throughout: 2 W transmitter, 500 m,
// 0.5 MHz bandwidth and bit rate, background suppressed to 5% of the
// in-band continuum. References are 50-digit evaluations of the closed
// forms.

TEST_CASE("background power at the detector") {
    // Full continuum (no suppression) and the 5% baseline.
    CHECK(ns::background_power(0.612372452718, 1.0, 7.84e-4, 1.5) ==
          doctest::Approx(1.08022500659e-3).epsilon(1e-11));
    CHECK(ns::background_power(0.612372452718, 1.0, 7.84e-4, 1.5, 0.05) ==
          doctest::Approx(5.40112503297e-5).epsilon(1e-11));
    CHECK_THROWS_AS(ns::background_power(-1.0, 1.0, 1.0, 1.5),
                    std::domain_error);
}

TEST_CASE("shot and thermal variances at the baseline") {
    const double pr = 2.91098333893e-8;
    const double pbg = 5.40112503297e-5;
    CHECK(ns::shot_noise_variance(pr, pbg, 0.51, 0.5e6) ==
          doctest::Approx(2.48266090775e-18).epsilon(1e-11));
    ns::AmplifierSpec amp{};
    CHECK(ns::thermal_noise_variance(7.84e-4, 0.5e6, amp) ==
          doctest::Approx(4.67226602073e-19).epsilon(1e-11));
    // Published receiver analyses sometimes use a 0.82 channel noise factor.
    amp.fet_noise_factor = 0.82;
    CHECK(ns::thermal_noise_variance(7.84e-4, 0.5e6, amp) ==
          doctest::Approx(4.52949469896e-19).epsilon(1e-11));
    // The two thermal terms scale as B^2 and B^3; at 2x bandwidth the
    // total must sit between 4x and 8x.
    const double t1 = ns::thermal_noise_variance(7.84e-4, 0.5e6, amp);
    const double t2 = ns::thermal_noise_variance(7.84e-4, 1.0e6, amp);
    CHECK(t2 > 4.0 * t1);
    CHECK(t2 < 8.0 * t1);
}

TEST_CASE("electrical SNR and SNR per bit") {
    const double pr = 2.91098333893e-8;
    const double shot = 2.48266090775e-18;
    CHECK(ns::electrical_snr(pr, 0.51, shot, 4.67226602073e-19) ==
          doctest::Approx(74.71612443).epsilon(1e-9));
    CHECK(ns::to_db(ns::electrical_snr(pr, 0.51, shot, 4.52949469896e-19)) ==
          doctest::Approx(18.755214).epsilon(1e-7));
    // Equal bandwidth and bit rate: Eb/No equals SNR.
    CHECK(ns::snr_per_bit(74.71612443, 0.5e6, 0.5e6) ==
          doctest::Approx(74.71612443).epsilon(1e-12));
    CHECK(ns::snr_per_bit(100.0, 2.0e6, 0.5e6) ==
          doctest::Approx(400.0).epsilon(1e-12));
}

TEST_CASE("budget terms decompose the directly computed SNR") {
    sc::LinkScenario s{};
    const auto an = sc::analyze(s);
    const auto b = sc::budget(s);
    CHECK(b.total_db == doctest::Approx(an.snr_db).epsilon(1e-12));
    CHECK(b.responsivity_db == doctest::Approx(-5.8485965).epsilon(1e-7));
    CHECK(b.channel_gain_db == doctest::Approx(-156.73981).epsilon(1e-7));
    CHECK(b.transmit_power_db == doctest::Approx(6.0205999).epsilon(1e-7));
    CHECK(b.bandwidth_db == doctest::Approx(56.9897).epsilon(1e-6));
    CHECK(b.bit_rate_db == doctest::Approx(-56.9897).epsilon(1e-6));
    // The channel term is electrical: twice the optical path loss.
    CHECK(b.channel_gain_db ==
          doctest::Approx(-2.0 * an.path_loss_db).epsilon(1e-12));
    double sum = 0.0;
    for (const auto& [name, value] : b.terms()) {
        if (std::string_view(name) != "total_db") sum += value;
    }
    CHECK(sum == doctest::Approx(b.total_db).epsilon(1e-12));
}

TEST_CASE("required receive power inverts the SNR relation") {
    sc::LinkScenario s{};
    const auto an = sc::analyze(s);
    // Feeding the achieved SNR back in must return the achieved power.
    const double p = ns::required_rx_power(an.snr, s.rx.responsivity,
                                           an.background_power_w,
                                           s.bandwidth_hz, an.thermal_var,
                                           s.amplifier.i2);
    CHECK(p == doctest::Approx(an.received_power_w).epsilon(1e-10));
    // Monotone: a higher target needs more power.
    CHECK(ns::required_rx_power(2.0 * an.snr, s.rx.responsivity,
                                an.background_power_w, s.bandwidth_hz,
                                an.thermal_var, s.amplifier.i2) > p);
    // Zero target needs zero power.
    CHECK(ns::required_rx_power(0.0, s.rx.responsivity, an.background_power_w,
                                s.bandwidth_hz, an.thermal_var,
                                s.amplifier.i2) == 0.0);
}

TEST_CASE("scenario analysis bundles the baseline numbers") {
    sc::LinkScenario s{};
    const auto an = sc::analyze(s);
    CHECK(an.band_irradiance_w_m2 ==
          doctest::Approx(0.612372452718).epsilon(1e-10));
    CHECK(an.background_power_w ==
          doctest::Approx(5.40112503297e-5).epsilon(1e-10));
    CHECK(an.channel_gain == doctest::Approx(1.45549166946e-8).epsilon(1e-10));
    CHECK(an.received_power_w ==
          doctest::Approx(2.91098333893e-8).epsilon(1e-10));
    CHECK(an.snr == doctest::Approx(74.71612443).epsilon(1e-9));
    CHECK(an.snr_db == doctest::Approx(18.734143).epsilon(1e-7));
    CHECK(an.ebno == doctest::Approx(an.snr).epsilon(1e-12));
    // Required transmit power round-trips through the channel gain.
    CHECK(sc::required_tx_power(an.snr, s) ==
          doctest::Approx(s.tx.power_w).epsilon(1e-9));
}
