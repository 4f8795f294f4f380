#pragma once

#include <cmath>

#include "vlisl/channel.hpp"
#include "vlisl/noise.hpp"
#include "vlisl/radiometry.hpp"

// A complete link operating point: transmitter, optics, geometry, background
// environment and electrical parameters, with the derived quantities (channel
// gain, background power, noise, SNR, budget) computed from it. Defaults are
// the baseline H-alpha scenario: 656.2808 nm filter of width 0.4020 nm, 0.5 km
// separation, 0.5 MHz bandwidth and bit rate.

namespace vlisl::scenario {

struct LinkScenario {
    channel::TransmitterSpec tx{};
    channel::ConcentratorSpec concentrator{};
    channel::DetectorSpec rx{};
    channel::LinkGeometry geometry{};
    noise::AmplifierSpec amplifier{};

    // Solar background through the line filter
    double filter_lower_nm = 656.0798;
    double filter_upper_nm = 656.4818;
    double source_temperature_k = constants::solar_temperature;
    radiometry::IrradianceScaling scaling{};
    // Fraction of in-band continuum power surviving inside the absorption
    // line (the line floor sits below 10 % of continuum; 0.05 is the baseline,
    // 0.10 a conservative preset).
    double background_suppression = 0.05;

    double bandwidth_hz = 0.5e6;
    double bit_rate_bps = 0.5e6;
};

// Band irradiance through the scenario filter, W/m^2.
inline double filter_band_irradiance(const LinkScenario& s) {
    return radiometry::band_irradiance(s.filter_lower_nm, s.filter_upper_nm,
                                       s.source_temperature_k, s.scaling);
}

inline double scenario_background_power(const LinkScenario& s) {
    return noise::background_power(
        filter_band_irradiance(s), s.rx.filter_transmission, s.rx.area_m2,
        s.concentrator.refractive_index, s.background_suppression);
}

inline double scenario_channel_gain(const LinkScenario& s) {
    return channel::channel_dc_gain(s.tx, s.concentrator, s.rx, s.geometry);
}

struct ScenarioAnalysis {
    double band_irradiance_w_m2;
    double background_power_w;
    double channel_gain;
    double path_loss_db;
    double received_power_w;
    double shot_var;
    double thermal_var;
    double snr;
    double snr_db;
    double ebno;
    double ebno_db;
};

inline ScenarioAnalysis analyze(const LinkScenario& s) {
    ScenarioAnalysis a{};
    a.band_irradiance_w_m2 = filter_band_irradiance(s);
    a.background_power_w = noise::background_power(
        a.band_irradiance_w_m2, s.rx.filter_transmission, s.rx.area_m2,
        s.concentrator.refractive_index, s.background_suppression);
    a.channel_gain = scenario_channel_gain(s);
    a.path_loss_db = channel::path_loss_db(a.channel_gain);
    a.received_power_w = channel::received_power(s.tx.power_w, a.channel_gain);
    a.shot_var = noise::shot_noise_variance(
        a.received_power_w, a.background_power_w, s.rx.responsivity,
        s.bandwidth_hz, s.amplifier.i2);
    a.thermal_var =
        noise::thermal_noise_variance(s.rx.area_m2, s.bandwidth_hz, s.amplifier);
    a.snr = noise::electrical_snr(a.received_power_w, s.rx.responsivity,
                                  a.shot_var, a.thermal_var);
    a.snr_db = noise::to_db(a.snr);
    a.ebno = noise::snr_per_bit(a.snr, s.bandwidth_hz, s.bit_rate_bps);
    a.ebno_db = noise::to_db(a.ebno);
    return a;
}

inline noise::LinkBudgetReport budget(const LinkScenario& s) {
    const auto a = analyze(s);
    return noise::link_budget(s.rx.responsivity, a.channel_gain, s.tx.power_w,
                              s.bandwidth_hz, a.shot_var + a.thermal_var,
                              s.bit_rate_bps);
}

// Received optical power required for a target electrical SNR in this
// scenario's noise environment (linear target).
inline double required_rx_power(double target_snr, const LinkScenario& s) {
    return noise::required_rx_power(
        target_snr, s.rx.responsivity, scenario_background_power(s),
        s.bandwidth_hz,
        noise::thermal_noise_variance(s.rx.area_m2, s.bandwidth_hz,
                                      s.amplifier),
        s.amplifier.i2);
}

// Transmit optical power required for a target electrical SNR: the received
// requirement referred through the channel gain.
inline double required_tx_power(double target_snr, const LinkScenario& s) {
    return required_rx_power(target_snr, s) / scenario_channel_gain(s);
}

} // namespace vlisl::scenario
