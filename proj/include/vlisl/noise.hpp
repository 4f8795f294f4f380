#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "vlisl/constants.hpp"

// Receiver noise model and electrical SNR for an intensity-modulated /
// direct-detection link: shot noise from signal plus filtered solar
// background, and thermal noise of a FET transimpedance front end.

namespace vlisl::noise {

struct AmplifierSpec {
    double temperature_k = 300.0;    // T_A
    double open_loop_gain = 10.0;    // G
    double capacitance_per_m2 = 3.8e-7; // eta, F/m^2 (38 pF/cm^2)
    double fet_noise_factor = 1.5;   // Gamma (0.82 for the low-noise variant)
    double transconductance_s = 0.03; // g_m
    double i2 = 0.562;  // noise-bandwidth factor, rectangular pulse
    double i3 = 0.0868; // noise-bandwidth factor, full raised-cosine pulse
};

// Background optical power reaching the detector through the line filter:
//   P_bg = rho E_det T_s A_pd n^2
// where rho is the fraction of in-band continuum power surviving inside the
// absorption line (1.0 = no suppression), E_det the band irradiance (W/m^2).
// Pre: all inputs >= 0, n > 0.
inline double background_power(double band_irradiance_w_m2,
                               double filter_transmission, double area_m2,
                               double refractive_index,
                               double suppression = 1.0) {
    if (!(band_irradiance_w_m2 >= 0.0) || !(filter_transmission >= 0.0) ||
        !(area_m2 >= 0.0) || !(suppression >= 0.0))
        throw std::domain_error("background_power: negative input");
    if (!(refractive_index > 0.0))
        throw std::domain_error("background_power: refractive index <= 0");
    return suppression * band_irradiance_w_m2 * filter_transmission *
           area_m2 * refractive_index * refractive_index;
}

// Shot noise variance, A^2:  sigma^2 = 2 q gamma (P_r + I2 P_bg) B
inline double shot_noise_variance(double received_power_w,
                                  double background_power_w,
                                  double responsivity, double bandwidth_hz,
                                  double i2 = 0.562) {
    if (!(received_power_w >= 0.0) || !(background_power_w >= 0.0) ||
        !(bandwidth_hz >= 0.0))
        throw std::domain_error("shot_noise_variance: negative input");
    return 2.0 * constants::electron_charge * responsivity *
           (received_power_w + i2 * background_power_w) * bandwidth_hz;
}

// Thermal noise variance of the FET front end, A^2:
//   sigma^2 = (8 pi k T_A / G) eta A_pd I2 B^2
//           + (16 pi^2 k T_A Gamma / g_m) eta^2 A_pd^2 I3 B^3
inline double thermal_noise_variance(double area_m2, double bandwidth_hz,
                                     const AmplifierSpec& amp) {
    if (!(area_m2 >= 0.0) || !(bandwidth_hz >= 0.0))
        throw std::domain_error("thermal_noise_variance: negative input");
    if (!(amp.open_loop_gain > 0.0) || !(amp.transconductance_s > 0.0))
        throw std::domain_error("thermal_noise_variance: gain <= 0");
    namespace k = vlisl::constants;
    const double b2 = bandwidth_hz * bandwidth_hz;
    const double feedback = 8.0 * k::pi * k::boltzmann_k * amp.temperature_k /
                            amp.open_loop_gain * amp.capacitance_per_m2 *
                            area_m2 * amp.i2 * b2;
    const double fet = 16.0 * k::pi * k::pi * k::boltzmann_k *
                       amp.temperature_k * amp.fet_noise_factor /
                       amp.transconductance_s * amp.capacitance_per_m2 *
                       amp.capacitance_per_m2 * area_m2 * area_m2 * amp.i3 *
                       b2 * bandwidth_hz;
    return feedback + fet;
}

// Electrical SNR = (gamma P_r)^2 / (shot + thermal). Pre: total noise > 0.
inline double electrical_snr(double received_power_w, double responsivity,
                             double shot_var, double thermal_var) {
    const double n = shot_var + thermal_var;
    if (!(n > 0.0))
        throw std::domain_error("electrical_snr: total noise must be > 0");
    const double s = responsivity * received_power_w;
    return s * s / n;
}

// SNR per bit: Eb/N0 = SNR * B / R_b. Pre: bit rate > 0.
inline double snr_per_bit(double snr, double bandwidth_hz,
                          double bit_rate_bps) {
    if (!(bit_rate_bps > 0.0))
        throw std::domain_error("snr_per_bit: bit rate must be > 0");
    return snr * bandwidth_hz / bit_rate_bps;
}

inline double to_db(double linear) { return 10.0 * std::log10(linear); }
inline double from_db(double db) { return std::pow(10.0, db / 10.0); }

// Additive dB decomposition of the electrical SNR (all terms electrical dB;
// the channel-gain term is 20 log10 H(0), twice the optical path loss):
//   SNR_dB = 20log10(gamma) + 20log10(H0) + 20log10(Pt)
//          + 10log10(B) - 10log10(N) - 10log10(Rb)
// The bandwidth and bit-rate terms cancel when B = Rb; the total then equals
// both the electrical SNR and Eb/N0.
struct LinkBudgetReport {
    double responsivity_db;
    double channel_gain_db;
    double transmit_power_db;
    double bandwidth_db;
    double noise_db;
    double bit_rate_db;
    double total_db; // Eb/N0 in dB

    std::array<std::pair<const char*, double>, 7> terms() const {
        return {{{"responsivity_db", responsivity_db},
                 {"channel_gain_db", channel_gain_db},
                 {"transmit_power_db", transmit_power_db},
                 {"bandwidth_db", bandwidth_db},
                 {"noise_db", noise_db},
                 {"bit_rate_db", bit_rate_db},
                 {"total_db", total_db}}};
    }
};

inline LinkBudgetReport link_budget(double responsivity, double channel_gain,
                                    double transmit_power_w,
                                    double bandwidth_hz, double noise_var,
                                    double bit_rate_bps) {
    if (!(responsivity > 0.0) || !(channel_gain > 0.0) ||
        !(transmit_power_w > 0.0) || !(bandwidth_hz > 0.0) ||
        !(noise_var > 0.0) || !(bit_rate_bps > 0.0))
        throw std::domain_error("link_budget: all inputs must be > 0");
    LinkBudgetReport r{};
    r.responsivity_db = 20.0 * std::log10(responsivity);
    r.channel_gain_db = 20.0 * std::log10(channel_gain);
    r.transmit_power_db = 20.0 * std::log10(transmit_power_w);
    r.bandwidth_db = 10.0 * std::log10(bandwidth_hz);
    r.noise_db = -10.0 * std::log10(noise_var);
    r.bit_rate_db = -10.0 * std::log10(bit_rate_bps);
    r.total_db = r.responsivity_db + r.channel_gain_db + r.transmit_power_db +
                 r.bandwidth_db + r.noise_db + r.bit_rate_db;
    return r;
}

inline void write_budget_csv(const LinkBudgetReport& r, std::ostream& os) {
    os << "term,value_db\n";
    char buf[96];
    for (const auto& [name, value] : r.terms()) {
        std::snprintf(buf, sizeof buf, "%s,%.6f\n", name, value);
        os << buf;
    }
}

inline void write_budget_text(const LinkBudgetReport& r, std::ostream& os) {
    char buf[96];
    os << "link budget (electrical dB)\n";
    for (const auto& [name, value] : r.terms()) {
        std::snprintf(buf, sizeof buf, "  %-18s %+10.3f dB\n", name, value);
        os << buf;
    }
}

// Received optical power needed to meet a target electrical SNR. Inverts
//   target = (gamma P)^2 / (2 q gamma B P + fixed_noise)
// where fixed_noise = 2 q gamma I2 P_bg B + sigma_thermal^2; the positive
// root of the quadratic
//   gamma^2 P^2 - target 2 q gamma B P - target fixed_noise = 0
// is returned. All-positive coefficients make the closed form
// (b + sqrt(b^2 + 4 a c)) / (2 a) cancellation-free. With the signal shot
// term absent (B = 0 or q = 0) this reduces to P = sqrt(target N) / gamma.
// Pre: target >= 0, responsivity > 0.
inline double required_rx_power(double target_snr, double responsivity,
                                double background_power_w,
                                double bandwidth_hz, double thermal_var,
                                double i2 = 0.562) {
    if (!(target_snr >= 0.0))
        throw std::domain_error("required_rx_power: target SNR < 0");
    if (!(responsivity > 0.0))
        throw std::domain_error("required_rx_power: responsivity <= 0");
    if (target_snr == 0.0) return 0.0;
    const double a = responsivity * responsivity;
    const double shot_coeff =
        2.0 * constants::electron_charge * responsivity * bandwidth_hz;
    const double b = target_snr * shot_coeff;
    const double c =
        target_snr * (shot_coeff * i2 * background_power_w + thermal_var);
    return (b + std::sqrt(b * b + 4.0 * a * c)) / (2.0 * a);
}

} // namespace vlisl::noise
