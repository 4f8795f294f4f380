#pragma once

#include <string>
#include <vector>

#include "vlisl/modulation.hpp"
#include "vlisl/scenario.hpp"

// Scheme-comparison products for a given link scenario: the required-SNR /
// required-transmit-power table and BER-vs-operating-point sweeps.

namespace vlisl::performance {

struct PowerTableRow {
    modulation::Scheme scheme;
    double required_snr_db;
    double required_tx_power_w;
    // DCO-OFDM also needs a DC bias on top of the tabulated signal power.
    bool dc_bias_excluded;
};

// Required SNR and transmit power per scheme at a target BER (default 1e-6)
// in the given scenario's noise environment.
inline std::vector<PowerTableRow> power_table(
    const scenario::LinkScenario& s,
    const std::vector<modulation::Scheme>& schemes =
        modulation::standard_schemes(),
    double target_ber = 1e-6) {
    std::vector<PowerTableRow> rows;
    rows.reserve(schemes.size());
    for (const auto& scheme : schemes) {
        const double snr = modulation::required_snr(scheme, target_ber);
        rows.push_back(
            {scheme, noise::to_db(snr), scenario::required_tx_power(snr, s),
             scheme.family == modulation::Family::dco_ofdm});
    }
    return rows;
}

enum class SweepAxis { snr_db, transmit_power_w };

struct BerPoint {
    modulation::Scheme scheme;
    double x;   // SNR in dB, or transmit power in W, per axis
    double ber;
};

// BER of each scheme along the chosen axis. For the SNR axis the x values are
// electrical SNR in dB; for the power axis they are transmit powers in W and
// the SNR is derived from the scenario at each power.
inline std::vector<BerPoint> ber_sweep(
    const scenario::LinkScenario& s, SweepAxis axis, double x_min,
    double x_max, int points,
    const std::vector<modulation::Scheme>& schemes =
        modulation::standard_schemes()) {
    if (points < 2) throw std::domain_error("ber_sweep: need >= 2 points");
    if (!(x_min < x_max))
        throw std::domain_error("ber_sweep: need x_min < x_max");
    std::vector<BerPoint> out;
    out.reserve(schemes.size() * std::size_t(points));
    for (const auto& scheme : schemes) {
        for (int i = 0; i < points; ++i) {
            const double x =
                x_min + (x_max - x_min) * double(i) / double(points - 1);
            double snr;
            if (axis == SweepAxis::snr_db) {
                snr = noise::from_db(x);
            } else {
                if (!(x > 0.0))
                    throw std::domain_error(
                        "ber_sweep: transmit power must be > 0");
                scenario::LinkScenario sx = s;
                sx.tx.power_w = x;
                snr = scenario::analyze(sx).snr;
            }
            out.push_back({scheme, x, modulation::ber(scheme, snr)});
        }
    }
    return out;
}

inline std::string scheme_id(const modulation::Scheme& s) {
    std::string id = modulation::family_label(s.family);
    if (s.family != modulation::Family::ook)
        id += "-" + std::to_string(s.order);
    return id;
}

} // namespace vlisl::performance
