#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vlisl/modulation.hpp"
#include "vlisl/scenario.hpp"

// Flat key=value configuration for the CLI. Unset keys keep the baseline
// H-alpha scenario defaults; angles are degrees, distances meters,
// wavelengths nm, powers watts. Unknown keys and malformed values are
// rejected by name; physical-range violations are collected per key.

namespace vlisl::config {

struct Config {
    scenario::LinkScenario scenario{};
    modulation::OfdmParams ofdm{};
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

struct Entry {
    const char* key;
    std::function<double(const Config&)> get;
    std::function<void(Config&, double)> set;
};

inline const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = [] {
        std::vector<Entry> r;
        auto fwd = [&r](const char* key, auto getter, auto setter) {
            r.push_back({key, getter, setter});
        };
        fwd("tx.semi_angle_deg",
            [](const Config& c) { return c.scenario.tx.semi_angle_deg; },
            [](Config& c, double v) { c.scenario.tx.semi_angle_deg = v; });
        fwd("tx.peak_wavelength_nm",
            [](const Config& c) { return c.scenario.tx.peak_wavelength_nm; },
            [](Config& c, double v) { c.scenario.tx.peak_wavelength_nm = v; });
        fwd("tx.power_w",
            [](const Config& c) { return c.scenario.tx.power_w; },
            [](Config& c, double v) { c.scenario.tx.power_w = v; });
        fwd("concentrator.refractive_index",
            [](const Config& c) {
                return c.scenario.concentrator.refractive_index;
            },
            [](Config& c, double v) {
                c.scenario.concentrator.refractive_index = v;
            });
        fwd("concentrator.fov_semi_angle_deg",
            [](const Config& c) {
                return c.scenario.concentrator.fov_semi_angle_deg;
            },
            [](Config& c, double v) {
                c.scenario.concentrator.fov_semi_angle_deg = v;
            });
        fwd("concentrator.radius_m",
            [](const Config& c) { return c.scenario.concentrator.radius_m; },
            [](Config& c, double v) { c.scenario.concentrator.radius_m = v; });
        fwd("detector.area_m2",
            [](const Config& c) { return c.scenario.rx.area_m2; },
            [](Config& c, double v) { c.scenario.rx.area_m2 = v; });
        fwd("detector.responsivity",
            [](const Config& c) { return c.scenario.rx.responsivity; },
            [](Config& c, double v) { c.scenario.rx.responsivity = v; });
        fwd("filter.transmission",
            [](const Config& c) { return c.scenario.rx.filter_transmission; },
            [](Config& c, double v) {
                c.scenario.rx.filter_transmission = v;
            });
        fwd("filter.lower_nm",
            [](const Config& c) { return c.scenario.filter_lower_nm; },
            [](Config& c, double v) { c.scenario.filter_lower_nm = v; });
        fwd("filter.upper_nm",
            [](const Config& c) { return c.scenario.filter_upper_nm; },
            [](Config& c, double v) { c.scenario.filter_upper_nm = v; });
        fwd("link.distance_m",
            [](const Config& c) { return c.scenario.geometry.distance_m; },
            [](Config& c, double v) { c.scenario.geometry.distance_m = v; });
        fwd("link.irradiance_deg",
            [](const Config& c) { return c.scenario.geometry.irradiance_deg; },
            [](Config& c, double v) {
                c.scenario.geometry.irradiance_deg = v;
            });
        fwd("link.incidence_deg",
            [](const Config& c) { return c.scenario.geometry.incidence_deg; },
            [](Config& c, double v) {
                c.scenario.geometry.incidence_deg = v;
            });
        fwd("link.bandwidth_hz",
            [](const Config& c) { return c.scenario.bandwidth_hz; },
            [](Config& c, double v) { c.scenario.bandwidth_hz = v; });
        fwd("link.bit_rate_bps",
            [](const Config& c) { return c.scenario.bit_rate_bps; },
            [](Config& c, double v) { c.scenario.bit_rate_bps = v; });
        fwd("background.suppression",
            [](const Config& c) { return c.scenario.background_suppression; },
            [](Config& c, double v) {
                c.scenario.background_suppression = v;
            });
        fwd("background.day_factor",
            [](const Config& c) { return c.scenario.scaling.day_factor; },
            [](Config& c, double v) { c.scenario.scaling.day_factor = v; });
        fwd("background.time_factor",
            [](const Config& c) { return c.scenario.scaling.time_factor; },
            [](Config& c, double v) { c.scenario.scaling.time_factor = v; });
        fwd("background.source_temperature_k",
            [](const Config& c) { return c.scenario.source_temperature_k; },
            [](Config& c, double v) { c.scenario.source_temperature_k = v; });
        fwd("amplifier.temperature_k",
            [](const Config& c) { return c.scenario.amplifier.temperature_k; },
            [](Config& c, double v) {
                c.scenario.amplifier.temperature_k = v;
            });
        fwd("amplifier.open_loop_gain",
            [](const Config& c) {
                return c.scenario.amplifier.open_loop_gain;
            },
            [](Config& c, double v) {
                c.scenario.amplifier.open_loop_gain = v;
            });
        fwd("amplifier.capacitance_f_m2",
            [](const Config& c) {
                return c.scenario.amplifier.capacitance_per_m2;
            },
            [](Config& c, double v) {
                c.scenario.amplifier.capacitance_per_m2 = v;
            });
        fwd("amplifier.fet_noise_factor",
            [](const Config& c) {
                return c.scenario.amplifier.fet_noise_factor;
            },
            [](Config& c, double v) {
                c.scenario.amplifier.fet_noise_factor = v;
            });
        fwd("amplifier.transconductance_s",
            [](const Config& c) {
                return c.scenario.amplifier.transconductance_s;
            },
            [](Config& c, double v) {
                c.scenario.amplifier.transconductance_s = v;
            });
        fwd("amplifier.noise_factor_i2",
            [](const Config& c) { return c.scenario.amplifier.i2; },
            [](Config& c, double v) { c.scenario.amplifier.i2 = v; });
        fwd("amplifier.noise_factor_i3",
            [](const Config& c) { return c.scenario.amplifier.i3; },
            [](Config& c, double v) { c.scenario.amplifier.i3 = v; });
        fwd("ofdm.subcarriers",
            [](const Config& c) { return double(c.ofdm.subcarriers); },
            [](Config& c, double v) { c.ofdm.subcarriers = int(v); });
        fwd("ofdm.guard",
            [](const Config& c) { return double(c.ofdm.guard); },
            [](Config& c, double v) { c.ofdm.guard = int(v); });
        return r;
    }();
    return entries;
}

inline double parse_number(const std::string& key, const std::string& text) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    while (end && *end == ' ') ++end;
    if (end == begin || (end && *end != '\0'))
        throw ConfigError("config: value for '" + key +
                          "' is not a number: '" + text + "'");
    if (!std::isfinite(v))
        throw ConfigError("config: value for '" + key + "' is not finite");
    return v;
}

inline std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace detail

// Apply one "key=value" assignment. Unknown key or malformed value throws
// ConfigError naming the key.
inline void set_value(Config& cfg, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw ConfigError("config: expected key=value, got '" + assignment +
                          "'");
    const std::string key = detail::trim(assignment.substr(0, eq));
    const std::string value = detail::trim(assignment.substr(eq + 1));
    for (const auto& e : detail::registry()) {
        if (key == e.key) {
            e.set(cfg, detail::parse_number(key, value));
            return;
        }
    }
    throw ConfigError("config: unknown key '" + key + "'");
}

// Parse a whole config stream: one key=value per line, blank lines and
// '#' comments ignored.
inline void parse(Config& cfg, std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        set_value(cfg, line);
    }
}

inline void dump(const Config& cfg, std::ostream& os) {
    char buf[80];
    for (const auto& e : detail::registry()) {
        std::snprintf(buf, sizeof buf, "%s = %.12g\n", e.key, e.get(cfg));
        os << buf;
    }
}

struct Validation {
    std::vector<std::string> errors;   // fatal, by key
    std::vector<std::string> warnings; // advisory, by key
    bool ok() const { return errors.empty(); }
};

inline Validation validate(const Config& cfg) {
    Validation v;
    const auto& s = cfg.scenario;
    auto err = [&v](const char* key, const std::string& what) {
        v.errors.push_back(std::string(key) + ": " + what);
    };
    if (!(s.tx.semi_angle_deg > 0.0 && s.tx.semi_angle_deg < 90.0))
        err("tx.semi_angle_deg", "must be in (0, 90)");
    if (!(s.tx.peak_wavelength_nm > 0.0))
        err("tx.peak_wavelength_nm", "must be > 0");
    if (!(s.tx.power_w > 0.0)) err("tx.power_w", "must be > 0");
    if (!(s.concentrator.refractive_index >= 1.0))
        err("concentrator.refractive_index", "must be >= 1");
    if (!(s.concentrator.fov_semi_angle_deg > 0.0 &&
          s.concentrator.fov_semi_angle_deg <= 90.0))
        err("concentrator.fov_semi_angle_deg", "must be in (0, 90]");
    if (!(s.concentrator.radius_m > 0.0))
        err("concentrator.radius_m", "must be > 0");
    if (!(s.rx.area_m2 > 0.0)) err("detector.area_m2", "must be > 0");
    if (!(s.rx.responsivity > 0.0))
        err("detector.responsivity", "must be > 0");
    if (!(s.rx.filter_transmission > 0.0 && s.rx.filter_transmission <= 1.0))
        err("filter.transmission", "must be in (0, 1]");
    if (!(s.filter_lower_nm > 0.0)) err("filter.lower_nm", "must be > 0");
    if (!(s.filter_upper_nm > s.filter_lower_nm))
        err("filter.upper_nm", "must be > filter.lower_nm");
    if (!(s.geometry.distance_m > 0.0)) err("link.distance_m", "must be > 0");
    if (!(s.geometry.irradiance_deg >= 0.0 && s.geometry.irradiance_deg < 90.0))
        err("link.irradiance_deg", "must be in [0, 90)");
    if (!(s.geometry.incidence_deg >= 0.0 && s.geometry.incidence_deg < 90.0))
        err("link.incidence_deg", "must be in [0, 90)");
    if (!(s.bandwidth_hz > 0.0)) err("link.bandwidth_hz", "must be > 0");
    if (!(s.bit_rate_bps > 0.0)) err("link.bit_rate_bps", "must be > 0");
    if (!(s.background_suppression >= 0.0 && s.background_suppression <= 1.0))
        err("background.suppression", "must be in [0, 1]");
    if (!(s.scaling.day_factor > 0.0))
        err("background.day_factor", "must be > 0");
    if (!(s.scaling.time_factor > 0.0))
        err("background.time_factor", "must be > 0");
    if (!(s.source_temperature_k > 0.0))
        err("background.source_temperature_k", "must be > 0");
    if (!(s.amplifier.temperature_k > 0.0))
        err("amplifier.temperature_k", "must be > 0");
    if (!(s.amplifier.open_loop_gain > 0.0))
        err("amplifier.open_loop_gain", "must be > 0");
    if (!(s.amplifier.capacitance_per_m2 > 0.0))
        err("amplifier.capacitance_f_m2", "must be > 0");
    if (!(s.amplifier.fet_noise_factor > 0.0))
        err("amplifier.fet_noise_factor", "must be > 0");
    if (!(s.amplifier.transconductance_s > 0.0))
        err("amplifier.transconductance_s", "must be > 0");
    if (!(s.amplifier.i2 > 0.0)) err("amplifier.noise_factor_i2", "must be > 0");
    if (!(s.amplifier.i3 > 0.0)) err("amplifier.noise_factor_i3", "must be > 0");
    if (cfg.ofdm.subcarriers < 8)
        err("ofdm.subcarriers", "must be >= 8");
    if (cfg.ofdm.guard < 0) err("ofdm.guard", "must be >= 0");

    // Ideal-concentrator geometry wants lens radius R > n^2 r_detector; the
    // baseline hardware violates it, so flag without failing.
    if (v.ok()) {
        const double r_det =
            std::sqrt(s.rx.area_m2 / vlisl::constants::pi);
        const double needed =
            s.concentrator.refractive_index * s.concentrator.refractive_index *
            r_det;
        if (s.concentrator.radius_m <= needed) {
            char buf[160];
            std::snprintf(buf, sizeof buf,
                          "concentrator.radius_m: %.4g m does not exceed "
                          "n^2 * detector radius = %.4g m; ideal concentrator "
                          "gain is optimistic",
                          s.concentrator.radius_m, needed);
            v.warnings.push_back(buf);
        }
    }
    return v;
}

} // namespace vlisl::config
