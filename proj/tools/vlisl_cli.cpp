// vlisl: visible-light inter-satellite link analysis CLI.
//
// Loads a flat key=value scenario config (all keys optional; defaults are
// the baseline H-alpha link), applies --set overrides, validates, and runs
// one subcommand that emits a deterministic CSV or text report to stdout
// or --out. Exit codes: 0 success, 1 configuration/validation error,
// 2 computation error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "vlisl/channel.hpp"
#include "vlisl/config.hpp"
#include "vlisl/fraunhofer.hpp"
#include "vlisl/modulation.hpp"
#include "vlisl/noise.hpp"
#include "vlisl/performance.hpp"
#include "vlisl/qam16.hpp"
#include "vlisl/radiometry.hpp"
#include "vlisl/scenario.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_config = 1;
constexpr int exit_compute = 2;

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

void run_solar_validate(std::ostream& os, const vlisl::config::Config& cfg) {
    const auto v = vlisl::radiometry::validate_solar_model(
        cfg.scenario.source_temperature_k, cfg.scenario.scaling);
    os << "band,lambda_a_nm,lambda_b_nm,observed_w_m2,blackbody_w_m2,"
          "reference_model_w_m2,computed_w_m2,delta_w_m2,delta_pct\n";
    for (int i = 0; i < vlisl::radiometry::solar_band_count; ++i) {
        const auto& b = v.bands[std::size_t(i)];
        const double delta = b.computed - b.model;
        os << (i + 1) << ',' << fmt("%.6g", b.lambda_a_nm) << ','
           << fmt("%.6g", b.lambda_b_nm) << ',';
        if (std::isfinite(b.observed)) os << fmt("%.6g", b.observed);
        os << ',' << fmt("%.6g", b.blackbody) << ',' << fmt("%.2f", b.model)
           << ',' << fmt("%.4f", b.computed) << ',' << fmt("%.4f", delta)
           << ',';
        if (b.model != 0.0) os << fmt("%.3f", 100.0 * delta / b.model);
        os << '\n';
    }
    os << "total,,,,," << fmt("%.2f", v.model_sum) << ','
       << fmt("%.4f", v.computed_sum) << ','
       << fmt("%.4f", v.computed_sum - v.model_sum) << ','
       << fmt("%.3f", 100.0 * (v.computed_sum - v.model_sum) / v.model_sum)
       << '\n';
}

void print_snr_report(std::ostream& os, const vlisl::config::Config& cfg) {
    const auto an = vlisl::scenario::analyze(cfg.scenario);
    char buf[96];
    auto row = [&](const char* name, const char* spec, double v) {
        std::string f = std::string("  %-22s ") + spec + "\n";
        std::snprintf(buf, sizeof buf, f.c_str(), name, v);
        os << buf;
    };
    os << "scenario analysis\n";
    row("band_irradiance_w_m2", "%.6e", an.band_irradiance_w_m2);
    row("background_power_w", "%.6e", an.background_power_w);
    row("channel_gain", "%.6e", an.channel_gain);
    row("path_loss_db", "%.3f", an.path_loss_db);
    row("received_power_w", "%.6e", an.received_power_w);
    row("shot_variance_a2", "%.6e", an.shot_var);
    row("thermal_variance_a2", "%.6e", an.thermal_var);
    row("snr_db", "%.6f", an.snr_db);
    row("ebno_db", "%.6f", an.ebno_db);
    vlisl::noise::write_budget_text(vlisl::scenario::budget(cfg.scenario), os);
}

int run_snr(std::ostream& os, const vlisl::config::Config& cfg,
            const std::string& sweep) {
    if (sweep.empty()) {
        print_snr_report(os, cfg);
        return exit_ok;
    }
    const auto eq = sweep.find('=');
    if (eq == std::string::npos) {
        std::cerr << "error: --sweep expects key=v1,v2,... (e.g. fov=35,45)\n";
        return exit_config;
    }
    const std::string key = sweep.substr(0, eq);
    std::vector<double> values;
    std::stringstream list(sweep.substr(eq + 1));
    std::string item;
    while (std::getline(list, item, ',')) {
        try {
            values.push_back(vlisl::config::detail::parse_number(key, item));
        } catch (const vlisl::config::ConfigError& e) {
            std::cerr << "error: " << e.what() << '\n';
            return exit_config;
        }
    }
    if (values.empty()) {
        std::cerr << "error: --sweep " << key << " has no values\n";
        return exit_config;
    }
    const char* column = nullptr;
    std::function<void(vlisl::scenario::LinkScenario&, double)> apply;
    if (key == "fov") {
        column = "fov_semi_angle_deg";
        apply = [](vlisl::scenario::LinkScenario& s, double v) {
            s.concentrator.fov_semi_angle_deg = v;
        };
    } else if (key == "distance") {
        column = "distance_m";
        apply = [](vlisl::scenario::LinkScenario& s, double v) {
            s.geometry.distance_m = v;
        };
    } else if (key == "power") {
        column = "tx_power_w";
        apply = [](vlisl::scenario::LinkScenario& s, double v) {
            s.tx.power_w = v;
        };
    } else if (key == "bandwidth") {
        column = "bandwidth_hz";
        apply = [](vlisl::scenario::LinkScenario& s, double v) {
            s.bandwidth_hz = v;
        };
    } else {
        std::cerr << "error: --sweep key must be one of "
                     "fov|distance|power|bandwidth, got '"
                  << key << "'\n";
        return exit_config;
    }
    os << column << ",snr_db,ebno_db\n";
    for (double v : values) {
        vlisl::scenario::LinkScenario s = cfg.scenario;
        apply(s, v);
        const auto an = vlisl::scenario::analyze(s);
        os << fmt("%.6g", v) << ',' << fmt("%.6f", an.snr_db) << ','
           << fmt("%.6f", an.ebno_db) << '\n';
    }
    return exit_ok;
}

void run_power_table(std::ostream& os, const vlisl::config::Config& cfg,
                     double target_ber) {
    const auto rows = vlisl::performance::power_table(
        cfg.scenario, vlisl::modulation::standard_schemes(), target_ber);
    os << "scheme,order,required_snr_db,required_tx_power_w,notes\n";
    for (const auto& r : rows) {
        os << vlisl::modulation::family_label(r.scheme.family) << ','
           << r.scheme.order << ',' << fmt("%.4f", r.required_snr_db) << ','
           << fmt("%.6f", r.required_tx_power_w) << ','
           << (r.dc_bias_excluded ? "signal power only; DC bias extra" : "")
           << '\n';
    }
}

void run_ber_sweep(std::ostream& os, const vlisl::config::Config& cfg,
                   const std::string& axis, double x_min, double x_max,
                   int points) {
    using vlisl::performance::SweepAxis;
    const SweepAxis ax = axis == "power" ? SweepAxis::transmit_power_w
                                         : SweepAxis::snr_db;
    const auto rows = vlisl::performance::ber_sweep(cfg.scenario, ax, x_min,
                                                    x_max, points);
    os << "scheme,order,"
       << (ax == SweepAxis::snr_db ? "snr_db" : "tx_power_w") << ",ber\n";
    for (const auto& r : rows) {
        os << vlisl::modulation::family_label(r.scheme.family) << ','
           << r.scheme.order << ',' << fmt("%.6f", r.x) << ','
           << fmt("%.10e", r.ber) << '\n';
    }
}

void run_coded_ber(std::ostream& os, double ebno_min, double ebno_max,
                   double ebno_step, std::uint64_t bits, std::uint64_t seed,
                   int threads) {
    if (!(ebno_step > 0.0))
        throw std::domain_error("coded-ber: --ebno-step must be > 0");
    if (!(ebno_min <= ebno_max))
        throw std::domain_error("coded-ber: need --ebno-min <= --ebno-max");
    std::vector<double> ebno;
    for (double e = ebno_min; e <= ebno_max + 1e-9; e += ebno_step)
        ebno.push_back(e);
    const auto curve =
        vlisl::qam16::comparison_curve(ebno, bits, seed, threads);
    os << "ebno_db,scheme,ber,ci_low,ci_high,bit_errors,bits\n";
    char buf[64];
    for (const auto& p : curve) {
        os << fmt("%.2f", p.ebno_db) << ',' << p.scheme << ','
           << fmt("%.10e", p.est.ber) << ',' << fmt("%.10e", p.est.ci_low)
           << ',' << fmt("%.10e", p.est.ci_high) << ',';
        std::snprintf(buf, sizeof buf, "%llu,%llu\n",
                      static_cast<unsigned long long>(p.est.bit_errors),
                      static_cast<unsigned long long>(p.est.bits));
        os << buf;
    }
}

void run_doppler(std::ostream& os, double wavelength_nm,
                 double range_rate_m_s) {
    const auto d = vlisl::channel::doppler_shift(wavelength_nm,
                                                 range_rate_m_s);
    os << "wavelength_nm=" << fmt("%.4f", wavelength_nm)
       << " range_rate_m_s=" << fmt("%.6g", range_rate_m_s)
       << " shift_nm=" << fmt("%.9f", d.shift_nm) << " significant="
       << (d.significant ? "yes" : "no") << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"visible-light inter-satellite link analysis"};
    app.require_subcommand(0, 1);

    std::string config_path;
    std::vector<std::string> overrides;
    bool dump_config = false;
    std::string out_path;
    app.add_option("--config", config_path,
                   "scenario config file (key = value lines)");
    app.add_option("--set", overrides,
                   "override one config key (key=value); repeatable");
    app.add_flag("--dump-config", dump_config,
                 "print the effective config and exit");
    app.add_option("--out", out_path, "write output to this file");

    auto* solar = app.add_subcommand(
        "solar-validate", "solar band irradiance vs reference columns (CSV)");
    auto* lines = app.add_subcommand(
        "lines", "candidate filter line catalog (CSV)");
    auto* snr =
        app.add_subcommand("snr", "scenario SNR report, or CSV sweep");
    std::string sweep;
    snr->add_option("--sweep", sweep,
                    "sweep one parameter: fov|distance|power|bandwidth"
                    "=v1,v2,...");
    auto* budget = app.add_subcommand("budget", "link budget breakdown");
    std::string budget_format = "text";
    budget->add_option("--format", budget_format, "text or csv")
        ->check(CLI::IsMember({"text", "csv"}));
    auto* power = app.add_subcommand(
        "power-table", "required SNR and transmit power per scheme (CSV)");
    double target_ber = 1e-6;
    power->add_option("--target-ber", target_ber, "target bit error rate");
    auto* sweep_cmd =
        app.add_subcommand("ber-sweep", "BER vs SNR or transmit power (CSV)");
    std::string axis = "snr";
    double x_min = 0.0, x_max = 30.0;
    int points = 61;
    bool have_min = false, have_max = false;
    sweep_cmd->add_option("--axis", axis, "snr or power")
        ->check(CLI::IsMember({"snr", "power"}));
    sweep_cmd->add_option("--min", x_min, "axis start")
        ->each([&](const std::string&) { have_min = true; });
    sweep_cmd->add_option("--max", x_max, "axis end")
        ->each([&](const std::string&) { have_max = true; });
    sweep_cmd->add_option("--points", points, "sample count");
    auto* coded = app.add_subcommand(
        "coded-ber", "Monte Carlo 16-QAM vs RS-coded BER (CSV)");
    double ebno_min = 4.0, ebno_max = 12.0, ebno_step = 1.0;
    std::uint64_t bits = 2'000'000, seed = 1;
    int threads = 1;
    coded->add_option("--ebno-min", ebno_min, "first Eb/No point (dB)");
    coded->add_option("--ebno-max", ebno_max, "last Eb/No point (dB)");
    coded->add_option("--ebno-step", ebno_step, "Eb/No spacing (dB)");
    coded->add_option("--bits", bits, "information bits per point");
    coded->add_option("--seed", seed, "random seed");
    coded->add_option("--threads", threads, "worker threads")
        ->check(CLI::Range(1, 256));
    auto* doppler =
        app.add_subcommand("doppler", "wavelength shift for a range rate");
    double wavelength_nm = -1.0, range_rate = 0.0;
    doppler->add_option("--wavelength-nm", wavelength_nm,
                        "carrier wavelength (default: tx.peak_wavelength_nm)");
    doppler->add_option("--range-rate-m-s", range_rate,
                        "relative radial velocity (m/s)")
        ->required();

    // Accept global options (--config, --set, --out, ...) after the
    // subcommand name as well as before it.
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config;
    }

    vlisl::config::Config cfg;
    try {
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) {
                std::cerr << "error: cannot open config file '" << config_path
                          << "'\n";
                return exit_config;
            }
            vlisl::config::parse(cfg, in);
        }
        for (const auto& assignment : overrides)
            vlisl::config::set_value(cfg, assignment);
    } catch (const vlisl::config::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_config;
    }

    std::ofstream out_file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        out_file.open(out_path);
        if (!out_file) {
            std::cerr << "error: cannot open output file '" << out_path
                      << "'\n";
            return exit_config;
        }
        os = &out_file;
    }

    if (dump_config) {
        vlisl::config::dump(cfg, *os);
        return exit_ok;
    }
    if (app.get_subcommands().empty()) {
        std::cerr << app.help();
        return exit_config;
    }

    const auto validation = vlisl::config::validate(cfg);
    for (const auto& w : validation.warnings)
        std::cerr << "warning: " << w << '\n';
    if (!validation.ok()) {
        for (const auto& e : validation.errors)
            std::cerr << "error: " << e << '\n';
        return exit_config;
    }

    try {
        if (solar->parsed()) {
            run_solar_validate(*os, cfg);
        } else if (lines->parsed()) {
            vlisl::fraunhofer::write_line_catalog_csv(*os);
        } else if (snr->parsed()) {
            return run_snr(*os, cfg, sweep);
        } else if (budget->parsed()) {
            const auto report = vlisl::scenario::budget(cfg.scenario);
            if (budget_format == "csv")
                vlisl::noise::write_budget_csv(report, *os);
            else
                vlisl::noise::write_budget_text(report, *os);
        } else if (power->parsed()) {
            run_power_table(*os, cfg, target_ber);
        } else if (sweep_cmd->parsed()) {
            if (axis == "power" && !have_min) x_min = 0.5;
            if (axis == "power" && !have_max) x_max = 5.0;
            run_ber_sweep(*os, cfg, axis, x_min, x_max, points);
        } else if (coded->parsed()) {
            run_coded_ber(*os, ebno_min, ebno_max, ebno_step, bits, seed,
                          threads);
        } else if (doppler->parsed()) {
            const double wl = wavelength_nm > 0.0
                                  ? wavelength_nm
                                  : cfg.scenario.tx.peak_wavelength_nm;
            run_doppler(*os, wl, range_rate);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_compute;
    }
    return exit_ok;
}
