#pragma once

#include <array>
#include <cstdio>
#include <ostream>
#include <string_view>

#include "vlisl/constants.hpp"

// Catalog of solar absorption lines usable as low-background passbands for a
// visible-light inter-satellite receiver: inside these lines the solar
// irradiance drops below ~10 % of its continuum value, so an optical filter
// matched to line center/width sees strongly suppressed background.

namespace vlisl::fraunhofer {

enum class Color { violet, blue, red };

constexpr std::string_view to_string(Color c) {
    switch (c) {
        case Color::violet: return "violet";
        case Color::blue: return "blue";
        case Color::red: return "red";
    }
    return "?";
}

struct FraunhoferLine {
    double center_nm;     // line center wavelength
    double width_nm;      // spectral width of the absorption line
    double bandwidth_ghz; // equivalent channel bandwidth, c * width / center^2
    std::string_view element;
    Color color;

    constexpr double lower_nm() const { return center_nm - 0.5 * width_nm; }
    constexpr double upper_nm() const { return center_nm + 0.5 * width_nm; }
};

inline constexpr std::array<FraunhoferLine, 12> line_catalog{{
    {381.5851, 0.1272, 262.1, "Fe", Color::violet},
    {382.0436, 0.1712, 351.9, "Fe", Color::violet},
    {382.5891, 0.1519, 311.3, "Fe", Color::violet},
    {383.2310, 0.1685, 344.2, "Mg", Color::violet},
    {383.8302, 0.1920, 391.0, "Mg", Color::violet},
    {385.9922, 0.1554, 312.9, "Fe", Color::violet},
    {393.3682, 2.0253, 3926.6, "Ca", Color::blue},
    {396.8492, 1.5467, 2946.3, "Ca", Color::blue},
    {410.1748, 0.3133, 558.7, "H", Color::blue},
    {434.0475, 0.2855, 454.6, "H", Color::blue},
    {486.1342, 0.3680, 467.2, "H", Color::blue},
    {656.2808, 0.4020, 280.0, "H", Color::red},
}};

// Frequency bandwidth implied by a spectral width: delta_f = c dl / l^2, GHz.
inline double width_to_bandwidth_ghz(double center_nm, double width_nm) {
    const double center_m = center_nm * constants::nm;
    const double width_m = width_nm * constants::nm;
    return constants::light_speed * width_m / (center_m * center_m) / 1e9;
}

inline void write_line_catalog_csv(std::ostream& os) {
    os << "center_nm,width_nm,bandwidth_ghz,element,color\n";
    char buf[128];
    for (const auto& ln : line_catalog) {
        std::snprintf(buf, sizeof buf, "%.4f,%.4f,%.1f,", ln.center_nm,
                      ln.width_nm, ln.bandwidth_ghz);
        os << buf << ln.element << ',' << to_string(ln.color) << '\n';
    }
}

} // namespace vlisl::fraunhofer
