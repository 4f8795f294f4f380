#pragma once

// Physical constants (CODATA 2018, exact where the SI defines them so).
// Everything internal is SI; interface layers convert nm / degrees / cm^2.

namespace vlisl::constants {

inline constexpr double plancks_h = 6.62607015e-34;      // J s
inline constexpr double light_speed = 299792458.0;       // m/s
inline constexpr double boltzmann_k = 1.380649e-23;      // J/K
inline constexpr double electron_charge = 1.602176634e-19; // C
inline constexpr double pi = 3.14159265358979323846;

// sigma = 2 pi^5 k^4 / (15 h^3 c^2), evaluated from the constants above
inline constexpr double stefan_boltzmann = 5.670374419184429e-8; // W m^-2 K^-4

// Geometric dilution from the solar photosphere to the detector aperture
// used by the solar irradiance model (dimensionless).
inline constexpr double solar_dilution = 2.15039e-5;

// Effective photospheric blackbody temperature used throughout. [K]
inline constexpr double solar_temperature = 5780.0;

// Wien displacement constant. [m K]
inline constexpr double wien_b = 2.897771955e-3;

inline constexpr double nm = 1e-9; // meters per nanometer

inline constexpr double deg_to_rad(double deg) { return deg * pi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / pi; }

} // namespace vlisl::constants
