#pragma once

#include <numbers>

// Unit conventions used throughout the library:
//   - angular frequencies in rad/ns (2*pi times the frequency in GHz)
//   - time in ns
//   - all file formats and config keys use ordinary frequencies (GHz or MHz)
//     and are converted exactly once at the I/O boundary.

namespace raman::units {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

constexpr double ghz_to_angular(double f_ghz) { return two_pi * f_ghz; }
constexpr double mhz_to_angular(double f_mhz) { return two_pi * 1e-3 * f_mhz; }
constexpr double angular_to_ghz(double w) { return w / two_pi; }
constexpr double angular_to_mhz(double w) { return 1e3 * w / two_pi; }

// dBm referenced to 1 mW; linear power in mW.
inline double dbm_to_mw(double p_dbm);

} // namespace raman::units

#include <cmath>

inline double raman::units::dbm_to_mw(double p_dbm) {
    return std::pow(10.0, p_dbm / 10.0);
}
