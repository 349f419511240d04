#pragma once

#include <numbers>

// Internal convention: angular rates in rad/us, times in us.
// User-facing values are ordinary frequencies in MHz (omega / 2pi).
namespace sbsramsey::units {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduced Planck constant [J s].
inline constexpr double kHbar = 1.0545718e-34;

constexpr double mhz_to_rad_per_us(double mhz) { return kTwoPi * mhz; }
constexpr double rad_per_us_to_mhz(double w) { return w / kTwoPi; }

constexpr double rad_per_us_to_rad_per_s(double w) { return w * 1e6; }
constexpr double rad_per_s_to_rad_per_us(double w) { return w * 1e-6; }

constexpr double mw_to_watts(double mw) { return mw * 1e-3; }
constexpr double thz_to_rad_per_s(double thz) { return kTwoPi * thz * 1e12; }

}  // namespace sbsramsey::units
