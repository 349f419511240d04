#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

// Batched RK4 stepping of the linearized two-mode equations
//
//   dx/dt = -(kappa + i delta) x - i G y + eps
//   dy/dt = -(gamma_m/2 + i s omega_x) y - i s G^* x
//
// with s = +1 for (x, y) = (c, b) in the RWA regime and s = -1 for
// (x, y) = (a, b^dagger) in the anti-RWA regime. Lanes are independent
// sweep points; every variant performs the same IEEE operations in the same
// order, so results are bit-identical across variants.
namespace sbsramsey::simd {

inline constexpr std::size_t kLanes = 4;
using Lane = std::array<double, kLanes>;

struct LinearCoeffs {
  Lane kappa{};
  Lane delta{};
  Lane gamma_half{};
  Lane s_omega{};  ///< s * omega_x
  Lane g_re{};
  Lane g_im{};
  Lane s_g_re{};   ///< s * Re G
  Lane s_g_im{};   ///< s * Im G
  Lane eps{};
};

struct LinearState {
  Lane x_re{};
  Lane x_im{};
  Lane y_re{};
  Lane y_im{};
};

/// Sets lane `lane` of `c` from regime sign s, coupling, rates and drive.
void set_lane(LinearCoeffs& c, std::size_t lane, double s, double kappa, double delta,
              double gamma_m, double omega_x, double g_re, double g_im, double eps);

/// `steps` RK4 steps of size h. With drive_on == false, G and eps are zero.
using AdvanceFn = void (*)(const LinearCoeffs&, bool drive_on, double h, std::size_t steps,
                           LinearState&);

void advance_linear_scalar(const LinearCoeffs&, bool drive_on, double h, std::size_t steps,
                           LinearState&);
#if defined(SBSRAMSEY_HAVE_AVX2)
void advance_linear_avx2(const LinearCoeffs&, bool drive_on, double h, std::size_t steps,
                         LinearState&);
#endif

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

/// Compiled in and supported by the running CPU.
bool isa_available(Isa isa);

/// Best available variant, unless overridden by set_isa_override() or the
/// SBSRAMSEY_ISA environment variable (scalar|avx2).
Isa active_isa();

/// Forces a variant for the whole process; nullopt restores auto-selection.
/// Throws InvalidParameter if the variant is unavailable.
void set_isa_override(std::optional<Isa> isa);

AdvanceFn kernel_for(Isa isa);

}  // namespace sbsramsey::simd
