#include "sbsramsey/simd/linear_kernel.hpp"
#include "rk4_linear_impl.hpp"

namespace sbsramsey::simd {

void set_lane(LinearCoeffs& c, std::size_t lane, double s, double kappa, double delta,
              double gamma_m, double omega_x, double g_re, double g_im, double eps) {
  c.kappa[lane] = kappa;
  c.delta[lane] = delta;
  c.gamma_half[lane] = 0.5 * gamma_m;
  c.s_omega[lane] = s * omega_x;
  c.g_re[lane] = g_re;
  c.g_im[lane] = g_im;
  c.s_g_re[lane] = s * g_re;
  c.s_g_im[lane] = s * g_im;
  c.eps[lane] = eps;
}

void advance_linear_scalar(const LinearCoeffs& c, bool drive_on, double h, std::size_t steps,
                           LinearState& st) {
  for (std::size_t l = 0; l < kLanes; ++l) {
    const double on = drive_on ? 1.0 : 0.0;
    const Coeffs<double> lc{c.kappa[l],     c.delta[l],       c.gamma_half[l],
                            c.s_omega[l],   on * c.g_re[l],   on * c.g_im[l],
                            on * c.s_g_re[l], on * c.s_g_im[l], on * c.eps[l]};
    State<double> x{st.x_re[l], st.x_im[l], st.y_re[l], st.y_im[l]};
    rk4_steps(lc, h, steps, x);
    st.x_re[l] = x.xr;
    st.x_im[l] = x.xi;
    st.y_re[l] = x.yr;
    st.y_im[l] = x.yi;
  }
}

}  // namespace sbsramsey::simd
