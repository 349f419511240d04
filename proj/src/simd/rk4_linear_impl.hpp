#pragma once

// Shared RK4 body for the scalar and vector kernels. Included by exactly one
// translation unit per instruction set; the anonymous namespace keeps each
// instantiation local to its TU so differently-compiled copies never merge.

#include <cstddef>

namespace sbsramsey::simd {
namespace {

template <class V>
struct Coeffs {
  V kappa, delta, gamma_half, s_omega, g_re, g_im, s_g_re, s_g_im, eps;
};

template <class V>
struct State {
  V xr, xi, yr, yi;
};

template <class V>
inline State<V> rhs(const Coeffs<V>& c, const State<V>& s) {
  State<V> d;
  d.xr = (((c.eps - c.kappa * s.xr) + c.delta * s.xi) + c.g_re * s.yi) + c.g_im * s.yr;
  d.xi = ((c.g_im * s.yi - c.kappa * s.xi) - c.delta * s.xr) - c.g_re * s.yr;
  d.yr = ((c.s_omega * s.yi - c.gamma_half * s.yr) + c.s_g_re * s.xi) - c.s_g_im * s.xr;
  d.yi = ((V(0.0) - c.gamma_half * s.yi) - c.s_omega * s.yr - c.s_g_re * s.xr) - c.s_g_im * s.xi;
  return d;
}

template <class V>
inline State<V> axpy(const State<V>& x, V a, const State<V>& k) {
  return {x.xr + a * k.xr, x.xi + a * k.xi, x.yr + a * k.yr, x.yi + a * k.yi};
}

template <class V>
inline void rk4_steps(const Coeffs<V>& c, V h, std::size_t steps, State<V>& x) {
  const V half = h * V(0.5);
  const V sixth = h / V(6.0);
  const V two(2.0);
  for (std::size_t n = 0; n < steps; ++n) {
    const State<V> k1 = rhs(c, x);
    const State<V> k2 = rhs(c, axpy(x, half, k1));
    const State<V> k3 = rhs(c, axpy(x, half, k2));
    const State<V> k4 = rhs(c, axpy(x, h, k3));
    x.xr = x.xr + sixth * (((k1.xr + two * k2.xr) + two * k3.xr) + k4.xr);
    x.xi = x.xi + sixth * (((k1.xi + two * k2.xi) + two * k3.xi) + k4.xi);
    x.yr = x.yr + sixth * (((k1.yr + two * k2.yr) + two * k3.yr) + k4.yr);
    x.yi = x.yi + sixth * (((k1.yi + two * k2.yi) + two * k3.yi) + k4.yi);
  }
}

}  // namespace
}  // namespace sbsramsey::simd
