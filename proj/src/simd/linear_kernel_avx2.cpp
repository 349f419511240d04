#include <immintrin.h>

#include "sbsramsey/simd/linear_kernel.hpp"

namespace sbsramsey::simd {
namespace {

// Four double lanes with the arithmetic operators the RK4 body needs.
struct Vec4 {
  __m256d v;
  Vec4() = default;
  explicit Vec4(double s) : v(_mm256_set1_pd(s)) {}
  explicit Vec4(__m256d x) : v(x) {}
  static Vec4 load(const Lane& a) { return Vec4(_mm256_loadu_pd(a.data())); }
  void store(Lane& a) const { _mm256_storeu_pd(a.data(), v); }
};

inline Vec4 operator+(Vec4 a, Vec4 b) { return Vec4(_mm256_add_pd(a.v, b.v)); }
inline Vec4 operator-(Vec4 a, Vec4 b) { return Vec4(_mm256_sub_pd(a.v, b.v)); }
inline Vec4 operator*(Vec4 a, Vec4 b) { return Vec4(_mm256_mul_pd(a.v, b.v)); }
inline Vec4 operator/(Vec4 a, Vec4 b) { return Vec4(_mm256_div_pd(a.v, b.v)); }

}  // namespace
}  // namespace sbsramsey::simd

#include "rk4_linear_impl.hpp"

namespace sbsramsey::simd {

void advance_linear_avx2(const LinearCoeffs& c, bool drive_on, double h, std::size_t steps,
                         LinearState& st) {
  const Vec4 on(drive_on ? 1.0 : 0.0);
  const Coeffs<Vec4> vc{Vec4::load(c.kappa),
                        Vec4::load(c.delta),
                        Vec4::load(c.gamma_half),
                        Vec4::load(c.s_omega),
                        on * Vec4::load(c.g_re),
                        on * Vec4::load(c.g_im),
                        on * Vec4::load(c.s_g_re),
                        on * Vec4::load(c.s_g_im),
                        on * Vec4::load(c.eps)};
  State<Vec4> x{Vec4::load(st.x_re), Vec4::load(st.x_im), Vec4::load(st.y_re),
                Vec4::load(st.y_im)};
  rk4_steps(vc, Vec4(h), steps, x);
  x.xr.store(st.x_re);
  x.xi.store(st.x_im);
  x.yr.store(st.y_re);
  x.yi.store(st.y_im);
}

}  // namespace sbsramsey::simd
