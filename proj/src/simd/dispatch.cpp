#include <atomic>
#include <cstdlib>
#include <string>

#include "sbsramsey/error.hpp"
#include "sbsramsey/simd/linear_kernel.hpp"

namespace sbsramsey::simd {

namespace {

// -1: automatic, otherwise the forced Isa value.
std::atomic<int> g_override{-1};

bool cpu_has_avx2() {
#if defined(SBSRAMSEY_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

}  // namespace

std::string_view to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
      return cpu_has_avx2();
  }
  return false;
}

Isa active_isa() {
  if (const int forced = g_override.load(std::memory_order_relaxed); forced >= 0)
    return static_cast<Isa>(forced);
  if (const char* env = std::getenv("SBSRAMSEY_ISA")) {
    const std::string want(env);
    if (want == "scalar") return Isa::Scalar;
    if (want == "avx2" && isa_available(Isa::Avx2)) return Isa::Avx2;
  }
  return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

void set_isa_override(std::optional<Isa> isa) {
  if (isa && !isa_available(*isa))
    throw InvalidParameter("instruction set '" + std::string(to_string(*isa)) +
                           "' is not available on this machine");
  g_override.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

AdvanceFn kernel_for(Isa isa) {
#if defined(SBSRAMSEY_HAVE_AVX2)
  if (isa == Isa::Avx2) return &advance_linear_avx2;
#endif
  (void)isa;
  return &advance_linear_scalar;
}

}  // namespace sbsramsey::simd
