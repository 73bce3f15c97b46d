#include <atomic>

#include "dglevel/kernels.hpp"

namespace dgl::kernels {

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "scalar";
}

Isa detect_isa() {
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2")) return Isa::Avx2;
#elif defined(__aarch64__)
  return Isa::Neon;
#endif
  return Isa::Scalar;
}

namespace {

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect_isa()};
  return isa;
}

bool supported(Isa isa) {
  if (isa == Isa::Scalar) return true;
  return isa == detect_isa();
}

}  // namespace

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) { current().store(supported(isa) ? isa : Isa::Scalar, std::memory_order_relaxed); }

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n, std::uint32_t p) {
  if (p < kSimdPrimeLimit) {
    switch (active_isa()) {
#if defined(__x86_64__) || defined(_M_X64)
      case Isa::Avx2: return axpy_mod_avx2(dst, src, c, n, p);
#endif
#if defined(__aarch64__)
      case Isa::Neon: return axpy_mod_neon(dst, src, c, n, p);
#endif
      default: break;
    }
  }
  axpy_mod_scalar(dst, src, c, n, p);
}

void scale_mod(std::uint32_t* row, std::uint32_t c, std::size_t n, std::uint32_t p) {
  if (p < kSimdPrimeLimit) {
    switch (active_isa()) {
#if defined(__x86_64__) || defined(_M_X64)
      case Isa::Avx2: return scale_mod_avx2(row, c, n, p);
#endif
#if defined(__aarch64__)
      case Isa::Neon: return scale_mod_neon(row, c, n, p);
#endif
      default: break;
    }
  }
  scale_mod_scalar(row, c, n, p);
}

}  // namespace dgl::kernels
