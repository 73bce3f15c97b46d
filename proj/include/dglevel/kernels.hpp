// Prime-field row kernels used by elimination over F_p.
//
// Every kernel has a scalar reference version; vectorized variants are
// selected at runtime and must agree bit-for-bit with the reference.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace dgl::kernels {

/// Largest modulus the vectorized paths accept. Above it the dispatcher
/// always runs the scalar reference.
inline constexpr std::uint32_t kSimdPrimeLimit = 1u << 15;

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa);

// dst[i] = (dst[i] + c * src[i]) mod p, all entries in [0, p).
void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n, std::uint32_t p);
// row[i] = (c * row[i]) mod p
void scale_mod_scalar(std::uint32_t* row, std::uint32_t c, std::size_t n, std::uint32_t p);

#if defined(__x86_64__) || defined(_M_X64)
void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n, std::uint32_t p);
void scale_mod_avx2(std::uint32_t* row, std::uint32_t c, std::size_t n, std::uint32_t p);
#endif

#if defined(__aarch64__)
void axpy_mod_neon(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n, std::uint32_t p);
void scale_mod_neon(std::uint32_t* row, std::uint32_t c, std::size_t n, std::uint32_t p);
#endif

/// Best ISA supported by the running CPU.
Isa detect_isa();
/// ISA the dispatchers currently use (detect_isa() unless overridden).
Isa active_isa();
/// Override for tests and benchmarks; requests for an unsupported ISA fall back to Scalar.
void force_isa(Isa isa);

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n, std::uint32_t p);
void scale_mod(std::uint32_t* row, std::uint32_t c, std::size_t n, std::uint32_t p);

}  // namespace dgl::kernels
