#include "dglevel/kernels.hpp"

namespace dgl::kernels {

void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n, std::uint32_t p) {
  const std::uint64_t cc = c;
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>((dst[i] + cc * src[i]) % p);
}

void scale_mod_scalar(std::uint32_t* row, std::uint32_t c, std::size_t n, std::uint32_t p) {
  const std::uint64_t cc = c;
  for (std::size_t i = 0; i < n; ++i)
    row[i] = static_cast<std::uint32_t>((cc * row[i]) % p);
}

}  // namespace dgl::kernels
