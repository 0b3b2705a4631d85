#include "ua/kernels.hpp"

namespace ua::kernels {

namespace {

void axpy_scalar(const gf::Field& f, std::uint8_t* dst, const std::uint8_t* src, std::uint8_t c, std::size_t len) {
  if (c == 0) return;
  const std::uint8_t* mc = f.mul[c];
  for (std::size_t i = 0; i < len; ++i) dst[i] = f.add[dst[i]][mc[src[i]]];
}

void scale_scalar(const gf::Field& f, std::uint8_t* dst, std::uint8_t c, std::size_t len) {
  const std::uint8_t* mc = f.mul[c];
  for (std::size_t i = 0; i < len; ++i) dst[i] = mc[dst[i]];
}

}  // namespace

const RowOps& scalar_ops() {
  static const RowOps ops{Isa::Scalar, axpy_scalar, scale_scalar};
  return ops;
}

}  // namespace ua::kernels
