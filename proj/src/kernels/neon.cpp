#include "ua/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

namespace ua::kernels {

namespace {

void axpy_neon(const gf::Field& f, std::uint8_t* dst, const std::uint8_t* src, std::uint8_t c, std::size_t len) {
  if (c == 0) return;
  const uint8x16_t tbl = vld1q_u8(f.mul16[c]);
  const uint8x16_t qv = vdupq_n_u8(static_cast<std::uint8_t>(f.q));
  for (std::size_t i = 0; i < len; i += 16) {
    const uint8x16_t p = vqtbl1q_u8(tbl, vld1q_u8(src + i));
    const uint8x16_t d = vld1q_u8(dst + i);
    uint8x16_t r;
    if (f.xor_add) {
      r = veorq_u8(d, p);
    } else {
      r = vaddq_u8(d, p);
      r = vminq_u8(r, vsubq_u8(r, qv));
    }
    vst1q_u8(dst + i, r);
  }
}

void scale_neon(const gf::Field& f, std::uint8_t* dst, std::uint8_t c, std::size_t len) {
  const uint8x16_t tbl = vld1q_u8(f.mul16[c]);
  for (std::size_t i = 0; i < len; i += 16) vst1q_u8(dst + i, vqtbl1q_u8(tbl, vld1q_u8(dst + i)));
}

}  // namespace

const RowOps* neon_ops() {
  static const RowOps ops{Isa::Neon, axpy_neon, scale_neon};
  return &ops;
}

}  // namespace ua::kernels

#else

namespace ua::kernels {
const RowOps* neon_ops() { return nullptr; }
}  // namespace ua::kernels

#endif
