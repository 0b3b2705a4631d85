#include "ua/kernels.hpp"

#if defined(UA_HAVE_AVX2)
#include <immintrin.h>

namespace ua::kernels {

namespace {

// pshufb does the multiply: entries are < 16, so each byte indexes mul16[c].
void axpy_avx2(const gf::Field& f, std::uint8_t* dst, const std::uint8_t* src, std::uint8_t c, std::size_t len) {
  if (c == 0) return;
  const __m256i tbl = _mm256_broadcastsi128_si256(_mm_load_si128(reinterpret_cast<const __m128i*>(f.mul16[c])));
  const __m256i qv = _mm256_set1_epi8(static_cast<char>(f.q));
  for (std::size_t i = 0; i < len; i += 32) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i p = _mm256_shuffle_epi8(tbl, s);
    __m256i r;
    if (f.xor_add) {
      r = _mm256_xor_si256(d, p);
    } else {
      r = _mm256_add_epi8(d, p);
      r = _mm256_min_epu8(r, _mm256_sub_epi8(r, qv));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), r);
  }
}

void scale_avx2(const gf::Field& f, std::uint8_t* dst, std::uint8_t c, std::size_t len) {
  const __m256i tbl = _mm256_broadcastsi128_si256(_mm_load_si128(reinterpret_cast<const __m128i*>(f.mul16[c])));
  for (std::size_t i = 0; i < len; i += 32) {
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_shuffle_epi8(tbl, d));
  }
}

}  // namespace

const RowOps* avx2_ops() {
  static const RowOps ops{Isa::Avx2, axpy_avx2, scale_avx2};
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok ? &ops : nullptr;
}

}  // namespace ua::kernels

#else

namespace ua::kernels {
const RowOps* avx2_ops() { return nullptr; }
}  // namespace ua::kernels

#endif
