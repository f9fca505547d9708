// Compiled with -mavx2; only called after the runtime probe succeeded.
#include "semiholes/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace semiholes::kernels::avx2 {

bool available() {
#if defined(__GNUC__) || defined(__clang__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::size_t find_dominating_row(std::span<const std::int32_t> rows, std::size_t stride,
                                std::span<const std::int32_t> v) {
  const std::size_t count = rows.size() / stride;
  for (std::size_t r = 0; r < count; ++r) {
    const std::int32_t* row = rows.data() + r * stride;
    bool dominated = true;
    for (std::size_t k = 0; k < stride; k += kLaneBlock) {
      const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + k));
      const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v.data() + k));
      const __m256i gt = _mm256_cmpgt_epi32(a, b);
      if (!_mm256_testz_si256(gt, gt)) {
        dominated = false;
        break;
      }
    }
    if (dominated) return r;
  }
  return count;
}

bool add_checked(std::span<const std::int32_t> a, std::span<const std::int32_t> b, std::span<std::int32_t> out) {
  const __m256i hi = _mm256_set1_epi32(kLaneLimit);
  const __m256i lo = _mm256_set1_epi32(-kLaneLimit);
  __m256i bad = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + kLaneBlock <= out.size(); k += kLaneBlock) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + k));
    const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + k));
    const __m256i s = _mm256_add_epi32(x, y);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + k), s);
    bad = _mm256_or_si256(bad, _mm256_or_si256(_mm256_cmpgt_epi32(s, hi), _mm256_cmpgt_epi32(lo, s)));
  }
  bool ok = _mm256_testz_si256(bad, bad);
  for (; k < out.size(); ++k) {
    const std::int32_t s = a[k] + b[k];
    out[k] = s;
    ok = ok && s <= kLaneLimit && s >= -kLaneLimit;
  }
  return ok;
}

}  // namespace semiholes::kernels::avx2

#else

namespace semiholes::kernels::avx2 {

bool available() { return false; }

std::size_t find_dominating_row(std::span<const std::int32_t> rows, std::size_t stride,
                                std::span<const std::int32_t> v) {
  return scalar::find_dominating_row(rows, stride, v);
}

bool add_checked(std::span<const std::int32_t> a, std::span<const std::int32_t> b, std::span<std::int32_t> out) {
  return scalar::add_checked(a, b, out);
}

}  // namespace semiholes::kernels::avx2

#endif
