#include "semiholes/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

namespace semiholes::kernels::neon {

bool available() { return true; }

std::size_t find_dominating_row(std::span<const std::int32_t> rows, std::size_t stride,
                                std::span<const std::int32_t> v) {
  const std::size_t count = rows.size() / stride;
  for (std::size_t r = 0; r < count; ++r) {
    const std::int32_t* row = rows.data() + r * stride;
    bool dominated = true;
    for (std::size_t k = 0; k < stride; k += 4) {
      const uint32x4_t gt = vcgtq_s32(vld1q_s32(row + k), vld1q_s32(v.data() + k));
      if (vmaxvq_u32(gt) != 0) {
        dominated = false;
        break;
      }
    }
    if (dominated) return r;
  }
  return count;
}

bool add_checked(std::span<const std::int32_t> a, std::span<const std::int32_t> b, std::span<std::int32_t> out) {
  const int32x4_t hi = vdupq_n_s32(kLaneLimit);
  const int32x4_t lo = vdupq_n_s32(-kLaneLimit);
  uint32x4_t bad = vdupq_n_u32(0);
  std::size_t k = 0;
  for (; k + 4 <= out.size(); k += 4) {
    const int32x4_t s = vaddq_s32(vld1q_s32(a.data() + k), vld1q_s32(b.data() + k));
    vst1q_s32(out.data() + k, s);
    bad = vorrq_u32(bad, vorrq_u32(vcgtq_s32(s, hi), vcltq_s32(s, lo)));
  }
  bool ok = vmaxvq_u32(bad) == 0;
  for (; k < out.size(); ++k) {
    const std::int32_t s = a[k] + b[k];
    out[k] = s;
    ok = ok && s <= kLaneLimit && s >= -kLaneLimit;
  }
  return ok;
}

}  // namespace semiholes::kernels::neon

#else

namespace semiholes::kernels::neon {

bool available() { return false; }

std::size_t find_dominating_row(std::span<const std::int32_t> rows, std::size_t stride,
                                std::span<const std::int32_t> v) {
  return scalar::find_dominating_row(rows, stride, v);
}

bool add_checked(std::span<const std::int32_t> a, std::span<const std::int32_t> b, std::span<std::int32_t> out) {
  return scalar::add_checked(a, b, out);
}

}  // namespace semiholes::kernels::neon

#endif
