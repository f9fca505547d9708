#include "semiholes/kernels.hpp"

namespace semiholes::kernels::scalar {

std::size_t find_dominating_row(std::span<const std::int32_t> rows, std::size_t stride,
                                std::span<const std::int32_t> v) {
  const std::size_t count = rows.size() / stride;
  for (std::size_t r = 0; r < count; ++r) {
    const std::int32_t* row = rows.data() + r * stride;
    std::size_t k = 0;
    while (k < stride && row[k] <= v[k]) ++k;
    if (k == stride) return r;
  }
  return count;
}

bool add_checked(std::span<const std::int32_t> a, std::span<const std::int32_t> b, std::span<std::int32_t> out) {
  bool ok = true;
  for (std::size_t k = 0; k < out.size(); ++k) {
    const std::int32_t s = a[k] + b[k];
    out[k] = s;
    ok = ok && s <= kLaneLimit && s >= -kLaneLimit;
  }
  return ok;
}

}  // namespace semiholes::kernels::scalar
