#pragma once

// Data-parallel inner loops of the completion procedure.
//
// Vectors are int32 lanes packed row-major with a stride that is a multiple
// of kLaneBlock; padding lanes must be zero. Every backend must agree with
// the scalar reference bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace semiholes::kernels {

inline constexpr std::size_t kLaneBlock = 8;

/// Largest magnitude a lane may hold; sums of two such values stay in int32.
inline constexpr std::int32_t kLaneLimit = (1 << 30) - 1;

constexpr std::size_t padded_stride(std::size_t lanes) {
  return (lanes + kLaneBlock - 1) / kLaneBlock * kLaneBlock;
}

enum class Backend { Scalar, Avx2, Neon };

/// First row r with rows[r][k] <= v[k] for every lane k, or rows.size() / stride.
using FindDominatingFn = std::size_t (*)(std::span<const std::int32_t> rows, std::size_t stride,
                                         std::span<const std::int32_t> v);

/// out = a + b lanewise; false when some lane leaves [-kLaneLimit, kLaneLimit].
using AddCheckedFn = bool (*)(std::span<const std::int32_t> a, std::span<const std::int32_t> b,
                              std::span<std::int32_t> out);

namespace scalar {
std::size_t find_dominating_row(std::span<const std::int32_t> rows, std::size_t stride,
                                std::span<const std::int32_t> v);
bool add_checked(std::span<const std::int32_t> a, std::span<const std::int32_t> b, std::span<std::int32_t> out);
}  // namespace scalar

namespace avx2 {
bool available();
std::size_t find_dominating_row(std::span<const std::int32_t> rows, std::size_t stride,
                                std::span<const std::int32_t> v);
bool add_checked(std::span<const std::int32_t> a, std::span<const std::int32_t> b, std::span<std::int32_t> out);
}  // namespace avx2

namespace neon {
bool available();
std::size_t find_dominating_row(std::span<const std::int32_t> rows, std::size_t stride,
                                std::span<const std::int32_t> v);
bool add_checked(std::span<const std::int32_t> a, std::span<const std::int32_t> b, std::span<std::int32_t> out);
}  // namespace neon

/// Best backend supported by this CPU (probed once).
Backend detected_backend();
Backend active_backend();
/// Overrides the dispatch; throws InvalidArgument when the CPU lacks the backend.
void force_backend(Backend b);
void reset_backend();
std::string_view backend_name(Backend b);

std::size_t find_dominating_row(std::span<const std::int32_t> rows, std::size_t stride,
                                std::span<const std::int32_t> v);
bool add_checked(std::span<const std::int32_t> a, std::span<const std::int32_t> b, std::span<std::int32_t> out);

}  // namespace semiholes::kernels
