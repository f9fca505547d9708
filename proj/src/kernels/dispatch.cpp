#include <atomic>

#include "semiholes/errors.hpp"
#include "semiholes/kernels.hpp"

namespace semiholes::kernels {

namespace {

struct Table {
  FindDominatingFn find;
  AddCheckedFn add;
};

Table table_for(Backend b) {
  switch (b) {
    case Backend::Avx2:
      return {avx2::find_dominating_row, avx2::add_checked};
    case Backend::Neon:
      return {neon::find_dominating_row, neon::add_checked};
    case Backend::Scalar:
      break;
  }
  return {scalar::find_dominating_row, scalar::add_checked};
}

bool supported(Backend b) {
  switch (b) {
    case Backend::Avx2:
      return avx2::available();
    case Backend::Neon:
      return neon::available();
    case Backend::Scalar:
      return true;
  }
  return false;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{detected_backend()};
  return backend;
}

}  // namespace

Backend detected_backend() {
  static const Backend b = avx2::available() ? Backend::Avx2 : neon::available() ? Backend::Neon : Backend::Scalar;
  return b;
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void force_backend(Backend b) {
  if (!supported(b)) throw InvalidArgument("kernel backend " + std::string(backend_name(b)) + " not supported here");
  current().store(b, std::memory_order_relaxed);
}

void reset_backend() { current().store(detected_backend(), std::memory_order_relaxed); }

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Avx2:
      return "avx2";
    case Backend::Neon:
      return "neon";
    case Backend::Scalar:
      break;
  }
  return "scalar";
}

std::size_t find_dominating_row(std::span<const std::int32_t> rows, std::size_t stride,
                                std::span<const std::int32_t> v) {
  return table_for(active_backend()).find(rows, stride, v);
}

bool add_checked(std::span<const std::int32_t> a, std::span<const std::int32_t> b, std::span<std::int32_t> out) {
  return table_for(active_backend()).add(a, b, out);
}

}  // namespace semiholes::kernels
