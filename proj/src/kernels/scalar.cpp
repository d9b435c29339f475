#include "kernels_impl.hpp"

#include <cstdio>
#include <cstdlib>

namespace apnforge::kernels::detail {
namespace {

#if defined(APNFORGE_CHECKED_ARITH)
[[noreturn]] void overflow_abort() {
  std::fprintf(stderr, "apnforge: 32-bit butterfly overflow in fwht\n");
  std::abort();
}

inline void butterfly(std::int32_t& x, std::int32_t& y) {
  std::int32_t s, d;
  if (__builtin_add_overflow(x, y, &s) || __builtin_sub_overflow(x, y, &d)) overflow_abort();
  x = s;
  y = d;
}
#else
inline void butterfly(std::int32_t& x, std::int32_t& y) {
  const std::int32_t s = x + y;
  const std::int32_t d = x - y;
  x = s;
  y = d;
}
#endif

// Wrapping 64-bit butterfly: unsigned arithmetic is exact modulo 2^64.
inline void butterfly(std::int64_t& x, std::int64_t& y) {
  const auto ux = static_cast<std::uint64_t>(x);
  const auto uy = static_cast<std::uint64_t>(y);
  x = static_cast<std::int64_t>(ux + uy);
  y = static_cast<std::int64_t>(ux - uy);
}

template <class T>
void rows(T* lo, T* hi, std::size_t count) {
  for (std::size_t j = 0; j < count; ++j) butterfly(lo[j], hi[j]);
}

template <class T>
void local(T* block, std::size_t size) {
  for (std::size_t half = 1; half < size; half <<= 1)
    for (std::size_t base = 0; base < size; base += 2 * half) rows(block + base, block + base + half, half);
}

void butterfly_i32(std::int32_t* lo, std::int32_t* hi, std::size_t n) { rows(lo, hi, n); }
void butterfly_i64(std::int64_t* lo, std::int64_t* hi, std::size_t n) { rows(lo, hi, n); }
void local_i32(std::int32_t* d, std::size_t s) { local(d, s); }
void local_i64(std::int64_t* d, std::size_t s) { local(d, s); }

void cube_widen(const std::int32_t* in, std::int64_t* out, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    const std::int64_t w = in[i];
    out[i] = w * w * w;
  }
}

void cube_i64(std::int64_t* data, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    const auto w = static_cast<std::uint64_t>(data[i]);
    data[i] = static_cast<std::int64_t>(w * w * w);
  }
}

void signs_from_bits(const std::uint8_t* bits, std::int32_t* out, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) out[i] = (bits[i] & 1) ? -1 : 1;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{butterfly_i32, butterfly_i64, local_i32, local_i64,
                                 cube_widen, cube_i64, signs_from_bits};
  return table;
}

}  // namespace apnforge::kernels::detail
