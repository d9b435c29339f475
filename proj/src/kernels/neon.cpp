// AArch64 Advanced SIMD variants. NEON is architecturally mandatory on AArch64,
// so dispatch.cpp selects this table without a runtime probe.

#include "kernels_impl.hpp"

#include <arm_neon.h>

namespace apnforge::kernels::detail {
namespace {

void butterfly_i32(std::int32_t* lo, std::int32_t* hi, std::size_t count) {
  std::size_t j = 0;
  for (; j + 4 <= count; j += 4) {
    const int32x4_t a = vld1q_s32(lo + j);
    const int32x4_t b = vld1q_s32(hi + j);
    vst1q_s32(lo + j, vaddq_s32(a, b));
    vst1q_s32(hi + j, vsubq_s32(a, b));
  }
  if (j < count) scalar_table().butterfly_i32(lo + j, hi + j, count - j);
}

void local_i32(std::int32_t* block, std::size_t size) {
  const std::size_t head = size < 4 ? size : 4;
  for (std::size_t i = 0; i < size; i += head) scalar_table().local_i32(block + i, head);
  for (std::size_t half = 4; half < size; half <<= 1)
    for (std::size_t base = 0; base < size; base += 2 * half) butterfly_i32(block + base, block + base + half, half);
}

void butterfly_i64(std::int64_t* lo, std::int64_t* hi, std::size_t count) {
  std::size_t j = 0;
  for (; j + 2 <= count; j += 2) {
    const int64x2_t a = vld1q_s64(lo + j);
    const int64x2_t b = vld1q_s64(hi + j);
    vst1q_s64(lo + j, vaddq_s64(a, b));
    vst1q_s64(hi + j, vsubq_s64(a, b));
  }
  if (j < count) scalar_table().butterfly_i64(lo + j, hi + j, count - j);
}

void local_i64(std::int64_t* block, std::size_t size) {
  const std::size_t head = size < 2 ? size : 2;
  for (std::size_t i = 0; i < size; i += head) scalar_table().local_i64(block + i, head);
  for (std::size_t half = 2; half < size; half <<= 1)
    for (std::size_t base = 0; base < size; base += 2 * half) butterfly_i64(block + base, block + base + half, half);
}

void cube_widen(const std::int32_t* in, std::int64_t* out, std::size_t count) {
  std::size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    const int32x2_t w = vld1_s32(in + i);
    const int64x2_t sq = vmull_s32(w, w);
    // |w| <= 2^15, so the square narrows back to 32 bits without loss.
    vst1q_s64(out + i, vmull_s32(vmovn_s64(sq), w));
  }
  if (i < count) scalar_table().cube_widen(in + i, out + i, count - i);
}

void signs_from_bits(const std::uint8_t* bits, std::int32_t* out, std::size_t count) {
  const int32x4_t one = vdupq_n_s32(1);
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const int32x4_t b = {bits[i] & 1, bits[i + 1] & 1, bits[i + 2] & 1, bits[i + 3] & 1};
    vst1q_s32(out + i, vsubq_s32(one, vshlq_n_s32(b, 1)));
  }
  if (i < count) scalar_table().signs_from_bits(bits + i, out + i, count - i);
}

}  // namespace

const KernelTable& neon_table() {
  static const KernelTable table{butterfly_i32, butterfly_i64, local_i32, local_i64,
                                 cube_widen, scalar_table().cube_i64, signs_from_bits};
  return table;
}

}  // namespace apnforge::kernels::detail
