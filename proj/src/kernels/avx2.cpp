// Compiled with -mavx2; only reached after the runtime CPU check in dispatch.cpp.

#include "kernels_impl.hpp"

#include <immintrin.h>

namespace apnforge::kernels::detail {
namespace {

inline __m256i load(const void* p) { return _mm256_loadu_si256(static_cast<const __m256i*>(p)); }
inline void store(void* p, __m256i v) { _mm256_storeu_si256(static_cast<__m256i*>(p), v); }

// ---- 32-bit lanes (8 per vector) -------------------------------------------

// Stages half = 1, 2, 4 inside one vector.
inline __m256i in_register_i32(__m256i v) {
  __m256i s = _mm256_shuffle_epi32(v, 0xB1);
  v = _mm256_blend_epi32(_mm256_add_epi32(v, s), _mm256_sub_epi32(s, v), 0xAA);
  s = _mm256_shuffle_epi32(v, 0x4E);
  v = _mm256_blend_epi32(_mm256_add_epi32(v, s), _mm256_sub_epi32(s, v), 0xCC);
  s = _mm256_permute2x128_si256(v, v, 0x01);
  v = _mm256_blend_epi32(_mm256_add_epi32(v, s), _mm256_sub_epi32(s, v), 0xF0);
  return v;
}

void butterfly_i32(std::int32_t* lo, std::int32_t* hi, std::size_t count) {
  std::size_t j = 0;
  for (; j + 8 <= count; j += 8) {
    const __m256i a = load(lo + j);
    const __m256i b = load(hi + j);
    store(lo + j, _mm256_add_epi32(a, b));
    store(hi + j, _mm256_sub_epi32(a, b));
  }
  if (j < count) scalar_table().butterfly_i32(lo + j, hi + j, count - j);
}

void local_i32(std::int32_t* block, std::size_t size) {
  if (size < 8) {
    scalar_table().local_i32(block, size);
    return;
  }
  for (std::size_t i = 0; i < size; i += 8) store(block + i, in_register_i32(load(block + i)));
  for (std::size_t half = 8; half < size; half <<= 1)
    for (std::size_t base = 0; base < size; base += 2 * half) butterfly_i32(block + base, block + base + half, half);
}

// ---- 64-bit lanes (4 per vector), wrapping --------------------------------

inline __m256i in_register_i64(__m256i v) {
  __m256i s = _mm256_shuffle_epi32(v, 0x4E);
  v = _mm256_blend_epi32(_mm256_add_epi64(v, s), _mm256_sub_epi64(s, v), 0xCC);
  s = _mm256_permute2x128_si256(v, v, 0x01);
  v = _mm256_blend_epi32(_mm256_add_epi64(v, s), _mm256_sub_epi64(s, v), 0xF0);
  return v;
}

void butterfly_i64(std::int64_t* lo, std::int64_t* hi, std::size_t count) {
  std::size_t j = 0;
  for (; j + 4 <= count; j += 4) {
    const __m256i a = load(lo + j);
    const __m256i b = load(hi + j);
    store(lo + j, _mm256_add_epi64(a, b));
    store(hi + j, _mm256_sub_epi64(a, b));
  }
  if (j < count) scalar_table().butterfly_i64(lo + j, hi + j, count - j);
}

void local_i64(std::int64_t* block, std::size_t size) {
  if (size < 4) {
    scalar_table().local_i64(block, size);
    return;
  }
  for (std::size_t i = 0; i < size; i += 4) store(block + i, in_register_i64(load(block + i)));
  for (std::size_t half = 4; half < size; half <<= 1)
    for (std::size_t base = 0; base < size; base += 2 * half) butterfly_i64(block + base, block + base + half, half);
}

// Low 64 bits of a 64x64 product.
inline __m256i mullo_i64(__m256i a, __m256i b) {
  const __m256i a_hi = _mm256_srli_epi64(a, 32);
  const __m256i b_hi = _mm256_srli_epi64(b, 32);
  const __m256i lo = _mm256_mul_epu32(a, b);
  const __m256i cross = _mm256_add_epi64(_mm256_mul_epu32(a, b_hi), _mm256_mul_epu32(a_hi, b));
  return _mm256_add_epi64(lo, _mm256_slli_epi64(cross, 32));
}

void cube_i64(std::int64_t* data, std::size_t count) {
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256i w = load(data + i);
    store(data + i, mullo_i64(mullo_i64(w, w), w));
  }
  if (i < count) scalar_table().cube_i64(data + i, count - i);
}

void cube_widen(const std::int32_t* in, std::int64_t* out, std::size_t count) {
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256i w = _mm256_cvtepi32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(in + i)));
    const __m256i sq = _mm256_mul_epi32(w, w);  // |w| <= 2^15 so sq fits in 31 bits
    store(out + i, _mm256_mul_epi32(sq, w));
  }
  if (i < count) scalar_table().cube_widen(in + i, out + i, count - i);
}

void signs_from_bits(const std::uint8_t* bits, std::int32_t* out, std::size_t count) {
  const __m256i one = _mm256_set1_epi32(1);
  std::size_t i = 0;
  for (; i + 8 <= count; i += 8) {
    const __m256i b = _mm256_cvtepu8_epi32(_mm_loadl_epi64(reinterpret_cast<const __m128i*>(bits + i)));
    store(out + i, _mm256_sub_epi32(one, _mm256_slli_epi32(_mm256_and_si256(b, one), 1)));
  }
  if (i < count) scalar_table().signs_from_bits(bits + i, out + i, count - i);
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{butterfly_i32, butterfly_i64, local_i32, local_i64,
                                 cube_widen, cube_i64, signs_from_bits};
  return table;
}

}  // namespace apnforge::kernels::detail
