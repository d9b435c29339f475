#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference variant and,
// where the target supports it, a SIMD variant selected at runtime. The two are
// equivalence-tested in tests/test_kernels.cpp.

#include <cstdint>
#include <span>
#include <string_view>

namespace apnforge::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);

/// Best ISA supported by both the build and the running CPU.
Isa detected_isa();

/// ISA used by the dispatching entry points below. Defaults to detected_isa();
/// tests force Scalar to compare variants.
Isa active_isa();
void force_isa(Isa isa);
bool isa_available(Isa isa);

// The 64-bit variants compute modulo 2^64 (two's-complement wrap).
struct KernelTable {
  // (lo[j], hi[j]) <- (lo[j] + hi[j], lo[j] - hi[j]) for j < count.
  void (*butterfly_i32)(std::int32_t* lo, std::int32_t* hi, std::size_t count);
  void (*butterfly_i64)(std::int64_t* lo, std::int64_t* hi, std::size_t count);
  // Full in-cache transform of one small block (all stages with half < size).
  void (*local_i32)(std::int32_t* block, std::size_t size);
  void (*local_i64)(std::int64_t* block, std::size_t size);
  // out[i] = in[i]^3 computed in 64 bits; requires |in[i]| <= 2^15.
  void (*cube_widen)(const std::int32_t* in, std::int64_t* out, std::size_t count);
  // data[i] = data[i]^3 modulo 2^64.
  void (*cube_i64)(std::int64_t* data, std::size_t count);
  // out[i] = (-1)^(bits[i] & 1).
  void (*signs_from_bits)(const std::uint8_t* bits, std::int32_t* out, std::size_t count);
};

const KernelTable& table_for(Isa isa);

// Dispatching entry points (use active_isa()).

/// In-place unnormalized Walsh-Hadamard transform; data.size() must be a
/// power of two. `workers` > 1 partitions independent blocks across threads.
void fwht(std::span<std::int32_t> data, unsigned workers = 1);
void fwht(std::span<std::int64_t> data, unsigned workers = 1);

void cube_widen(std::span<const std::int32_t> in, std::span<std::int64_t> out);
void cube_in_place(std::span<std::int64_t> data, unsigned workers = 1);
void signs_from_bits(std::span<const std::uint8_t> bits, std::span<std::int32_t> out);

}  // namespace apnforge::kernels
