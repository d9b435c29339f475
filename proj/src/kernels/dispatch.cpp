#include "apnforge/kernels.hpp"

#include <atomic>
#include <bit>
#include <stdexcept>

#include "apnforge/parallel.hpp"
#include "kernels_impl.hpp"

namespace apnforge::kernels {
namespace {

std::atomic<int> g_forced{-1};

template <class T>
void fwht_impl(std::span<T> data, unsigned workers,
               void (*local)(T*, std::size_t),
               void (*butterfly)(T*, T*, std::size_t)) {
  const std::size_t size = data.size();
  if (size == 0) return;
  if (!std::has_single_bit(size)) throw std::invalid_argument("fwht: length must be a power of two");
  T* ptr = data.data();
  const std::size_t block = size < detail::kLocalBlock ? size : detail::kLocalBlock;
  parallel_for(0, size / block, workers, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t b = lo; b < hi; ++b) local(ptr + b * block, block);
  });
  // Remaining stages: every (pair, chunk) unit is independent.
  for (std::size_t half = block; half < size; half <<= 1) {
    const std::size_t chunks_per_pair = half / block;
    const std::size_t units = (size / (2 * half)) * chunks_per_pair;
    parallel_for(0, units, workers, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t u = lo; u < hi; ++u) {
        const std::size_t pair = u / chunks_per_pair;
        const std::size_t offset = pair * 2 * half + (u % chunks_per_pair) * block;
        butterfly(ptr + offset, ptr + offset + half, block);
      }
    });
  }
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(APNFORGE_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(APNFORGE_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detected_isa() {
  if (isa_available(Isa::Avx2)) return Isa::Avx2;
  if (isa_available(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

Isa active_isa() {
  const int forced = g_forced.load(std::memory_order_relaxed);
  return forced < 0 ? detected_isa() : static_cast<Isa>(forced);
}

void force_isa(Isa isa) {
  if (!isa_available(isa)) throw std::invalid_argument("requested ISA is not available on this CPU/build");
  g_forced.store(static_cast<int>(isa), std::memory_order_relaxed);
}

const KernelTable& table_for(Isa isa) {
  switch (isa) {
#if defined(APNFORGE_HAVE_AVX2)
    case Isa::Avx2: return detail::avx2_table();
#endif
#if defined(APNFORGE_HAVE_NEON)
    case Isa::Neon: return detail::neon_table();
#endif
    default: return detail::scalar_table();
  }
}

void fwht(std::span<std::int32_t> data, unsigned workers) {
  const auto& t = table_for(active_isa());
  fwht_impl<std::int32_t>(data, workers, t.local_i32, t.butterfly_i32);
}

void fwht(std::span<std::int64_t> data, unsigned workers) {
  const auto& t = table_for(active_isa());
  fwht_impl<std::int64_t>(data, workers, t.local_i64, t.butterfly_i64);
}

void cube_widen(std::span<const std::int32_t> in, std::span<std::int64_t> out) {
  if (in.size() != out.size()) throw std::invalid_argument("cube_widen: size mismatch");
  table_for(active_isa()).cube_widen(in.data(), out.data(), in.size());
}

void cube_in_place(std::span<std::int64_t> data, unsigned workers) {
  const auto& t = table_for(active_isa());
  parallel_for(0, data.size(), workers, [&](std::size_t lo, std::size_t hi) {
    t.cube_i64(data.data() + lo, hi - lo);
  });
}

void signs_from_bits(std::span<const std::uint8_t> bits, std::span<std::int32_t> out) {
  if (bits.size() != out.size()) throw std::invalid_argument("signs_from_bits: size mismatch");
  table_for(active_isa()).signs_from_bits(bits.data(), out.data(), bits.size());
}

}  // namespace apnforge::kernels
