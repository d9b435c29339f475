#pragma once

#include "apnforge/kernels.hpp"

namespace apnforge::kernels::detail {

const KernelTable& scalar_table();
#if defined(APNFORGE_HAVE_AVX2)
const KernelTable& avx2_table();
#endif
#if defined(APNFORGE_HAVE_NEON)
const KernelTable& neon_table();
#endif

// Block size (elements) handled entirely in cache by the local_* kernels.
inline constexpr std::size_t kLocalBlock = 1u << 12;

}  // namespace apnforge::kernels::detail
