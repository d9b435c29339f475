// Streamed histogram: G(a, b) = sum_v (-1)^{v.b} C_v(a), where C_v is the
// transform over u of W(., v)^3. Each pass recomputes every column C_v but keeps
// only a block of rows a, so memory is (rows per pass) * 2^n words.

#include <algorithm>
#include <bit>
#include <limits>
#include <mutex>
#include <string>

#include "apnforge/errors.hpp"
#include "apnforge/exclude.hpp"
#include "apnforge/kernels.hpp"
#include "apnforge/parallel.hpp"

namespace apnforge {

ExcludeSummary exclude_summary_streamed(const VectorialFunc& f, const StreamOptions& options) {
  if (!is_apn(f)) throw PreconditionError("exclude spectrum requires an APN function (its graph must be a Sidon set)");
  const int n = f.n();
  const std::size_t q = f.size();
  const std::size_t row_bytes = q * sizeof(std::int64_t);
  std::size_t rows = std::max<std::size_t>(1, options.memory_budget / row_bytes);
  rows = std::min(rows, q);
  rows = std::size_t{1} << (std::bit_width(rows) - 1);
  const std::size_t passes = q / rows;
  const unsigned workers = options.workers == 0 ? default_workers() : options.workers;

  std::vector<std::int64_t> block(rows * q);
  const std::int64_t q2 = std::int64_t{1} << (2 * n);
  const std::int64_t divisor = 6 * q2;
  const std::int64_t on_graph = (3 * std::int64_t(q) - 2) * q2;

  ExcludeSummary out;
  out.n = n;
  out.e_min = std::numeric_limits<std::int64_t>::max();

  for (std::size_t pass = 0; pass < passes; ++pass) {
    const std::size_t a0 = pass * rows;
    parallel_for(0, q, workers, [&](std::size_t lo, std::size_t hi) {
      std::vector<std::uint8_t> bits(q);
      std::vector<std::int32_t> w(q);
      std::vector<std::int64_t> c(q);
      for (std::size_t v = lo; v < hi; ++v) {
        for (Element x = 0; x < q; ++x) bits[x] = static_cast<std::uint8_t>(dot(static_cast<Element>(v), f(x)));
        kernels::signs_from_bits(bits, w);
        kernels::fwht(std::span<std::int32_t>(w));
        if (n <= 15) {
          kernels::cube_widen(w, c);
        } else {
          std::copy(w.begin(), w.end(), c.begin());
          kernels::cube_in_place(c);
        }
        kernels::fwht(std::span<std::int64_t>(c));
        for (std::size_t r = 0; r < rows; ++r) block[r * q + v] = c[a0 + r];
      }
    });

    std::mutex merge_mutex;
    parallel_for(0, rows, workers, [&](std::size_t lo, std::size_t hi) {
      std::vector<std::uint64_t> hist(q / 3 + 1, 0);
      std::int64_t local_min = std::numeric_limits<std::int64_t>::max();
      for (std::size_t r = lo; r < hi; ++r) {
        std::span<std::int64_t> row(block.data() + r * q, q);
        kernels::fwht(row);
        const Element a = static_cast<Element>(a0 + r);
        for (Element b = 0; b < q; ++b) {
          const std::int64_t g = row[b];
          if (b == f(a)) {
            if (g != on_graph) throw InvariantError("on-graph triple count differs from 3*2^n - 2");
            continue;
          }
          if (g < 0 || g % divisor != 0)
            throw InvariantError("cubed spectrum not divisible by 6*2^{2n} at a=" + std::to_string(a) +
                                 " b=" + std::to_string(b));
          const std::int64_t m = g / divisor;
          if (m >= static_cast<std::int64_t>(hist.size())) throw InvariantError("multiplicity exceeds floor(2^n/3)");
          ++hist[m];
          local_min = std::min(local_min, m);
        }
      }
      std::lock_guard lock(merge_mutex);
      for (std::size_t k = 0; k < hist.size(); ++k)
        if (hist[k]) out.histogram[static_cast<std::int64_t>(k)] += hist[k];
      out.e_min = std::min(out.e_min, local_min);
    });
    if (options.progress) options.progress(pass + 1, passes);
  }
  return out;
}

}  // namespace apnforge
