#pragma once

// Exclude multiplicities of Sidon sets, specialized to graphs of APN functions.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "apnforge/vbf.hpp"

namespace apnforge {

using Histogram = std::map<std::int64_t, std::uint64_t>;

class SidonSet {
 public:
  SidonSet(int ambient_dim, std::vector<std::uint64_t> points);
  static SidonSet graph_of(const VectorialFunc& f);

  int ambient_dim() const { return ambient_dim_; }
  std::span<const std::uint64_t> points() const { return points_; }
  bool contains(std::uint64_t p) const { return member_[p]; }

 private:
  int ambient_dim_;
  std::vector<std::uint64_t> points_;
  std::vector<bool> member_;
};

/// All pairwise sums distinct, i.e. no four distinct points sum to zero.
bool verify_sidon(const SidonSet& s);

/// Unordered triples {x, y, z} of S with x + y + z = p. Throws if p is in S.
std::int64_t exclude_mult_oracle(const SidonSet& s, std::uint64_t p);

/// Every outside point has positive multiplicity. Requires a Sidon set.
bool is_maximal_sidon(const SidonSet& s);

inline constexpr std::int32_t kOnGraph = -1;

struct ExcludeSpectrum {
  int n = 0;
  /// mult[pack(a, b)]; kOnGraph for b = F(a).
  std::vector<std::int32_t> mult;
  std::int64_t e_min = 0;
  Histogram histogram;

  std::int32_t at(Element a, Element b) const { return mult[pack(a, b, n)]; }
};

/// Off-graph multiplicities via the cube of the Walsh spectrum. Requires APN.
ExcludeSpectrum exclude_spectrum_fast(const VectorialFunc& f, unsigned workers = 1);
/// Same table by enumerating every triple of graph points (O(2^{3n})).
ExcludeSpectrum exclude_spectrum_oracle(const VectorialFunc& f);

struct ExcludeSummary {
  int n = 0;
  std::int64_t e_min = 0;
  Histogram histogram;
};

struct StreamOptions {
  unsigned workers = 1;
  /// Upper bound on the working buffer in bytes.
  std::size_t memory_budget = std::size_t{1} << 30;
  /// Called after every pass with (pass, total).
  std::function<void(std::size_t, std::size_t)> progress;
};

/// Histogram and e_min without materializing the 2^{2n} table. Requires APN.
ExcludeSummary exclude_summary_streamed(const VectorialFunc& f, const StreamOptions& options = {});
ExcludeSummary summarize(const ExcludeSpectrum& spectrum);

struct PiInvariant {
  /// per_beta[beta] maps a value of |Pi^beta(b)| to the number of b attaining it.
  std::vector<Histogram> per_beta;
  std::set<std::int64_t> values;
  std::int64_t m_f = 0;
};

/// Assembled from the exclude spectrum: 3 mult off the graph, 2^n on it.
PiInvariant pi_invariant(const ExcludeSpectrum& spectrum);
/// |Pi^beta(b)| = #{a : b in H_a^beta F}, by direct enumeration.
std::int64_t pi_size_direct(const VectorialFunc& f, Element beta, Element b);

/// e_min + 1, checked against ceil(m_F / 3) + 1.
std::int64_t distance_lower_bound_from_spectrum(const ExcludeSpectrum& spectrum);

std::int64_t histogram_weighted_sum(const Histogram& h);

}  // namespace apnforge
