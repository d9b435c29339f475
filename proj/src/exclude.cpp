#include "apnforge/exclude.hpp"

#include <algorithm>
#include <string>

#include "apnforge/errors.hpp"
#include "apnforge/kernels.hpp"

namespace apnforge {

SidonSet::SidonSet(int ambient_dim, std::vector<std::uint64_t> points)
    : ambient_dim_(ambient_dim), points_(std::move(points)) {
  if (ambient_dim < 1 || ambient_dim > 32) throw PreconditionError("ambient dimension outside 1..32");
  member_.assign(std::size_t{1} << ambient_dim, false);
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  for (std::uint64_t p : points_) {
    if (p >> ambient_dim) throw PreconditionError("point outside the ambient space");
    member_[p] = true;
  }
}

SidonSet SidonSet::graph_of(const VectorialFunc& f) {
  std::vector<std::uint64_t> pts;
  pts.reserve(f.size());
  for (Element x = 0; x < f.size(); ++x) pts.push_back(pack(x, f(x), f.n()));
  return SidonSet(2 * f.n(), std::move(pts));
}

bool verify_sidon(const SidonSet& s) {
  std::vector<bool> seen(std::size_t{1} << s.ambient_dim(), false);
  const auto pts = s.points();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const std::uint64_t sum = pts[i] ^ pts[j];
      if (seen[sum]) return false;
      seen[sum] = true;
    }
  return true;
}

std::int64_t exclude_mult_oracle(const SidonSet& s, std::uint64_t p) {
  if (s.contains(p)) throw PreconditionError("exclude multiplicity is defined only for points outside the set");
  const auto pts = s.points();
  std::int64_t count = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const std::uint64_t z = pts[i] ^ pts[j] ^ p;
      if (z > pts[j] && s.contains(z)) ++count;
    }
  return count;
}

bool is_maximal_sidon(const SidonSet& s) {
  const std::size_t space = std::size_t{1} << s.ambient_dim();
  std::vector<bool> hit(space, false);
  const auto pts = s.points();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k) hit[pts[i] ^ pts[j] ^ pts[k]] = true;
  for (std::uint64_t p = 0; p < space; ++p)
    if (!s.contains(p) && !hit[p]) return false;
  return true;
}

namespace {

void require_apn(const VectorialFunc& f) {
  if (!is_apn(f)) throw PreconditionError("exclude spectrum requires an APN function (its graph must be a Sidon set)");
}

void fill_summary(ExcludeSpectrum& s) {
  std::vector<std::uint64_t> counts(((std::size_t{1} << s.n) / 3) + 1, 0);
  for (std::int32_t m : s.mult) {
    if (m == kOnGraph) continue;
    if (static_cast<std::size_t>(m) >= counts.size()) throw InvariantError("multiplicity exceeds floor(2^n/3)");
    ++counts[m];
  }
  s.histogram.clear();
  for (std::size_t k = 0; k < counts.size(); ++k)
    if (counts[k]) s.histogram[static_cast<std::int64_t>(k)] = counts[k];
  s.e_min = s.histogram.empty() ? 0 : s.histogram.begin()->first;
}

}  // namespace

ExcludeSpectrum exclude_spectrum_fast(const VectorialFunc& f, unsigned workers) {
  require_apn(f);
  const int n = f.n();
  const std::size_t size = std::size_t{1} << (2 * n);
  std::vector<std::int64_t> work(size, 0);
  for (Element x = 0; x < f.size(); ++x) work[pack(x, f(x), n)] = 1;
  // Exact modulo 2^64, and every final value is far below 2^63 for n <= 16.
  kernels::fwht(std::span<std::int64_t>(work), workers);
  kernels::cube_in_place(work, workers);
  kernels::fwht(std::span<std::int64_t>(work), workers);

  ExcludeSpectrum s;
  s.n = n;
  s.mult.assign(size, 0);
  const std::int64_t q2 = std::int64_t{1} << (2 * n);
  const std::int64_t divisor = 6 * q2;
  const std::int64_t on_graph = (3 * (std::int64_t{1} << n) - 2) * q2;
  for (Element x = 0; x < f.size(); ++x) {
    const std::size_t idx = pack(x, f(x), n);
    if (work[idx] != on_graph) throw InvariantError("on-graph triple count differs from 3*2^n - 2");
    work[idx] = -1;
  }
  for (std::size_t i = 0; i < size; ++i) {
    if (work[i] == -1) {
      s.mult[i] = kOnGraph;
      continue;
    }
    if (work[i] < 0 || work[i] % divisor != 0)
      throw InvariantError("cubed spectrum not divisible by 6*2^{2n} at index " + std::to_string(i));
    s.mult[i] = static_cast<std::int32_t>(work[i] / divisor);
  }
  fill_summary(s);
  return s;
}

ExcludeSpectrum exclude_spectrum_oracle(const VectorialFunc& f) {
  require_apn(f);
  const int n = f.n();
  ExcludeSpectrum s;
  s.n = n;
  s.mult.assign(std::size_t{1} << (2 * n), 0);
  std::vector<std::uint64_t> pts;
  for (Element x = 0; x < f.size(); ++x) pts.push_back(pack(x, f(x), n));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k) ++s.mult[pts[i] ^ pts[j] ^ pts[k]];
  for (std::uint64_t p : pts) {
    if (s.mult[p] != 0) throw InvariantError("graph point is a sum of three graph points; not a Sidon set");
    s.mult[p] = kOnGraph;
  }
  fill_summary(s);
  return s;
}

ExcludeSummary summarize(const ExcludeSpectrum& spectrum) {
  return ExcludeSummary{spectrum.n, spectrum.e_min, spectrum.histogram};
}

PiInvariant pi_invariant(const ExcludeSpectrum& spectrum) {
  const int n = spectrum.n;
  const Element q = 1u << n;
  PiInvariant pi;
  pi.per_beta.resize(q);
  for (Element beta = 0; beta < q; ++beta)
    for (Element b = 0; b < q; ++b) {
      const std::int32_t m = spectrum.at(beta, b);
      const std::int64_t value = m == kOnGraph ? std::int64_t{q} : 3 * std::int64_t{m};
      ++pi.per_beta[beta][value];
      pi.values.insert(value);
    }
  pi.m_f = *pi.values.begin();
  if (!pi.values.count(q)) throw InvariantError("Pi_F lacks the on-graph value 2^n");
  if (pi.m_f != std::min<std::int64_t>(3 * spectrum.e_min, q)) throw InvariantError("m_F != min(3 e_min, 2^n)");
  return pi;
}

std::int64_t pi_size_direct(const VectorialFunc& f, Element beta, Element b) {
  std::int64_t count = 0;
  for (Element a = 0; a < f.size(); ++a) {
    const Element shift = f(a ^ beta);
    for (Element x = 0; x < f.size(); ++x)
      if ((f(x) ^ f(x ^ a) ^ shift) == b) {
        ++count;
        break;
      }
  }
  return count;
}

std::int64_t distance_lower_bound_from_spectrum(const ExcludeSpectrum& spectrum) {
  const auto pi = pi_invariant(spectrum);
  const std::int64_t from_pi = (pi.m_f + 2) / 3 + 1;
  if (from_pi != spectrum.e_min + 1) throw InvariantError("ceil(m_F/3)+1 differs from e_min+1");
  return spectrum.e_min + 1;
}

std::int64_t histogram_weighted_sum(const Histogram& h) {
  std::int64_t sum = 0;
  for (const auto& [k, count] : h) sum += k * static_cast<std::int64_t>(count);
  return sum;
}

}  // namespace apnforge
