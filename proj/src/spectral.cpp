#include "apnforge/spectral.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>

#include "apnforge/errors.hpp"
#include "apnforge/kernels.hpp"
#include "apnforge/parallel.hpp"

namespace apnforge {

void fwht_in_place(std::span<std::int32_t> data, unsigned workers) { kernels::fwht(data, workers); }
void fwht_in_place(std::span<std::int64_t> data, unsigned workers) { kernels::fwht(data, workers); }

WalshSpectrum walsh_spectrum(const VectorialFunc& f, unsigned workers) {
  const int n = f.n();
  WalshSpectrum s;
  s.n = n;
  s.values.assign(std::size_t{1} << (2 * n), 0);
  for (Element x = 0; x < f.size(); ++x) s.values[pack(x, f(x), n)] = 1;
  kernels::fwht(s.values, workers);
  if (s.values[0] != static_cast<std::int32_t>(f.size())) throw InvariantError("W(0,0) != 2^n");
  for (std::size_t i = 1; i < s.values.size(); ++i) s.linearity = std::max(s.linearity, std::abs(s.values[i]));
  return s;
}

std::vector<std::int32_t> component_spectrum(const VectorialFunc& f, Element v) {
  std::vector<std::uint8_t> bits(f.size());
  for (Element x = 0; x < f.size(); ++x) bits[x] = static_cast<std::uint8_t>(dot(v, f(x)));
  std::vector<std::int32_t> w(f.size());
  kernels::signs_from_bits(bits, w);
  kernels::fwht(w);
  return w;
}

std::vector<std::int64_t> boolean_spectrum(const BooleanFunc& f, unsigned workers) {
  std::vector<std::int64_t> w(f.size());
  for (std::uint64_t x = 0; x < f.size(); ++x) w[x] = f(x) ? -1 : 1;
  kernels::fwht(w, workers);
  return w;
}

std::int32_t nonlinearity_from_linearity(int n, std::int32_t linearity) { return (1 << (n - 1)) - linearity / 2; }

std::int32_t nonlinearity(const VectorialFunc& f) {
  std::int32_t lin = 0;
  for (Element v = 1; v < f.size(); ++v)
    for (std::int32_t w : component_spectrum(f, v)) lin = std::max(lin, std::abs(w));
  return nonlinearity_from_linearity(f.n(), lin);
}

PlateauProfile plateau_profile(const WalshSpectrum& spectrum) {
  const int n = spectrum.n;
  const Element q = 1u << n;
  PlateauProfile p;
  p.n = n;
  p.amplitudes.assign(q, 0);
  p.amplitudes[0] = static_cast<std::int32_t>(q);
  p.is_plateaued = true;
  const std::int32_t bent_level = (n % 2 == 0) ? (1 << (n / 2)) : -1;
  for (Element v = 1; v < q; ++v) {
    std::int32_t amp = 0;
    bool flat = true;
    bool bent = true;
    for (Element u = 0; u < q; ++u) {
      const std::int32_t m = std::abs(spectrum.at(u, v));
      if (m != bent_level) bent = false;
      if (m == 0) continue;
      if (amp != 0 && m != amp) flat = false;
      amp = std::max(amp, m);
    }
    if (amp == 0) throw InvariantError("component with identically zero Walsh spectrum");
    p.amplitudes[v] = amp;
    if (!flat) p.is_plateaued = false;
    if (bent) p.bent_components.push_back(v);
  }
  p.single_amplitude = p.is_plateaued && q > 2 &&
                       std::all_of(p.amplitudes.begin() + 1, p.amplitudes.end(),
                                   [&](std::int32_t a) { return a == p.amplitudes[1]; });
  return p;
}

bool is_ab(const WalshSpectrum& spectrum) {
  const int n = spectrum.n;
  if (n % 2 == 0) return false;
  const std::int32_t level = 1 << ((n + 1) / 2);
  const Element q = 1u << n;
  for (Element v = 1; v < q; ++v)
    for (Element u = 0; u < q; ++u) {
      const std::int32_t m = std::abs(spectrum.at(u, v));
      if (m != 0 && m != level) return false;
    }
  return true;
}

std::int64_t autocorrelation(const BooleanFunc& f, std::uint64_t shift) {
  std::int64_t sum = 0;
  for (std::uint64_t x = 0; x < f.size(); ++x) sum += (f(x) == f(x ^ shift)) ? 1 : -1;
  return sum;
}

std::vector<std::int64_t> autocorrelation_spectrum(const BooleanFunc& f, unsigned workers) {
  auto w = boolean_spectrum(f, workers);
  for (auto& x : w) x *= x;
  kernels::fwht(w, workers);
  const auto size = static_cast<std::int64_t>(f.size());
  for (auto& x : w) {
    if (x % size != 0) throw InvariantError("autocorrelation transform not divisible by table size");
    x /= size;
  }
  return w;
}

std::int64_t amplitude_hyperplane_sum(const PlateauProfile& profile, Element c) {
  if (!profile.is_plateaued) throw PreconditionError("amplitude sums need a plateaued function");
  if (c == 0) throw PreconditionError("hyperplane normal must be nonzero");
  std::int64_t sum = 0;
  for (Element v = 0; v < profile.amplitudes.size(); ++v)
    if (!dot(v, c)) sum += std::int64_t{profile.amplitudes[v]} * profile.amplitudes[v];
  return sum;
}

std::int64_t amplitude_square_sum(const PlateauProfile& profile) {
  if (!profile.is_plateaued) throw PreconditionError("amplitude sums need a plateaued function");
  std::int64_t sum = 0;
  for (std::int32_t a : profile.amplitudes) sum += std::int64_t{a} * a;
  return sum;
}

bool fourth_moment_apn(const WalshSpectrum& spectrum) {
  const int n = spectrum.n;
  unsigned __int128 sum = 0;
  for (std::int32_t w : spectrum.values) {
    const auto sq = static_cast<unsigned __int128>(static_cast<std::int64_t>(w) * w);
    sum += sq * sq;
  }
  const unsigned __int128 q2 = static_cast<unsigned __int128>(1) << (2 * n);
  return sum == q2 * (3 * q2 - (static_cast<unsigned __int128>(1) << (n + 1)));
}

SpectralSummary spectral_summary(const VectorialFunc& f, unsigned workers) {
  const int n = f.n();
  const Element q = f.size();
  const std::int32_t bent_level = (n % 2 == 0) ? (1 << (n / 2)) : -1;
  const std::int32_t ab_level = (n % 2 == 1) ? (1 << ((n + 1) / 2)) : -1;
  SpectralSummary out;
  out.n = n;
  out.plateaued = true;
  out.ab = n % 2 == 1;
  unsigned __int128 fourth = static_cast<unsigned __int128>(q) * q * q * q;
  std::mutex merge;
  parallel_for(1, q, workers, [&](std::size_t lo, std::size_t hi) {
    std::int32_t lin = 0;
    bool plateaued = true, ab = n % 2 == 1;
    std::size_t bent = 0;
    unsigned __int128 sum4 = 0;
    for (Element v = lo; v < hi; ++v) {
      const auto w = component_spectrum(f, v);
      std::int32_t amp = 0;
      bool is_bent = true;
      for (std::int32_t x : w) {
        const std::int32_t m = std::abs(x);
        const auto sq = static_cast<unsigned __int128>(static_cast<std::int64_t>(m) * m);
        sum4 += sq * sq;
        if (m != bent_level) is_bent = false;
        if (m != 0 && m != ab_level) ab = false;
        if (m == 0) continue;
        if (amp != 0 && m != amp) plateaued = false;
        amp = std::max(amp, m);
      }
      lin = std::max(lin, amp);
      bent += is_bent;
    }
    std::lock_guard lock(merge);
    out.linearity = std::max(out.linearity, lin);
    out.plateaued = out.plateaued && plateaued;
    out.ab = out.ab && ab;
    out.bent_count += bent;
    fourth += sum4;
  });
  const unsigned __int128 q2 = static_cast<unsigned __int128>(q) * q;
  out.fourth_moment_apn = fourth == q2 * (3 * q2 - 2 * static_cast<unsigned __int128>(q));
  return out;
}

}  // namespace apnforge
