#pragma once

// Walsh spectra, plateau classification and autocorrelation.

#include <cstdint>
#include <span>
#include <vector>

#include "apnforge/vbf.hpp"

namespace apnforge {

/// In-place unnormalized Walsh-Hadamard transform (power-of-two length).
void fwht_in_place(std::span<std::int32_t> data, unsigned workers = 1);
void fwht_in_place(std::span<std::int64_t> data, unsigned workers = 1);

struct WalshSpectrum {
  int n = 0;
  /// values[pack(u, v)] = sum_x (-1)^{u.x + v.F(x)}.
  std::vector<std::int32_t> values;
  /// max |W(u, v)| over (u, v) != (0, 0).
  std::int32_t linearity = 0;

  std::int32_t at(Element u, Element v) const { return values[pack(u, v, n)]; }
};

WalshSpectrum walsh_spectrum(const VectorialFunc& f, unsigned workers = 1);

/// W(., v) for one component: FWHT of (-1)^{v.F(x)}.
std::vector<std::int32_t> component_spectrum(const VectorialFunc& f, Element v);
/// Walsh values of a Boolean function (length 2^{n_in}).
std::vector<std::int64_t> boolean_spectrum(const BooleanFunc& f, unsigned workers = 1);

std::int32_t nonlinearity_from_linearity(int n, std::int32_t linearity);
/// NL(F) = 2^{n-1} - L(F)/2.
std::int32_t nonlinearity(const VectorialFunc& f);

struct PlateauProfile {
  int n = 0;
  bool is_plateaued = false;
  /// Per component v: the common nonzero magnitude for a plateaued component,
  /// otherwise the largest magnitude. amplitudes[0] = 2^n.
  std::vector<std::int32_t> amplitudes;
  /// v != 0 with every |W(u, v)| = 2^{n/2}; empty for odd n.
  std::vector<Element> bent_components;
  /// All nonzero components share one amplitude.
  bool single_amplitude = false;
};

PlateauProfile plateau_profile(const WalshSpectrum& spectrum);

/// n odd and every W(u, v), v != 0, lies in {0, +-2^{(n+1)/2}}.
bool is_ab(const WalshSpectrum& spectrum);

/// sum_x (-1)^{f(x) + f(x + shift)} = 2^{n_in} - 2 wt(D_shift f).
std::int64_t autocorrelation(const BooleanFunc& f, std::uint64_t shift);
/// Autocorrelation at every shift, via FWHT of the squared Walsh values.
std::vector<std::int64_t> autocorrelation_spectrum(const BooleanFunc& f, unsigned workers = 1);

/// sum over v with v.c = 0 of lambda_v^2. Requires a plateaued profile and c != 0.
std::int64_t amplitude_hyperplane_sum(const PlateauProfile& profile, Element c);
/// sum over all v of lambda_v^2.
std::int64_t amplitude_square_sum(const PlateauProfile& profile);

/// sum W^4 == 2^{2n}(3 * 2^{2n} - 2^{n+1}), the spectral APN criterion.
bool fourth_moment_apn(const WalshSpectrum& spectrum);

/// Classification computed one component at a time (O(2^n) memory).
struct SpectralSummary {
  int n = 0;
  std::int32_t linearity = 0;
  bool plateaued = false;
  bool ab = false;
  std::size_t bent_count = 0;
  bool fourth_moment_apn = false;
};

SpectralSummary spectral_summary(const VectorialFunc& f, unsigned workers = 1);

}  // namespace apnforge
