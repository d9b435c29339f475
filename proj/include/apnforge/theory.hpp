#pragma once

// Closed-form consequences of the exclude-multiplicity picture: ortho-derivatives,
// partial difference sets, Kloosterman sums, distance bounds, linear structures
// of gamma_F and power-function identities.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apnforge/exclude.hpp"
#include "apnforge/spectral.hpp"
#include "apnforge/vbf.hpp"

namespace apnforge {

// ortho-derivative

/// pi_F(a) is the nonzero normal of the hyperplane spanned by
/// F(x) + F(x + a) + F(0) + F(a). Requires F quadratic APN.
VectorialFunc ortho_derivative(const VectorialFunc& f);
/// wt(b . pi).
std::uint32_t component_weight(const VectorialFunc& pi, Element b);

// 3-to-1 plateaued functions

struct PdsParams {
  std::int64_t v = 0, k = 0, lambda = 0, mu = 0;
  std::int64_t alpha_n = 0, beta_n = 0;
};

/// alpha(n) = (2^n + (-2)^{n/2+1} - 2)/6, beta(n) = (2^n + (-2)^{n/2} - 2)/6.
/// Requires n even.
PdsParams pds_params(int n);

struct PdsCheck {
  bool difference_set = false;
  bool two_valued_spectrum = false;
  bool ok() const { return difference_set && two_valued_spectrum; }
};

/// im(F + F(0)) \ {0} is a PDS with pds_params(n), and the exclude spectrum is
/// {alpha: 2^n(2^n-1)/3, beta: 2^{n+1}(2^n-1)/3}. Requires F plateaued 3-to-1, n even.
PdsCheck check_pds(const VectorialFunc& f, unsigned workers = 1);

// Kloosterman sums

struct KloostermanTable {
  int n = 0;
  /// values[a] = sum_x (-1)^{Tr(a x + x^{-1})}, 0^{-1} = 0.
  std::vector<std::int64_t> values;
  /// max over a != 0 of |K(a) - 1|.
  std::int64_t max_dev = 0;
};

/// Direct summation. Requires n odd.
KloostermanTable kloosterman_table(const FieldPtr& field, unsigned workers = 1);
/// ceil((2^n - 5 - max_dev) / 6), a lower bound on e_min of the inverse graph.
std::int64_t kloosterman_emin_bound(const KloostermanTable& table);

// Distance bounds

enum class BoundFamily { AlmostBent, PlateauedApn, ThreeToOnePlateaued, Inverse, Generic };

std::string family_tag(BoundFamily family);

struct BoundRow {
  BoundFamily family = BoundFamily::Generic;
  std::int64_t formula_value = 0;
  std::optional<std::int64_t> exact_value;
};

struct BoundReport {
  int n = 0;
  std::vector<BoundRow> rows;
  /// Largest formula value over all rows.
  std::int64_t best_formula() const;
};

struct BoundInputs {
  const VectorialFunc* f = nullptr;
  /// Enables the inverse row; keyed on the exponent d = 2^n - 2 (mod 2^n - 1).
  std::optional<std::uint64_t> monomial_exponent;
  /// e_min of the graph when the exclude spectrum was computed.
  std::optional<std::int64_t> e_min;
  /// Reused when already computed.
  std::optional<SpectralSummary> spectral;
  unsigned workers = 1;
};

/// Every applicable row. Requires F APN. Throws InvariantError if a formula
/// exceeds the exact value.
BoundReport bound_report(const BoundInputs& in);

std::int64_t ab_distance_bound(int n);
std::int64_t plateaued_distance_bound(int n);
std::int64_t three_to_one_distance_bound(int n);

/// d is in the cyclotomic class of -1 modulo 2^n - 1.
bool is_inverse_exponent(int n, std::uint64_t d);

// gamma_F

/// Nonzero (a, b), packed, with D_{(a,b)} gamma_F constant. Requires F APN, n <= 12.
std::vector<std::uint64_t> gamma_linear_structures(const VectorialFunc& f, unsigned workers = 1);
/// Some off-graph point has multiplicity (2^n - 1)/3. Requires n even.
bool has_max_multiplicity(const ExcludeSpectrum& spectrum);

/// For every b != 0: 6 * 2^n | wt(D_{(0,b)} gamma_F) <= 2^n(2^n - 3 * 2^{n/2-1} + 2).
/// Requires F quadratic APN, n even >= 4, F(0) = 0.
bool gamma_weight_divisibility(const VectorialFunc& f, unsigned workers = 1);

// Power functions

/// mult(a, b) == mult(c, (c/a)^d b) for all a, c != 0, b != a^d; exhaustive when
/// 2^{3n} <= 2^27, otherwise a fixed-seed sample of c per a.
bool power_uniformity_check(const FieldPtr& field, std::uint64_t d, const ExcludeSpectrum& spectrum);
/// (mult(a, 0), mult(0, a)).
std::pair<std::int64_t, std::int64_t> power_axis_mults(const ExcludeSpectrum& spectrum, Element a);
/// Both axis values equal (2^{n-1} - 1)/3 for every a != 0. Requires n odd >= 3.
bool check_power_axis(const ExcludeSpectrum& spectrum);
/// |Phi^{-1}(im D_1 F)| for Phi(x) = (x^d + b)/(x + a)^d on x != a.
std::int64_t phi_preimage_mult(const FieldPtr& field, std::uint64_t d, Element a, Element b);
/// x -> (x^d + a^d)/(x + a)^d is 2-to-1 from F \ {0, a} onto a subset of F \ {1}
/// for every a != 0.
bool monomial_apn_via_fractional_map(const FieldPtr& field, std::uint64_t d);

// Non-equivalence

struct NonEquivalenceVerdict {
  bool not_plateaued = false;
  std::int64_t witness_multiplicity = 0;
  std::uint64_t witness_count = 0;
  std::string describe(int n) const;
};

/// Fires when some m_k is not divisible by 2^n (plateaued APN graphs always satisfy it).
NonEquivalenceVerdict plateaued_nonequivalence_test(int n, const Histogram& histogram);

}  // namespace apnforge
