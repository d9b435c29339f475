#include <algorithm>
#include <string>

#include "apnforge/errors.hpp"
#include "apnforge/theory.hpp"

namespace apnforge {

std::string family_tag(BoundFamily family) {
  switch (family) {
    case BoundFamily::AlmostBent: return "AB";
    case BoundFamily::PlateauedApn: return "plateaued APN";
    case BoundFamily::ThreeToOnePlateaued: return "3-to-1 plateaued";
    case BoundFamily::Inverse: return "inverse";
    case BoundFamily::Generic: return "generic";
  }
  return "generic";
}

std::int64_t BoundReport::best_formula() const {
  std::int64_t best = 0;
  for (const auto& r : rows) best = std::max(best, r.formula_value);
  return best;
}

std::int64_t ab_distance_bound(int n) { return ((std::int64_t{1} << (n - 1)) + 2) / 3; }

std::int64_t plateaued_distance_bound(int n) { return std::int64_t{1} << (n / 2 - 1); }

std::int64_t three_to_one_distance_bound(int n) {
  const std::int64_t half = std::int64_t{1} << (n - 1);
  if (n % 4 == 0) return (half - (std::int64_t{1} << (n / 2)) + 2) / 3;
  return (half - (std::int64_t{1} << (n / 2 - 1)) + 2) / 3;
}

bool is_inverse_exponent(int n, std::uint64_t d) {
  const std::uint64_t order = (std::uint64_t{1} << n) - 1;
  const std::uint64_t target = order - 1;
  std::uint64_t e = d % order;
  for (int i = 0; i < n; ++i) {
    if (e == target) return true;
    e = (2 * e) % order;
  }
  return false;
}

BoundReport bound_report(const BoundInputs& in) {
  if (!in.f) throw PreconditionError("bound report needs a function");
  const auto& f = *in.f;
  if (!is_apn(f)) throw PreconditionError("distance bounds apply to APN functions only");
  const int n = f.n();
  BoundReport report;
  report.n = n;

  const auto summary = in.spectral ? *in.spectral : spectral_summary(f, in.workers);
  const bool ab = summary.ab;
  const bool plateaued = summary.plateaued;

  std::optional<std::int64_t> exact;
  if (in.e_min) exact = *in.e_min + 1;
  auto add = [&](BoundFamily family, std::int64_t value) {
    if (exact && value > *exact)
      throw InvariantError(family_tag(family) + " bound " + std::to_string(value) + " exceeds exact value " +
                           std::to_string(*exact));
    report.rows.push_back({family, value, exact});
  };

  if (ab) add(BoundFamily::AlmostBent, ab_distance_bound(n));
  if (plateaued && n >= 4 && n % 2 == 0) {
    add(BoundFamily::PlateauedApn, plateaued_distance_bound(n));
    if (is_3to1(f)) add(BoundFamily::ThreeToOnePlateaued, three_to_one_distance_bound(n));
  }
  if (in.monomial_exponent && n % 2 == 1 && n >= 3 && f.field() && is_inverse_exponent(n, *in.monomial_exponent)) {
    const auto k = kloosterman_table(f.field(), in.workers);
    add(BoundFamily::Inverse, kloosterman_emin_bound(k) + 1);
  }
  if (exact) report.rows.push_back({BoundFamily::Generic, *exact, exact});
  return report;
}

}  // namespace apnforge
