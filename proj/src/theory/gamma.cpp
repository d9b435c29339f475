#include <cstdlib>

#include "apnforge/errors.hpp"
#include "apnforge/theory.hpp"

namespace apnforge {

std::vector<std::uint64_t> gamma_linear_structures(const VectorialFunc& f, unsigned workers) {
  if (!is_apn(f)) throw PreconditionError("gamma_F linear structures are analysed for APN functions only");
  if (f.n() > 12) throw PreconditionError("gamma_F autocorrelation limited to n <= 12");
  const auto delta = autocorrelation_spectrum(gamma_function(f), workers);
  const std::int64_t full = std::int64_t{1} << (2 * f.n());
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 1; s < delta.size(); ++s)
    if (std::llabs(delta[s]) == full) out.push_back(s);
  return out;
}

bool has_max_multiplicity(const ExcludeSpectrum& spectrum) {
  if (spectrum.n % 2 != 0) throw PreconditionError("maximum multiplicity (2^n-1)/3 needs even n");
  const std::int64_t top = ((std::int64_t{1} << spectrum.n) - 1) / 3;
  return spectrum.histogram.count(top) > 0;
}

bool gamma_weight_divisibility(const VectorialFunc& f, unsigned workers) {
  const int n = f.n();
  if (n % 2 != 0 || n < 4) throw PreconditionError("gamma_F weight identity needs even n >= 4");
  if (f(0) != 0) throw PreconditionError("gamma_F weight identity needs F(0) = 0");
  if (!is_quadratic(f) || !is_apn(f)) throw PreconditionError("gamma_F weight identity needs a quadratic APN function");
  if (n > 12) throw PreconditionError("gamma_F autocorrelation limited to n <= 12");
  const auto delta = autocorrelation_spectrum(gamma_function(f), workers);
  const std::int64_t q = std::int64_t{1} << n;
  const std::int64_t full = q * q;
  const std::int64_t upper = q * (q - 3 * (std::int64_t{1} << (n / 2 - 1)) + 2);
  for (Element b = 1; b < f.size(); ++b) {
    const std::int64_t weight = (full - delta[pack(0, b, n)]) / 2;
    if (weight % (6 * q) != 0 || weight < 0 || weight > upper) return false;
  }
  return true;
}

}  // namespace apnforge
