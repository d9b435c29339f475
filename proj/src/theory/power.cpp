#include <random>
#include <string>

#include "apnforge/errors.hpp"
#include "apnforge/theory.hpp"

namespace apnforge {

bool power_uniformity_check(const FieldPtr& field, std::uint64_t d, const ExcludeSpectrum& spectrum) {
  if (spectrum.n != field->n()) throw PreconditionError("spectrum and field dimensions differ");
  const Element q = field->size();
  const bool exhaustive = 3 * field->n() <= 27;
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<Element> nonzero(1, q - 1);
  std::vector<Element> cs;
  for (Element a = 1; a < q; ++a) {
    cs.clear();
    if (exhaustive) {
      for (Element c = 1; c < q; ++c) cs.push_back(c);
    } else {
      cs.push_back(1);
      for (int i = 0; i < 4; ++i) cs.push_back(nonzero(rng));
    }
    const Element ad = field->pow(a, d);
    for (Element c : cs) {
      const Element scale = field->pow(field->mul(field->inv(a), c), d);
      for (Element b = 0; b < q; ++b) {
        if (b == ad) continue;
        if (spectrum.at(a, b) != spectrum.at(c, field->mul(scale, b))) return false;
      }
    }
  }
  return true;
}

std::pair<std::int64_t, std::int64_t> power_axis_mults(const ExcludeSpectrum& spectrum, Element a) {
  if (a == 0) throw PreconditionError("axis multiplicities need a != 0");
  return {spectrum.at(a, 0), spectrum.at(0, a)};
}

bool check_power_axis(const ExcludeSpectrum& spectrum) {
  const int n = spectrum.n;
  if (n % 2 == 0 || n < 3) throw PreconditionError("axis multiplicity formula needs odd n >= 3");
  const std::int64_t expected = ((std::int64_t{1} << (n - 1)) - 1) / 3;
  for (Element a = 1; a < (1u << n); ++a) {
    const auto [row, col] = power_axis_mults(spectrum, a);
    if (row != expected || col != expected) return false;
  }
  return true;
}

std::int64_t phi_preimage_mult(const FieldPtr& field, std::uint64_t d, Element a, Element b) {
  const Element q = field->size();
  std::vector<bool> image(q, false);
  for (Element x = 0; x < q; ++x) image[field->pow(x, d) ^ field->pow(x ^ 1, d)] = true;
  std::int64_t count = 0;
  for (Element x = 0; x < q; ++x) {
    if (x == a) continue;
    const Element phi = field->mul(field->pow(x, d) ^ b, field->inv(field->pow(x ^ a, d)));
    if (image[phi]) ++count;
  }
  return count;
}

bool monomial_apn_via_fractional_map(const FieldPtr& field, std::uint64_t d) {
  const Element q = field->size();
  std::vector<std::uint32_t> count(q);
  for (Element a = 1; a < q; ++a) {
    std::fill(count.begin(), count.end(), 0);
    const Element ad = field->pow(a, d);
    for (Element x = 1; x < q; ++x) {
      if (x == a) continue;
      ++count[field->mul(field->pow(x, d) ^ ad, field->inv(field->pow(x ^ a, d)))];
    }
    if (count[1] != 0) return false;
    for (std::uint32_t c : count)
      if (c != 0 && c != 2) return false;
  }
  return true;
}

std::string NonEquivalenceVerdict::describe(int n) const {
  if (!not_plateaued) return "inconclusive: every m_k is divisible by 2^" + std::to_string(n);
  return "not CCZ-equivalent to any plateaued function: 2^" + std::to_string(n) + " does not divide m_" +
         std::to_string(witness_multiplicity) + " = " + std::to_string(witness_count);
}

NonEquivalenceVerdict plateaued_nonequivalence_test(int n, const Histogram& histogram) {
  NonEquivalenceVerdict v;
  const std::uint64_t q = std::uint64_t{1} << n;
  for (const auto& [k, count] : histogram)
    if (count % q != 0) {
      v.not_plateaued = true;
      v.witness_multiplicity = k;
      v.witness_count = count;
      break;
    }
  return v;
}

}  // namespace apnforge
