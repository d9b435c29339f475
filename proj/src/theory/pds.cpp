#include <string>

#include "apnforge/errors.hpp"
#include "apnforge/theory.hpp"

namespace apnforge {

PdsParams pds_params(int n) {
  if (n % 2 != 0 || n < 2 || n > kMaxFieldDim) throw PreconditionError("PDS parameters need even n in 2..16");
  const std::int64_t q = std::int64_t{1} << n;
  auto neg2_pow = [](int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) r *= -2;
    return r;
  };
  PdsParams p;
  p.alpha_n = (q + neg2_pow(n / 2 + 1) - 2) / 6;
  p.beta_n = (q + neg2_pow(n / 2) - 2) / 6;
  if ((q + neg2_pow(n / 2 + 1) - 2) % 6 || (q + neg2_pow(n / 2) - 2) % 6)
    throw InvariantError("alpha(n) or beta(n) is not an integer");
  if ((2 * (p.alpha_n - 1)) % 3 || (2 * p.beta_n) % 3) throw InvariantError("PDS parameters are not integers");
  p.v = q;
  p.k = (q - 1) / 3;
  p.lambda = 2 * (p.alpha_n - 1) / 3;
  p.mu = 2 * p.beta_n / 3;
  return p;
}

PdsCheck check_pds(const VectorialFunc& f, unsigned workers) {
  const int n = f.n();
  if (n % 2 != 0 || n < 4) throw PreconditionError("3-to-1 plateaued analysis needs even n >= 4");
  if (!is_3to1(f)) throw PreconditionError("function is not 3-to-1");
  const auto spectrum = walsh_spectrum(f, workers);
  if (!plateau_profile(spectrum).is_plateaued) throw PreconditionError("function is not plateaued");
  const auto g = translate_output(f, f(0));
  const auto p = pds_params(n);

  std::vector<bool> in_d(g.size(), false);
  for (Element y : g.table())
    if (y) in_d[y] = true;
  std::vector<Element> d;
  for (Element y = 1; y < g.size(); ++y)
    if (in_d[y]) d.push_back(y);

  PdsCheck out;
  out.difference_set = static_cast<std::int64_t>(d.size()) == p.k;
  if (out.difference_set) {
    std::vector<std::int64_t> reps(g.size(), 0);
    for (Element x : d)
      for (Element y : d)
        if (x != y) ++reps[x ^ y];
    for (Element z = 1; z < g.size(); ++z)
      if (reps[z] != (in_d[z] ? p.lambda : p.mu)) out.difference_set = false;
  }

  const auto ex = exclude_spectrum_fast(g, workers);
  const std::uint64_t q = g.size();
  Histogram expected;
  expected[p.alpha_n] += q * (q - 1) / 3;
  expected[p.beta_n] += 2 * q * (q - 1) / 3;
  out.two_valued_spectrum = ex.histogram == expected;
  return out;
}

}  // namespace apnforge
