#include <cstdlib>
#include <string>

#include "apnforge/errors.hpp"
#include "apnforge/parallel.hpp"
#include "apnforge/theory.hpp"

namespace apnforge {

KloostermanTable kloosterman_table(const FieldPtr& field, unsigned workers) {
  const int n = field->n();
  if (n % 2 == 0) throw PreconditionError("Kloosterman tables are supported for odd n only");
  const Element q = field->size();
  KloostermanTable t;
  t.n = n;
  t.values.assign(q, 0);
  std::vector<Element> inv(q);
  for (Element x = 0; x < q; ++x) inv[x] = field->inv(x);
  const auto tr = field->trace_table();
  parallel_for(0, q, workers, [&](std::size_t lo, std::size_t hi) {
    for (Element a = lo; a < hi; ++a) {
      std::int64_t sum = 0;
      for (Element x = 0; x < q; ++x) sum += tr[field->mul(a, x) ^ inv[x]] ? -1 : 1;
      t.values[a] = sum;
    }
  });
  const std::int64_t weil_sq = std::int64_t{1} << (n + 2);
  for (Element a = 1; a < q; ++a) {
    const std::int64_t k = t.values[a] - 1;
    if (((k % 4) + 4) % 4 != 3) throw InvariantError("K(a) - 1 is not 3 mod 4 at a=" + std::to_string(a));
    if (k * k > weil_sq) throw InvariantError("|K(a) - 1| exceeds 2^{n/2+1} at a=" + std::to_string(a));
    t.max_dev = std::max(t.max_dev, std::abs(k));
  }
  return t;
}

std::int64_t kloosterman_emin_bound(const KloostermanTable& table) {
  const std::int64_t num = (std::int64_t{1} << table.n) - 5 - table.max_dev;
  // Ceiling division that is also correct for negative numerators.
  return num >= 0 ? (num + 5) / 6 : -((-num) / 6);
}

}  // namespace apnforge
