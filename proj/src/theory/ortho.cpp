#include <bit>
#include <string>

#include "apnforge/errors.hpp"
#include "apnforge/theory.hpp"

namespace apnforge {
namespace {

// Reduced row echelon basis of span(vectors); pivots are leading bits.
struct Echelon {
  std::vector<std::uint32_t> rows;

  void insert(std::uint32_t v) {
    for (std::uint32_t r : rows)
      if (v & std::bit_floor(r)) v ^= r;
    if (!v) return;
    const std::uint32_t pivot = std::bit_floor(v);
    for (std::uint32_t& r : rows)
      if (r & pivot) r ^= v;
    rows.push_back(v);
  }
};

// The nonzero vector orthogonal to a rank n-1 span.
std::uint32_t normal_vector(const Echelon& e, int n) {
  std::uint32_t pivots = 0;
  for (std::uint32_t r : e.rows) pivots |= std::bit_floor(r);
  const std::uint32_t free_bits = ~pivots & ((1u << n) - 1);
  const std::uint32_t free_bit = free_bits & -free_bits;
  std::uint32_t c = free_bit;
  for (std::uint32_t r : e.rows)
    if (r & free_bit) c |= std::bit_floor(r);
  return c;
}

}  // namespace

VectorialFunc ortho_derivative(const VectorialFunc& f) {
  if (!is_quadratic(f)) throw PreconditionError("ortho-derivative requires a quadratic function");
  if (!is_apn(f)) throw PreconditionError("ortho-derivative requires an APN function");
  const int n = f.n();
  std::vector<Element> table(f.size(), 0);
  for (Element a = 1; a < f.size(); ++a) {
    Echelon e;
    const Element shift = f(0) ^ f(a);
    for (Element x = 0; x < f.size(); ++x) e.insert(f(x) ^ f(x ^ a) ^ shift);
    if (static_cast<int>(e.rows.size()) != n - 1)
      throw InvariantError("derivative image spans dimension " + std::to_string(e.rows.size()) + ", expected n-1");
    const std::uint32_t c = normal_vector(e, n);
    for (std::uint32_t r : e.rows)
      if (dot(c, r)) throw InvariantError("ortho-derivative normal is not orthogonal to the span");
    table[a] = c;
  }
  return VectorialFunc(n, std::move(table), f.field());
}

std::uint32_t component_weight(const VectorialFunc& pi, Element b) {
  std::uint32_t w = 0;
  for (Element x = 0; x < pi.size(); ++x) w += dot(b, pi(x));
  return w;
}

}  // namespace apnforge
