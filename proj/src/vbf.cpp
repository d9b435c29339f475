#include "apnforge/vbf.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "apnforge/errors.hpp"
#include "apnforge/parallel.hpp"

namespace apnforge {

VectorialFunc::VectorialFunc(int n, std::vector<Element> table, FieldPtr field)
    : n_(n), table_(std::move(table)), field_(std::move(field)) {
  if (n < 1 || n > kMaxFieldDim) throw PreconditionError("dimension n=" + std::to_string(n) + " outside 1..16");
  if (table_.size() != (std::size_t{1} << n))
    throw PreconditionError("truth table must have exactly 2^n = " + std::to_string(1u << n) + " entries, got " +
                            std::to_string(table_.size()));
  for (Element y : table_)
    if (y >> n) throw PreconditionError("truth table entry " + std::to_string(y) + " does not fit in n bits");
  if (field_ && field_->n() != n) throw PreconditionError("field dimension differs from function dimension");
  anf_ = table_;
  moebius(anf_);
  for (std::uint32_t m = 0; m < anf_.size(); ++m)
    if (anf_[m]) degree_ = std::max(degree_, std::popcount(m));
}

BooleanFunc::BooleanFunc(int n_in) : n_in_(n_in), words_(((std::uint64_t{1} << n_in) + 63) / 64, 0) {}

BooleanFunc::BooleanFunc(int n_in, std::span<const std::uint8_t> bits) : BooleanFunc(n_in) {
  if (bits.size() != size()) throw PreconditionError("Boolean function bit table has the wrong length");
  for (std::uint64_t x = 0; x < bits.size(); ++x)
    if (bits[x] & 1) set(x, true);
}

void BooleanFunc::set(std::uint64_t x, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (x & 63);
  if (value)
    words_[x >> 6] |= mask;
  else
    words_[x >> 6] &= ~mask;
}

std::uint64_t BooleanFunc::weight() const {
  std::uint64_t w = 0;
  for (std::uint64_t word : words_) w += std::popcount(word);
  return w;
}

void moebius(std::span<Element> table) {
  for (std::size_t half = 1; half < table.size(); half <<= 1)
    for (std::size_t base = 0; base < table.size(); base += 2 * half)
      for (std::size_t j = base; j < base + half; ++j) table[j + half] ^= table[j];
}

VectorialFunc from_monomial(const FieldPtr& field, std::uint64_t d) {
  std::vector<Element> table(field->size());
  for (Element x = 0; x < field->size(); ++x) table[x] = field->pow(x, d);
  return VectorialFunc(field->n(), std::move(table), field);
}

VectorialFunc inverse_function(const FieldPtr& field) {
  std::vector<Element> table(field->size());
  for (Element x = 0; x < field->size(); ++x) table[x] = field->inv(x);
  return VectorialFunc(field->n(), std::move(table), field);
}

VectorialFunc derivative(const VectorialFunc& f, Element a) {
  std::vector<Element> table(f.size());
  for (Element x = 0; x < f.size(); ++x) table[x] = f(x) ^ f(x ^ a);
  return VectorialFunc(f.n(), std::move(table), f.field());
}

std::vector<Element> shifted_derivative_image(const VectorialFunc& f, Element a, Element beta) {
  std::vector<Element> image;
  image.reserve(f.size());
  const Element shift = f(a ^ beta);
  for (Element x = 0; x < f.size(); ++x) image.push_back(f(x) ^ f(x ^ a) ^ shift);
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return image;
}

DifferenceTables difference_tables(const VectorialFunc& f, unsigned workers) {
  const int n = f.n();
  DifferenceTables dt;
  dt.n = n;
  dt.delta.assign(std::size_t{1} << (2 * n), 0);
  parallel_for(0, f.size(), workers, [&](std::size_t lo, std::size_t hi) {
    for (Element a = lo; a < hi; ++a)
      for (Element x = 0; x < f.size(); ++x) ++dt.delta[pack(a, f(x) ^ f(x ^ a), n)];
  });
  dt.gamma = BooleanFunc(2 * n);
  for (Element a = 1; a < f.size(); ++a)
    for (Element b = 0; b < f.size(); ++b)
      if (dt.delta[pack(a, b, n)]) dt.gamma.set(pack(a, b, n), true);
  return dt;
}

BooleanFunc gamma_function(const VectorialFunc& f) {
  const int n = f.n();
  BooleanFunc gamma(2 * n);
  for (Element a = 1; a < f.size(); ++a)
    for (Element x = 0; x < f.size(); ++x) gamma.set(pack(a, f(x) ^ f(x ^ a), n), true);
  return gamma;
}

std::uint32_t differential_uniformity(const VectorialFunc& f) {
  std::vector<std::uint32_t> row(f.size());
  std::uint32_t best = 0;
  for (Element a = 1; a < f.size(); ++a) {
    std::fill(row.begin(), row.end(), 0);
    for (Element x = 0; x < f.size(); ++x) best = std::max(best, ++row[f(x) ^ f(x ^ a)]);
  }
  return best;
}

bool is_apn(const VectorialFunc& f) {
  std::vector<std::uint32_t> stamp(f.size(), 0);
  for (Element a = 1; a < f.size(); ++a) {
    // Solutions come in pairs {x, x + a}; visiting x < x ^ a sees each pair once.
    for (Element x = 0; x < f.size(); ++x) {
      if (x > (x ^ a)) continue;
      Element b = f(x) ^ f(x ^ a);
      if (stamp[b] == a) return false;
      stamp[b] = a;
    }
  }
  return true;
}

bool is_3to1(const VectorialFunc& f) {
  std::vector<std::uint32_t> count(f.size(), 0);
  for (Element x = 0; x < f.size(); ++x) ++count[f(x)];
  int singles = 0;
  for (std::uint32_t c : count) {
    if (c == 1)
      ++singles;
    else if (c != 0 && c != 3)
      return false;
  }
  return singles == 1;
}

int algebraic_degree(const VectorialFunc& f) { return f.degree(); }
bool is_quadratic(const VectorialFunc& f) { return f.degree() == 2; }
bool is_affine(const VectorialFunc& f) { return f.degree() <= 1; }

bool is_permutation(const VectorialFunc& f) {
  std::vector<bool> seen(f.size(), false);
  for (Element y : f.table()) {
    if (seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

std::uint32_t hamming_distance(const VectorialFunc& f, const VectorialFunc& g) {
  if (f.n() != g.n()) throw PreconditionError("Hamming distance needs functions of the same dimension");
  std::uint32_t d = 0;
  for (Element x = 0; x < f.size(); ++x) d += f(x) != g(x);
  return d;
}

VectorialFunc translate_output(const VectorialFunc& f, Element c) {
  std::vector<Element> table(f.table().begin(), f.table().end());
  for (Element& y : table) y ^= c;
  return VectorialFunc(f.n(), std::move(table), f.field());
}

}  // namespace apnforge
