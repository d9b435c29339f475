#pragma once

// Functions F: F_2^n -> F_2^n as truth tables, Boolean functions as packed bit
// tables, and the elementary difference combinatorics built on them.

#include <cstdint>
#include <span>
#include <vector>

#include "apnforge/field.hpp"

namespace apnforge {

/// Index of the point (a, b) of F_2^n x F_2^n in every 2^{2n}-entry table.
inline std::uint64_t pack(std::uint32_t a, std::uint32_t b, int n) {
  return static_cast<std::uint64_t>(a) | (static_cast<std::uint64_t>(b) << n);
}
inline std::uint32_t dot(std::uint32_t u, std::uint32_t x) { return __builtin_parity(u & x); }
inline std::uint32_t dot64(std::uint64_t u, std::uint64_t x) { return __builtin_parityll(u & x); }

class VectorialFunc {
 public:
  /// Throws PreconditionError unless table has 2^n entries, all < 2^n.
  VectorialFunc(int n, std::vector<Element> table, FieldPtr field = nullptr);

  int n() const { return n_; }
  std::uint32_t size() const { return 1u << n_; }
  Element operator()(Element x) const { return table_[x]; }
  std::span<const Element> table() const { return table_; }
  /// Field the table was evaluated over, if it came from a polynomial.
  const FieldPtr& field() const { return field_; }
  /// Max ANF monomial weight over all coordinates; -1 for the zero function.
  int degree() const { return degree_; }
  /// Coefficient vectors of the ANF, indexed by monomial.
  std::span<const Element> anf() const { return anf_; }

  bool operator==(const VectorialFunc& other) const { return n_ == other.n_ && table_ == other.table_; }

 private:
  int n_;
  std::vector<Element> table_;
  FieldPtr field_;
  std::vector<Element> anf_;
  int degree_ = -1;
};

class BooleanFunc {
 public:
  explicit BooleanFunc(int n_in);
  BooleanFunc(int n_in, std::span<const std::uint8_t> bits);

  int n_in() const { return n_in_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_in_; }
  bool operator()(std::uint64_t x) const { return words_[x >> 6] >> (x & 63) & 1; }
  void set(std::uint64_t x, bool value);
  std::uint64_t weight() const;
  std::span<const std::uint64_t> words() const { return words_; }

 private:
  int n_in_;
  std::vector<std::uint64_t> words_;
};

/// Binary Moebius transform in place; truth table <-> ANF (an involution).
void moebius(std::span<Element> table);

/// x -> x^d over `field`. Exponents are reduced modulo 2^n - 1 except d = 0.
VectorialFunc from_monomial(const FieldPtr& field, std::uint64_t d);
/// x -> x^{-1} with 0 -> 0.
VectorialFunc inverse_function(const FieldPtr& field);

VectorialFunc derivative(const VectorialFunc& f, Element a);
/// Image of x -> F(x) + F(x + a) + F(a + beta), sorted.
std::vector<Element> shifted_derivative_image(const VectorialFunc& f, Element a, Element beta);

struct DifferenceTables {
  int n = 0;
  /// delta[pack(a, b)] = #{x : F(x) + F(x + a) = b}.
  std::vector<std::uint32_t> delta;
  /// gamma(pack(a, b)) = 1 iff a != 0 and delta > 0.
  BooleanFunc gamma{0};

  std::uint32_t at(Element a, Element b) const { return delta[pack(a, b, n)]; }
};

DifferenceTables difference_tables(const VectorialFunc& f, unsigned workers = 1);
/// gamma_F alone, built without materializing delta.
BooleanFunc gamma_function(const VectorialFunc& f);

/// Max over a != 0 and b of delta(a, b).
std::uint32_t differential_uniformity(const VectorialFunc& f);
bool is_apn(const VectorialFunc& f);
/// Every image point has exactly 3 preimages except one point with exactly 1.
bool is_3to1(const VectorialFunc& f);
int algebraic_degree(const VectorialFunc& f);
bool is_quadratic(const VectorialFunc& f);
bool is_affine(const VectorialFunc& f);
bool is_permutation(const VectorialFunc& f);
std::uint32_t hamming_distance(const VectorialFunc& f, const VectorialFunc& g);

/// F + c.
VectorialFunc translate_output(const VectorialFunc& f, Element c);

}  // namespace apnforge
