#pragma once

// Arithmetic in GF(2^n), 2 <= n <= 16, in a fixed polynomial basis.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace apnforge {

/// Field element as an n-bit vector over the polynomial basis {1, t, ..., t^{n-1}}.
using Element = std::uint32_t;

inline constexpr int kMinFieldDim = 2;
inline constexpr int kMaxFieldDim = 16;

/// Lexicographically least irreducible polynomial of degree n (bit i = coeff of x^i).
std::uint32_t default_modulus(int n);

/// Distinct prime factors of 2^n - 1.
std::span<const std::uint32_t> mersenne_prime_factors(int n);

/// Carry-less product of a and b reduced modulo `modulus`. Reference
/// implementation; FieldSpec::mul uses log tables built from it.
Element clmul_mod(Element a, Element b, std::uint32_t modulus);

/// True if `modulus` (degree deduced from its top bit) has no factor of degree
/// <= deg/2, checked by exhaustive polynomial division.
bool is_irreducible(std::uint32_t modulus);

class FieldSpec {
 public:
  /// Throws PreconditionError if n is out of range or the modulus is not an
  /// irreducible polynomial of degree exactly n.
  explicit FieldSpec(int n, std::uint32_t modulus = 0);

  int n() const { return n_; }
  std::uint32_t modulus() const { return modulus_; }
  /// Least element (as an integer) of multiplicative order 2^n - 1.
  Element generator() const { return generator_; }
  std::uint32_t size() const { return 1u << n_; }
  std::uint32_t mult_order() const { return (1u << n_) - 1; }

  Element mul(Element x, Element y) const {
    if (x == 0 || y == 0) return 0;
    std::uint32_t s = log_[x] + log_[y];
    if (s >= mult_order()) s -= mult_order();
    return exp_[s];
  }
  /// Multiplicative inverse with the convention inv(0) = 0.
  Element inv(Element x) const { return x == 0 ? 0 : exp_[(mult_order() - log_[x]) % mult_order()]; }
  /// x^d with pow(x, 0) = 1 for every x, including 0.
  Element pow(Element x, std::uint64_t d) const;
  /// Absolute trace Tr(x) = x + x^2 + ... + x^{2^{n-1}} as a bit.
  unsigned trace(Element x) const { return trace_[x]; }
  /// g^k for the stored generator g.
  Element gen_pow(std::uint64_t k) const { return exp_[k % mult_order()]; }
  /// Discrete log base generator(); x must be nonzero.
  std::uint32_t log(Element x) const { return log_[x]; }

  /// The element c with Tr(c * x) = popcount(u & x) mod 2 for every x,
  /// translating the dot product on F_2^n into the trace form.
  Element trace_dual(std::uint32_t u) const { return dual_[u]; }
  /// Inverse of trace_dual: the u with u.x = Tr(c * x) for every x.
  std::uint32_t dot_form(Element c) const {
    std::uint32_t u = 0;
    for (int j = 0; j < n_; ++j) u |= trace(mul(c, Element{1} << j)) << j;
    return u;
  }

  std::span<const std::uint8_t> trace_table() const { return trace_; }

 private:
  int n_;
  std::uint32_t modulus_;
  Element generator_ = 0;
  std::vector<std::uint32_t> log_;
  std::vector<Element> exp_;
  std::vector<std::uint8_t> trace_;
  std::vector<Element> dual_;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

/// Shared instance for the default modulus of each n (built lazily, thread-safe).
FieldPtr default_field(int n);

inline FieldPtr make_field(int n, std::uint32_t modulus) {
  if (modulus == 0 || modulus == default_modulus(n)) return default_field(n);
  return std::make_shared<const FieldSpec>(n, modulus);
}

}  // namespace apnforge
