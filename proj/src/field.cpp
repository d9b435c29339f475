#include "apnforge/field.hpp"

#include <array>
#include <bit>
#include <mutex>
#include <string>

#include "apnforge/errors.hpp"

namespace apnforge {
namespace {

constexpr std::array<std::uint32_t, kMaxFieldDim + 1> kDefaultModuli = {
    0, 0, 0x7, 0xb, 0x13, 0x25, 0x43, 0x83, 0x11b,
    0x203, 0x409, 0x805, 0x1009, 0x201b, 0x4021, 0x8003, 0x1002b};

// Distinct prime factors of 2^n - 1, n = 2..16.
constexpr std::uint32_t kF2[] = {3};
constexpr std::uint32_t kF3[] = {7};
constexpr std::uint32_t kF4[] = {3, 5};
constexpr std::uint32_t kF5[] = {31};
constexpr std::uint32_t kF6[] = {3, 7};
constexpr std::uint32_t kF7[] = {127};
constexpr std::uint32_t kF8[] = {3, 5, 17};
constexpr std::uint32_t kF9[] = {7, 73};
constexpr std::uint32_t kF10[] = {3, 11, 31};
constexpr std::uint32_t kF11[] = {23, 89};
constexpr std::uint32_t kF12[] = {3, 5, 7, 13};
constexpr std::uint32_t kF13[] = {8191};
constexpr std::uint32_t kF14[] = {3, 43, 127};
constexpr std::uint32_t kF15[] = {7, 31, 151};
constexpr std::uint32_t kF16[] = {3, 5, 17, 257};

int degree(std::uint32_t p) { return p == 0 ? -1 : std::bit_width(p) - 1; }

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) {
  const int dm = degree(m);
  for (int da = degree(a); da >= dm; da = degree(a)) a ^= m << (da - dm);
  return a;
}

Element slow_pow(Element x, std::uint64_t d, std::uint32_t modulus) {
  Element result = 1;
  while (d) {
    if (d & 1) result = clmul_mod(result, x, modulus);
    x = clmul_mod(x, x, modulus);
    d >>= 1;
  }
  return result;
}

void check_dim(int n) {
  if (n < kMinFieldDim || n > kMaxFieldDim)
    throw PreconditionError("field dimension n=" + std::to_string(n) + " outside supported range 2..16");
}

}  // namespace

std::uint32_t default_modulus(int n) {
  check_dim(n);
  return kDefaultModuli[n];
}

std::span<const std::uint32_t> mersenne_prime_factors(int n) {
  check_dim(n);
  switch (n) {
    case 2: return kF2;
    case 3: return kF3;
    case 4: return kF4;
    case 5: return kF5;
    case 6: return kF6;
    case 7: return kF7;
    case 8: return kF8;
    case 9: return kF9;
    case 10: return kF10;
    case 11: return kF11;
    case 12: return kF12;
    case 13: return kF13;
    case 14: return kF14;
    case 15: return kF15;
    default: return kF16;
  }
}

Element clmul_mod(Element a, Element b, std::uint32_t modulus) {
  std::uint64_t product = 0;
  for (std::uint64_t x = a; b; b >>= 1, x <<= 1)
    if (b & 1) product ^= x;
  const int dm = degree(modulus);
  for (int dp = std::bit_width(product) - 1; dp >= dm; dp = std::bit_width(product) - 1)
    product ^= static_cast<std::uint64_t>(modulus) << (dp - dm);
  return static_cast<Element>(product);
}

bool is_irreducible(std::uint32_t modulus) {
  const int n = degree(modulus);
  if (n < 1) return false;
  for (int d = 1; d <= n / 2; ++d)
    for (std::uint32_t q = 1u << d; q < (2u << d); ++q)
      if (poly_mod(modulus, q) == 0) return false;
  return true;
}

FieldSpec::FieldSpec(int n, std::uint32_t modulus) : n_(n), modulus_(modulus) {
  check_dim(n);
  if (modulus_ == 0) modulus_ = kDefaultModuli[n];
  if (degree(modulus_) != n)
    throw PreconditionError("modulus must have degree exactly n=" + std::to_string(n));
  if (!is_irreducible(modulus_)) throw PreconditionError("modulus is reducible over GF(2)");

  const std::uint32_t q = 1u << n;
  const std::uint32_t order = q - 1;
  const auto factors = mersenne_prime_factors(n);
  for (Element g = 2; g < q && generator_ == 0; ++g) {
    bool primitive = true;
    for (std::uint32_t p : factors)
      if (slow_pow(g, order / p, modulus_) == 1) primitive = false;
    if (primitive) generator_ = g;
  }
  if (generator_ == 0) throw InvariantError("no primitive element found");

  exp_.resize(order);
  log_.assign(q, 0);
  Element e = 1;
  for (std::uint32_t k = 0; k < order; ++k) {
    exp_[k] = e;
    log_[e] = k;
    e = clmul_mod(e, generator_, modulus_);
  }
  if (e != 1) throw InvariantError("generator order check failed");

  trace_.resize(q);
  for (Element x = 0; x < q; ++x) {
    Element acc = 0;
    Element sq = x;
    for (int i = 0; i < n; ++i) {
      acc ^= sq;
      sq = clmul_mod(sq, sq, modulus_);
    }
    if (acc > 1) throw InvariantError("trace left the prime field");
    trace_[x] = static_cast<std::uint8_t>(acc);
  }

  // Row i: bit j set iff Tr(t^i * t^j) = 1.
  std::vector<std::uint32_t> rows(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (trace_[clmul_mod(1u << i, 1u << j, modulus_)]) rows[i] |= 1u << j;
  dual_.assign(q, 0);
  for (Element c = 0; c < q; ++c) {
    std::uint32_t image = 0;
    for (int i = 0; i < n; ++i)
      if (c >> i & 1) image ^= rows[i];
    dual_[image] = c;
  }
}

Element FieldSpec::pow(Element x, std::uint64_t d) const {
  if (d == 0) return 1;
  if (x == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[x]) * (d % mult_order())) % mult_order()];
}

FieldPtr default_field(int n) {
  check_dim(n);
  static std::array<FieldPtr, kMaxFieldDim + 1> cache;
  static std::array<std::once_flag, kMaxFieldDim + 1> flags;
  std::call_once(flags[n], [n] { cache[n] = std::make_shared<const FieldSpec>(n); });
  return cache[n];
}

}  // namespace apnforge
