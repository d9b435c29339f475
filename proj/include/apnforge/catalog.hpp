#pragma once

// Named APN functions and the text formats for user-supplied ones.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "apnforge/vbf.hpp"

namespace apnforge {

enum class Family { Gold, Kasami, Welch, Niho, Inverse, Dobbertin, Blep, RawMonomial, FromFile };

std::string family_name(Family family);
/// Case-insensitive; throws PreconditionError for unknown names.
Family parse_family(const std::string& name);

struct FamilySpec {
  Family family = Family::Gold;
  int n = 0;
  int k = 0;
  int t = 0;
  std::uint64_t d = 0;
  std::uint32_t modulus = 0;
  std::string path;
  /// BLEP parameter u = r^{2^i}, r the least root of x^6 + x^4 + x^3 + x + 1.
  int blep_conjugate = 0;
};

/// Throws PreconditionError naming the unmet family condition.
void validate(FamilySpec& spec);
/// Exponent d of x -> x^d for monomial families (the inverse uses 2^n - 2).
std::optional<std::uint64_t> monomial_exponent(const FamilySpec& spec);
/// Belongs to an almost bent family (Gold, Kasami, Welch, Niho with n odd).
bool is_ab_family(const FamilySpec& spec);
std::string describe(const FamilySpec& spec);

VectorialFunc build(FamilySpec spec);

/// Minimal polynomial required of the BLEP parameter u.
inline constexpr std::uint32_t kBlepMinimalPolynomial = 0x5b;
/// Roots of kBlepMinimalPolynomial in `field` (n = 6), in Frobenius order from the least.
std::vector<Element> blep_parameters(const FieldSpec& field);

/// Every admissible family instance with n in [n_min, n_max] (k up to n/2 for
/// Gold and Kasami), plus BLEP when 6 is in range.
std::vector<FamilySpec> all_instances(int n_min, int n_max);

/// Truth-table text: "n=<int>" then 2^n hexadecimal outputs.
VectorialFunc parse_truth_table(const std::string& text);
/// "n=<int>; poly: <coeff_hex>*x^<exp> + ..." over the given or default modulus.
VectorialFunc parse_polynomial(const std::string& text, std::uint32_t modulus = 0);
/// Dispatches on the presence of "poly:".
VectorialFunc parse_function(const std::string& text, std::uint32_t modulus = 0);
std::string serialize_truth_table(const VectorialFunc& f);

VectorialFunc load_function(const std::string& path, std::uint32_t modulus = 0);
void save_truth_table(const VectorialFunc& f, const std::string& path);

/// 64-bit FNV-1a over the truth table, used as a function identity.
std::uint64_t table_hash(const VectorialFunc& f);

}  // namespace apnforge
