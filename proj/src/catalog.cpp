#include "apnforge/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <numeric>

#include "apnforge/errors.hpp"

namespace apnforge {
namespace {

std::uint64_t mod_order(int n, std::uint64_t e) { return e % ((std::uint64_t{1} << n) - 1); }

void need(bool cond, const std::string& what) {
  if (!cond) throw PreconditionError(what);
}

void need_odd_split(const FamilySpec& s, const std::string& name) {
  need(s.n % 2 == 1 && s.t == (s.n - 1) / 2, name + " requires n = 2t + 1");
}

Element blep_eval(const FieldSpec& fs, Element u, Element x) {
  auto p = [&](Element a, std::uint64_t e) { return fs.pow(a, e); };
  auto m = [&](Element a, Element b) { return fs.mul(a, b); };
  Element y = p(x, 3);
  y ^= m(p(u, 17), p(x, 17) ^ p(x, 18) ^ p(x, 20) ^ p(x, 24));
  const Element inner = m(p(u, 18), p(x, 9)) ^ m(p(u, 36), p(x, 18)) ^ m(p(u, 9), p(x, 36)) ^ p(x, 21) ^ p(x, 42);
  y ^= m(p(u, 14), inner);
  const Element tr_arg = m(p(u, 52), p(x, 3)) ^ m(p(u, 6), p(x, 5)) ^ m(p(u, 19), p(x, 7)) ^ m(p(u, 28), p(x, 11)) ^
                         m(p(u, 2), p(x, 13));
  // The trace lands in F_2, embedded as the field element 0 or 1.
  if (fs.trace(tr_arg)) y ^= p(u, 14);
  return y;
}

}  // namespace

std::string family_name(Family family) {
  switch (family) {
    case Family::Gold: return "gold";
    case Family::Kasami: return "kasami";
    case Family::Welch: return "welch";
    case Family::Niho: return "niho";
    case Family::Inverse: return "inverse";
    case Family::Dobbertin: return "dobbertin";
    case Family::Blep: return "blep";
    case Family::RawMonomial: return "monomial";
    case Family::FromFile: return "file";
  }
  return "unknown";
}

Family parse_family(const std::string& name) {
  std::string lower = name;
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  for (Family f : {Family::Gold, Family::Kasami, Family::Welch, Family::Niho, Family::Inverse, Family::Dobbertin,
                   Family::Blep, Family::RawMonomial, Family::FromFile})
    if (family_name(f) == lower) return f;
  throw PreconditionError("unknown family '" + name + "'");
}

void validate(FamilySpec& s) {
  if (s.family == Family::Blep && s.n == 0) s.n = 6;
  if (s.family != Family::FromFile)
    need(s.n >= kMinFieldDim && s.n <= kMaxFieldDim, "n must lie in 2..16");
  switch (s.family) {
    case Family::Gold:
      need(s.k >= 1, "Gold requires k >= 1");
      need(std::gcd(s.k, s.n) == 1, "Gold requires gcd(k, n) = 1");
      break;
    case Family::Kasami:
      need(s.k >= 1, "Kasami requires k >= 1");
      need(std::gcd(s.k, s.n) == 1, "Kasami requires gcd(k, n) = 1");
      break;
    case Family::Welch:
    case Family::Niho:
    case Family::Inverse:
      if (s.t == 0 && s.n % 2 == 1) s.t = (s.n - 1) / 2;
      need_odd_split(s, family_name(s.family));
      need(s.t >= 1, "t must be positive");
      break;
    case Family::Dobbertin:
      if (s.t == 0 && s.n % 5 == 0) s.t = s.n / 5;
      need(s.t >= 1 && s.n == 5 * s.t, "Dobbertin requires n = 5t");
      break;
    case Family::Blep:
      need(s.n == 6, "BLEP is defined for n = 6 only");
      need(s.blep_conjugate >= 0 && s.blep_conjugate < 6, "BLEP conjugate index must lie in 0..5");
      break;
    case Family::RawMonomial:
      break;
    case Family::FromFile:
      need(!s.path.empty(), "an input file is required");
      break;
  }
}

std::optional<std::uint64_t> monomial_exponent(const FamilySpec& s) {
  const int n = s.n;
  auto p2 = [](int e) { return std::uint64_t{1} << e; };
  switch (s.family) {
    case Family::Gold: return p2(s.k) + 1;
    case Family::Kasami: return mod_order(n, p2(2 * s.k) - p2(s.k) + 1);
    case Family::Welch: return p2(s.t) + 3;
    case Family::Niho:
      if (s.t % 2 == 0) return mod_order(n, p2(s.t) + p2(s.t / 2) - 1);
      return mod_order(n, p2(s.t) + p2((3 * s.t + 1) / 2) - 1);
    case Family::Inverse: return p2(n) - 2;
    case Family::Dobbertin: return mod_order(n, p2(4 * s.t) + p2(3 * s.t) + p2(2 * s.t) + p2(s.t) - 1);
    case Family::RawMonomial: return s.d;
    default: return std::nullopt;
  }
}

bool is_ab_family(const FamilySpec& s) {
  if (s.n % 2 == 0) return false;
  return s.family == Family::Gold || s.family == Family::Kasami || s.family == Family::Welch ||
         s.family == Family::Niho;
}

std::string describe(const FamilySpec& s) {
  std::string out = family_name(s.family) + " n=" + std::to_string(s.n);
  switch (s.family) {
    case Family::Gold:
    case Family::Kasami: out += " k=" + std::to_string(s.k); break;
    case Family::Welch:
    case Family::Niho:
    case Family::Inverse:
    case Family::Dobbertin: out += " t=" + std::to_string(s.t); break;
    case Family::Blep: out += " conjugate=" + std::to_string(s.blep_conjugate); break;
    case Family::RawMonomial: out += " d=" + std::to_string(s.d); break;
    case Family::FromFile: out = "file " + s.path; break;
  }
  if (s.modulus) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%#x", s.modulus);
    out += std::string(" modulus=") + buf;
  }
  return out;
}

VectorialFunc build(FamilySpec s) {
  validate(s);
  if (s.family == Family::FromFile) return load_function(s.path, s.modulus);
  const FieldPtr field = make_field(s.n, s.modulus);
  if (s.family == Family::Inverse) return inverse_function(field);
  if (s.family == Family::Blep) {
    const Element u = blep_parameters(*field)[s.blep_conjugate];
    std::vector<Element> table(field->size());
    for (Element x = 0; x < field->size(); ++x) table[x] = blep_eval(*field, u, x);
    return VectorialFunc(s.n, std::move(table), field);
  }
  return from_monomial(field, *monomial_exponent(s));
}

std::vector<Element> blep_parameters(const FieldSpec& field) {
  if (field.n() != 6) throw PreconditionError("BLEP is defined for n = 6 only");
  Element root = 0;
  for (Element x = 2; x < field.size() && !root; ++x) {
    Element acc = 0;
    for (int i = 0; i <= 6; ++i)
      if (kBlepMinimalPolynomial >> i & 1) acc ^= field.pow(x, i);
    if (acc == 0) root = x;
  }
  if (!root) throw InvariantError("no root of the BLEP minimal polynomial");
  std::vector<Element> roots{root};
  for (int i = 1; i < 6; ++i) roots.push_back(field.mul(roots.back(), roots.back()));
  return roots;
}

std::vector<FamilySpec> all_instances(int n_min, int n_max) {
  std::vector<FamilySpec> out;
  auto add = [&](Family family, int n, int k, int t) {
    FamilySpec s;
    s.family = family;
    s.n = n;
    s.k = k;
    s.t = t;
    out.push_back(s);
  };
  n_min = std::max(n_min, 3);
  for (int n = n_min; n <= n_max; ++n) {
    for (int k = 1; k <= n / 2; ++k)
      if (std::gcd(k, n) == 1) add(Family::Gold, n, k, 0);
    for (int k = 1; k <= n / 2; ++k)
      if (std::gcd(k, n) == 1) add(Family::Kasami, n, k, 0);
    if (n % 2 == 1) {
      const int t = (n - 1) / 2;
      add(Family::Welch, n, 0, t);
      add(Family::Niho, n, 0, t);
      add(Family::Inverse, n, 0, t);
    }
    if (n % 5 == 0) add(Family::Dobbertin, n, 0, n / 5);
    if (n == 6) add(Family::Blep, 6, 0, 0);
  }
  return out;
}

std::uint64_t table_hash(const VectorialFunc& f) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto feed = [&](std::uint32_t v) {
    for (int i = 0; i < 4; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 0x100000001b3ull;
    }
  };
  feed(static_cast<std::uint32_t>(f.n()));
  for (Element y : f.table()) feed(y);
  return h;
}

}  // namespace apnforge
