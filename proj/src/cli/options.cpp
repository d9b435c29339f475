#include <cstdio>
#include <cstdlib>
#include <string>

#include "apnforge/cli.hpp"
#include "apnforge/parallel.hpp"

namespace apnforge::cli {

std::uint32_t parse_modulus(const std::string& text) {
  if (text.empty()) return 0;
  std::string digits = text;
  if (digits.size() > 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) digits = digits.substr(2);
  if (digits.empty() || digits.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos)
    throw PreconditionError("modulus must be a hexadecimal bitmask, got '" + text + "'");
  const unsigned long value = std::strtoul(digits.c_str(), nullptr, 16);
  if (value > 0x1ffff) throw PreconditionError("modulus degree exceeds 16");
  return static_cast<std::uint32_t>(value);
}

ResolvedFunction resolve(const FunctionOptions& o) {
  FamilySpec spec;
  spec.modulus = parse_modulus(o.modulus);
  if (!o.input.empty()) {
    if (!o.family.empty() && o.family != "file") throw PreconditionError("--input and --family are exclusive");
    spec.family = Family::FromFile;
    spec.path = o.input;
  } else if (!o.family.empty()) {
    spec.family = parse_family(o.family);
  } else if (o.d != 0) {
    spec.family = Family::RawMonomial;
  } else {
    throw PreconditionError("give --family, --monomial-d or --input");
  }
  spec.n = o.n;
  spec.k = o.k;
  spec.t = o.t;
  spec.d = o.d;
  spec.blep_conjugate = o.blep_conjugate;
  if (spec.family == Family::RawMonomial && spec.d == 0) throw PreconditionError("monomial needs --d");
  validate(spec);

  auto f = build(spec);
  spec.n = f.n();
  if (f.n() > kMaxN) throw PreconditionError("n must be at most 16");
  ResolvedFunction r{spec, std::move(f), monomial_exponent(spec), ""};
  char hash[24];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(table_hash(r.f)));
  r.identity = describe(spec) + " hash=" + hash;
  return r;
}

unsigned effective_workers(const RunOptions& o) {
  if (o.serial) return 1;
  if (o.workers > 0) return o.workers;
  return default_workers();
}

int max_table_n() {
  if (const char* env = std::getenv("APNFORGE_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= kMinFieldDim && v <= kMaxN) return static_cast<int>(v);
  }
  return 13;
}

}  // namespace apnforge::cli
