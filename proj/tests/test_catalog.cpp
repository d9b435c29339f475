#include <fstream>
#include <random>
#include <sstream>

#include "apnforge/catalog.hpp"
#include "apnforge/errors.hpp"
#include "apnforge/exclude.hpp"
#include "apnforge/spectral.hpp"
#include "doctest.h"

#ifndef APNFORGE_FIXTURE_DIR
#error "APNFORGE_FIXTURE_DIR must be defined"
#endif

using namespace apnforge;

namespace {

FamilySpec make(Family family, int n, int k = 0, int t = 0) {
  FamilySpec s;
  s.family = family;
  s.n = n;
  s.k = k;
  s.t = t;
  return s;
}

const Histogram kBlepHistogram{{5, 40}, {7, 360}, {9, 1296}, {11, 1616}, {13, 648}, {15, 72}};

}  // namespace

TEST_CASE("catalog: named instances") {
  const auto g5 = build(make(Family::Gold, 5, 1));
  CHECK(g5 == from_monomial(default_field(5), 3));
  CHECK(is_ab(walsh_spectrum(g5)));
  const auto inv7 = build(make(Family::Inverse, 7));
  CHECK(is_apn(inv7));
  CHECK_FALSE(is_ab(walsh_spectrum(inv7)));
  const auto dob = build(make(Family::Dobbertin, 5));
  CHECK(*monomial_exponent(make(Family::Dobbertin, 5, 0, 1)) == 29);
  CHECK(is_apn(dob));
  CHECK_FALSE(is_ab(walsh_spectrum(dob)));
  const auto blep = build(make(Family::Blep, 6));
  CHECK(is_apn(blep));
  CHECK(blep.degree() == 3);
  CHECK(exclude_spectrum_fast(blep).histogram == kBlepHistogram);
}

TEST_CASE("catalog: exponents") {
  CHECK(*monomial_exponent(make(Family::Gold, 7, 3)) == 9);
  CHECK(*monomial_exponent(make(Family::Kasami, 7, 2)) == 13);
  CHECK(*monomial_exponent(make(Family::Welch, 7, 0, 3)) == 11);
  CHECK(*monomial_exponent(make(Family::Niho, 7, 0, 3)) == (8 + 32 - 1) % 127);
  CHECK(*monomial_exponent(make(Family::Niho, 9, 0, 4)) == 16 + 4 - 1);
  CHECK(*monomial_exponent(make(Family::Inverse, 7, 0, 3)) == 126);
  CHECK_FALSE(monomial_exponent(make(Family::Blep, 6)).has_value());
}

TEST_CASE("catalog: validation messages") {
  auto bad_gold = make(Family::Gold, 6, 2);
  CHECK_THROWS_WITH_AS(validate(bad_gold), "Gold requires gcd(k, n) = 1", PreconditionError);
  auto bad_welch = make(Family::Welch, 6);
  CHECK_THROWS_AS(validate(bad_welch), PreconditionError);
  auto bad_dob = make(Family::Dobbertin, 7);
  CHECK_THROWS_AS(validate(bad_dob), PreconditionError);
  auto bad_blep = make(Family::Blep, 8);
  CHECK_THROWS_AS(validate(bad_blep), PreconditionError);
  CHECK_THROWS_AS(parse_family("nope"), PreconditionError);
  CHECK(parse_family("GOLD") == Family::Gold);
}

TEST_CASE("catalog: every family instance up to n = 10 is APN, AB ones up to 9") {
  for (const auto& spec : all_instances(3, 10)) {
    const auto f = build(spec);
    CAPTURE(describe(spec));
    CHECK(is_apn(f));
    if (is_ab_family(spec) && spec.n <= 9) CHECK(is_ab(walsh_spectrum(f)));
  }
}

TEST_CASE("catalog: BLEP histogram is the same for every admissible u") {
  for (int i = 0; i < 6; ++i) {
    auto s = make(Family::Blep, 6);
    s.blep_conjugate = i;
    CHECK(exclude_spectrum_fast(build(s)).histogram == kBlepHistogram);
  }
  auto s = make(Family::Blep, 6);
  s.modulus = 0x5b;  // a different field representation
  CHECK(exclude_spectrum_fast(build(s)).histogram == kBlepHistogram);
}

TEST_CASE("io: truth tables round trip") {
  std::mt19937 rng(23);
  for (int n : {1, 3, 6, 9}) {
    std::vector<Element> t(1u << n);
    for (auto& y : t) y = rng() & ((1u << n) - 1);
    const VectorialFunc f(n, t);
    CHECK(parse_truth_table(serialize_truth_table(f)) == f);
  }
  std::string short_table = "n=3\n0 1 2 3 4 5 6\n";
  CHECK_THROWS_AS(parse_truth_table(short_table), ParseError);
  CHECK_THROWS_AS(parse_truth_table("n=3\n0 1 2 3 4 5 6 8\n"), ParseError);
  CHECK_THROWS_AS(parse_truth_table("0 1 2 3"), ParseError);
}

TEST_CASE("io: polynomials") {
  const auto f = parse_function("n=5; poly: x^3");
  CHECK(f == from_monomial(default_field(5), 3));
  const auto g = parse_polynomial("n=4; poly: x^3 + 2*x + 1");
  const auto field = default_field(4);
  for (Element x = 0; x < 16; ++x) CHECK(g(x) == (field->pow(x, 3) ^ field->mul(2, x) ^ 1));
  CHECK_THROWS_AS(parse_polynomial("n=4; poly: x^^3"), ParseError);
}

TEST_CASE("io: frozen BLEP fixture") {
  const auto fixture = load_function(std::string(APNFORGE_FIXTURE_DIR) + "/blep_n6.tt");
  CHECK(fixture == build(make(Family::Blep, 6)));
}
