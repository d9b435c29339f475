#include <random>

#include "apnforge/catalog.hpp"
#include "apnforge/errors.hpp"
#include "apnforge/exclude.hpp"
#include "apnforge/spectral.hpp"
#include "doctest.h"

using namespace apnforge;

TEST_CASE("exclude: AB x^3 over F_8 has every multiplicity 1") {
  const auto s = exclude_spectrum_fast(from_monomial(default_field(3), 3));
  CHECK(s.histogram == Histogram{{1, 56}});
  CHECK(s.e_min == 1);
}

TEST_CASE("exclude: inverse n = 5 values") {
  const auto s = exclude_spectrum_fast(inverse_function(default_field(5)));
  std::set<std::int64_t> values;
  for (const auto& [k, c] : s.histogram) values.insert(k);
  CHECK(values == std::set<std::int64_t>{3, 4, 5, 6});
  CHECK(distance_lower_bound_from_spectrum(s) == 4);
  CHECK(distance_lower_bound_from_spectrum(exclude_spectrum_fast(inverse_function(default_field(7)))) == 19);
  CHECK(distance_lower_bound_from_spectrum(exclude_spectrum_fast(from_monomial(default_field(3), 3))) == 2);
}

TEST_CASE("exclude: Gold n = 4 histogram and oracle sweep") {
  const auto f = from_monomial(default_field(4), 3);
  const auto fast = exclude_spectrum_fast(f);
  CHECK(fast.histogram == Histogram{{1, 80}, {3, 160}});
  const auto slow = exclude_spectrum_oracle(f);
  CHECK(fast.mult == slow.mult);
  std::size_t off = 0;
  for (auto m : fast.mult) off += m != kOnGraph;
  CHECK(off == 240);
}

TEST_CASE("exclude: oracle on tiny sets") {
  // {0, e1, e2, e1+e2+e3} in F_2^3
  SidonSet s(3, {0b000, 0b001, 0b010, 0b111});
  CHECK(verify_sidon(s));
  CHECK(exclude_mult_oracle(s, 0b011) == 1);  // 0 + e1 + e2
  CHECK(exclude_mult_oracle(s, 0b110) == 1);  // 0 + e1 + (e1+e2+e3)
  CHECK(exclude_mult_oracle(s, 0b100) == 1);  // e1 + e2 + (e1+e2+e3)
  CHECK(exclude_mult_oracle(s, 0b101) == 1);  // 0 + e2 + (e1+e2+e3)
  CHECK_THROWS_AS(exclude_mult_oracle(s, 0b001), PreconditionError);
  SidonSet two(3, {0b000, 0b001});
  CHECK(exclude_mult_oracle(two, 0b100) == 0);
  SidonSet plane(3, {0b000, 0b001, 0b010, 0b011});
  CHECK_FALSE(verify_sidon(plane));
}

TEST_CASE("exclude: graphs of APN functions are maximal Sidon sets") {
  for (int n : {3, 4, 5}) {
    const auto g = SidonSet::graph_of(from_monomial(default_field(n), 3));
    CHECK(verify_sidon(g));
    CHECK(is_maximal_sidon(g));
  }
  for (const auto& spec : all_instances(3, 10)) {
    CAPTURE(describe(spec));
    CHECK(exclude_spectrum_fast(build(spec)).e_min > 0);
  }
}

TEST_CASE("exclude: fast equals oracle on the catalog up to n = 6") {
  for (const auto& spec : all_instances(3, 6)) {
    const auto f = build(spec);
    if (!is_apn(f)) continue;
    CAPTURE(describe(spec));
    CHECK(exclude_spectrum_fast(f, 2).mult == exclude_spectrum_oracle(f).mult);
  }
}

TEST_CASE("exclude: non-APN input is rejected") {
  std::vector<Element> t(16, 0);
  CHECK_THROWS_AS(exclude_spectrum_fast(VectorialFunc(4, t)), PreconditionError);
}

TEST_CASE("exclude: streamed summary equals the full table") {
  for (const auto& spec : all_instances(3, 9)) {
    const auto f = build(spec);
    if (!is_apn(f)) continue;
    CAPTURE(describe(spec));
    const auto full = summarize(exclude_spectrum_fast(f));
    StreamOptions o;
    o.workers = 2;
    o.memory_budget = std::size_t{1} << 12;  // several passes
    std::size_t calls = 0;
    o.progress = [&](std::size_t, std::size_t) { ++calls; };
    const auto streamed = exclude_summary_streamed(f, o);
    CHECK(streamed.e_min == full.e_min);
    CHECK(streamed.histogram == full.histogram);
    if (std::size_t{f.size()} * f.size() * sizeof(std::int64_t) > o.memory_budget) CHECK(calls > 1);
  }
}

TEST_CASE("exclude: plateaued uniformity in a and 2^n divisibility") {
  for (const auto& spec : all_instances(3, 6)) {
    const auto f = build(spec);
    if (!plateau_profile(walsh_spectrum(f)).is_plateaued) continue;
    CAPTURE(describe(spec));
    const auto s = exclude_spectrum_fast(f);
    bool ok = true;
    for (Element a = 0; a < f.size(); ++a)
      for (Element b = 0; b < f.size(); ++b) {
        if (b == f(a)) continue;
        for (Element c = 0; c < f.size(); ++c) ok = ok && s.at(a, b) == s.at(c, b ^ f(a) ^ f(c));
      }
    CHECK(ok);
    for (const auto& [k, count] : s.histogram) CHECK(count % f.size() == 0);
  }
}

TEST_CASE("exclude: Pi invariant") {
  const auto gold4 = exclude_spectrum_fast(from_monomial(default_field(4), 3));
  const auto pi = pi_invariant(gold4);
  CHECK(pi.values == std::set<std::int64_t>{3, 9, 16});
  for (std::size_t beta = 1; beta < pi.per_beta.size(); ++beta) CHECK(pi.per_beta[beta] == pi.per_beta[0]);

  const auto f5 = from_monomial(default_field(5), 3);
  const auto ab = pi_invariant(exclude_spectrum_fast(f5));
  CHECK(ab.values == std::set<std::int64_t>{15, 32});
  for (Element beta : {0u, 3u, 17u})
    for (Element b = 0; b < 32; ++b) {
      const auto direct = pi_size_direct(f5, beta, b);
      CHECK((direct == 15 || direct == 32));
    }

  // direct enumeration matches the assembled invariant on a non-plateaued function
  FamilySpec s;
  s.family = Family::Blep;
  const auto blep = build(s);
  const auto pb = pi_invariant(exclude_spectrum_fast(blep));
  for (Element beta : {0u, 9u}) {
    Histogram direct;
    for (Element b = 0; b < 64; ++b) ++direct[pi_size_direct(blep, beta, b)];
    CHECK(direct == pb.per_beta[beta]);
  }
  CHECK(histogram_weighted_sum(Histogram{{1, 80}, {3, 160}}) == 560);
}
