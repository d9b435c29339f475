#include <random>
#include <set>

#include "apnforge/catalog.hpp"
#include "apnforge/spectral.hpp"
#include "apnforge/theory.hpp"
#include "doctest.h"

using namespace apnforge;

TEST_CASE("spectral: x^3 over F_8 is AB with linearity 4") {
  const auto f = from_monomial(default_field(3), 3);
  const auto s = walsh_spectrum(f);
  CHECK(s.linearity == 4);
  CHECK(is_ab(s));
  const auto p = plateau_profile(s);
  CHECK(p.single_amplitude);
  CHECK(p.amplitudes[1] == 4);
  CHECK(nonlinearity(f) == 2);
}

TEST_CASE("spectral: linear maps have character spectra") {
  std::vector<Element> t(16);
  for (Element x = 0; x < 16; ++x) t[x] = ((x << 1) | (x >> 3)) & 15;
  const auto s = walsh_spectrum(VectorialFunc(4, t));
  for (auto w : s.values) CHECK((w == 0 || std::abs(w) == 16));
}

TEST_CASE("spectral: inverse spectrum is Kloosterman valued") {
  const auto field = default_field(5);
  const auto s = walsh_spectrum(inverse_function(field));
  const auto k = kloosterman_table(field);
  for (Element u = 0; u < 32; ++u)
    for (Element v = 0; v < 32; ++v) {
      if (u == 0 && v == 0) continue;
      // W(u, v) sums (-1)^{u.x + v.x^{-1}}; the dot forms translate to traces.
      const Element cu = field->trace_dual(u), cv = field->trace_dual(v);
      std::int64_t expect;
      if (cu == 0 || cv == 0)
        expect = (cu == 0 && cv == 0) ? 32 : 0;
      else
        expect = k.values[field->mul(cu, cv)];
      REQUIRE(s.at(u, v) == expect);
    }
  CHECK_FALSE(is_ab(s));
}

TEST_CASE("spectral: plateau profiles") {
  const auto gold4 = walsh_spectrum(from_monomial(default_field(4), 3));
  const auto p = plateau_profile(gold4);
  CHECK(p.is_plateaued);
  for (Element v = 1; v < 16; ++v) CHECK((p.amplitudes[v] == 4 || p.amplitudes[v] == 8));
  FamilySpec s;
  s.family = Family::Blep;
  CHECK_FALSE(plateau_profile(walsh_spectrum(build(s))).is_plateaued);
  CHECK_FALSE(is_ab(gold4));
}

TEST_CASE("spectral: spectral_summary matches the full spectrum") {
  for (const auto& spec : all_instances(3, 7)) {
    const auto f = build(spec);
    const auto s = walsh_spectrum(f);
    const auto p = plateau_profile(s);
    const auto sum = spectral_summary(f, 2);
    CAPTURE(describe(spec));
    CHECK(sum.linearity == s.linearity);
    CHECK(sum.plateaued == p.is_plateaued);
    CHECK(sum.ab == is_ab(s));
    CHECK(sum.bent_count == p.bent_components.size());
    CHECK(sum.fourth_moment_apn == fourth_moment_apn(s));
  }
}

TEST_CASE("spectral: Parseval and bent counts") {
  std::mt19937 rng(17);
  for (int n = 2; n <= 8; ++n) {
    std::vector<Element> t(1u << n);
    for (auto& y : t) y = rng() & ((1u << n) - 1);
    const VectorialFunc f(n, t);
    for (Element v = 0; v < f.size(); ++v) {
      std::int64_t sq = 0;
      for (auto w : component_spectrum(f, v)) sq += std::int64_t{w} * w;
      REQUIRE(sq == std::int64_t{1} << (2 * n));
    }
  }
  for (const auto& spec : all_instances(4, 8)) {
    if (spec.n % 2) continue;
    const auto f = build(spec);
    const auto p = plateau_profile(walsh_spectrum(f));
    if (p.is_plateaued && is_apn(f)) CHECK(p.bent_components.size() % 4 == 2);
  }
}

TEST_CASE("spectral: autocorrelation") {
  BooleanFunc g(5);
  std::mt19937 rng(19);
  for (std::uint64_t x = 0; x < 32; ++x) g.set(x, rng() & 1);
  CHECK(autocorrelation(g, 0) == 32);
  const auto all = autocorrelation_spectrum(g);
  for (std::uint64_t s = 0; s < 32; ++s) CHECK(all[s] == autocorrelation(g, s));
}

TEST_CASE("spectral: amplitude sums for APN plateaued functions") {
  for (int n : {4, 5, 6, 7, 8}) {
    const auto p = plateau_profile(walsh_spectrum(from_monomial(default_field(n), 3)));
    const std::int64_t q = std::int64_t{1} << n;
    CHECK(amplitude_square_sum(p) == q * (3 * q - 2));
  }
  const auto p4 = plateau_profile(walsh_spectrum(from_monomial(default_field(4), 3)));
  for (Element c = 1; c < 16; ++c)
    CHECK(amplitude_hyperplane_sum(p4, c) >= 3 * 16 * (2 - 1) + 8 * (3 * 16 - 2));
}
