// Acceptance checks 1..10. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. --long adds n = 13 and 15 to the inverse table,
// --only <k> restricts the run to one criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "apnforge/catalog.hpp"
#include "apnforge/exclude.hpp"
#include "apnforge/parallel.hpp"
#include "apnforge/spectral.hpp"
#include "apnforge/theory.hpp"

using namespace apnforge;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> failures;
  std::string summary;

  void fail(const std::string& why) {
    pass = false;
    failures.push_back(why);
  }
  std::string text() const {
    if (pass) return summary;
    std::string s;
    const std::size_t shown = std::min<std::size_t>(failures.size(), 5);
    for (std::size_t i = 0; i < shown; ++i) s += (i ? "; " : "") + failures[i];
    if (failures.size() > shown) s += "; ... " + std::to_string(failures.size() - shown) + " more";
    return s;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

std::string hist_text(const Histogram& h) {
  std::string s = "{";
  for (const auto& [k, c] : h) s += (s.size() > 1 ? ", " : "") + std::to_string(k) + ":" + std::to_string(c);
  return s + "}";
}

// Direct derivative count, kept apart from is_apn.
bool ddt_apn(const VectorialFunc& f) {
  const Element q = f.size();
  std::vector<std::uint32_t> seen(q);
  for (Element a = 1; a < q; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element x = 0; x < q; ++x)
      if (++seen[f(x) ^ f(x ^ a)] > 2) return false;
  }
  return true;
}

std::int64_t pow2(int e) { return std::int64_t{1} << e; }
std::int64_t neg2_pow(int e) { return (e % 2 ? -1 : 1) * pow2(e); }

struct Named {
  FamilySpec spec;
  VectorialFunc f;
};

std::vector<Named> catalog(int n_min, int n_max) {
  std::vector<Named> out;
  for (const auto& s : all_instances(n_min, n_max)) out.push_back({s, build(s)});
  return out;
}

FamilySpec family(Family fam, int n, int k = 0) {
  FamilySpec s;
  s.family = fam;
  s.n = n;
  s.k = k;
  return s;
}

unsigned g_workers = 1;
bool g_long = false;

// 1. e_min of the inverse graph and the Kloosterman bound.
Outcome inverse_table() {
  Outcome o;
  struct Row {
    int n;
    std::int64_t e_min, bound;
    double budget;  // seconds
  };
  std::vector<Row> rows{{3, 1, 0, 10}, {5, 3, 3, 10}, {7, 18, 17, 10}, {9, 77, 77, 10}, {11, 326, 326, 120}};
  if (g_long) {
    rows.push_back({13, 1335, 1335, 900});
    rows.push_back({15, 5401, 5401, 3600});
  }
  double small_total = 0;
  std::string got;
  for (const auto& r : rows) {
    const auto t0 = Clock::now();
    const auto f = inverse_function(default_field(r.n));
    std::int64_t e_min;
    if (r.n <= 13) {
      e_min = exclude_spectrum_fast(f, g_workers).e_min;
    } else {
      StreamOptions so;
      so.workers = g_workers;
      so.memory_budget = std::size_t{2} << 30;
      e_min = exclude_summary_streamed(f, so).e_min;
    }
    const auto bound = kloosterman_emin_bound(kloosterman_table(f.field(), g_workers));
    const double secs = seconds_since(t0);
    got += (got.empty() ? "" : " ") + std::to_string(r.n) + ":" + std::to_string(e_min) + "/" +
           std::to_string(bound) + "(" + fmt_seconds(secs) + ")";
    if (e_min != r.e_min) o.fail("n=" + std::to_string(r.n) + " e_min " + std::to_string(e_min));
    if (bound != r.bound) o.fail("n=" + std::to_string(r.n) + " bound " + std::to_string(bound));
    if (r.n <= 9) {
      small_total += secs;
    } else if (secs > r.budget) {
      o.fail("n=" + std::to_string(r.n) + " took " + fmt_seconds(secs));
    }
  }
  if (small_total > 10) o.fail("n<=9 took " + fmt_seconds(small_total));
  o.summary = "n:e_min/bound " + got;
  return o;
}

// 2. AB graphs: every off-graph multiplicity is (2^n - 2)/6.
Outcome ab_uniformity() {
  Outcome o;
  std::vector<FamilySpec> specs;
  for (int n : {3, 5, 7})
    for (int k = 1; k <= n / 2; ++k)
      if (std::gcd(k, n) == 1) specs.push_back(family(Family::Gold, n, k));
  for (int n : {5, 7})
    for (int k = 1; k <= n / 2; ++k)
      if (std::gcd(k, n) == 1) specs.push_back(family(Family::Kasami, n, k));
  for (const auto& s : specs) {
    const auto spec = exclude_spectrum_fast(build(s), g_workers);
    const std::int64_t want = (pow2(s.n) - 2) / 6;
    std::uint64_t bad = 0;
    for (auto m : spec.mult)
      if (m != kOnGraph && m != want) ++bad;
    if (bad) o.fail(describe(s) + ": " + std::to_string(bad) + " points differ from " + std::to_string(want));
  }
  o.summary = std::to_string(specs.size()) + " Gold/Kasami instances uniform";
  return o;
}

// 3. x^3 for n = 4, 6, 8 has a two-valued histogram.
Outcome three_to_one_spectrum() {
  Outcome o;
  std::string got;
  for (int n : {4, 6, 8}) {
    const std::int64_t q = pow2(n);
    const std::int64_t alpha = (q + neg2_pow(n / 2 + 1) - 2) / 6;
    const std::int64_t beta = (q + neg2_pow(n / 2) - 2) / 6;
    const Histogram want{{alpha, static_cast<std::uint64_t>(q * (q - 1) / 3)},
                         {beta, static_cast<std::uint64_t>(2 * q * (q - 1) / 3)}};
    const auto h = exclude_spectrum_fast(from_monomial(default_field(n), 3), g_workers).histogram;
    if (h != want) o.fail("n=" + std::to_string(n) + " got " + hist_text(h) + " want " + hist_text(want));
    got += (got.empty() ? "" : " ") + std::to_string(n) + ":" + hist_text(h);
  }
  o.summary = got;
  return o;
}

// 4. BLEP histogram and the plateaued non-equivalence witness.
Outcome blep() {
  Outcome o;
  const Histogram want{{5, 40}, {7, 360}, {9, 1296}, {11, 1616}, {13, 648}, {15, 72}};
  const auto h = exclude_spectrum_fast(build(family(Family::Blep, 6)), g_workers).histogram;
  if (h != want) o.fail("histogram " + hist_text(h));
  const auto v = plateaued_nonequivalence_test(6, h);
  if (!v.not_plateaued || v.witness_count != 40 || v.witness_count % 64 == 0)
    o.fail("verdict: " + v.describe(6));
  o.summary = hist_text(h) + "; " + v.describe(6);
  return o;
}

// 5. Fast engine against brute force.
Outcome oracle_equivalence() {
  Outcome o;
  std::size_t exhaustive = 0;
  std::uint64_t points = 0;
  for (const auto& [spec, f] : catalog(3, 6)) {
    if (!ddt_apn(f)) continue;
    ++exhaustive;
    if (exclude_spectrum_fast(f, g_workers).mult != exclude_spectrum_oracle(f).mult)
      o.fail(describe(spec) + " differs from oracle");
  }
  std::mt19937_64 rng(0x5eed);
  for (int n : {7, 8}) {
    for (const auto& [spec, f] : catalog(n, n)) {
      if (!ddt_apn(f)) continue;
      const auto fast = exclude_spectrum_fast(f, g_workers);
      const auto graph = SidonSet::graph_of(f);
      std::uint64_t bad = 0;
      for (int i = 0; i < 10000;) {
        const Element a = rng() & (f.size() - 1), b = rng() & (f.size() - 1);
        if (b == f(a)) continue;
        ++i;
        if (fast.at(a, b) != exclude_mult_oracle(graph, pack(a, b, n))) ++bad;
      }
      points += 10000;
      if (bad) o.fail(describe(spec) + ": " + std::to_string(bad) + " sampled points differ");
    }
  }
  o.summary = std::to_string(exhaustive) + " instances exhaustive (n<=6), " + std::to_string(points) +
              " sampled points (n=7,8)";
  return o;
}

// 6. Plateaued lower bound and 2^n | m_k.
Outcome plateaued_bound() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& [spec, f] : catalog(4, 8)) {
    if (spec.n % 2 || !ddt_apn(f)) continue;
    if (!spectral_summary(f, g_workers).plateaued) continue;
    ++checked;
    const auto s = exclude_spectrum_fast(f, g_workers);
    const std::int64_t floor = pow2(spec.n / 2 - 1) - 1;
    if (s.e_min < floor) o.fail(describe(spec) + " e_min " + std::to_string(s.e_min));
    for (const auto& [k, c] : s.histogram)
      if (c % static_cast<std::uint64_t>(pow2(spec.n)) != 0)
        o.fail(describe(spec) + " m_" + std::to_string(k) + " = " + std::to_string(c));
  }
  if (checked == 0) o.fail("no plateaued instances");
  o.summary = std::to_string(checked) + " plateaued instances, n in {4,6,8}";
  return o;
}

// 7. Quadratic: odd multiplicities and mult(0,b) = (2^n - 1 - wt(b.pi))/3.
Outcome quadratic_identities() {
  Outcome o;
  std::size_t checked = 0;
  for (int n : {4, 6, 8})
    for (int k = 1; k <= n / 2; ++k) {
      if (std::gcd(k, n) != 1) continue;
      const auto spec = family(Family::Gold, n, k);
      const auto f = build(spec);
      const auto s = exclude_spectrum_fast(f, g_workers);
      ++checked;
      for (const auto& [m, c] : s.histogram)
        if (m % 2 == 0) o.fail(describe(spec) + " even multiplicity " + std::to_string(m));
      const auto pi = ortho_derivative(f);
      // pi(a) must be normal to every F(x) + F(x + a) + F(a) + F(0)
      for (Element a = 1; a < f.size(); ++a) {
        if (pi(a) == 0) o.fail(describe(spec) + " pi vanishes");
        for (Element x = 0; x < f.size(); ++x)
          if (dot(pi(a), f(x) ^ f(x ^ a) ^ f(a) ^ f(0))) {
            o.fail(describe(spec) + " pi is not a normal at a=" + std::to_string(a));
            break;
          }
      }
      for (Element b = 1; b < f.size(); ++b) {
        std::int64_t wt = 0;
        for (Element x = 0; x < f.size(); ++x) wt += dot(b, pi(x));
        if (3 * s.at(0, b) != pow2(n) - 1 - wt) o.fail(describe(spec) + " b=" + std::to_string(b));
      }
    }
  o.summary = std::to_string(checked) + " Gold instances, n in {4,6,8}";
  return o;
}

// 8. Axis values of APN power functions.
Outcome power_axis() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& [spec, f] : catalog(3, 7)) {
    if (spec.n % 2 == 0 || !monomial_exponent(spec) || !ddt_apn(f)) continue;
    ++checked;
    const auto s = exclude_spectrum_fast(f, g_workers);
    const std::int64_t want = (pow2(spec.n - 1) - 1) / 3;
    for (Element a = 1; a < f.size(); ++a)
      if (s.at(a, 0) != want || s.at(0, a) != want) {
        o.fail(describe(spec) + " a=" + std::to_string(a));
        break;
      }
  }
  o.summary = std::to_string(checked) + " APN monomials, n in {3,5,7}";
  return o;
}

// 9. Fourth moment against the derivative count.
Outcome fourth_moment() {
  Outcome o;
  std::size_t cat = 0, random = 0;
  for (const auto& [spec, f] : catalog(3, 8)) {
    ++cat;
    if (fourth_moment_apn(walsh_spectrum(f, g_workers)) != ddt_apn(f)) o.fail(describe(spec));
  }
  std::mt19937_64 rng(0xa9e);
  while (random < 100) {
    const int n = 3 + static_cast<int>(random % 6);
    std::vector<Element> t(std::size_t{1} << n);
    for (auto& y : t) y = rng() & ((1u << n) - 1);
    const VectorialFunc f(n, t);
    if (ddt_apn(f)) continue;
    ++random;
    if (fourth_moment_apn(walsh_spectrum(f, g_workers))) o.fail("random table n=" + std::to_string(n));
  }
  o.summary = std::to_string(cat) + " catalog + " + std::to_string(random) + " random non-APN tables agree";
  return o;
}

// 10. Linear structures of gamma_F.
Outcome gamma_structures() {
  Outcome o;
  std::size_t empty_checked = 0, pointwise = 0;
  for (int n : {4, 6}) {
    for (const auto& [spec, f] : catalog(n, n)) {
      if (!ddt_apn(f) || !is_3to1(f) || !spectral_summary(f, g_workers).plateaued) continue;
      ++empty_checked;
      if (!gamma_linear_structures(f, g_workers).empty()) o.fail(describe(spec) + " has a structure");
    }
  }
  for (const auto& [spec, f] : catalog(3, 8)) {
    if (!monomial_exponent(spec) || !ddt_apn(f)) continue;
    ++empty_checked;
    if (!gamma_linear_structures(f, g_workers).empty()) o.fail(describe(spec) + " has a structure");
  }
  // structure <=> max multiplicity, checked point by point on plateaued instances:
  // wt(D_(0,c) gamma) = 0 exactly where mult(a, F(a) + c) = (2^n - 1)/3.
  for (int n : {4, 6}) {
    for (const auto& [spec, f] : catalog(n, n)) {
      if (!ddt_apn(f) || !spectral_summary(f, g_workers).plateaued) continue;
      const auto s = exclude_spectrum_fast(f, g_workers);
      const auto acf = autocorrelation_spectrum(gamma_function(f), g_workers);
      const std::int64_t q = pow2(n), q2 = pow2(2 * n), top = (q - 1) / 3;
      bool any_max = false;
      for (Element c = 1; c < f.size(); ++c) {
        const std::int64_t wt = (q2 - acf[pack(0, c, n)]) / 2;
        for (Element a = 0; a < f.size(); ++a) {
          const std::int64_t m = s.at(a, f(a) ^ c);
          any_max = any_max || m == top;
          if ((m == top) != (wt == 0)) o.fail(describe(spec) + " c=" + std::to_string(c));
          if (6 * q * m != q * (q - 2) + q2 - 2 * wt) o.fail(describe(spec) + " identity at c=" + std::to_string(c));
        }
      }
      const bool structure = !gamma_linear_structures(f, g_workers).empty();
      if (structure != any_max || structure != has_max_multiplicity(s))
        o.fail(describe(spec) + " set-level equivalence");
      ++pointwise;
    }
  }
  o.summary = std::to_string(empty_checked) + " instances without structures; equivalence on " +
              std::to_string(pointwise) + " plateaued instances";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--long") == 0) g_long = true;
    else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
    else if (std::strcmp(argv[i], "--workers") == 0 && i + 1 < argc) g_workers = std::atoi(argv[++i]);
  }
  if (g_workers == 0) g_workers = default_workers();

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"inverse e_min and Kloosterman bound", inverse_table},
      {"AB uniformity", ab_uniformity},
      {"3-to-1 plateaued two-valued spectrum", three_to_one_spectrum},
      {"BLEP histogram and verdict", blep},
      {"oracle equivalence", oracle_equivalence},
      {"plateaued lower bound and divisibility", plateaued_bound},
      {"quadratic odd multiplicities and ortho-derivative identity", quadratic_identities},
      {"power-function axis values", power_axis},
      {"fourth-moment APN identity", fourth_moment},
      {"gamma_F linear structures", gamma_structures},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    if (only && id != only) continue;
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::printf("%s %d %s: %s [%s]\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first, o.text().c_str(),
                fmt_seconds(seconds_since(t0)).c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
