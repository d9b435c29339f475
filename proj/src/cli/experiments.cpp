// Scans over the catalog for questions left open. These report what they find
// and never fail on an outcome.

#include <algorithm>
#include <ostream>
#include <string>

#include "apnforge/cli.hpp"

namespace apnforge::cli {
namespace {

struct Instance {
  FamilySpec spec;
  VectorialFunc f;
};

std::vector<Instance> apn_instances(int n_min, int n_max) {
  std::vector<Instance> out;
  for (auto spec : all_instances(n_min, std::min(n_max, max_table_n()))) {
    auto f = build(spec);
    if (is_apn(f)) out.push_back({spec, std::move(f)});
  }
  return out;
}

// Even multiplicities on plateaued graphs would refute the odd-multiplicity conjecture.
int odd_mults(int n_min, int n_max, unsigned workers, std::ostream& out) {
  out << "function,plateaued,quadratic,even_points\n";
  std::uint64_t counterexamples = 0;
  for (const auto& [spec, f] : apn_instances(n_min, n_max)) {
    const bool plateaued = spectral_summary(f, workers).plateaued;
    const auto summary = summarize(exclude_spectrum_fast(f, workers));
    std::uint64_t even = 0;
    for (const auto& [k, c] : summary.histogram)
      if (k % 2 == 0) even += c;
    if (plateaued && even > 0) ++counterexamples;
    out << describe(spec) << ',' << plateaued << ',' << is_quadratic(f) << ',' << even << '\n';
  }
  out << "# plateaued instances with an even multiplicity: " << counterexamples << '\n';
  return kExitOk;
}

// Can the ortho-derivative of a quadratic APN function have nonlinearity 0?
int nl_ortho(int n_min, int n_max, std::ostream& out) {
  out << "function,nl_pi\n";
  std::int64_t least = -1;
  for (const auto& [spec, f] : apn_instances(n_min, n_max)) {
    if (!is_quadratic(f)) continue;
    const std::int64_t nl = nonlinearity(ortho_derivative(f));
    least = least < 0 ? nl : std::min(least, nl);
    out << describe(spec) << ',' << nl << '\n';
  }
  out << "# minimum NL(pi_F): " << (least < 0 ? std::string("none") : std::to_string(least)) << '\n';
  return kExitOk;
}

// mult(0,1) = mult(1,0) = mult_{x^3}(0,1) for APN power functions.
int kaleyski(int n_min, int n_max, unsigned workers, std::ostream& out) {
  out << "function,mult_0_1,mult_1_0,cube_mult_0_1,equal\n";
  std::uint64_t unequal = 0;
  for (const auto& [spec, f] : apn_instances(n_min, n_max)) {
    if (!monomial_exponent(spec)) continue;
    const auto s = exclude_spectrum_fast(f, workers);
    const auto cube = exclude_spectrum_fast(from_monomial(f.field(), 3), workers);
    const auto m01 = s.at(0, 1), m10 = s.at(1, 0), c01 = cube.at(0, 1);
    const bool equal = m01 == m10 && m01 == c01;
    unequal += !equal;
    out << describe(spec) << ',' << m01 << ',' << m10 << ',' << c01 << ',' << equal << '\n';
  }
  out << "# instances where the three values differ: " << unequal << '\n';
  return kExitOk;
}

}  // namespace

int cmd_experiment(const std::string& name, int n_min, int n_max, const RunOptions& o, std::ostream& out) {
  if (n_min > n_max) throw PreconditionError("empty n range");
  const unsigned workers = effective_workers(o);
  if (name == "odd-mults") return odd_mults(n_min, n_max, workers, out);
  if (name == "nl-ortho") return nl_ortho(n_min, n_max, out);
  if (name == "kaleyski") return kaleyski(n_min, n_max, workers, out);
  throw PreconditionError("unknown experiment '" + name + "' (odd-mults, nl-ortho, kaleyski)");
}

}  // namespace apnforge::cli
