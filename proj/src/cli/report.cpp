#include <chrono>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "apnforge/cli.hpp"
#include "json.hpp"

namespace apnforge::cli {
namespace {

using Json = nlohmann::ordered_json;

template <class F>
auto timed(std::optional<double>& slot, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  auto result = body();
  slot = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::string hex64(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Json histogram_json(const Histogram& h) {
  Json out = Json::object();
  for (const auto& [k, c] : h) out[std::to_string(k)] = c;
  return out;
}

Json optional_json(const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json rows_json(const BoundReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"family", family_tag(r.family)},
                    {"formula_value", r.formula_value},
                    {"exact_value", optional_json(r.exact_value)}});
  return rows;
}

}  // namespace

bool AnalysisReport::consistent() const {
  if (ab && !(apn && plateaued)) return false;
  if (quadratic && !plateaued) return false;
  return true;
}

AnalysisReport analyze(const ResolvedFunction& fn, const RunOptions& options) {
  const auto& f = fn.f;
  const int n = f.n();
  const unsigned workers = effective_workers(options);
  const bool streamed = options.histogram_only || n > max_table_n();

  AnalysisReport r;
  r.identity = fn.identity;
  r.family = family_name(fn.spec.family);
  r.n = n;
  r.hash = table_hash(f);
  r.exponent = fn.exponent;
  r.differential_uniformity = differential_uniformity(f);
  r.apn = r.differential_uniformity == 2;
  r.degree = f.degree();
  r.quadratic = is_quadratic(f);
  r.three_to_one = is_3to1(f);
  r.power = fn.exponent.has_value();

  r.spectral = timed(r.spectral_ms, [&] { return spectral_summary(f, workers); });
  r.plateaued = r.spectral.plateaued;
  r.ab = r.spectral.ab;
  if (r.spectral.fourth_moment_apn != r.apn)
    throw InvariantError("fourth-moment APN test disagrees with the derivative count");
  if (!r.consistent()) throw InvariantError("classification flags are inconsistent");

  if (r.apn) {
    r.exclude = timed(r.exclude_ms, [&] {
      if (streamed) {
        StreamOptions so;
        so.workers = workers;
        so.memory_budget = options.memory_mib << 20;
        return exclude_summary_streamed(f, so);
      }
      return summarize(exclude_spectrum_fast(f, workers));
    });
    r.verdict = plateaued_nonequivalence_test(n, r.exclude->histogram);
    if (r.plateaued && r.verdict->not_plateaued)
      throw InvariantError("plateaued function with a multiplicity count not divisible by 2^n");
    r.bounds = timed(r.bounds_ms, [&] {
      BoundInputs in;
      in.f = &f;
      in.monomial_exponent = fn.exponent;
      in.e_min = r.exclude->e_min;
      in.spectral = r.spectral;
      in.workers = workers;
      return bound_report(in);
    });
  }
  if (!options.timings) r.spectral_ms = r.exclude_ms = r.bounds_ms = std::nullopt;
  return r;
}

void write_bounds_text(const BoundReport& report, std::ostream& out) {
  out << std::left << std::setw(20) << "family" << std::setw(10) << "formula" << "exact\n";
  for (const auto& row : report.rows) {
    out << std::setw(20) << family_tag(row.family) << std::setw(10) << row.formula_value;
    out << (row.exact_value ? std::to_string(*row.exact_value) : "-") << '\n';
  }
  out << std::right;
}

std::string bounds_json(const std::string& identity, const BoundReport& report) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["function"] = identity;
  j["n"] = report.n;
  j["rows"] = rows_json(report);
  return j.dump(2);
}

void write_report_text(const AnalysisReport& r, std::ostream& out) {
  auto line = [&](const char* key) -> std::ostream& { return out << std::left << std::setw(14) << key << std::right; };
  line("function") << r.identity << '\n';
  std::string flags;
  auto flag = [&](bool on, const char* name) {
    if (!on) return;
    if (!flags.empty()) flags += ' ';
    flags += name;
  };
  flag(r.apn, "apn");
  flag(r.ab, "ab");
  flag(r.plateaued, "plateaued");
  flag(r.quadratic, "quadratic");
  flag(r.three_to_one, "three_to_one");
  flag(r.power, "power");
  line("flags") << (flags.empty() ? "-" : flags) << '\n';
  if (r.exponent) line("exponent") << *r.exponent << '\n';
  line("degree") << r.degree << '\n';
  line("delta") << r.differential_uniformity << '\n';
  line("linearity") << r.spectral.linearity << " (nonlinearity "
                    << nonlinearity_from_linearity(r.n, r.spectral.linearity) << ", bent components "
                    << r.spectral.bent_count << ")\n";
  if (r.exclude) {
    line("e_min") << r.exclude->e_min << '\n';
    line("histogram");
    bool first = true;
    for (const auto& [k, c] : r.exclude->histogram) {
      out << (first ? "" : " ") << k << ':' << c;
      first = false;
    }
    out << '\n';
  }
  if (r.verdict) line("verdict") << r.verdict->describe(r.n) << '\n';
  if (r.bounds) {
    out << "bounds\n";
    write_bounds_text(*r.bounds, out);
  }
  auto ms = [&](const char* key, const std::optional<double>& v) {
    if (v) line(key) << std::fixed << std::setprecision(1) << *v << " ms\n";
  };
  ms("t_spectral", r.spectral_ms);
  ms("t_exclude", r.exclude_ms);
  ms("t_bounds", r.bounds_ms);
}

void write_report_json(const AnalysisReport& r, std::ostream& out) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["function"] = {{"identity", r.identity},
                   {"family", r.family},
                   {"n", r.n},
                   {"hash", hex64(r.hash)},
                   {"exponent", r.exponent ? Json(*r.exponent) : Json(nullptr)}};
  j["flags"] = {{"apn", r.apn},         {"ab", r.ab},
                {"plateaued", r.plateaued}, {"quadratic", r.quadratic},
                {"three_to_one", r.three_to_one}, {"power", r.power}};
  j["degree"] = r.degree;
  j["differential_uniformity"] = r.differential_uniformity;
  j["spectrum"] = {{"linearity", r.spectral.linearity},
                   {"nonlinearity", nonlinearity_from_linearity(r.n, r.spectral.linearity)},
                   {"bent_components", r.spectral.bent_count}};
  if (r.exclude)
    j["exclude"] = {{"e_min", r.exclude->e_min}, {"histogram", histogram_json(r.exclude->histogram)}};
  else
    j["exclude"] = nullptr;
  if (r.verdict)
    j["verdict"] = {{"not_plateaued", r.verdict->not_plateaued},
                    {"witness_multiplicity", r.verdict->witness_multiplicity},
                    {"witness_count", r.verdict->witness_count},
                    {"text", r.verdict->describe(r.n)}};
  else
    j["verdict"] = nullptr;
  j["bounds"] = r.bounds ? rows_json(*r.bounds) : Json::array();
  if (r.spectral_ms)
    j["timings_ms"] = {{"spectral", *r.spectral_ms},
                       {"exclude", r.exclude_ms ? Json(*r.exclude_ms) : Json(nullptr)},
                       {"bounds", r.bounds_ms ? Json(*r.bounds_ms) : Json(nullptr)}};
  out << j.dump(2) << '\n';
}

}  // namespace apnforge::cli
