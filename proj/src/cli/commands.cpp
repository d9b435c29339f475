#include <ostream>
#include <string>

#include "apnforge/cli.hpp"
#include "json.hpp"

namespace apnforge::cli {
namespace {

using Json = nlohmann::ordered_json;

void need_table_size(int n) {
  if (n > max_table_n())
    throw PreconditionError("n = " + std::to_string(n) + " exceeds the table size guard of " +
                            std::to_string(max_table_n()) + "; use --histogram-only or set APNFORGE_MAX_N");
}

void need_oracle_size(int n) {
  if (n > kMaxOracleN) throw PreconditionError("the brute-force oracle is limited to n <= 8");
}

ExcludeSummary summary_for(const VectorialFunc& f, const RunOptions& o) {
  if (o.histogram_only || f.n() > max_table_n()) {
    StreamOptions so;
    so.workers = effective_workers(o);
    so.memory_budget = o.memory_mib << 20;
    return exclude_summary_streamed(f, so);
  }
  return summarize(exclude_spectrum_fast(f, effective_workers(o)));
}

}  // namespace

int cmd_analyze(const FunctionOptions& fn, const RunOptions& o, std::ostream& out) {
  // above the table guard analyze streams on its own
  const auto report = analyze(resolve(fn), o);
  if (o.json)
    write_report_json(report, out);
  else
    write_report_text(report, out);
  return kExitOk;
}

int cmd_mults(const FunctionOptions& fn, const RunOptions& o, std::ostream& out) {
  const auto r = resolve(fn);
  const int n = r.f.n();
  if (o.full && o.histogram_only) throw PreconditionError("--full needs the multiplicity table; drop --histogram-only");
  if (!is_apn(r.f)) throw PreconditionError("exclude multiplicities need an APN function (Sidon graph)");

  ExcludeSummary summary;
  std::optional<ExcludeSpectrum> spectrum;
  if (o.oracle) {
    need_oracle_size(n);
    spectrum = exclude_spectrum_oracle(r.f);
  } else if (!o.histogram_only) {
    need_table_size(n);
    spectrum = exclude_spectrum_fast(r.f, effective_workers(o));
  }
  summary = spectrum ? summarize(*spectrum) : summary_for(r.f, o);

  if (o.json) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["function"] = r.identity;
    j["n"] = n;
    j["e_min"] = summary.e_min;
    Json h = Json::object();
    for (const auto& [k, c] : summary.histogram) h[std::to_string(k)] = c;
    j["histogram"] = h;
    if (o.full) {
      Json points = Json::array();
      for (Element a = 0; a < r.f.size(); ++a)
        for (Element b = 0; b < r.f.size(); ++b)
          if (spectrum->at(a, b) != kOnGraph) points.push_back({a, b, spectrum->at(a, b)});
      j["points"] = points;
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  if (o.full) {
    out << "a,b,mult\n";
    for (Element a = 0; a < r.f.size(); ++a)
      for (Element b = 0; b < r.f.size(); ++b)
        if (spectrum->at(a, b) != kOnGraph) out << a << ',' << b << ',' << spectrum->at(a, b) << '\n';
    return kExitOk;
  }
  out << "multiplicity,count\n";
  for (const auto& [k, c] : summary.histogram) out << k << ',' << c << '\n';
  return kExitOk;
}

int cmd_bound(const FunctionOptions& fn, const RunOptions& o, std::ostream& out) {
  const auto r = resolve(fn);
  if (!is_apn(r.f)) throw PreconditionError("distance bounds apply to APN functions only");
  BoundInputs in;
  in.f = &r.f;
  in.monomial_exponent = r.exponent;
  in.e_min = summary_for(r.f, o).e_min;
  in.workers = effective_workers(o);
  const auto report = bound_report(in);
  if (o.json) {
    out << bounds_json(r.identity, report) << '\n';
  } else {
    out << r.identity << '\n';
    write_bounds_text(report, out);
  }
  return kExitOk;
}

int cmd_kloosterman(int n, const std::string& modulus, const RunOptions& o, std::ostream& out) {
  if (n % 2 == 0) throw PreconditionError("Kloosterman table is computed for odd n only");
  const auto field = make_field(n, parse_modulus(modulus));
  const auto table = kloosterman_table(field, effective_workers(o));
  const auto bound = kloosterman_emin_bound(table);
  if (o.json) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["n"] = n;
    j["modulus"] = field->modulus();
    j["max_dev"] = table.max_dev;
    j["emin_bound"] = bound;
    j["values"] = table.values;
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "a,K\n";
  for (Element a = 0; a < table.values.size(); ++a) out << a << ',' << table.values[a] << '\n';
  out << "# max_dev=" << table.max_dev << " emin_bound=" << bound << '\n';
  return kExitOk;
}

int cmd_compare_oracle(const FunctionOptions& fn, const RunOptions& o, std::ostream& out) {
  const auto r = resolve(fn);
  need_oracle_size(r.f.n());
  if (!is_apn(r.f)) throw PreconditionError("exclude multiplicities need an APN function (Sidon graph)");
  const auto fast = exclude_spectrum_fast(r.f, effective_workers(o));
  const auto slow = exclude_spectrum_oracle(r.f);
  std::uint64_t mismatches = 0, points = 0;
  std::string first;
  for (std::size_t i = 0; i < fast.mult.size(); ++i) {
    if (slow.mult[i] != kOnGraph) ++points;
    if (fast.mult[i] == slow.mult[i]) continue;
    if (mismatches++ == 0) {
      const Element a = static_cast<Element>(i & (r.f.size() - 1));
      const Element b = static_cast<Element>(i >> r.f.n());
      first = "(" + std::to_string(a) + "," + std::to_string(b) + "): fast " + std::to_string(fast.mult[i]) +
              " oracle " + std::to_string(slow.mult[i]);
    }
  }
  if (o.json) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["function"] = r.identity;
    j["points"] = points;
    j["mismatches"] = mismatches;
    j["pass"] = mismatches == 0;
    out << j.dump(2) << '\n';
  } else if (mismatches == 0) {
    out << "pass: " << r.identity << ": " << points << " off-graph points agree\n";
  } else {
    out << "FAIL: " << r.identity << ": " << mismatches << " mismatches, first at " << first << '\n';
  }
  return mismatches == 0 ? kExitOk : kExitFailure;
}

int cmd_spectrum_dump(const FunctionOptions& fn, const RunOptions& o, std::ostream& out) {
  const auto r = resolve(fn);
  need_table_size(r.f.n());
  const auto s = walsh_spectrum(r.f, effective_workers(o));
  out << "u,v,W\n";
  for (Element v = 0; v < r.f.size(); ++v)
    for (Element u = 0; u < r.f.size(); ++u)
      if (const auto w = s.at(u, v); w != 0) out << u << ',' << v << ',' << w << '\n';
  return kExitOk;
}

}  // namespace apnforge::cli
