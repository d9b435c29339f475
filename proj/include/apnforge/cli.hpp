#pragma once

// Subcommand bodies behind the apnforge binary. Each writes to `out` and
// returns the process exit code.

#include <cstdint>
#include <new>
#include <ostream>
#include <optional>
#include <string>

#include "apnforge/catalog.hpp"
#include "apnforge/errors.hpp"
#include "apnforge/exclude.hpp"
#include "apnforge/spectral.hpp"
#include "apnforge/theory.hpp"

namespace apnforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // invariant failure or failed comparison
inline constexpr int kExitUsage = 2;    // bad input or unmet precondition

inline constexpr int kSchemaVersion = 1;

struct FunctionOptions {
  std::string family;
  int n = 0;
  int k = 0;
  int t = 0;
  std::uint64_t d = 0;
  std::string input;
  std::string modulus;  // hex bitmask, "" = default
  int blep_conjugate = 0;
};

struct RunOptions {
  bool json = false;
  bool serial = false;
  unsigned workers = 0;  // 0 = hardware parallelism
  bool oracle = false;
  bool histogram_only = false;
  bool full = false;     // mults: dump every off-graph point
  bool timings = false;  // analyze: include wall-clock timings (not deterministic)
  std::size_t memory_mib = 1024;
};

struct ResolvedFunction {
  FamilySpec spec;
  VectorialFunc f;
  std::optional<std::uint64_t> exponent;
  std::string identity;
};

/// Hex with or without 0x; throws PreconditionError.
std::uint32_t parse_modulus(const std::string& text);
ResolvedFunction resolve(const FunctionOptions& options);
unsigned effective_workers(const RunOptions& options);
/// Largest n for paths that hold a 2^{2n} table; APNFORGE_MAX_N overrides.
int max_table_n();
inline constexpr int kMaxOracleN = 8;
inline constexpr int kMaxN = 16;

struct AnalysisReport {
  std::string identity;
  std::string family;
  int n = 0;
  std::uint64_t hash = 0;
  std::optional<std::uint64_t> exponent;
  bool apn = false;
  bool ab = false;
  bool plateaued = false;
  bool quadratic = false;
  bool three_to_one = false;
  bool power = false;
  int degree = 0;
  std::uint32_t differential_uniformity = 0;
  SpectralSummary spectral;
  std::optional<ExcludeSummary> exclude;
  std::optional<NonEquivalenceVerdict> verdict;
  std::optional<BoundReport> bounds;
  std::optional<double> spectral_ms, exclude_ms, bounds_ms;

  /// ab => apn and plateaued; quadratic => plateaued.
  bool consistent() const;
};

AnalysisReport analyze(const ResolvedFunction& fn, const RunOptions& options);
void write_report_text(const AnalysisReport& report, std::ostream& out);
void write_report_json(const AnalysisReport& report, std::ostream& out);
void write_bounds_text(const BoundReport& report, std::ostream& out);
std::string bounds_json(const std::string& identity, const BoundReport& report);

int cmd_analyze(const FunctionOptions& fn, const RunOptions& options, std::ostream& out);
int cmd_mults(const FunctionOptions& fn, const RunOptions& options, std::ostream& out);
int cmd_bound(const FunctionOptions& fn, const RunOptions& options, std::ostream& out);
int cmd_kloosterman(int n, const std::string& modulus, const RunOptions& options, std::ostream& out);
int cmd_compare_oracle(const FunctionOptions& fn, const RunOptions& options, std::ostream& out);
int cmd_spectrum_dump(const FunctionOptions& fn, const RunOptions& options, std::ostream& out);
int cmd_experiment(const std::string& name, int n_min, int n_max, const RunOptions& options, std::ostream& out);

/// Runs `body`, mapping library exceptions to exit codes with a message on `err`.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const InvariantError& e) {
    err << "invariant failure: " << e.what() << '\n';
    return kExitFailure;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory (try --histogram-only)\n";
    return kExitFailure;
  }
}

}  // namespace apnforge::cli
