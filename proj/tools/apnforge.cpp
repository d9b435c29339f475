#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "apnforge/cli.hpp"

namespace cli = apnforge::cli;

namespace {

void add_function_flags(CLI::App* app, cli::FunctionOptions& fn) {
  app->add_option("--family", fn.family, "gold, kasami, welch, niho, inverse, dobbertin, blep, monomial");
  app->add_option("--n", fn.n, "dimension");
  app->add_option("--k", fn.k, "Gold/Kasami parameter");
  app->add_option("--t", fn.t, "Welch/Niho/Inverse/Dobbertin parameter");
  app->add_option("--d,--monomial-d", fn.d, "exponent of x^d");
  app->add_option("--input", fn.input, "truth-table or polynomial file");
  app->add_option("--modulus", fn.modulus, "field modulus as a hex bitmask, e.g. 0x43");
  app->add_option("--blep-conjugate", fn.blep_conjugate, "BLEP parameter u = r^(2^i), i in 0..5");
}

void add_run_flags(CLI::App* app, cli::RunOptions& run) {
  app->add_flag("--json", run.json, "JSON output");
  app->add_option("--workers", run.workers, "worker threads (default: hardware parallelism)");
  app->add_flag("--serial", run.serial, "single worker");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exclude multiplicities and distance bounds for APN functions", "apnforge"};
  app.require_subcommand(1);

  cli::FunctionOptions fn;
  cli::RunOptions run;
  int n_min = 3, n_max = 8;
  int kn = 0;
  std::string experiment;

  auto* analyze = app.add_subcommand("analyze", "classify a function and compute its exclude spectrum");
  add_function_flags(analyze, fn);
  add_run_flags(analyze, run);
  analyze->add_flag("--histogram-only", run.histogram_only, "stream the histogram without the full table");
  analyze->add_option("--memory-mib", run.memory_mib, "block budget for --histogram-only");
  analyze->add_flag("--timings", run.timings, "include wall-clock timings");

  auto* mults = app.add_subcommand("mults", "exclude multiplicity histogram as CSV");
  add_function_flags(mults, fn);
  add_run_flags(mults, run);
  mults->add_flag("--oracle", run.oracle, "brute force (n <= 8)");
  mults->add_flag("--histogram-only", run.histogram_only, "stream the histogram without the full table");
  mults->add_option("--memory-mib", run.memory_mib, "block budget for --histogram-only");
  mults->add_flag("--full", run.full, "dump a,b,mult for every off-graph point");

  auto* bound = app.add_subcommand("bound", "distance lower bounds next to the exact value");
  add_function_flags(bound, fn);
  add_run_flags(bound, run);
  bound->add_flag("--histogram-only", run.histogram_only, "stream the exact value");

  auto* kloost = app.add_subcommand("kloosterman", "Kloosterman sums K(a) as CSV");
  kloost->add_option("--n", kn, "dimension (odd)")->required();
  kloost->add_option("--modulus", fn.modulus, "field modulus as a hex bitmask");
  add_run_flags(kloost, run);

  auto* compare = app.add_subcommand("compare_oracle", "fast engine against brute force (n <= 8)");
  add_function_flags(compare, fn);
  add_run_flags(compare, run);

  auto* exper = app.add_subcommand("experiment", "catalog scans: odd-mults, nl-ortho, kaleyski");
  exper->add_option("name", experiment, "experiment name")->required();
  exper->add_option("--n-min", n_min, "smallest n");
  exper->add_option("--n-max", n_max, "largest n");
  add_run_flags(exper, run);

  auto* spectrum = app.add_subcommand("spectrum", "Walsh spectrum tools");
  spectrum->require_subcommand(1);
  auto* dump = spectrum->add_subcommand("dump", "nonzero W(u,v) as CSV u,v,W");
  add_function_flags(dump, fn);
  add_run_flags(dump, run);

  CLI11_PARSE(app, argc, argv);

  std::ios::sync_with_stdio(false);
  return cli::guarded(std::cerr, [&] {
    int code = cli::kExitOk;
    if (*analyze) code = cli::cmd_analyze(fn, run, std::cout);
    else if (*mults) code = cli::cmd_mults(fn, run, std::cout);
    else if (*bound) code = cli::cmd_bound(fn, run, std::cout);
    else if (*kloost) code = cli::cmd_kloosterman(kn, fn.modulus, run, std::cout);
    else if (*compare) code = cli::cmd_compare_oracle(fn, run, std::cout);
    else if (*exper) code = cli::cmd_experiment(experiment, n_min, n_max, run, std::cout);
    else if (*dump) code = cli::cmd_spectrum_dump(fn, run, std::cout);
    std::cout.flush();
    return code;
  });
}
