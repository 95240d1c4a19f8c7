#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "suites.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitCheckFailure = 2;

struct CliOptions {
  toda::SuiteOptions suite;
  std::string json_path;
  std::string csv_dir;
  std::vector<std::string> tol_raw;
  std::string n_range;
};

void add_common(CLI::App* cmd, CliOptions& o) {
  cmd->add_option("--samples", o.suite.samples, "random sample count")
      ->envname("TODA_SAMPLES");
  cmd->add_option("--seed", o.suite.seed, "RNG seed")->envname("TODA_SEED");
  cmd->add_option("--half-width", o.suite.half_width, "grid half width")
      ->envname("TODA_HALF_WIDTH");
  cmd->add_option("--refine", o.suite.refine, "grid points per lattice step")
      ->envname("TODA_REFINE");
  cmd->add_option("--tol", o.tol_raw, "tolerance override, name=value")
      ->envname("TODA_TOL");
  cmd->add_option("--json", o.json_path, "write a JSON report here")
      ->envname("TODA_JSON");
  cmd->add_option("--csv-dir", o.csv_dir, "write CSV artifacts here")
      ->envname("TODA_CSV_DIR");
  cmd->add_flag("--parallel", o.suite.parallel, "run checks across threads")
      ->envname("TODA_PARALLEL");
  cmd->add_option("--n-range", o.n_range, "lattice site range, lo:hi")
      ->envname("TODA_N_RANGE");
}

bool finish_options(CliOptions& o) {
  if (o.suite.samples < 1) {
    std::fprintf(stderr, "error: --samples must be at least 1\n");
    return false;
  }
  if (o.suite.refine < 2) {
    std::fprintf(stderr, "error: --refine must be at least 2\n");
    return false;
  }
  if (!(o.suite.half_width > 0)) {
    std::fprintf(stderr, "error: --half-width must be positive\n");
    return false;
  }
  for (const auto& s : o.tol_raw) {
    const auto eq = s.find('=');
    char* end = nullptr;
    const double v =
        eq == std::string::npos ? 0.0 : std::strtod(s.c_str() + eq + 1, &end);
    if (eq == std::string::npos || eq == 0 || end == s.c_str() + eq + 1 ||
        *end != '\0' || !(v > 0)) {
      std::fprintf(stderr, "error: bad --tol '%s', expected name=value\n",
                   s.c_str());
      return false;
    }
    o.suite.tol[s.substr(0, eq)] = v;
  }
  if (!o.n_range.empty()) {
    int lo = 0, hi = 0;
    char extra = 0;
    if (std::sscanf(o.n_range.c_str(), "%d:%d%c", &lo, &hi, &extra) != 2 ||
        lo > hi) {
      std::fprintf(stderr, "error: bad --n-range '%s', expected lo:hi\n",
                   o.n_range.c_str());
      return false;
    }
    o.suite.n_lo = lo;
    o.suite.n_hi = hi;
  }
  return true;
}

void print_report(const toda::SuiteReport& rep,
                  const std::vector<std::string>& csv_files) {
  std::printf("suite %s: seed=%llu samples=%d\n", rep.suite.c_str(),
              static_cast<unsigned long long>(rep.seed), rep.samples);
  for (const auto& c : rep.checks)
    std::printf("  [%s] %-38s worst=%.3e tol=%.1e (%s)\n",
                c.passed ? "pass" : "FAIL", c.name.c_str(), c.worst_residual,
                c.tolerance, c.ref.c_str());
  for (const auto& f : csv_files) std::printf("  wrote %s\n", f.c_str());
}

int run(const std::string& which, CliOptions& o) {
  if (!finish_options(o)) return kExitUsage;

  std::vector<toda::SuiteReport> reports;
  std::vector<std::string> csv_files;
  toda::KernelOutcome kernel;
  bool ran_kernel = false;

  const bool all = which == "all" || which == "report";
  if (all || which == "exact") {
    reports.push_back(toda::run_exact_suite(o.suite));
    if (!o.csv_dir.empty())
      for (auto& f : toda::emit_exact_csv(o.csv_dir)) csv_files.push_back(f);
  }
  if (all || which == "linearized")
    reports.push_back(toda::run_linearized_suite(o.suite));
  if (all || which == "fourier") {
    reports.push_back(toda::run_fourier_suite(o.suite));
    if (!o.csv_dir.empty())
      for (auto& f : toda::emit_fourier_csv(o.csv_dir)) csv_files.push_back(f);
  }
  if (all || which == "kernel") {
    kernel = toda::run_kernel_suite(o.suite);
    ran_kernel = true;
    reports.push_back(kernel.report);
    if (!o.csv_dir.empty())
      for (auto& f : toda::emit_kernel_csv(o.csv_dir, kernel))
        csv_files.push_back(f);
  }

  bool ok = true;
  for (const auto& r : reports) {
    print_report(r, {});
    if (!r.all_passed()) ok = false;
  }
  if (ran_kernel) {
    std::printf("kernel grid: half_width=%g refine=%d dim=%ld iters=%d "
                "elapsed=%.1fs\n",
                o.suite.half_width, o.suite.refine,
                kernel.kernel.grid.dim(), kernel.kernel.iterations,
                kernel.kernel.elapsed_seconds);
    std::printf("  sigma =");
    for (double s : kernel.kernel.singular_values) std::printf(" %.6g", s);
    std::printf("\n  gap_ratio = %.4g\n", kernel.kernel.gap_ratio);
  }
  for (const auto& f : csv_files) std::printf("wrote %s\n", f.c_str());

  if (!o.json_path.empty()) {
    toda::write_json(reports, o.json_path);
    std::printf("wrote %s\n", o.json_path.c_str());
  }
  return ok ? 0 : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice soliton verification suites"};
  app.require_subcommand(1);

  CliOptions o;
  std::string suite_name;

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite_name, "exact, linearized, fourier, or all")
      ->required()
      ->check(CLI::IsMember({"exact", "linearized", "fourier", "all"}));
  add_common(verify, o);

  CLI::App* kernel =
      app.add_subcommand("kernel", "discrete near-kernel computation");
  add_common(kernel, o);

  CLI::App* report =
      app.add_subcommand("report", "run every suite and write a full report");
  add_common(report, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitUsage;
  }

  if (verify->parsed()) return run(suite_name, o);
  if (kernel->parsed()) return run("kernel", o);
  return run("report", o);
}
