#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "toda/report.hpp"
#include "toda/spectral.hpp"

namespace toda {

struct SuiteOptions {
  int samples = 1000;
  std::uint64_t seed = 7;
  int n_lo = -3, n_hi = 3;
  double half_width = 12.0;
  int refine = 4;
  bool parallel = false;
  std::map<std::string, double> tol;  // per-check overrides by check name

  double tol_of(const std::string& name, double fallback) const {
    auto it = tol.find(name);
    return it == tol.end() ? fallback : it->second;
  }
};

SuiteReport run_exact_suite(const SuiteOptions& opt);
SuiteReport run_linearized_suite(const SuiteOptions& opt);
SuiteReport run_fourier_suite(const SuiteOptions& opt);

struct KernelOutcome {
  SuiteReport report;
  KernelReport kernel;
};
KernelOutcome run_kernel_suite(const SuiteOptions& opt);

// Grid artifacts: lump slice, symbol curves on [-5, 5], kernel modes.
std::vector<std::string> emit_exact_csv(const std::string& dir);
std::vector<std::string> emit_fourier_csv(const std::string& dir);
std::vector<std::string> emit_kernel_csv(const std::string& dir,
                                         const KernelOutcome& out);

}  // namespace toda
