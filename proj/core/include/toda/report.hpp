#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace toda {

struct CheckRecord {
  std::string name;
  std::string ref;       // stable identifier of the identity being checked
  bool passed = false;
  double worst_residual = 0.0;
  double tolerance = 0.0;
  std::string location;  // worst sample point, human readable
  double elapsed_seconds = 0.0;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int samples = 0;
  std::vector<CheckRecord> checks;

  bool all_passed() const;
  void add(CheckRecord rec) { checks.push_back(std::move(rec)); }
};

// JSON document with top-level "schema": 1; written atomically (temp file in
// the target directory, then rename).  Identical configuration and seed give
// byte-identical output except for the "timestamp" field.
void write_json(const std::vector<SuiteReport>& reports,
                const std::string& path);

// value formatted with 17 significant digits (round-trip exact for double).
std::string fmt_double(double v);

// One CSV file, header row + rows of 17-significant-digit floats.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

}  // namespace toda
