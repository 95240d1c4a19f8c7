#include "toda/report.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace toda {

bool SuiteReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_json(const std::vector<SuiteReport>& reports,
                const std::string& path) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    doc["timestamp"] = buf;
  }
  doc["suites"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json s;
    s["suite"] = r.suite;
    s["seed"] = r.seed;
    s["samples"] = r.samples;
    s["passed"] = r.all_passed();
    s["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
      nlohmann::ordered_json jc;
      jc["name"] = c.name;
      jc["ref"] = c.ref;
      jc["status"] = c.passed ? "pass" : "fail";
      jc["worst_residual"] = fmt_double(c.worst_residual);
      jc["tolerance"] = fmt_double(c.tolerance);
      jc["location"] = c.location;
      s["checks"].push_back(std::move(jc));
    }
    doc["suites"].push_back(std::move(s));
  }

  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << doc.dump(2) << '\n';
  }
  fs::rename(tmp, target);
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    for (std::size_t i = 0; i < header.size(); ++i)
      out << header[i] << (i + 1 < header.size() ? "," : "\n");
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        out << fmt_double(row[i]) << (i + 1 < row.size() ? "," : "\n");
    }
  }
  fs::rename(tmp, target);
}

}  // namespace toda
