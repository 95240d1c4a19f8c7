#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "toda/report.hpp"

using namespace toda;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

SuiteReport sample_report() {
  SuiteReport rep;
  rep.suite = "exact";
  rep.seed = 7;
  rep.samples = 10;
  CheckRecord c;
  c.name = "demo";
  c.ref = "lump-equation";
  c.passed = true;
  c.worst_residual = 1.0 / 3.0;
  c.tolerance = 1e-10;
  c.location = "n=0 x=0 y=0";
  rep.add(c);
  return rep;
}

}  // namespace

TEST_CASE("json report: schema, content, determinism modulo timestamp") {
  const fs::path dir = fs::temp_directory_path() / "toda_report_test";
  fs::create_directories(dir);
  const fs::path a = dir / "a.json", b = dir / "b.json";
  write_json({sample_report()}, a.string());
  write_json({sample_report()}, b.string());
  const std::string sa = slurp(a), sb = slurp(b);
  CHECK(sa.find("\"schema\": 1") != std::string::npos);
  CHECK(sa.find("\"ref\": \"lump-equation\"") != std::string::npos);
  CHECK(sa.find("0.33333333333333331") != std::string::npos);  // 17 digits
  auto strip_ts = [](std::string s) {
    const auto p = s.find("\"timestamp\"");
    const auto q = s.find('\n', p);
    return s.erase(p, q - p);
  };
  CHECK(strip_ts(sa) == strip_ts(sb));
  CHECK(!fs::exists(dir / "a.json.tmp"));
  fs::remove_all(dir);
}

TEST_CASE("csv writer: header plus 17-significant-digit rows") {
  const fs::path dir = fs::temp_directory_path() / "toda_csv_test";
  fs::create_directories(dir);
  const fs::path p = dir / "t.csv";
  write_csv(p.string(), {"x", "value"}, {{0.5, 1.0 / 3.0}, {1.0, 2.0}});
  const std::string s = slurp(p);
  CHECK(s == "x,value\n0.5,0.33333333333333331\n1,2\n");
  fs::remove_all(dir);
}
