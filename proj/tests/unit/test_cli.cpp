#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "surgeon/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = surgeon::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// Set SURGEON_UPDATE_GOLDEN=1 to rewrite the files after an intended change.
void check_golden(const std::string& name, const std::string& actual) {
  const fs::path p = fs::path(SURGEON_GOLDEN_DIR) / name;
  if (std::getenv("SURGEON_UPDATE_GOLDEN")) {
    std::ofstream(p) << actual;
    return;
  }
  REQUIRE_MESSAGE(fs::exists(p), "missing golden file " << p);
  CHECK(slurp(p) == actual);
}

const std::string asset_pd = std::string(SURGEON_SOURCE_DIR) + "/assets/L.pd";

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("surgeon-cli-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("golden outputs") {
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
      {"lk.json", {"--json", "--no-cache", "lk", "--link", asset_pd}},
      {"h1.json", {"--json", "--no-cache", "h1", "--link", asset_pd, "--slopes", "0/1,-1/3,1/3,-1/2"}},
      {"slope.json", {"--json", "--no-cache", "slope", "--m", "5", "--n", "3"}},
      {"family.json", {"--json", "--no-cache", "family", "--n", "2", "--m-range", "0..2"}},
      {"cable.txt", {"--no-cache", "cable-reduce", "--slope", "-3/1", "--cable", "2,-1"}},
      {"alex.txt", {"--no-cache", "alex", "--m-range", "0..2", "--n-range", "1..2"}},
  };
  for (const auto& [name, args] : cases) {
    CAPTURE(name);
    const Run r = run(args);
    CHECK(r.code == 0);
    check_golden(name, r.out);
  }
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"h1", "--link", asset_pd}).code == 2);
  CHECK(run({"h1", "--link", asset_pd, "--slopes", "1/x"}).code == 2);
  CHECK(run({"parse", "/nonexistent/file.pd"}).code != 0);
  CHECK(run({"parse", "--pd", "X[1,2,3]"}).code != 0);
  CHECK(run({"cable-reduce", "--slope", "0/1", "--cable", "2,1"}).code == 1);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"--version"}).code == 0);
  const Run ok = run({"--no-cache", "h1", "--link", asset_pd, "--slopes", "0/1,-1/3,1/3,-1/1"});
  CHECK(ok.code == 0);
  CHECK(ok.err.empty());
}

TEST_CASE("parse prints the canonical form") {
  const Run r = run({"parse", asset_pd});
  REQUIRE(r.code == 0);
  const std::string pd = r.out.substr(r.out.find("X["));
  const Run again = run({"parse", "--pd", pd});
  CHECK(again.code == 0);
  CHECK(again.out == r.out);
}

TEST_CASE("cached and uncached runs print the same bytes") {
  const fs::path dir = scratch("cache");
  const std::vector<std::string> tail = {"alex", "--m-range", "0..1", "--n-range", "1..2"};
  std::vector<std::string> uncached = {"--no-cache"};
  std::vector<std::string> cached = {"--cache-dir", dir.string()};
  uncached.insert(uncached.end(), tail.begin(), tail.end());
  cached.insert(cached.end(), tail.begin(), tail.end());
  const Run a = run(uncached), b = run(cached), c = run(cached);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(b.out == c.out);
  CHECK(fs::exists(dir));
  fs::remove_all(dir);
}

TEST_CASE("export writes the asset and DT files") {
  const fs::path dir = scratch("export");
  const Run r = run({"export", "--out", dir.string(), "--m-range", "0..1", "--n-range", "1..1"});
  REQUIRE(r.code == 0);
  CHECK(slurp(dir / "L.pd") == slurp(asset_pd));
  CHECK(fs::exists(dir / "L.json"));
  for (const char* f : {"k_1_0.dt", "k_1_1.dt"}) {
    CAPTURE(f);
    REQUIRE(fs::exists(dir / f));
    const std::string dt = slurp(dir / f);
    CHECK_FALSE(dt.empty());
    CHECK(dt.find_first_not_of("-0123456789 \n") == std::string::npos);
  }
  fs::remove_all(dir);
}
