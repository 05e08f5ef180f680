#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <random>
#include <sstream>

#include "invcensus/cli.hpp"

using namespace invcensus;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("invcensus-cli-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("spectrum alt:7 json") {
  const auto r = run({"--no-cache", "spectrum", "alt:7", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\n  \"id\": \"alt:7\",\n  \"order\": 2520,\n  \"spectrum\": {\n    \"1\": 1,\n    \"2\": 105,\n"
        "    \"3\": 350,\n    \"4\": 630,\n    \"5\": 504,\n    \"6\": 210,\n    \"7\": 720\n  },\n"
        "  \"primes\": [\n    2,\n    3,\n    5,\n    7\n  ]\n}\n");
}

TEST_CASE("spectrum cyclic:2 table") {
  const auto r = run({"--no-cache", "spectrum", "cyclic:2"});
  CHECK(r.code == 0);
  CHECK(r.out == "group cyclic:2  order 2\nk  count\n1  1\n2  1\nprimes: 2\n");
}

TEST_CASE("spectrum alt:5 csv") {
  const auto r = run({"--no-cache", "spectrum", "alt:5", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "k,count\n1,1\n2,15\n3,20\n5,24\n");
}

TEST_CASE("involutions reports") {
  const auto psp = run({"--no-cache", "involutions", "psp4:3"});
  CHECK(psp.code == 0);
  CHECK(psp.out ==
        "group psp4:3  order 25920  involution classes 2\n"
        "class  size  centralizer  |G|/|C|\n"
        "1      45    576          45\n"
        "2      270   96           270\n"
        "I2 = 25920/576 + 25920/96 = 45 + 270 = 315\n");

  const auto psl = run({"--no-cache", "involutions", "psl3:4", "--format", "json"});
  CHECK(psl.code == 0);
  CHECK(psl.out.find("\"classSize\": 315") != std::string::npos);
  CHECK(psl.out.find("\"centralizerOrder\": 64") != std::string::npos);
  CHECK(psl.out.find("\"k2\": 1") != std::string::npos);

  const auto m11 = run({"--no-cache", "involutions", "m11", "--format", "json"});
  CHECK(m11.code == 0);
  CHECK(m11.out.find("\"totalInvolutions\": 165") != std::string::npos);
}

TEST_CASE("herzog verify json") {
  const auto r = run({"herzog", "verify", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\n  \"groupA\": \"psp4:3\",\n  \"groupB\": \"psl3:4\",\n  \"i2A\": 315,\n  \"i2B\": 315,\n"
        "  \"orderA\": 25920,\n  \"orderB\": 20160,\n  \"isCounterexample\": true\n}\n");
}

TEST_CASE("herzog classify") {
  const auto one = run({"herzog", "classify", "1", "--format", "json"});
  CHECK(one.code == 0);
  CHECK(one.out.find("\"family\": \"CYCLIC2\"") != std::string::npos);

  const auto psl = run({"herzog", "classify", "21"});
  CHECK(psl.code == 0);
  CHECK(psl.out.find("PSL2    psl2:7  21  -1") != std::string::npos);

  const auto csv = run({"herzog", "classify", "21", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.back() == '\n');

  const auto bad = run({"herzog", "classify", "315"});
  CHECK(bad.code == kExitHypothesis);
  CHECK(bad.out.empty());
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("exit codes") {
  CHECK(run({"spectrum", "foo:3"}).code == kExitUsage);
  CHECK(run({"spectrum", "psl2:6"}).code == kExitUsage);
  CHECK(run({"spectrum"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"--format", "xml", "spectrum", "alt:5"}).code == kExitUsage);
  CHECK(run({"herzog", "classify", "abc"}).code == kExitUsage);
  const auto cap = run({"--no-cache", "--cap", "100", "spectrum", "alt:6"});
  CHECK(cap.code == kExitCapacity);
  CHECK(cap.err.find("alt:6") != std::string::npos);
  CHECK(run({"--no-cache", "--cap", "1000", "scan", "collisions", "--max-order", "100000"}).code == kExitUsage);
  CHECK(run({"--no-cache", "--cap", "168", "scan", "zar", "--max-order", "168"}).code == kExitOk);
}

TEST_CASE("scan conj15 at 60 is empty") {
  const auto r = run({"--no-cache", "scan", "conj15", "--max-order", "60", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out == "[]\n");
  const auto csv = run({"--no-cache", "scan", "collisions", "--max-order", "60", "--format", "csv"});
  CHECK(csv.out == "idA,idB,i2,orderA,orderB,sameOrder,oddPrimeMatches\n");
}

TEST_CASE("scan zar at 1000 lists every catalog group") {
  const auto r = run({"--no-cache", "scan", "zar", "--max-order", "1000", "--format", "json"});
  CHECK(r.code == 0);
  std::vector<std::string> seen;
  for (std::size_t pos = 0; (pos = r.out.find("\"id\": \"", pos)) != std::string::npos;) {
    pos += 7;
    seen.push_back(r.out.substr(pos, r.out.find('"', pos) - pos));
  }
  CHECK(seen == std::vector<std::string>{"alt:5", "psl2:4", "psl2:5", "psl2:7", "psl3:2", "alt:6", "psl2:9", "psl2:8",
                                         "psl2:11"});
  CHECK(r.out.find("\"violations\": [\n") == std::string::npos);  // only empty lists
}

TEST_CASE("warm and cold cache give identical output") {
  TempDir dir;
  const std::vector<std::string> args{"--cache-dir", dir.path.string(), "scan", "collisions", "--max-order", "30000",
                                      "--format", "json"};
  const auto cold = run(args);
  CHECK(cold.code == 0);
  CHECK(fs::exists(dir.path / "psp4:3.spectrum.json"));
  const auto warm = run(args);
  CHECK(warm.out == cold.out);
  const auto uncached = run({"--no-cache", "scan", "collisions", "--max-order", "30000", "--format", "json"});
  CHECK(uncached.out == cold.out);
  CHECK(cold.out.find("\"refutes\": true") != std::string::npos);
}

TEST_CASE("cache directory from the environment, overridden by the flag") {
  TempDir env_dir;
  TempDir flag_dir;
  ::setenv("INVCENSUS_CACHE_DIR", env_dir.path.c_str(), 1);
  CHECK(run({"spectrum", "alt:5"}).code == 0);
  CHECK(fs::exists(env_dir.path / "alt:5.spectrum.json"));
  CHECK(run({"--cache-dir", flag_dir.path.string(), "spectrum", "psl2:7"}).code == 0);
  CHECK(fs::exists(flag_dir.path / "psl2:7.spectrum.json"));
  CHECK_FALSE(fs::exists(env_dir.path / "psl2:7.spectrum.json"));
  ::unsetenv("INVCENSUS_CACHE_DIR");
}

TEST_CASE("json and csv outputs end with exactly one newline") {
  for (const char* format : {"json", "csv"})
    for (std::vector<std::string> args : {std::vector<std::string>{"spectrum", "psl2:8"},
                                          std::vector<std::string>{"involutions", "alt:6"},
                                          std::vector<std::string>{"scan", "zar", "--max-order", "400"}}) {
      args.insert(args.begin(), "--no-cache");
      args.push_back("--format");
      args.push_back(format);
      const auto r = run(args);
      REQUIRE(r.code == 0);
      REQUIRE(r.out.size() >= 2);
      CHECK(r.out.back() == '\n');
      CHECK(r.out[r.out.size() - 2] != '\n');
    }
}
