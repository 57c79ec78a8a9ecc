#include "doctest.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "refeul/cache.hpp"
#include "refeul/cli.hpp"
#include "refeul/engine.hpp"
#include "refeul/report.hpp"

using namespace refeul;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("refeul-test-" + std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("coefficient table orientation") {
  CHECK(cli::coefficient_table(fast(3)) == "1 2\n2 1\n");
  CHECK(cli::coefficient_table(fast(1)) == "1\n");
  CHECK(cli::coefficient_table(fast(4)) == "1 5\n6 6\n5 1\n");
}

TEST_CASE("compute text output") {
  const auto r = run({"compute", "--n", "3", "--no-cache"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "A_3(p,q) = 1 + 2q + 2p + pq\n"
        "1 2\n"
        "2 1\n"
        "\n"
        "Atilde_3(p,q) = 1 + 2q + 2p + pq\n"
        "1 2\n"
        "2 1\n");
  const auto one = run({"compute", "--n", "1", "--no-cache"});
  CHECK(one.code == 0);
  CHECK(one.out.find("\n1\n") != std::string::npos);
}

TEST_CASE("compute json round-trips through the polynomial schema") {
  const auto r = run({"compute", "--n", "20", "--format", "json", "--no-cache"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["n"] == 20);
  const BiPoly a = bipoly_from_json(doc["A"]);
  CHECK(a == fast(20));
  CHECK(to_json(a).dump() == doc["A"].dump());
  CHECK(bipoly_from_json(doc["A_tilde"]) == a_tilde(20, a));
  // n=20 coefficients exceed 64 bits and must be printed in full
  CHECK(eval(a, 1, 1) == factorial(20));
}

TEST_CASE("compute csv") {
  const auto r = run({"compute", "--n", "2", "--format", "csv", "--no-cache"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "polynomial,p_exp,q_exp,coefficient\n"
        "A,0,0,1\nA,1,0,1\n"
        "A_tilde,0,0,1\nA_tilde,0,1,1\nA_tilde,1,0,1\nA_tilde,1,1,1\n");
}

TEST_CASE("compute with both methods") {
  const auto r = run({"compute", "--n", "9", "--method", "both", "--no-cache"});
  CHECK(r.code == 0);
  CHECK(r.out == run({"compute", "--n", "9", "--no-cache"}).out);
}

TEST_CASE("compute usage errors") {
  CHECK(run({"compute", "--n", "11", "--method", "brute", "--no-cache"}).code == 2);
  CHECK(run({"compute", "--n", "11", "--method", "both", "--no-cache"}).code == 2);
  CHECK(run({"compute", "--n", "65", "--no-cache"}).code == 2);
  CHECK(run({"compute", "--n", "65", "--fast-cap", "65", "--no-cache"}).code == 0);
  CHECK(run({"compute", "--n", "0", "--no-cache"}).code == 2);
  CHECK(run({"compute", "--n", "3", "--method", "magic"}).code == 2);
  CHECK(run({"compute", "--n", "3", "--format", "xml"}).code == 2);
  CHECK(run({"compute"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cache stores, reuses and refuses stale entries") {
  TempDir dir;
  const auto path = (dir.path / "cache.json").string();
  const auto first = run({"compute", "--n", "7", "--cache", path, "--format", "json"});
  REQUIRE(first.code == 0);
  REQUIRE(std::filesystem::exists(path));

  PolyCache cache(path, "0.1.0");
  REQUIRE(cache.entries().size() == 1);
  CHECK(cache.entries().at(7).method == "fast");
  CHECK(cache.entries().at(7).polynomial == fast(7));

  const auto second = run({"compute", "--n", "7", "--cache", path, "--format", "json"});
  CHECK(second.out == first.out);

  // A stale version or a tampered polynomial is recomputed, not trusted.
  std::ifstream in(path);
  auto doc = nlohmann::json::parse(in);
  in.close();
  doc["entries"][0]["tool_version"] = "0.0.1";
  std::ofstream(path) << doc.dump();
  CHECK(PolyCache(path, "0.1.0").lookup(7, "fast") == std::nullopt);
  CHECK(run({"compute", "--n", "7", "--cache", path, "--format", "json"}).out == first.out);
  CHECK(PolyCache(path, "0.1.0").entries().at(7).tool_version == "0.1.0");

  doc["entries"][0]["tool_version"] = "0.1.0";
  doc["entries"][0]["polynomial"] = to_json(fast(7) + BiPoly::constant(1));
  std::ofstream(path) << doc.dump();
  CHECK(PolyCache(path, "0.1.0").lookup(7, "fast") == std::nullopt);
  CHECK(run({"compute", "--n", "7", "--cache", path, "--format", "json"}).out == first.out);

  // One entry per n; a different method replaces it.
  CHECK(run({"compute", "--n", "7", "--method", "brute", "--cache", path}).code == 0);
  PolyCache after(path, "0.1.0");
  CHECK(after.entries().size() == 1);
  CHECK(after.entries().at(7).method == "brute");
}

TEST_CASE("cache path from the environment and malformed files") {
  TempDir dir;
  const auto path = dir.path / "env-cache.json";
  ::setenv(kCacheEnvVar, path.c_str(), 1);
  CHECK(run({"compute", "--n", "5"}).code == 0);
  CHECK(std::filesystem::exists(path));
  CHECK(run({"compute", "--n", "6", "--no-cache"}).code == 0);
  CHECK(PolyCache(path, "0.1.0").entries().size() == 1);
  ::unsetenv(kCacheEnvVar);

  std::ofstream(path) << "{not json";
  const auto r = run({"compute", "--n", "5", "--cache", path.string()});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning") != std::string::npos);
  CHECK(PolyCache(path, "0.1.0").entries().size() == 1);
}

TEST_CASE("verify subcommand") {
  const auto r = run({"verify", "--suite", "closed-form", "--n-max", "12"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS closed-form-odes n=1..12") != std::string::npos);
  CHECK(r.out.find("PASS closed-form-edes n=1..12") != std::string::npos);

  const auto j = run({"verify", "--suite", "diagonal", "--n-max", "10", "--format", "json"});
  CHECK(j.code == 0);
  const auto arr = nlohmann::json::parse(j.out);
  REQUIRE(arr.size() == 2);
  for (const auto& rep : arr) CHECK(report_from_json(rep).passed());

  CHECK(run({"verify", "--suite", "bogus"}).code == 2);
  CHECK(run({"verify", "--suite", "psi", "--n-max", "11"}).code == 2);
  CHECK(run({"verify", "--suite", "palindromic", "--n-max", "0"}).code == 2);
}

TEST_CASE("gamma subcommand") {
  const auto six = run({"gamma", "--n", "6"});
  CHECK(six.code == 0);
  CHECK(six.out == "n=6 c = [1, 29, 89, 61] POSITIVE\n");
  CHECK(run({"gamma", "--n", "2"}).out == "n=2 c = [1, 1] POSITIVE\n");

  const auto scan = run({"gamma", "--scan", "--n-max", "8"});
  CHECK(scan.code == 0);
  CHECK(std::count(scan.out.begin(), scan.out.end(), '\n') == 8);

  const auto j = run({"gamma", "--n", "5", "--format", "json"});
  const auto arr = nlohmann::json::parse(j.out);
  CHECK(arr[0]["c"] == nlohmann::json::parse(R"(["1","13","16"])"));
  CHECK(arr[0]["passed"] == true);

  CHECK(run({"gamma"}).code == 2);
  CHECK(run({"gamma", "--scan"}).code == 2);
  CHECK(run({"gamma", "--n", "0"}).code == 2);
  CHECK(run({"gamma", "--n", "65"}).code == 2);
}

TEST_CASE("stats subcommand") {
  const auto r = run({"stats", "--perm", "3,1,4,2"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "perm = 3,1,4,2\n"
        "odes=2 edes=0 oasc=0 easc=1\n"
        "Odes={1,3} Edes={} Oasc={} Easc={2}\n"
        "r = 2,4,1,3  odes=0 edes=1\n"
        "c = 2,4,1,3  odes=0 edes=1\n"
        "rc = 3,1,4,2  odes=2 edes=0\n");

  const auto one = run({"stats", "--perm", "1"});
  CHECK(one.out.find("odes=0 edes=0 oasc=0 easc=0") != std::string::npos);

  const auto t = run({"stats", "--perm", "2,1,3"});
  CHECK(t.out.find("odes=1 edes=0 oasc=0 easc=1") != std::string::npos);
  CHECK(t.out.find("rc = 1,3,2  odes=0 edes=1") != std::string::npos);

  CHECK(run({"stats", "--perm", "1,1"}).code == 2);
  CHECK(run({"stats", "--perm", "1,3"}).code == 2);
  CHECK(run({"stats", "--perm", "a,b"}).code == 2);
  CHECK(run({"stats"}).code == 2);
}
