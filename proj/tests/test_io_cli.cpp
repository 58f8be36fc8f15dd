#include <doctest.h>

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <unistd.h>

#include "mixspin/cli.hpp"
#include "mixspin/errors.hpp"
#include "mixspin/io.hpp"
#include "mixspin/rng.hpp"

using namespace mixspin;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) v.push_back(line);
  return v;
}

std::vector<std::string> fields(const std::string& row) {
  std::vector<std::string> v;
  std::size_t pos = 0;
  for (;;) {
    const auto c = row.find(',', pos);
    v.push_back(row.substr(pos, c == std::string::npos ? c : c - pos));
    if (c == std::string::npos) return v;
    pos = c + 1;
  }
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

fs::path scratch_dir() {
  const fs::path d = fs::temp_directory_path() / ("mixspin_test_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("shortest round-trip formatting") {
  SplitMix64 rng(123);
  for (int i = 0; i < 2000; ++i) {
    const double v = std::ldexp(rng.uniform(-1, 1), static_cast<int>(rng.uniform(-300, 300)));
    const std::string s = format_double(v);
    double back = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), back);
    CHECK(std::memcmp(&v, &back, sizeof v) == 0);
  }
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(NAN).empty());
}

TEST_CASE("json escaping") {
  CHECK(json_escape("a\"b\\c\n") == "a\\\"b\\\\c\\n");
  CHECK(json_escape(std::string(1, '\x01')) == "\\u0001");
}

TEST_CASE("flag value syntax") {
  CHECK(std::get<double>(cli::parse_flag_value("0.5")) == 0.5);
  const auto r = std::get<LinearRange>(cli::parse_flag_value("0:3:7"));
  CHECK(r.start == 0.0);
  CHECK(r.stop == 3.0);
  CHECK(r.count == 7);
  CHECK(std::get<std::vector<double>>(cli::parse_flag_value("1,2,4")).size() == 3);
  CHECK_THROWS_AS(cli::parse_flag_value("0:1:1"), ArgumentError);
  CHECK_THROWS_AS(cli::parse_flag_value("0:1"), ArgumentError);
  CHECK_THROWS_AS(cli::parse_flag_value("abc"), ArgumentError);
  CHECK_THROWS_AS(cli::parse_flag_value("1,,2"), ArgumentError);
}

TEST_CASE("eval prints one record") {
  const Run r = run({"eval", "--coupling", "inverse-square", "--r", "0.5", "--b", "1", "--t", "1"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] == kCsvHeader);
  const auto f = fields(ls[1]);
  REQUIRE(f.size() == 11);
  CHECK(std::stod(f[6]) == doctest::Approx(0.24549).epsilon(1e-4 / 0.24549));
  CHECK(f[10] == "Ok");
}

TEST_CASE("eval domain errors exit 3") {
  Run r = run({"eval", "--coupling", "trig", "--r", "3.141592653589793", "--b", "1", "--t", "1"});
  CHECK(r.code == 3);
  CHECK(r.err.find("Singular") != std::string::npos);
  CHECK(run({"eval", "--r", "0", "--b", "1", "--t", "1"}).code == 3);
  CHECK(run({"eval", "--r", "1", "--b", "1", "--t", "0"}).code == 3);
  CHECK(run({"sweep", "--r", "0.1:1:4", "--b", "1", "--t", "-1"}).code == 3);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"eval", "--r", "1", "--b", "1"}).code == 2);
  CHECK(run({"eval", "--coupling", "constant", "--r", "1", "--b", "1", "--t", "1"}).code == 2);
  CHECK(run({"eval", "--coupling", "constant", "--j", "1", "--r", "1", "--b", "1", "--t", "1"}).code == 2);
  CHECK(run({"eval", "--j", "1", "--b", "1", "--t", "1"}).code == 2);
  CHECK(run({"sweep", "--r", "0:1:1", "--b", "1", "--t", "1"}).code == 2);
  CHECK(run({"figure", "99"}).code == 2);
  CHECK(run({"eval", "--mode", "fancy", "--r", "1", "--b", "1", "--t", "1"}).code == 2);
  CHECK(run({"critical", "--r", "0.5", "--b", "1", "--t", "1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("constant coupling takes --j") {
  const Run r = run({"eval", "--coupling", "constant", "--j", "2", "--b", "1", "--t", "1"});
  REQUIRE(r.code == 0);
  const auto f = fields(lines(r.out)[1]);
  CHECK(f[2].empty());
  CHECK(f[3] == "2");
}

TEST_CASE("sweep row counts and DomainError rows") {
  const Run r = run({"sweep", "--coupling", "trig", "--r", "2:3.141592653589793:5", "--b", "0.5,1", "--t", "1"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  CHECK(ls.size() == 11);
  const auto last = fields(ls.back());
  CHECK(last[10] == "DomainError");
  for (int k = 6; k < 10; ++k) CHECK(last[k].empty());
}

TEST_CASE("figure 5a row count") {
  const Run r = run({"figure", "5a"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out).size() == 1601);
}

TEST_CASE("figure json carries preset metadata") {
  const Run r = run({"figure", "2a", "--format", "json", "--t", "0.1"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["metadata"]["preset_id"] == "2a");
  CHECK(j["metadata"]["tool_version"] == std::string(kToolVersion));
  CHECK(j["records"].size() == 600);
  CHECK(j["records"][0]["T"] == 0.1);
}

TEST_CASE("critical prints the crossing") {
  const Run r = run({"critical", "--r", "0.5", "--b", "2", "--t", "0.01:10:10", "--epsilon", "1e-9"});
  REQUIRE(r.code == 0);
  const auto f = fields(lines(r.out)[1]);
  CHECK(f[0] == "T");
  CHECK(std::stod(f[1]) == doctest::Approx(2.6651).epsilon(1e-3 / 2.6651));
  CHECK(run({"critical", "--coupling", "trig", "--r", "0.1:3:10", "--b", "0.5", "--t", "0.001"}).code == 5);
}

TEST_CASE("validate exit status follows the tolerance") {
  const Run ok = run({"validate", "--coupling", "inverse-square", "--mode", "published", "--against", "canonical",
                      "--samples", "200", "--seed", "7"});
  CHECK(ok.code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j["within_tolerance"] == true);
  CHECK(j["samples"] == 200);

  const Run bad = run({"validate", "--coupling", "hyperbolic", "--mode", "published", "--against", "canonical",
                       "--samples", "200", "--seed", "7", "--tolerance", "1e-3"});
  CHECK(bad.code == 4);
  CHECK(nlohmann::json::parse(bad.out)["within_tolerance"] == false);
}

TEST_CASE("worker count does not change output bytes") {
  const fs::path dir = scratch_dir();
  for (const char* id : {"10", "4"}) {
    const fs::path a = dir / "w1.csv", b = dir / "w8.csv";
    REQUIRE(run({"figure", id, "--workers", "1", "--out", a.string()}).code == 0);
    REQUIRE(run({"figure", id, "--workers", "8", "--out", b.string()}).code == 0);
    CHECK(slurp(a) == slurp(b));
  }
  ::setenv("MIXSPIN_WORKERS", "3", 1);
  const fs::path c = dir / "env.csv";
  CHECK(run({"figure", "4", "--out", c.string()}).code == 0);
  ::unsetenv("MIXSPIN_WORKERS");
  CHECK(slurp(c) == slurp(dir / "w1.csv"));
  fs::remove_all(dir);
}

TEST_CASE("atomic writes leave no temporary files") {
  const fs::path dir = scratch_dir();
  write_file_atomic(dir / "x.txt", "hello\n");
  CHECK(slurp(dir / "x.txt") == "hello\n");
  int entries = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++entries;
  CHECK(entries == 1);
  CHECK_THROWS_AS(write_file_atomic(dir / "missing" / "x.txt", "x"), Error);
  fs::remove_all(dir);
}

TEST_CASE("csv output round-trips through the parser") {
  const Run r = run({"sweep", "--coupling", "hyperbolic", "--r", "0.2:2:7", "--b", "0.3", "--t", "0.4"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  const std::vector<double> rs = LinearRange{0.2, 2.0, 7}.values();
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto f = fields(ls[i]);
    double rv = 0, n = 0;
    std::from_chars(f[2].data(), f[2].data() + f[2].size(), rv);
    std::from_chars(f[6].data(), f[6].data() + f[6].size(), n);
    CHECK(rv == rs[i - 1]);
    const double expect = evaluate_point(Coupling(CouplingKind::Hyperbolic), EvalMode::Canonical, rs[i - 1], 0.3, 0.4).negativity;
    CHECK(std::memcmp(&n, &expect, sizeof n) == 0);
  }
}
