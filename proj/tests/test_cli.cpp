#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(TUBE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path scratch(const std::string& name, const std::string& content) {
  const auto p = std::filesystem::temp_directory_path() / ("tubetorsion_test_" + name);
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST_CASE("count") {
  CHECK(run("count --n 5").out == "1092\n");
  CHECK(run("count --n 5").code == 0);
  const Run csv = run("count --n 3 --refined --format csv");
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("n,k,l,m,count\n", 0) == 0);
  CHECK(run("count --n 40").code == 0);
}

TEST_CASE("enumerate, decompose and compose round trip") {
  for (int n = 1; n <= 5; ++n) {
    const Run e = run("enumerate --n " + std::to_string(n));
    REQUIRE(e.code == 0);
    const auto pairs = scratch("pairs" + std::to_string(n), e.out);
    const Run d = run("decompose --input " + pairs.string());
    REQUIRE(d.code == 0);
    const auto wings = scratch("wings" + std::to_string(n), d.out);
    const Run c = run("compose --input " + wings.string());
    CHECK(c.code == 0);
    CHECK(c.out == e.out);
    std::filesystem::remove(pairs);
    std::filesystem::remove(wings);
  }
  CHECK(run("enumerate --n 3 --method brute").out == run("enumerate --n 3").out);
}

TEST_CASE("verify, sieve, orbits, series") {
  CHECK(run("verify --n 4").code == 0);
  CHECK(run("sieve --n 4").code == 0);
  CHECK(run("orbits --n 4").code == 0);
  const Run s = run("series --order 4");
  CHECK(s.code == 0);
  CHECK(s.out.find("z^1:") != std::string::npos);
}

TEST_CASE("perp and render") {
  const auto d = scratch("diagram", R"({"rank":2,"orbits":[[0,2]]})");
  CHECK(run("perp --diagram " + d.string() + " --arc 2,4").out == "no\n");
  CHECK(run("perp --diagram " + d.string() + " --arc 1,3").out == "yes\n");
  CHECK(run("perp --n 3 --diagram " + d.string() + " --arc 1,3").code == 2);
  const auto pair = scratch("pair", R"({"rank":2,"finite_side":"left","orbits":[[0,2]]})");
  const Run r = run("render --pair " + pair.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("</svg>") != std::string::npos);
  std::filesystem::remove(d);
  std::filesystem::remove(pair);
}

TEST_CASE("exit codes for bad input and caps") {
  CHECK(run("").code == 2);
  CHECK(run("count").code == 2);
  CHECK(run("count --n 0").code == 2);
  CHECK(run("count --n 3 --bogus").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("enumerate --n 12").code == 3);
  CHECK(run("--structured-cap 4 enumerate --n 5").code == 3);
  CHECK(run("enumerate --n 6 --method brute").code == 3);
  const auto bad = scratch("bad", "{not json\n");
  CHECK(run("decompose --input " + bad.string()).code == 2);
  CHECK(run("render --pair " + bad.string()).code == 2);
  std::filesystem::remove(bad);
  CHECK(run("--help").code == 0);
}
