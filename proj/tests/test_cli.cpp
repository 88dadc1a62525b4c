#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef ACMTOOL_PATH
#error "ACMTOOL_PATH must point at the built CLI binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

// stderr is folded into the capture so error messages are assertable
RunResult run_tool(const std::string& args) {
  std::string cmd = std::string(ACMTOOL_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return RunResult{code, out};
}

}  // namespace

TEST_CASE("atoms listing matches the hand-checked window") {
  RunResult r = run_tool("atoms --a 1 --b 4 --limit 50");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "# acm-atoms v1 a=1 b=4 limit=50\n"
        "n,status\n"
        "1,unit\n"
        "5,atom\n"
        "9,atom\n"
        "13,atom\n"
        "17,atom\n"
        "21,atom\n"
        "25,reducible\n"
        "29,atom\n"
        "33,atom\n"
        "37,atom\n"
        "41,atom\n"
        "45,reducible\n"
        "49,atom\n");
}

TEST_CASE("invalid monoid parameters exit with code 2") {
  RunResult r = run_tool("atoms --a 2 --b 4 --limit 10");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("not divisible by 4") != std::string::npos);
}

TEST_CASE("summary counts") {
  RunResult r = run_tool("atoms --a 6 --b 6 --limit 100 --summary");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "# acm-atoms v1 a=6 b=6 limit=100\n"
        "members,atoms,reducibles\n"
        "17,14,2\n");
}

TEST_CASE("density csv carries the exact limit column") {
  RunResult r = run_tool("density --a 4 --b 6 --max 1e4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("# acm-density v1 a=4 b=6 q=2 max=10000\n") == 0);
  CHECK(r.out.find(",1/2,") != std::string::npos);
  RunResult reg = run_tool("density --a 1 --b 5 --max 1e4");
  CHECK(reg.exit_code == 0);
  CHECK(reg.out.find(",0,") != std::string::npos);
}

TEST_CASE("density json parses and mirrors the csv fields") {
  RunResult r = run_tool("density --a 4 --b 6 --max 1e4 --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["format"] == "acm-density");
  CHECK(j["version"] == 1);
  CHECK(j["q"] == 2);
  CHECK(j["limit"] == "1/2");
  CHECK(j["checkpoints"].size() == 2);
  CHECK(j["checkpoints"][0]["N"] == 1000);
  CHECK(j["checkpoints"][0]["members"] == 168);
  CHECK(j["checkpoints"][0]["atoms"] == 115);
}

TEST_CASE("block atoms command") {
  RunResult r = run_tool("block --b 5");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["modulus"] == 5);
  CHECK(j["atoms"].size() == 7);
  CHECK(j["davenport"] == 4);
  RunResult capped = run_tool("block --b 97");
  CHECK(capped.exit_code == 3);
}

TEST_CASE("factorize command") {
  RunResult r = run_tool("factorize --a 1 --b 4 --n 441");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["factorizations"] == nlohmann::json::parse("[[9,49],[21,21]]"));
  CHECK(j["length_set"] == nlohmann::json::parse("[2]"));
  CHECK(j["elasticity"]["num"] == 1);
  RunResult nonmember = run_tool("factorize --a 1 --b 4 --n 6");
  CHECK(nonmember.exit_code == 2);
}

TEST_CASE("verify exit codes reflect the verdict") {
  RunResult exact = run_tool("verify --a 6 --b 6 --max 1e5");
  CHECK(exact.exit_code == 0);
  auto j = nlohmann::json::parse(exact.out);
  CHECK(j["mode"] == "exact");
  CHECK(j["pass"] == true);

  // at 10^6 the default trend policy cannot be met (convergence is
  // logarithmic); the command must say so via exit code 4
  RunResult trend = run_tool("verify --a 4 --b 6 --max 1e6");
  CHECK(trend.exit_code == 4);
  auto jt = nlohmann::json::parse(trend.out);
  CHECK(jt["mode"] == "trend");
  CHECK(jt["majority_decreasing"] == true);
  CHECK(jt["pass"] == false);

  RunResult loose = run_tool("verify --a 4 --b 6 --max 1e6 --threshold 0.15 --min-checkpoints 4");
  CHECK(loose.exit_code == 0);
}

TEST_CASE("series command") {
  RunResult r = run_tool("series --residue 1 --modulus 2 --bound 0 --checkpoints 16,100");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("16,5,5,16,0.312500") != std::string::npos);
  RunResult bad = run_tool("series --residue 2 --modulus 4 --bound 0 --max 100");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("resource caps exit with code 3") {
  RunResult r = run_tool("atoms --a 1 --b 4 --limit 1e18");
  CHECK(r.exit_code == 3);
}

TEST_CASE("scientific notation and plain integers agree") {
  RunResult sci = run_tool("density --a 4 --b 6 --max 1e4");
  RunResult plain = run_tool("density --a 4 --b 6 --max 10000");
  CHECK(sci.out == plain.out);
  RunResult bad = run_tool("density --a 4 --b 6 --max 1.5e0");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("output is byte-identical across thread counts") {
  RunResult one = run_tool("density --a 4 --b 6 --max 1e5 --threads 1");
  RunResult four = run_tool("density --a 4 --b 6 --max 1e5 --threads 4");
  RunResult many = run_tool("density --a 4 --b 6 --max 1e5 --threads 13 --segment-size 4096");
  CHECK(one.exit_code == 0);
  CHECK(one.out == four.out);
  CHECK(one.out == many.out);

  RunResult a1 = run_tool("atoms --a 1 --b 5 --limit 30000 --threads 1");
  RunResult a8 = run_tool("atoms --a 1 --b 5 --limit 30000 --threads 8");
  CHECK(a1.out == a8.out);
}

TEST_CASE("ACM_THREADS sets the default worker count") {
  RunResult env = run_tool("density --a 4 --b 6 --max 1e5");
  RunResult forced;
  {
    std::string cmd = "ACM_THREADS=6 " + std::string(ACMTOOL_PATH) +
                      " density --a 4 --b 6 --max 1e5 2>&1";
    std::array<char, 4096> buf{};
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
      forced.out.append(buf.data(), got);
    int status = pclose(pipe);
    forced.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  CHECK(forced.exit_code == 0);
  CHECK(forced.out == env.out);
}

TEST_CASE("output file matches stdout") {
  std::string path = std::string(ACMTOOL_PATH) + ".test_out.csv";
  RunResult direct = run_tool("density --a 4 --b 6 --max 1e3");
  RunResult filed = run_tool("density --a 4 --b 6 --max 1e3 -o " + path);
  CHECK(filed.exit_code == 0);
  CHECK(filed.out.empty());
  std::FILE* f = std::fopen(path.c_str(), "rb");
  REQUIRE(f != nullptr);
  std::string content;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), f)) > 0) content.append(buf.data(), got);
  std::fclose(f);
  std::remove(path.c_str());
  CHECK(content == direct.out);
}
