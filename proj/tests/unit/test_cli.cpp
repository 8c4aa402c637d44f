// End-to-end checks of the command line tool. The binary path is baked in by
// the build; every invocation goes through popen so exit codes are observable.

#include <cstdio>
#include <string>
#include <vector>

#include "doctest.h"

#ifndef CATMOVES_CLI_PATH
#define CATMOVES_CLI_PATH ""
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
  RunResult result;
  const std::string command = std::string(CATMOVES_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  while (size_t got = fread(buffer, 1, sizeof buffer, pipe)) {
    result.output.append(buffer, got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(line);
      line.clear();
    } else {
      line += ch;
    }
  }
  if (!line.empty()) lines.push_back(line);
  return lines;
}

bool have_cli() { return std::string(CATMOVES_CLI_PATH)[0] != '\0'; }

}  // namespace

TEST_CASE("trees enumerate") {
  if (!have_cli()) return;
  const RunResult result = run_cli("trees enumerate --n 3");
  CHECK(result.exit_code == 0);
  const auto lines = lines_of(result.output);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "3;(1,6)(2,5)(3,4)");
  CHECK(lines[4] == "3;(1,2)(3,4)(5,6)");

  const RunResult jsonl = run_cli("trees enumerate --n 2 --format jsonl");
  CHECK(lines_of(jsonl.output)[0] == R"x({"id":0,"tree":"2;(1,4)(2,3)"})x");

  CHECK(run_cli("trees enumerate --n 0").exit_code == 2);
  CHECK(run_cli("trees enumerate").exit_code == 2);
  CHECK(run_cli("trees enumerate --n 17").exit_code == 1);  // default cap is 16
}

TEST_CASE("syt enumerate") {
  if (!have_cli()) return;
  const RunResult result = run_cli("syt enumerate --shape 2,2");
  CHECK(result.exit_code == 0);
  CHECK(lines_of(result.output) == std::vector<std::string>{"1,2/3,4", "1,3/2,4"});

  CHECK(run_cli("syt enumerate --shape 2,3").exit_code == 2);    // not weakly decreasing
  CHECK(run_cli("syt enumerate --shape 21,21").exit_code == 1);  // beyond the cap
}

TEST_CASE("graph summaries and exports") {
  if (!have_cli()) return;
  const RunResult summary = run_cli("graph --moves typeC --n 3");
  CHECK(summary.exit_code == 0);
  const auto lines = lines_of(summary.output);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "graph typeC n=3: 5 vertices, 3 edges");
  CHECK(lines[1] == "components: 2 (sizes 3, 2)");

  const RunResult dot = run_cli("graph --moves typeA --n 2 --format dot");
  CHECK(dot.exit_code == 0);
  CHECK(dot.output.find("0 -- 1 [label=\"s2\"]") != std::string::npos);

  const RunResult single = run_cli("graph --moves all --n 1");
  CHECK(lines_of(single.output)[0] == "graph all n=1: 1 vertices, 0 edges");

  CHECK(run_cli("graph --moves typeA --n 17").exit_code == 1);
  CHECK(run_cli("graph --moves bogus --n 3").exit_code == 2);

  // byte identical reruns
  CHECK(run_cli("graph --moves typeC --n 4 --format json").output ==
        run_cli("graph --moves typeC --n 4 --format json --workers 3").output);
}

TEST_CASE("verify suites") {
  if (!have_cli()) return;
  const RunResult involution = run_cli("verify --suite involution --max-n 4");
  CHECK(involution.exit_code == 0);
  CHECK(involution.output.find("PASS") != std::string::npos);
  CHECK(involution.output.find("FAIL") == std::string::npos);

  const RunResult grading = run_cli("verify --suite grading --max-n 4");
  CHECK(grading.exit_code == 0);
  CHECK(grading.output.find("3:1 4:2 5:1 6:1") != std::string::npos);

  CHECK(run_cli("verify --suite no-such-suite").exit_code == 2);
}

TEST_CASE("ranks") {
  if (!have_cli()) return;
  CHECK(lines_of(run_cli("ranks --n 3").output) ==
        std::vector<std::string>{"3:1 4:2 5:1 6:1, unimodal=false"});
  CHECK(lines_of(run_cli("ranks --n 1").output) ==
        std::vector<std::string>{"1:1, unimodal=true"});
  CHECK(lines_of(run_cli("ranks --n 2").output) ==
        std::vector<std::string>{"2:1 3:1, unimodal=true"});

  const RunResult range = run_cli("ranks --max-n 3");
  CHECK(lines_of(range.output).size() == 3);
  CHECK(lines_of(range.output)[2] == "n=3: 3:1 4:2 5:1 6:1, unimodal=false");

  const RunResult csv = run_cli("ranks --n 2 --format csv");
  CHECK(lines_of(csv.output) ==
        std::vector<std::string>{"n,rank,count", "2,2,1", "2,3,1"});

  CHECK(run_cli("ranks --n 17").exit_code == 1);
}

TEST_CASE("path and word") {
  if (!have_cli()) return;
  const RunResult route =
      run_cli("path --moves typeC --n 3 \"3;(1,2)(3,4)(5,6)\" \"3;(1,6)(2,5)(3,4)\"");
  CHECK(route.exit_code == 0);
  const auto lines = lines_of(route.output);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "s2C  3;(1,2)(3,4)(5,6) -> 3;(1,6)(2,3)(4,5)");
  CHECK(lines[1] == "s3C  3;(1,6)(2,3)(4,5) -> 3;(1,6)(2,5)(3,4)");

  // symmetric to asymmetric: disconnected in type C
  CHECK(run_cli("path --moves typeC --n 3 \"3;(1,2)(3,4)(5,6)\" \"3;(1,4)(2,3)(5,6)\"")
            .exit_code == 1);

  const RunResult word = run_cli("word \"1,2/3,4\" \"1,3/2,4\"");
  CHECK(word.exit_code == 0);
  CHECK(lines_of(word.output) == std::vector<std::string>{"2"});

  const RunResult empty_word = run_cli("word \"1,2/3,4\" \"1,2/3,4\"");
  CHECK(empty_word.exit_code == 0);
  CHECK(empty_word.output.empty());

  CHECK(run_cli("word \"garbage\" \"1,2/3,4\"").exit_code == 2);
}
