// Runs the CLI over the fixture diagrams and compares stdout byte-for-byte
// against the frozen expected outputs. Case files live in tests/golden: an
// argv line, an expected exit code, then the expected bytes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct GoldenCase {
  std::string name;
  std::string command;  // arguments after the binary path
  int expected_exit = 0;
  std::string expected_stdout;
};

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "cannot open ", path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string substitute_fixtures(std::string text) {
  const std::string placeholder = "{fix}";
  for (std::size_t at = text.find(placeholder); at != std::string::npos;
       at = text.find(placeholder))
    text.replace(at, placeholder.size(), BETTI_FIXTURES_DIR);
  return text;
}

GoldenCase parse_case(const std::filesystem::path& path) {
  const std::string text = slurp(path);
  std::istringstream in(text);
  GoldenCase c;
  c.name = path.stem().string();
  std::string line;
  REQUIRE(std::getline(in, line));
  REQUIRE_MESSAGE(line.rfind("cmd: ", 0) == 0, path.string(), ": missing cmd line");
  c.command = substitute_fixtures(line.substr(5));
  REQUIRE(std::getline(in, line));
  REQUIRE_MESSAGE(line.rfind("exit: ", 0) == 0, path.string(), ": missing exit line");
  c.expected_exit = std::stoi(line.substr(6));
  std::ostringstream rest;
  rest << in.rdbuf();
  c.expected_stdout = rest.str();
  return c;
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& arguments) {
  const std::string command =
      std::string(BETTI_CLI_PATH) + " " + arguments + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
    result.output.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("golden CLI transcripts") {
  std::vector<std::filesystem::path> cases;
  for (const auto& entry : std::filesystem::directory_iterator(BETTI_GOLDEN_DIR))
    if (entry.path().extension() == ".case") cases.push_back(entry.path());
  std::sort(cases.begin(), cases.end());
  REQUIRE_MESSAGE(!cases.empty(), "no golden cases found in " BETTI_GOLDEN_DIR);

  for (const auto& path : cases) {
    const GoldenCase c = parse_case(path);
    CAPTURE(c.name);
    const RunResult result = run_cli(c.command);
    CHECK_MESSAGE(result.exit_code == c.expected_exit, c.name, ": exit ",
                  result.exit_code, " expected ", c.expected_exit);
    CHECK_MESSAGE(result.output == c.expected_stdout, c.name,
                  ": output mismatch\n--- got ---\n", result.output,
                  "--- expected ---\n", c.expected_stdout);
  }
}

TEST_CASE("determinism: identical invocations produce identical bytes") {
  const std::string cmd =
      "decompose " + substitute_fixtures("{fix}/ex15_D.txt");
  const RunResult a = run_cli(cmd);
  const RunResult b = run_cli(cmd);
  CHECK(a.exit_code == b.exit_code);
  CHECK(a.output == b.output);
}
