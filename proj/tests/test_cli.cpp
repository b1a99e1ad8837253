#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult capture(const std::string& command) {
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string binary(const std::string& env = "") {
  return env + (env.empty() ? "" : " ") + "\"" + HODGE_FORGE_BIN + "\"";
}

RunResult run(const std::string& args, const std::string& env = "") {
  return capture(binary(env) + " " + args + " 2>/dev/null");
}

RunResult run_pipe(const std::string& first, const std::string& second) {
  return capture(binary() + " " + first + " 2>/dev/null | " + binary() + " " +
                 second + " 2>/dev/null");
}

std::string shell_quoted(const std::string& text) {
  std::string out = "'";
  for (char c : text)
    if (c == '\'')
      out += "'\\''";
    else
      out += c;
  out += "'";
  return out;
}

RunResult run_stdin(const std::string& args, const std::string& input,
                    const std::string& env = "") {
  return capture("printf '%s' " + shell_quoted(input) + " | " + binary(env) +
                 " " + args + " --in - 2>/dev/null");
}

}  // namespace

TEST_CASE("help requests succeed") {
  CHECK(run("--help").exit_code == 0);
  CHECK(run("plan-weight --help").exit_code == 0);
}

TEST_CASE("domination verdicts print exact json") {
  const RunResult positive = run("dominates --n 2 --rs 1,1 --pq 2,0");
  CHECK(positive.exit_code == 0);
  CHECK(positive.output ==
        "{\n  \"dominates\": true,\n  \"justification\": "
        "\"surface-bmy-inequality\"\n}\n");

  const RunResult negative = run("dominates --n 4 --rs 2,2 --pq 2,0");
  CHECK(negative.exit_code == 0);
  CHECK(negative.output ==
        "{\n  \"dominates\": false,\n  \"justification\": "
        "\"hyperplane-section-family\"\n}\n");
}

TEST_CASE("hypersurface output respects the format switch") {
  const RunResult json = run("hypersurface --n 3 --d 5");
  CHECK(json.exit_code == 0);
  CHECK(json.output.find("101") != std::string::npos);
  CHECK(json.output.find("\"n\": 3") != std::string::npos);

  const RunResult table = run("--format table hypersurface --n 3 --d 5");
  CHECK(table.exit_code == 0);
  CHECK(table.output.find("101") != std::string::npos);
  CHECK(table.output.find('{') == std::string::npos);
}

TEST_CASE("planned recipes evaluate through a pipe") {
  const RunResult piped = run_pipe("plan-weight --k 4 --n 5 --target 1,0,7,0,1",
                                   "evaluate --in -");
  CHECK(piped.exit_code == 0);
  CHECK(piped.output.find("\"n\": 5") != std::string::npos);
  CHECK(piped.output.find("null") != std::string::npos);
  CHECK(piped.output.find('7') != std::string::npos);
}

TEST_CASE("infeasible plans exit with one") {
  const RunResult result = run("plan-weight --k 4 --n 5 --target 1,0,1,0,1");
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("\"feasible\": false") != std::string::npos);
}

TEST_CASE("bad arguments and malformed input exit with two") {
  CHECK(run("dominates --n 2 --rs x --pq 0,0").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("--jobs 0 validate").exit_code == 2);
  CHECK(run_stdin("validate", "not json").exit_code == 2);
  CHECK(run_stdin("evaluate", "{\"n\": 2, \"oops\": 1}").exit_code == 2);
}

TEST_CASE("diamond validation reads standard input") {
  const std::string plane =
      R"({"h": [[1, 0, 0], [0, 1, 0], [0, 0, 1]], "n": 2})";
  CHECK(run_stdin("validate", plane).exit_code == 0);
  const std::string lopsided = R"({"h": [[1, 1], [0, 1]], "n": 1})";
  const RunResult result = run_stdin("validate", lopsided);
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("\"valid\": false") != std::string::npos);
}

TEST_CASE("threefold checks pass and fail by the admissible middle list") {
  const std::string fano =
      R"({"c1_cubed": null, "c1c2": null, "h10": 0, "h11": 1, "h20": 0,
          "h21": 52, "h30": 0})";
  CHECK(run_stdin("check-threefold", fano).exit_code == 0);
  const std::string off =
      R"({"c1_cubed": null, "c1c2": null, "h10": 0, "h11": 1, "h20": 0,
          "h21": 51, "h30": 0})";
  const RunResult result = run_stdin("check-threefold", off);
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("\"status\": \"fail\"") != std::string::npos);
}

TEST_CASE("cap environment variables bound the closure") {
  const std::string group = R"({"a": 2, "b": 1, "g": 1, "kind": "Gabg"})";
  CHECK(run_stdin("oracle", group).exit_code == 0);
  CHECK(run_stdin("oracle", group, "HODGE_FORGE_CAPS=10,1000000").exit_code ==
        3);
  CHECK(run_stdin("oracle", group, "HODGE_FORGE_CAPS=10:1000000").exit_code ==
        3);
  CHECK(run_stdin("--max-group 1000000 oracle", group,
                  "HODGE_FORGE_CAPS=10,1000000")
            .exit_code == 0);
  CHECK(run_stdin("oracle", group, "HODGE_FORGE_CAPS=nonsense").exit_code ==
        2);
}

TEST_CASE("closed forms and the oracle agree from the command line") {
  const RunResult closed = run("invariants --a 2 --b 1 --g 1");
  CHECK(closed.exit_code == 0);
  CHECK(closed.output.find("\"dims\"") != std::string::npos);
  CHECK(run("crosscheck --a 2 --b 1 --g 1").exit_code == 0);
}

TEST_CASE("single cell oracles report the group size") {
  const std::string group = R"({"a": 2, "b": 0, "g": 1, "kind": "Gabg"})";
  const RunResult result = run_stdin("oracle --p 1 --q 1", group);
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("\"elements\": 12") != std::string::npos);
  CHECK(result.output.find("\"dim\": 1") != std::string::npos);
  CHECK(run_stdin("oracle --p 1", group).exit_code == 2);
}

TEST_CASE("certificates and families drive their exit codes") {
  CHECK(run("zc-cert --a 2 --b 1 --c 2 --n 4").exit_code == 0);
  CHECK(run("zc-cert --a 1 --b 2 --c 2 --n 4").exit_code == 2);
  CHECK(run("family --n 3 --rs 2,1 --pq 1,1 --count 3").exit_code == 0);
  CHECK(run("family --n 4 --rs 2,2 --pq 2,0").exit_code == 1);
  CHECK(run("family --n 3 --rs 1,1 --pq 0,0").exit_code == 1);
}

TEST_CASE("planner constants print their bound column") {
  const RunResult result = run("constants --n 10");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("\"within_bound\": true") != std::string::npos);
  CHECK(result.output.find("\"c\": 21") != std::string::npos);
}
