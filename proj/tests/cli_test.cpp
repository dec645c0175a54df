//
// Copyright 2026 The privleak Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// End-to-end checks against the built binary: exit codes, file outputs, and
// the documented command surface.

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include "support/synthetic.hpp"

namespace ts = privleak::testsupport;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run_cli(const std::string& args) {
  const std::string out_path = ts::write_temp_file("cli_stdout", "");
  const std::string err_path = ts::write_temp_file("cli_stderr", "");
  const std::string command = std::string(PRIVLEAK_BIN_PATH) + " " + args +
                              " >" + out_path + " 2>" + err_path;
  const int status = std::system(command.c_str());
  RunResult result;
  if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
  }
  result.out = read_file(out_path);
  result.err = read_file(err_path);
  return result;
}

// Shared fixture files, created once.
struct Fixture {
  std::string embeddings;
  std::string corpus;        // annotated, classification-ready
  std::string gold_corpus;   // single-keyword spans with matching gold labels
  std::string bad_corpus;    // line 2 is not JSON
};

const Fixture& fixture() {
  static const Fixture f = [] {
    Fixture fx;
    fx.embeddings = ts::write_temp_file(
        "cli_embeddings",
        ts::synthetic_embeddings_text(
            {.dimension = 16, .filler_tokens = 20, .seed = 12}));
    fx.corpus = ts::write_temp_file(
        "cli_corpus",
        R"({"id":"ex1","text":"I watch a movie.","spans":[[0,1,"PERSON"],[2,15,"EVENT"]]})"
        "\n"
        R"({"id":"ex2","text":"we plan a wedding and a party"})"
        "\n");
    fx.gold_corpus = ts::write_temp_file(
        "cli_gold",
        R"({"id":"e1","text":"interview","spans":[[0,9,"EVENT","Corporate Event"]]})"
        "\n"
        R"({"id":"e2","text":"movie","spans":[[0,5,"EVENT","Private Event"]]})"
        "\n"
        R"({"id":"e3","text":"I","spans":[[0,1,"PERSON","Individual"]]})"
        "\n");
    fx.bad_corpus = ts::write_temp_file(
        "cli_bad",
        R"({"id":"ok","text":"movie"})"
        "\n"
        "{broken\n");
    return fx;
  }();
  return f;
}

}  // namespace

TEST_CASE("classify writes results and reports a summary") {
  const std::string out = ts::write_temp_file("cli_results", "");
  const RunResult run =
      run_cli("classify --corpus " + fixture().corpus + " --embeddings " +
              fixture().embeddings + " --out " + out);
  CHECK(run.exit_code == 0);
  CHECK(run.out.find("messages:") != std::string::npos);

  std::istringstream results(read_file(out));
  std::string line;
  REQUIRE(std::getline(results, line));
  const auto doc = nlohmann::json::parse(line);
  CHECK(doc["schema"] == "privleak.results.v1");
  CHECK(doc["id"] == "ex1");
  CHECK(doc["leaking"] == true);
  CHECK(doc["findings"].size() == 2);
  CHECK(doc["findings"][1]["subclass"] == "Private Event");
}

TEST_CASE("classify with the gazetteer recognizer") {
  const std::string out = ts::write_temp_file("cli_results_gaz", "");
  const RunResult run =
      run_cli("classify --corpus " + fixture().corpus + " --embeddings " +
              fixture().embeddings + " --recognizer gazetteer --out " + out);
  CHECK(run.exit_code == 0);

  std::istringstream results(read_file(out));
  std::string line;
  REQUIRE(std::getline(results, line));  // ex1: I + movie via dictionary
  const auto ex1 = nlohmann::json::parse(line);
  CHECK(ex1["leaking"] == true);
  REQUIRE(std::getline(results, line));  // ex2: we + wedding + party
  const auto ex2 = nlohmann::json::parse(line);
  CHECK(ex2["leaking"] == true);
  CHECK(ex2["findings"].size() == 3);
}

TEST_CASE("evaluate writes a scored report") {
  const std::string report = ts::write_temp_file("cli_eval", "");
  const RunResult run =
      run_cli("evaluate --corpus " + fixture().gold_corpus + " --embeddings " +
              fixture().embeddings + " --report " + report);
  CHECK(run.exit_code == 0);
  CHECK(run.out.find("accuracy") != std::string::npos);

  const auto doc = nlohmann::json::parse(read_file(report));
  CHECK(doc["schema"] == "privleak.evaluation.v1");
  CHECK(doc["total_gold_spans"] == 3);
  CHECK(doc["accuracy"]["value"] == doctest::Approx(1.0));
  CHECK(doc["accuracy"]["undefined"] == false);
}

TEST_CASE("report computes the leak distribution from results") {
  const std::string results = ts::write_temp_file("cli_results_dist", "");
  REQUIRE(run_cli("classify --corpus " + fixture().gold_corpus +
                  " --embeddings " + fixture().embeddings + " --out " + results)
              .exit_code == 0);

  const std::string dist = ts::write_temp_file("cli_dist", "");
  const RunResult run =
      run_cli("report --results " + results + " --out " + dist);
  CHECK(run.exit_code == 0);

  const auto doc = nlohmann::json::parse(read_file(dist));
  CHECK(doc["schema"] == "privleak.distribution.v1");
  CHECK(doc["total_findings"] == 2);  // PERSON excluded
  double sum = 0.0;
  for (const auto& row : doc["per_subclass"]) {
    sum += row["percent"].get<double>();
  }
  CHECK(sum == doctest::Approx(100.0).epsilon(1e-6));
}

TEST_CASE("keywords ranks annotated entity values") {
  const RunResult run =
      run_cli("keywords --corpus " + fixture().gold_corpus + " --top-k 3");
  CHECK(run.exit_code == 0);
  CHECK(run.out.find("interview") != std::string::npos);
  CHECK(run.out.find("movie") != std::string::npos);
}

TEST_CASE("coverage prints per-subclass fractions") {
  const RunResult run =
      run_cli("coverage --embeddings " + fixture().embeddings);
  CHECK(run.exit_code == 0);
  CHECK(run.out.find("Private Event") != std::string::npos);
  CHECK(run.out.find("1.000") != std::string::npos);
}

TEST_CASE("usage problems exit with code 1") {
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("frobnicate").exit_code == 1);
  CHECK(run_cli("classify --corpus only").exit_code == 1);
  CHECK(run_cli("classify --corpus x --embeddings y --out z --recognizer bogus")
            .exit_code == 1);
}

TEST_CASE("data problems exit with code 2") {
  const std::string out = ts::write_temp_file("cli_never", "");
  CHECK(run_cli("classify --corpus /does/not/exist --embeddings " +
                fixture().embeddings + " --out " + out)
            .exit_code == 2);

  const RunResult strict =
      run_cli("--strict classify --corpus " + fixture().bad_corpus +
              " --embeddings " + fixture().embeddings + " --out " + out);
  CHECK(strict.exit_code == 2);
  CHECK(strict.err.find("MalformedRecord") != std::string::npos);
  CHECK(strict.err.find("line 2") != std::string::npos);

  // Lenient mode only warns.
  const RunResult lenient =
      run_cli("classify --corpus " + fixture().bad_corpus + " --embeddings " +
              fixture().embeddings + " --out " + out);
  CHECK(lenient.exit_code == 0);
  CHECK(lenient.err.find("line 2") != std::string::npos);
}

TEST_CASE("quiet mode silences tables and warnings") {
  const std::string out = ts::write_temp_file("cli_quiet", "");
  const RunResult run =
      run_cli("--quiet classify --corpus " + fixture().bad_corpus +
              " --embeddings " + fixture().embeddings + " --out " + out);
  CHECK(run.exit_code == 0);
  CHECK(run.out.empty());
  CHECK(run.err.empty());
}
