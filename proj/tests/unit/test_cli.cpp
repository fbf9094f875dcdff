#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "qha/cli/cli.hpp"

using Json = nlohmann::ordered_json;

namespace {

struct Outcome {
  int code;
  Json report;
  std::string summary;
};

Outcome run(std::vector<std::string> args) {
  for (auto& a : args)
    if (auto p = a.find("{corpus}"); p != std::string::npos) a.replace(p, 8, QHA_CORPUS_DIR);
  std::ostringstream out, err;
  int code = qha::cli::run(args, out, err);
  return {code, Json::parse(out.str()), err.str()};
}

}  // namespace

TEST_CASE("FNV-1a digests") {
  CHECK(qha::cli::fnv1a_hex("") == "cbf29ce484222325");
  CHECK(qha::cli::fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(qha::cli::fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("check reports the basis") {
  auto r = run({"check", "{corpus}/line_zero.alg"});
  CHECK(r.code == 0);
  CHECK(r.report["result"]["dimension"] == 5);
  CHECK(r.report["result"]["basis"].size() == 5);
  CHECK(r.report["inputs"]["algebra"]["fnv1a"].get<std::string>().size() == 16);
  CHECK(r.summary.find("dimension 5") != std::string::npos);
}

TEST_CASE("reports are deterministic apart from timings") {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"recollement", "{corpus}/two_cycle.alg", "--sigma", "{corpus}/alpha_star.map"},
        std::vector<std::string>{"scan", "{corpus}/line_zero.alg"}}) {
    auto a = run(args), b = run(args);
    a.report.erase("timings");
    b.report.erase("timings");
    CHECK(a.report.dump() == b.report.dump());
  }
}

TEST_CASE("exit codes") {
  CHECK(run({"check", "{corpus}/no_such_file.alg"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"localize", "{corpus}/triangle.alg"}).code == 2);
  auto bad = run({"localize", "{corpus}/triangle.alg", "--sigma", "{corpus}/malformed.map"});
  CHECK(bad.code == 2);
  CHECK(bad.report["error"]["kind"] == "ParseError");
  CHECK(run({"epi", "{corpus}/line.alg", "--quotient", "7"}).report["error"]["reason"] == "UnknownVertex");

  auto cap = run({"localize", "{corpus}/kronecker.alg", "--sigma", "{corpus}/kronecker_a.map", "--max-dim", "30"});
  CHECK(cap.code == 3);
  CHECK(cap.report["error"]["reason"] == "max_dim");
  CHECK(cap.report["error"]["monotone"] == true);
  CHECK(cap.report["error"]["history"].back().get<std::size_t>() > 30);

  auto iter = run({"localize", "{corpus}/kronecker.alg", "--sigma", "{corpus}/kronecker_a.map", "--max-iter", "4"});
  CHECK(iter.code == 3);
  CHECK(iter.report["error"]["reason"] == "max_iter");
}

TEST_CASE("QHA_MAX_DIM sets the default cap") {
  setenv("QHA_MAX_DIM", "25", 1);
  auto r = run({"localize", "{corpus}/kronecker.alg", "--sigma", "{corpus}/kronecker_a.map"});
  CHECK(r.code == 3);
  CHECK(r.report["error"]["history"].back().get<std::size_t>() > 25);
  CHECK(r.report["error"]["history"].back().get<std::size_t>() < 40);
  setenv("QHA_MAX_DIM", "many", 1);
  CHECK(run({"localize", "{corpus}/kronecker.alg", "--sigma", "{corpus}/kronecker_a.map"}).code == 2);
  unsetenv("QHA_MAX_DIM");
}

TEST_CASE("hypothesis failures are verdicts") {
  auto r = run({"recollement", "{corpus}/line_zero.alg", "--sigma", "{corpus}/beta_star_2_3.map"});
  CHECK(r.code == 0);
  CHECK(r.report["verdicts"]["recollement"] == "HypothesisFailed");
  bool listed = false;
  for (const auto& x : r.report["verdicts"]["failed"]) listed = listed || x == "hom_coker_ker";
  CHECK(listed);
}

TEST_CASE("localise at module files") {
  auto r = run({"localize", "{corpus}/line_zero.alg", "--at-modules", "{corpus}/line_zero_simple2.mod"});
  CHECK(r.code == 0);
  CHECK(r.report["inputs"].contains("module1"));
  auto wrong = run({"localize", "{corpus}/line_zero.alg", "--at-modules", "{corpus}/line_zero_right_simple3.mod"});
  CHECK(wrong.code == 2);
  CHECK(wrong.report["error"]["reason"] == "ModuleSide");
}

TEST_CASE("corpus regressions") {
  auto r = run({"corpus", "run", "--dir", QHA_CORPUS_DIR});
  CHECK(r.code == 0);
  CHECK(r.report["verdicts"]["all_passed"] == true);
  for (const auto& c : r.report["result"]["cases"]) CHECK_MESSAGE(c["passed"] == true, c.dump());
}
