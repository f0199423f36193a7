#include "fixtures.hpp"

#include "tensorforge/cli.hpp"

#include <sstream>

#include <doctest.h>

using namespace tensorforge;
using namespace tf_test;

namespace {

std::string error_of(const std::string& text, const std::map<std::string, Scalar>& overrides = {}) {
  try {
    parse_problem(text, overrides);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

std::string cli_out(const std::vector<std::string>& args, int expect = 0) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  CHECK(status == expect);
  return out.str();
}

const std::vector<std::string> all_fixtures{
    "abelian.json",       "broken_lie.json",     "broken_lie_action.json",  "broken_rep.json",
    "broken_rep3.json",   "broken_trace.json",   "parametric_a4.json",        "braces_a4.json",
    "heisenberg_e4.json", "leibniz_lie.json",    "lift_counterexample.json", "sigma_action_counterexample.json",
    "simple_a4.json"};

}  // namespace

TEST_SUITE("problem_file") {

TEST_CASE("minimal files") {
  const ProblemFile p = parse_problem(R"({"spaces": {"V": {"dim": 4}}})");
  CHECK(p.spaces.at("V").dim() == 4);
  CHECK(p.spaces.at("V").label(3) == "e4");
  const ProblemFile q = parse_problem(R"({"spaces": {"V": {"labels": ["x", "y"]}}})");
  CHECK(q.spaces.at("V").basis_labels == std::vector<std::string>{"x", "y"});
  CHECK(contains(error_of(R"({"spaces": {}})"), "at least one space"));
  CHECK(contains(error_of(R"({"name": "x"})"), "missing field 'spaces'"));
  CHECK(contains(error_of(R"([1, 2])"), "top level must be an object"));
}

TEST_CASE("a zero denominator is a malformed rational with its position") {
  const std::string text =
      "{\n"
      "  \"spaces\": {\"V\": {\"dim\": 1}},\n"
      "  \"tensors\": {\"T\": {\"source\": \"V\", \"target\": \"V\",\n"
      "    \"rows\": [[\"1/0\"]]}}\n"
      "}\n";
  const std::string msg = error_of(text);
  CHECK(contains(msg, "malformed rational"));
  CHECK(contains(msg, "<input>:4:"));
  CHECK(contains(msg, "/tensors/T/rows/0/0"));
}

TEST_CASE("syntax errors carry line and column") {
  const std::string msg = error_of("{\n  \"spaces\": {\"V\": {\"dim\": 1}\n");
  CHECK(contains(msg, "<input>:"));
  CHECK_FALSE(msg.empty());
}

TEST_CASE("semantic errors") {
  CHECK(contains(error_of(R"({"spaces": {"V": {"dim": 2}}, "colour": 1})"), "unknown field 'colour'"));
  CHECK(contains(error_of(R"({"spaces": {"V": {"dim": 2, "size": 1}}})"), "unknown field 'size'"));
  CHECK(contains(error_of(R"({"spaces": {"V": {"dim": 2}}, "spaces": {"W": {"dim": 1}}})"), "duplicate key"));
  CHECK(contains(error_of(R"({"spaces": {"V": {"dim": 0}}})"), "positive integer"));
  CHECK(contains(error_of(R"({"spaces": {"V": {"labels": ["a", "a"]}}})"), "distinct"));
  CHECK(contains(error_of(R"({"spaces": {"V": {"dim": 2}},
      "brackets": {"B": {"kind": "ternary-alternating", "space": "V", "entries": {"1,2,3": {"1": 1}}}}})"),
                 "out of range"));
  CHECK(contains(error_of(R"({"spaces": {"V": {"dim": 3}},
      "brackets": {"B": {"kind": "ternary-alternating", "space": "V", "entries": {"2,1,3": {"1": 1}}}}})"),
                 "strictly increasing"));
  CHECK(contains(error_of(R"({"spaces": {"V": {"dim": 3}},
      "brackets": {"B": {"kind": "ternary-alternating", "space": "V", "entries": {"1,2": {"1": 1}}}}})"),
                 "3 comma-separated indices"));
  CHECK(contains(error_of(R"({"spaces": {"V": {"dim": 3}},
      "brackets": {"B": {"kind": "quaternary", "space": "V"}}})"),
                 "unknown bracket kind"));
  CHECK(contains(error_of(R"({"spaces": {"V": {"dim": 3}}, "brackets": {"B": {"alias": "C"}}})"), "unknown bracket"));
  CHECK(contains(error_of(R"({"spaces": {"V": {"dim": 2}},
      "tensors": {"T": {"source": "V", "target": "W", "rows": [[1, 0], [0, 1]]}}})"),
                 "unknown space 'W'"));
  CHECK(contains(error_of(R"({"spaces": {"V": {"dim": 2}},
      "tensors": {"T": {"source": "V", "target": "V", "rows": [[1, 0]]}}})"),
                 "expected 2 rows"));
  CHECK(contains(error_of(R"({"spaces": {"V": {"dim": 2}}, "traces": {"s": {"space": "V", "coeffs": [1]}}})"),
                 "expected 2 coefficients"));
}

TEST_CASE("parameters") {
  const std::string text = R"({"parameters": {"k": "1/2"}, "spaces": {"V": {"dim": 1}},
      "tensors": {"T": {"source": "V", "target": "V", "rows": [["2*k + 1"]]}}})";
  CHECK(parse_problem(text).tensor("T").matrix(0, 0) == Scalar(2));
  CHECK(parse_problem(text, {{"k", Scalar(3)}}).tensor("T").matrix(0, 0) == Scalar(7));
  CHECK(contains(error_of(text, {{"q", Scalar(1)}}), "not a declared parameter"));
  CHECK(evaluate_expression("(1 - 2/3) * 6", {}) == Scalar(2));
  CHECK(evaluate_expression("-k/4", {{"k", Scalar(2)}}) == Scalar(-1, 2));
  CHECK_THROWS_AS(evaluate_expression("k", {}), InputError);
  CHECK_THROWS_AS(evaluate_expression("1/(1-1)", {}), InputError);
}

TEST_CASE("the parametrised example at k = 1/2") {
  const ProblemFile f = load_fixture("parametric_a4.json");
  CHECK(f.tensor("Lambda").matrix == Matrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, Scalar(1, 2)}});
  CHECK(load_fixture("parametric_a4.json", {{"k", Scalar(3)}}).tensor("Lambda").matrix(2, 2) == Scalar(6));
  CHECK(f.bracket("L").space == "H");
  CHECK_THROWS_AS(f.bracket("missing"), InputError);
  CHECK_THROWS_AS(f.lie("H"), InputError);
}

TEST_CASE("emit is a fixed point after one parse") {
  for (const std::string& name : all_fixtures) {
    CAPTURE(name);
    const std::string once = emit(load_fixture(name));
    const std::string twice = emit(parse_problem(once));
    CHECK(once == twice);
  }
}

TEST_CASE("derived files round-trip") {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"parametric_a4.json", "hemisemidirect"}, {"parametric_a4.json", "descendent"},
      {"parametric_a4.json", "induce-3ll"},     {"parametric_a4.json", "induced-rep"},
      {"heisenberg_e4.json", "lie-to-3lie"}, {"heisenberg_e4.json", "rho-sigma"},
      {"heisenberg_e4.json", "lift-net"},    {"leibniz_lie.json", "leibnizlie-to-3ll"}};
  for (const auto& [file, target] : cases) {
    CAPTURE(target);
    const std::string out = cli_out({"emit", fixture_path(file), "--derive", target});
    REQUIRE_FALSE(out.empty());
    CHECK(emit(parse_problem(out)) == out);
  }
}

TEST_CASE("derived files check out under the matching commands") {
  const std::string semi = cli_out({"emit", fixture_path("parametric_a4.json"), "--derive", "hemisemidirect"});
  CHECK(check_3leibniz(parse_problem(semi).three_leibniz("leibniz")).passed());
  const std::string rep = cli_out({"emit", fixture_path("parametric_a4.json"), "--derive", "induced-rep"});
  CHECK(check_3leibniz_rep(parse_problem(rep).leibniz_rep("rep3")).passed());
  const std::string lift = cli_out({"emit", fixture_path("heisenberg_e4.json"), "--derive", "lift-net"});
  CHECK(check_net(parse_problem(lift).net("rho", "H", "Lambda")).passed());
}

}  // TEST_SUITE
