#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "support.hpp"

using namespace testsupport;
using namespace bethe::cli;

namespace {

const char* kExample = R"({"m": 2, "n": 1, "field": {"d": 2, "params": ["c"], "h": "1"},
  "weights": [[1, 1, 0], [1, 1, 0], [1, 1, 0]], "z": ["0", "r", "-r"], "parity": [1, 1, -1], "y": [["1"], ["1"]]})";

RunConfig config(const std::string& sub, const std::string& input) {
  RunConfig c;
  c.subcommand = sub;
  c.input = input;
  return c;
}

int exit_code(const RunConfig& c, std::string* out = nullptr) {
  std::ostringstream o, e;
  int code = run(c, o, e);
  if (out) *out = o.str();
  return code;
}

std::string pointer_of(const std::string& doc) {
  try {
    parse_input(Json::parse(doc));
  } catch (const InputError& e) {
    return e.pointer;
  }
  return "<accepted>";
}

void check_same(const Input& a, const Input& b) {
  CHECK(a.field.radical == b.field.radical);
  CHECK(a.field.params == b.field.params);
  CHECK(a.field.h == b.field.h);
  CHECK(a.weights.m == b.weights.m);
  CHECK(a.weights.n == b.weights.n);
  CHECK(a.weights.weights == b.weights.weights);
  CHECK(a.weights.z == b.weights.z);
  CHECK(a.weights.twist == b.weights.twist);
  CHECK(a.node == b.node);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("input round trip") {
    Input in = parse_input(Json::parse(kExample));
    CHECK(in.weights.z[1] == Scalar::root(2));
    Input again = parse_input(to_json(in));
    check_same(in, again);
    CHECK(to_json(again) == to_json(in));

    Gen g(41);
    for (int trial = 0; trial < 20; ++trial) {
      int m = g.integer(0, 2), n = g.integer(0, 2);
      if (m + n < 2) continue;
      Input r;
      r.field.radical = trial % 2 ? std::optional<long>(3) : std::nullopt;
      r.weights = g.weights(m, n, g.integer(1, 3));
      if (trial % 3 == 0)
        for (int i = 0; i < m + n; ++i) r.weights.twist.push_back(Scalar(i + 2));
      if (r.field.radical) r.weights.z[0] += Scalar::rational(1, 2) * Scalar::root(3);
      std::vector<Poly> ys;
      for (int i = 0; i + 1 < m + n; ++i) ys.push_back(g.monic_poly(g.integer(0, 2)));
      r.node = BetheNode(ParitySeq::standard(m, n), ys, r.weights.twist);
      Input back = parse_input(Json::parse(to_json(r).dump()));
      check_same(r, back);
    }
  }

  TEST_CASE("gl11 input round trip") {
    Gl11Input in = parse_gl11_input(Json::parse(R"({"weights": [["1", "1/2"], [2, 0]], "z": ["0", "3"]})"));
    CHECK(in.weights.b[0] == Scalar::rational(1, 2));
    Gl11Input back = parse_gl11_input(to_json(in));
    CHECK(back.weights.a == in.weights.a);
    CHECK(back.weights.b == in.weights.b);
    CHECK(back.weights.z == in.weights.z);
    CHECK_THROWS_AS(parse_gl11_input(Json::parse(R"({"weights": [[1, -1]], "z": [0]})")), InputError);
  }

  TEST_CASE("malformed input is pointered") {
    CHECK(pointer_of(R"({"m": 2, "n": 1, "z": []})") == "/weights");
    CHECK(pointer_of(R"({"m": 2, "n": 1, "weights": [], "z": [], "extra": 0})") == "/extra");
    CHECK(pointer_of(R"({"m": 2, "n": 1, "weights": [[1, 1, 0], [0, 1, 0]], "z": [0, 1]})") == "/weights/1");
    CHECK(pointer_of(R"({"m": 2, "n": 1, "weights": [[1, 1, 0]], "z": ["q"]})") == "/z/0");
    CHECK(pointer_of(R"({"m": 2, "n": 1, "weights": [[1, 1, 0]], "z": [0], "y": [[1]]})") == "/y");
    CHECK(pointer_of(R"({"m": 2, "n": 1, "field": {"d": 4}, "weights": [], "z": []})") == "/field");
    CHECK(pointer_of(R"({"m": 2, "n": 1, "weights": [[1, 1, 0]], "z": [0], "parity": [1, -1, -1]})") ==
          "/parity");
  }

  TEST_CASE("exit codes") {
    std::string out;
    RunConfig pop = config("population", kExample);
    pop.symbolic = true;
    REQUIRE(exit_code(pop, &out) == 0);
    Json doc = Json::parse(out);
    CHECK(doc["graph"]["components"].size() == 3);
    CHECK(doc["invariance"]["passed"] == true);

    RunConfig h = config("gl11", "");
    h.gl11_mode = "homogeneous";
    h.sites = 2;
    REQUIRE(exit_code(h, &out) == 0);
    CHECK(Json::parse(out)["spectrum"].size() == 2);

    CHECK(exit_code(config("verify-bae", R"({"m": 2, "n": 1, "z": []})")) == 2);
    CHECK(exit_code(config("verify-bae", "{not json")) == 2);
    CHECK(exit_code(config("verify-bae", "/nonexistent/input.json")) == 2);
    // y_2 = x - 1/7 is not in the population
    std::string bad = R"({"m": 2, "n": 1, "field": {"d": 2}, "weights": [[1, 1, 0], [1, 1, 0], [1, 1, 0]],
      "z": ["0", "r", "-r"], "y": [["1"], ["-1/7", "1"]]})";
    CHECK(exit_code(config("verify-bae", bad)) == 1);
    CHECK(exit_code(config("verify-bae", kExample)) == 0);

    RunConfig sym = config("population", R"({"m": 2, "n": 0, "weights": [[1, 0]], "z": [0]})");
    sym.symbolic = true;
    CHECK(exit_code(sym) == 2);
  }

  TEST_CASE("rendering") {
    Report empty;
    CHECK(render(empty, Format::Json).empty());
    CHECK(render(empty, Format::Text).empty());
    CHECK_THROWS_AS(render(empty, Format::Graphviz), InputError);

    RunConfig pop = config("population", kExample);
    pop.symbolic = true;
    Report r = run_report(pop);
    std::string dot = render(r, Format::Graphviz);
    size_t clusters = 0;
    for (size_t at = dot.find("subgraph cluster_"); at != std::string::npos; at = dot.find("subgraph cluster_", at + 1))
      ++clusters;
    CHECK(clusters == 3);
    CHECK(render(r, Format::Text).find("FAIL") == std::string::npos);
    // emitted input re-ingests to the same value
    check_same(parse_input(r.doc["input"]), parse_input(Json::parse(kExample)));
    // fixed seed and input give the same bytes
    Report again = run_report(pop);
    CHECK(render(again, Format::Json) == render(r, Format::Json));
    CHECK(render(again, Format::Graphviz) == dot);
  }

  TEST_CASE("sampled runs record the seed and repeat") {
    RunConfig pop = config("population", kExample);
    pop.seed = 12;
    std::string a, b;
    REQUIRE(exit_code(pop, &a) == 0);
    REQUIRE(exit_code(pop, &b) == 0);
    CHECK(a == b);
    CHECK(Json::parse(a)["seed"] == 12);
  }
}
