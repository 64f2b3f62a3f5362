#include <doctest.h>

#include <random>

#include "modop/ainf.hpp"
#include "modop/frobenius.hpp"
#include "modop/graph_json.hpp"
#include "modop/ribbon_complex.hpp"
#include "test_support.hpp"

using namespace modop;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const JsonError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("graphs round trip") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const RibbonGraph rg = testing::random_ribbon(rng, 7, 1 + trial % 3, 1, trial % 2 == 0);
    const Json j = to_json(rg);
    const RibbonGraph back = ribbon_from_json(parse_json(j.dump()));
    CHECK(back.graph == rg.graph);
    CHECK(back.rho() == rg.rho());
    CHECK(back.has_tail_labels() == rg.has_tail_labels());
    CHECK(graph_from_json(j) == rg.graph);
  }
}

TEST_CASE("decorations define the rotation") {
  const RibbonGraph c = corolla({1, 2, 3, 4});
  Json j = decorated_to_json(c);
  CHECK(j.contains("decorations"));
  j.erase("rotation");
  CHECK(ribbon_from_json(j).rho() == c.rho());
}

TEST_CASE("generators and vectors round trip") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 10; ++trial) {
    const OrientedGraph g = random_ainf_tree(rng, 2, 5);
    CHECK(generator_from_json(to_json(g)) == g);
    GradedVector v = ainf_differential(GradedVector{g});
    v.add(GradedVector{g}, Rational(-2, 3));
    CHECK(vector_from_json(parse_json(to_json(v).dump())) == v);
  }
  // vertex_order without starts reads each vertex from its first half-edge
  Json j = to_json(ainf_corolla({1, 2, 3}));
  j.erase("starts");
  j["vertex_order"] = Json::array({0});
  CHECK(generator_from_json(j).starts == std::vector<HalfEdge>{0});
}

TEST_CASE("surfaces and algebras round trip") {
  const SurfaceType t{{SurfaceComponent{1, {{1, 2}, {}}}}};
  CHECK(surface_from_json(to_json(t)) == t);
  // input is normalized
  const Json rotated = parse_json(
      R"({"components": [{"genus": 0, "cycles": [[], [3, 1, 2]]}]})");
  CHECK(surface_from_json(rotated) ==
        SurfaceType{{SurfaceComponent{0, {{1, 2, 3}, {}}}}});
  for (const auto& a : {ground_field(), matrix_algebra_2(), group_algebra_z2()}) {
    const FrobeniusAlgebra back = algebra_from_json(to_json(a));
    CHECK(back.dim == a.dim);
    CHECK(back.mult == a.mult);
    CHECK(back.trace == a.trace);
  }
}

TEST_CASE("complex and matrix output") {
  const RibbonComplex cx = build_complex(ComplexType{1, 1, {}, CycleMode::Labeled});
  const Json j = to_json(cx);
  CHECK(j["type"]["g"] == 1);
  CHECK(j["orbifold_euler"] == "-1/12");
  CHECK(j["killed_classes"] == 1);
  SparseRationalMatrix m(2, 2);
  m.set(1, 0, Rational(-1, 2));
  CHECK(to_json(m).dump() == R"({"rows":2,"cols":2,"entries":[[1,0,"-1/2"]]})");
}

TEST_CASE("errors name the byte or the path") {
  const std::string syntax = error_of([] { parse_json("{\"a\": [1, 2,}"); });
  CHECK(syntax.find("malformed JSON at byte") != std::string::npos);
  try {
    parse_json("[1, 2");
  } catch (const JsonError& e) {
    CHECK(e.byte > 0);
  }
  Json bad = to_json(corolla({1, 2, 3}));
  bad["sigma"][1] = 7;
  CHECK(!error_of([&] { graph_from_json(bad); }).empty());
  Json bad_tail = to_json(corolla({1, 2, 3}));
  bad_tail["tails"]["1"] = "x";
  CHECK(error_of([&] { ribbon_from_json(bad_tail); }).find("tails.1") != std::string::npos);
  CHECK(!error_of([] { surface_from_json(parse_json(R"({"components": 3})")); }).empty());
  CHECK(!error_of([] { algebra_from_json(parse_json(R"({"dim": 1, "mult": [[["a"]]], "trace": ["1"]})")); }).empty());
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), JsonError);
}
