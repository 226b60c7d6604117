#include <doctest.h>

#include "gmalg/families.hpp"
#include "gmalg/io.hpp"
#include "gmalg/report.hpp"

using namespace gmalg;

namespace {

const Ring<Zn> F3(3);

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::BadInput;
}

}  // namespace

TEST_CASE("rings") {
  CHECK(ring_to_json(RingSpec::zmod(3)).dump() == R"({"kind":"Zmod","n":3})");
  CHECK(ring_to_json(RingSpec::rationals()).dump() == R"({"kind":"Q"})");
  CHECK(ring_from_json(Json::parse(R"({"kind":"Zmod","n":7})")) == RingSpec::zmod(7));
  CHECK(kind_of([] { ring_from_json(Json::parse(R"({"kind":"Z"})")); }) == ErrorKind::BadInput);
  CHECK(kind_of([] { ring_from_json(Json::parse(R"({"kind":"Zmod","n":1})")); }) == ErrorKind::BadInput);
}

TEST_CASE("algebra round trip") {
  const auto a = triangular_gma(F3, 3, 1).algebra();
  const auto j = algebra_to_json(a);
  CHECK(j["schema"] == kAlgebraSchema);
  const auto back = algebra_from_json(F3, j);
  CHECK(back.labels() == a.labels());
  for (Eigen::Index i = 0; i < a.dim(); ++i)
    for (Eigen::Index k = 0; k < a.dim(); ++k) CHECK(back.product(i, k) == a.product(i, k));
  CHECK(algebra_to_json(back).dump() == j.dump());
}

TEST_CASE("context round trip") {
  const auto g = block_triangular_gma(F3, {2, 1}, 1);
  const auto j = context_to_json(g.context());
  const auto ctx = context_from_json(F3, j);
  const auto g2 = build_gma(ctx);
  CHECK(algebra_to_json(g2.algebra()).dump() == algebra_to_json(g.algebra()).dump());
  CHECK(context_to_json(ctx).dump(2) == j.dump(2));
}

TEST_CASE("rational documents") {
  const Ring<Rational> q(RingSpec::rationals());
  LinMap<Rational> m = identity(q, 2);
  m(0, 1) = Rational::parse("-1/2");
  const auto j = map_to_json(q, m);
  CHECK(j.dump() == R"({"schema":"gmalg.map/1","matrix":[["1","-1/2"],["0","1"]]})");
  CHECK((map_from_json(q, j, 2) == m));
  CHECK((map_from_json(q, Json::parse(R"({"matrix":[[1,"3/6"],[0,1]]})"), 2)(0, 1) == Rational::parse("1/2")));
}

TEST_CASE("malformed documents") {
  CHECK(kind_of([] { expect_schema(Json::parse(R"({"schema":"gmalg.map/1"})"), kContextSchema); }) ==
        ErrorKind::BadInput);
  CHECK(kind_of([] { expect_schema(Json::parse("[1]"), kMapSchema); }) == ErrorKind::BadInput);
  CHECK(kind_of([] { map_from_json(F3, Json::parse(R"({"matrix":[[1,0]]})"), 2); }) == ErrorKind::BadInput);
  CHECK(kind_of([] { map_from_json(F3, Json::parse(R"({"matrix":[["1",0],[0,1]]})"), 2); }) == ErrorKind::BadInput);
  CHECK(kind_of([] { map_from_json(F3, Json::parse(R"({"rows":[]})"), 2); }) == ErrorKind::BadInput);
  CHECK(kind_of([] { algebra_from_json(F3, Json::parse(R"({"dim":0,"mul":[]})")); }) == ErrorKind::BadInput);
  CHECK(kind_of([] { read_json_file("/nonexistent/file.json"); }) == ErrorKind::BadInput);

  // claimed unit is wrong
  auto j = algebra_to_json(matrix_algebra(F3, 2));
  j["unit"] = Json::array({1, 0, 0, 0});
  CHECK(kind_of([&] { algebra_from_json(F3, j); }) == ErrorKind::InvalidAlgebra);
}

TEST_CASE("validation documents") {
  const auto g = full_matrix_gma(F3, 2, 1);
  auto j = context_to_json(g.context());
  j["phi"][0][0][0] = 2;
  const auto rep = validate_context(context_from_json(F3, j));
  const auto out = validation_to_json(rep);
  CHECK(out["valid"] == false);
  CHECK(out["violations"][0]["axiom"] == "diagram.mnm");
}

TEST_CASE("reports render deterministically") {
  Report r("demo");
  r.fact("m0", "(1)");
  r.check("a", "x = y", true, "ignored");
  r.check("b", "p | q", false, "x = (2)");
  CHECK_FALSE(r.all_pass());
  CHECK(r.first_failure()->id == "b");
  CHECK(r.find("a")->witness.empty());
  CHECK(r.markdown() ==
        "## demo\n\n- m0: (1)\n\n| condition | identity | result | witness |\n|---|---|---|---|\n"
        "| a | x = y | pass |  |\n| b | p \\| q | FAIL | x = (2) |\n");
  CHECK(r.json(-1) ==
        R"x({"schema":"gmalg.report/1","title":"demo","all_pass":false,"facts":{"m0":"(1)"},"checks":[{"id":"a","anchor":"x = y","pass":true,"witness":""},{"id":"b","anchor":"p | q","pass":false,"witness":"x = (2)"}]})x"
        "\n");
  Report outer("all");
  outer.append(r, "s.");
  CHECK(outer.lines()[1].id == "s.b");
  CHECK(outer.facts()[0].first == "s.m0");
  CHECK(outer.json() == outer.json());
}
