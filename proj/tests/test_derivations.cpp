#include <doctest.h>

#include "gmalg/derivations.hpp"
#include "gmalg/families.hpp"

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

TEST_CASE("inner derivations") {
  const auto a = matrix_algebra(F3, 2);
  for (Eigen::Index i = 0; i < a.dim(); ++i) CHECK(is_derivation(a, inner_derivation(a, a.basis(i))).holds);
  const auto id = LinMap<Zn>(identity(F3, 4));
  const auto r = is_derivation(a, id);
  CHECK_FALSE(r.holds);
  REQUIRE(r.counterexample);
  CHECK(r.counterexample->first == 0);
  CHECK(r.counterexample->second == 0);
}

TEST_CASE("derivation spaces") {
  CHECK(derivation_space(matrix_algebra(F3, 2)).generators().size() == 3u);
  CHECK(derivation_space(matrix_algebra(F3, 2)).size() == 27u);
  const auto t = triangular_gma(F3, 2, 1);
  // T_2: inner derivations modulo the center, dimension 2
  CHECK(derivation_space(t).generators().size() == 2u);
  const Ring<Rational> q(RingSpec::rationals());
  CHECK(derivation_space(matrix_algebra(q, 2)).generators().size() == 3u);
}

TEST_CASE("derivation form of ad E12") {
  const auto g = full_matrix_gma(F3, 2, 1);
  const auto theta = inner_derivation(g.algebra(), g.algebra().basis(1));
  const auto [rep, form] = verify_prop_2_3(g, theta);
  CHECK(rep.all_pass());
  CHECK(to_string(F3, form.m0) == "(2)");
  CHECK(to_string(F3, form.n0) == "(0)");
  CHECK(assemble_derivation(g, form) == theta);
  CHECK(rep.facts().front().first == "m0");
  CHECK(rep.lines().size() == 8u);
}

TEST_CASE("every derivation has the block form") {
  for (const auto& g : {full_matrix_gma(F3, 2, 1), full_matrix_gma(F3, 3, 2), triangular_gma(F3, 3, 1),
                        block_triangular_gma(F3, {2, 1}, 1), block_triangular_gma(F3, {1, 2}, 1, true)}) {
    const auto space = derivation_space(g);
    for (const auto& v : space.generators()) {
      const auto theta = unvec(v, g.dim());
      const auto [rep, form] = verify_prop_2_3(g, theta);
      CHECK(rep.all_pass());
      if (!rep.all_pass()) MESSAGE(rep.markdown());
    }
  }
}

TEST_CASE("form reports catch a broken reassembly") {
  const auto g = full_matrix_gma(F3, 2, 1);
  const auto theta = inner_derivation(g.algebra(), g.algebra().basis(1));
  auto [rep, form] = verify_prop_2_3(g, theta);
  form.tau2(0, 0) = form.tau2(0, 0) + F3.one();
  CHECK_FALSE(assemble_derivation(g, form) == theta);
}

TEST_CASE("non-derivations are rejected") {
  const auto g = full_matrix_gma(F3, 2, 1);
  CHECK(kind_of([&] { verify_prop_2_3(g, LinMap<Zn>(identity(F3, 4))); }) == ErrorKind::NotDerivation);
}

TEST_CASE("no nonzero commuting derivations") {
  for (int k = 1; k <= 3; ++k) {
    CHECK(verify_prop_2_4(full_matrix_gma(F3, 2, 1), k));
    CHECK(verify_prop_2_4(triangular_gma(Ring<Zn>(5), 2, 1), k));
    CHECK(verify_prop_2_4(block_triangular_gma(F3, {2, 1}, 1), k));
    CHECK(commuting_derivations(full_matrix_gma(F3, 2, 1), k).is_zero_module());
  }
  CHECK(kind_of([&] { verify_prop_2_4(full_matrix_gma(Ring<Zn>(4), 2, 1), 1); }) == ErrorKind::TwoTorsion);
}
