#include <doctest.h>

#include "gmalg/families.hpp"
#include "gmalg/oracle.hpp"

using namespace gmalg;

namespace {

const Ring<Zn> F3(3);

LinMap<Zn> scaled_identity(const Ring<Zn>& r, Eigen::Index d, std::int64_t c) {
  return canon(r, LinMap<Zn>(r.from_int(c) * identity(r, d)));
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::BadInput;
}

std::vector<LinMap<Zn>> space_maps(const Submodule<Zn>& s, Eigen::Index d) {
  std::vector<LinMap<Zn>> out;
  for (const auto& v : s.generators()) out.push_back(unvec(v, d));
  return out;
}

}  // namespace

TEST_CASE("vec and unvec are inverse") {
  const auto a = matrix_algebra(F3, 2);
  const LinMap<Zn> l = a.left_mult(a.basis(1));
  CHECK(unvec(vec(l), 4) == l);
  CHECK(apply(F3, l, a.basis(2)) == a.mul(a.basis(1), a.basis(2)));
}

TEST_CASE("k-commuting decisions match brute force") {
  const auto g = full_matrix_gma(F3, 2, 1);
  const auto& a = g.algebra();
  const auto id = scaled_identity(F3, 4, 1);
  const auto left = a.left_mult(a.basis(0));
  for (int k = 1; k <= 3; ++k) {
    CHECK(is_k_commuting(g, id, k).holds);
    CHECK_FALSE(oracle::brute_k_commuting(a, id, k));
    const auto r = is_k_commuting(g, left, k);
    const auto o = oracle::brute_k_commuting(a, left, k);
    CHECK_FALSE(r.holds);
    REQUIRE(r.counterexample);
    REQUIRE(o);
    CHECK(oracle::to_elem(*r.counterexample) == *o);
  }
  CHECK(kind_of([&] { is_k_commuting(g, id, 0); }) == ErrorKind::BadInput);
  CHECK(kind_of([&] { is_k_commuting(g, LinMap<Zn>(identity(F3, 3)), 1); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("commuting maps of M2(Z/3)") {
  const auto g = full_matrix_gma(F3, 2, 1);
  const auto s1 = commuting_space(g, 1);
  CHECK(s1.generators().size() == 5u);
  CHECK(s1.size() == 243u);
  CHECK(s1 == proper_span(g.algebra()));
  for (const auto& v : *s1.elements()) {
    const auto theta = unvec(v, 4);
    CHECK(is_k_commuting(g, theta, 1).holds);
  }
  for (int k = 2; k <= 3; ++k) CHECK(commuting_space(g, k).contains(s1));
}

TEST_CASE("commuting maps over Q") {
  const Ring<Rational> q(RingSpec::rationals());
  const auto g = full_matrix_gma(q, 2, 1);
  const auto s = commuting_space(g, 1);
  CHECK(s.generators().size() == 5u);
  CHECK(s == proper_span(g.algebra()));
  const LinMap<Rational> left = g.algebra().left_mult(g.algebra().basis(0));
  const auto r = is_k_commuting(g, left, 1);
  CHECK_FALSE(r.holds);
  REQUIRE(r.counterexample);
  CHECK_FALSE(is_zero(canon(q, bracket(g.algebra(), apply(q, left, *r.counterexample), *r.counterexample))));
  CHECK(kind_of([&] { commuting_space(g, 2); }) == ErrorKind::NotEnumerable);
}

TEST_CASE("decompose and reassemble") {
  const auto g = full_matrix_gma(F3, 3, 1);
  LinMap<Zn> theta(g.dim(), g.dim());
  for (Eigen::Index i = 0; i < g.dim(); ++i)
    for (Eigen::Index j = 0; j < g.dim(); ++j) theta(i, j) = F3.from_int((i * 7 + j * 3) % 3);
  auto dec = decompose(g, theta);
  CHECK(dec.delta(1).rows() == 1);
  CHECK(dec.mu(4).rows() == 4);
  CHECK(dec.tau(3).cols() == 2);
  CHECK(reassemble(g, dec) == theta);
  dec.nu(2) = zeros(F3, 1, 1);
  CHECK(kind_of([&] { reassemble(g, dec); }) == ErrorKind::DimensionMismatch);
  CHECK(block_map_name(Block::M, Block::B) == "tau4");
  CHECK(block_map_name(Block::A, Block::N) == "delta3");
}

TEST_CASE("structure report on commuting spaces") {
  for (const auto& g : {full_matrix_gma(F3, 2, 1), triangular_gma(F3, 2, 1), triangular_gma(F3, 3, 2),
                        block_triangular_gma(F3, {2, 1}, 1)}) {
    for (int k = 1; k <= 2; ++k) {
      for (const auto& theta : space_maps(commuting_space(g, k), g.dim())) {
        const auto rep = verify_prop_2_2(g, theta, k);
        CHECK(rep.lines().size() == 20u);
        CHECK(rep.all_pass());
        if (!rep.all_pass()) MESSAGE(rep.markdown());
      }
    }
  }
}

TEST_CASE("structure report rejects maps that are not commuting") {
  const auto g = full_matrix_gma(F3, 2, 1);
  CHECK(kind_of([&] { verify_prop_2_2(g, LinMap<Zn>(g.algebra().left_mult(g.algebra().basis(1))), 1); }) ==
        ErrorKind::NotKCommuting);
}

TEST_CASE("hypotheses and witnesses") {
  const auto g = full_matrix_gma(F3, 2, 1);
  const auto w = check_thm_2_5_hypotheses(g, 1);
  CHECK(w.all());
  REQUIRE(w.m0);
  REQUIRE(w.n0);
  CHECK(oracle::to_elem(*w.m0) == oracle::Elem{1});
  CHECK(oracle::to_elem(*w.n0) == oracle::Elem{1});

  const auto t = triangular_gma(F3, 2, 1);
  const auto wt = check_thm_2_5_hypotheses(t, 2);
  CHECK(wt.all());
  CHECK(oracle::to_elem(*wt.m0) == oracle::Elem{1});
  CHECK(wt.n0->size() == 0);

  CHECK(check_corollary_2_6(g, 1));
  CHECK(check_corollary_2_6(t, 3));
  CHECK(check_corollary_2_6(block_triangular_gma(F3, {2, 1}, 1), 2));
}

TEST_CASE("theorem guards") {
  const Ring<Zn> z4(4);
  const auto g4 = full_matrix_gma(z4, 2, 1);
  CHECK(kind_of([&] { check_thm_2_5_hypotheses(g4, 1); }) == ErrorKind::TwoTorsion);
  const Ring<Rational> q(RingSpec::rationals());
  CHECK(kind_of([&] { check_thm_2_5_hypotheses(full_matrix_gma(q, 2, 1), 1); }) == ErrorKind::NotEnumerable);

  const auto g = full_matrix_gma(F3, 2, 1);
  const auto left = LinMap<Zn>(g.algebra().left_mult(g.algebra().basis(0)));
  CHECK(kind_of([&] { construct_proper_form(g, left, 1); }) == ErrorKind::NotKCommuting);
  CHECK(kind_of([&] { verify_step_invariants(g, left, 1); }) == ErrorKind::NotKCommuting);
}

TEST_CASE("properness certificates") {
  const auto g = full_matrix_gma(F3, 2, 1);
  const auto& a = g.algebra();
  const auto cert = properness_certificate(g, scaled_identity(F3, 4, 2));
  REQUIRE(cert);
  CHECK(cert->lambda == canon(F3, Vector<Zn>(F3.from_int(2) * a.unit())));
  CHECK(is_zero(vec(cert->zeta)));
  CHECK(certificate_holds(a, scaled_identity(F3, 4, 2), *cert));

  const auto left = LinMap<Zn>(a.left_mult(a.basis(1)));
  CHECK_FALSE(properness_certificate(g, left));
  CHECK_FALSE(oracle::brute_properness(a, left));

  const auto space = commuting_space(g, 1);
  for (const auto& v : *space.elements()) {
    const auto theta = unvec(v, 4);
    const auto c = properness_certificate(g, theta);
    REQUIRE(c);
    CHECK(certificate_holds(a, theta, *c));
    CHECK(oracle::brute_properness(a, theta).has_value());
  }
}

TEST_CASE("proper form construction") {
  for (const auto& g : {full_matrix_gma(F3, 2, 1), triangular_gma(F3, 2, 1), full_matrix_gma(Ring<Zn>(5), 2, 1)}) {
    for (int k = 1; k <= 2; ++k) {
      for (const auto& theta : space_maps(commuting_space(g, k), g.dim())) {
        const auto pf = construct_proper_form(g, theta, k);
        CHECK(center(g.algebra()).contains(pf.c));
        CHECK(canon(g.ring(), LinMap<Zn>(g.algebra().right_mult(pf.c) + pf.omega)) == theta);
        CHECK(verify_step_invariants(g, theta, k).all_pass());
      }
    }
  }
}

TEST_CASE("step identities on the identity map") {
  const auto g = full_matrix_gma(F3, 3, 1);
  const auto rep = verify_step_invariants(g, scaled_identity(F3, g.dim(), 1), 1);
  CHECK(rep.all_pass());
  CHECK(rep.lines().size() == 13u);
}

TEST_CASE("corrupted delta2 is caught") {
  const auto g = full_matrix_gma(F3, 2, 1);
  auto dec = decompose(g, scaled_identity(F3, 4, 1));
  dec.delta(2)(0, 0) = F3.one();
  const auto rep = check_step_invariants(g, dec);
  CHECK_FALSE(rep.all_pass());
  REQUIRE(rep.find("delta2_square"));
  CHECK_FALSE(rep.find("delta2_square")->pass);
  CHECK(rep.find("delta2_square")->witness == "m = (1)");
  CHECK(rep.find("delta3_square")->pass);
}

TEST_CASE("quadratic probe") {
  const Ring<Rational> q(RingSpec::rationals());
  CHECK(quadratic_probe(q, 3).size() == 9u);
  CHECK(quadratic_probe(F3, 2).size() == 9u);
  CHECK(quadratic_probe(F3, 0).size() == 1u);
}

TEST_CASE("right multiplication by diag(1, 0) on T2") {
  const auto g = triangular_gma(F3, 2, 1);
  const auto c = g.diag(g.context().a().unit(), zeros(F3, 1));
  const LinMap<Zn> theta = g.algebra().right_mult(c);
  const auto dec = decompose(g, theta);
  CHECK(dec.delta(1) == identity(F3, 1));
  CHECK(is_zero(vec(dec.delta(2))));
  CHECK(is_zero(vec(dec.mu(4))));
  CHECK(is_zero(vec(dec.tau(1))));
  CHECK(reassemble(g, dec) == theta);
}

TEST_CASE("identity has proper form C = 1, Omega = 0") {
  const auto g = full_matrix_gma(F3, 2, 1);
  const auto pf = construct_proper_form(g, scaled_identity(F3, 4, 1), 1);
  CHECK(pf.c == g.algebra().unit());
  CHECK(is_zero(vec(pf.omega)));
}
