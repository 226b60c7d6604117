#include <doctest.h>

#include <random>

#include "gmalg/families.hpp"
#include "gmalg/oracle.hpp"

using namespace gmalg;

namespace {

const Ring<Zn> F3(3);

Matrix<Zn> scalar_matrix(std::int64_t v, Eigen::Index d) { return canon(F3, Matrix<Zn>(F3.from_int(v) * identity(F3, d))); }

// A = R x R acting on M = R through the first factor, B = R, N = 0.
MoritaContext<Zn> unfaithful_context() {
  const auto e1 = unit_vector(F3, 2, 0), e2 = unit_vector(F3, 2, 1), z = zeros(F3, 2);
  Vector<Zn> one(2);
  one << Zn(1, 3), Zn(1, 3);
  Algebra<Zn> a(F3, {"u", "v"}, {{e1, z}, {z, e2}}, one);
  Bimodule<Zn> m{1, {"m"}, {scalar_matrix(1, 1), scalar_matrix(0, 1)}, {scalar_matrix(1, 1)}};
  Bimodule<Zn> n{0, {}, {zeros(F3, 0, 0)}, {zeros(F3, 0, 0), zeros(F3, 0, 0)}};
  return MoritaContext<Zn>(a, ground_algebra(F3), m, n, Pairing<Zn>{{zeros(F3, 2, 0)}}, Pairing<Zn>{{}});
}

MoritaContext<Zn> with_phi(const MoritaContext<Zn>& c, Pairing<Zn> phi) {
  return MoritaContext<Zn>(c.a(), c.b(), c.m(), c.n(), std::move(phi), c.psi());
}

Vector<Zn> random_vector(std::mt19937_64& rng, Eigen::Index d) {
  Vector<Zn> v(d);
  for (Eigen::Index i = 0; i < d; ++i) v(i) = F3.from_int(static_cast<std::int64_t>(rng() % 3));
  return v;
}

}  // namespace

TEST_CASE("standard contexts satisfy every axiom") {
  CHECK(validate_context(full_matrix_gma(F3, 2, 1).context()).ok());
  CHECK(validate_context(full_matrix_gma(F3, 3, 2).context()).ok());
  CHECK(validate_context(triangular_gma(F3, 3, 1).context()).ok());
  CHECK(validate_context(block_triangular_gma(F3, {2, 1}, 1, true).context()).ok());
  CHECK(validate_context(unfaithful_context()).ok());
}

TEST_CASE("block dimensions") {
  const auto g = full_matrix_gma(F3, 3, 1);
  CHECK(g.size(Block::A) == 1);
  CHECK(g.size(Block::M) == 2);
  CHECK(g.size(Block::N) == 2);
  CHECK(g.size(Block::B) == 4);
  const auto t = triangular_gma(F3, 3, 1);
  CHECK(t.size(Block::A) == 1);
  CHECK(t.size(Block::M) == 2);
  CHECK(t.size(Block::N) == 0);
  CHECK(t.size(Block::B) == 3);
  const auto b = block_triangular_gma(F3, {2, 1}, 1);
  CHECK(b.size(Block::A) == 4);
  CHECK(b.size(Block::M) == 2);
  CHECK(b.size(Block::N) == 0);
  CHECK(b.size(Block::B) == 1);
  CHECK(b.algebra().labels()[0] == "A:E11");
}

TEST_CASE("scaled pairing breaks the diagram") {
  const auto g = full_matrix_gma(F3, 2, 1);
  const auto& ctx = g.context();
  Pairing<Zn> phi = ctx.phi();
  for (auto& t : phi.table) t = canon(F3, Matrix<Zn>(F3.from_int(2) * t));
  const auto bad = with_phi(ctx, phi);
  const auto rep = validate_context(bad);
  CHECK_FALSE(rep.ok());
  CHECK(rep.cites("diagram.mnm"));
  CHECK_FALSE(rep.cites("phi.balanced"));
  try {
    build_gma(bad);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidContext);
  }
}

TEST_CASE("non-unital module action") {
  const auto g = full_matrix_gma(F3, 2, 1);
  const auto& ctx = g.context();
  Bimodule<Zn> m = ctx.m();
  m.left[0] = zeros(F3, 1, 1);
  const MoritaContext<Zn> bad(ctx.a(), ctx.b(), m, ctx.n(), ctx.phi(), ctx.psi());
  const auto rep = validate_context(bad);
  CHECK(rep.cites("M.left_unital"));
  CHECK_FALSE(rep.cites("N.left_unital"));
  for (const auto& v : rep.violations) CHECK_FALSE(v.witness.empty());
}

TEST_CASE("both modules zero") {
  const auto a = ground_algebra(F3);
  Bimodule<Zn> m{0, {}, {zeros(F3, 0, 0)}, {zeros(F3, 0, 0)}};
  const MoritaContext<Zn> ctx(a, a, m, m, Pairing<Zn>{{}}, Pairing<Zn>{{}});
  CHECK(validate_context(ctx).cites("nonzero_bimodule"));
}

TEST_CASE("shape errors") {
  const auto g = full_matrix_gma(F3, 2, 1);
  const auto& ctx = g.context();
  Pairing<Zn> phi = ctx.phi();
  phi.table.push_back(phi.table.front());
  try {
    with_phi(ctx, phi);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
}

TEST_CASE("block product agrees with the assembled algebra") {
  std::mt19937_64 rng(11);
  for (const auto& g : {full_matrix_gma(F3, 3, 1), triangular_gma(F3, 3, 2), block_triangular_gma(F3, {1, 2}, 1)}) {
    for (int trial = 0; trial < 30; ++trial) {
      const auto x = random_vector(rng, g.dim()), y = random_vector(rng, g.dim());
      CHECK(block_product(g.context(), g.split(x), g.split(y)) == g.algebra().mul(x, y));
    }
    CHECK(g.algebra().unit() == g.diag(g.context().a().unit(), g.context().b().unit()));
  }
}

TEST_CASE("faithfulness") {
  const auto f = check_faithful(full_matrix_gma(F3, 2, 1).context());
  CHECK(f.both());
  CHECK(f.n_left_faithful);
  CHECK(f.n_right_faithful);
  const auto t = check_faithful(triangular_gma(F3, 2, 1).context());
  CHECK(t.both());
  CHECK_FALSE(t.n_left_faithful);
  const auto u = check_faithful(unfaithful_context());
  CHECK_FALSE(u.left_faithful);
  CHECK(u.right_faithful);
}

TEST_CASE("centers of generalized matrix algebras") {
  for (const auto& g : {full_matrix_gma(F3, 2, 1), triangular_gma(F3, 2, 1), triangular_gma(F3, 3, 1),
                        block_triangular_gma(F3, {2, 1}, 1)}) {
    const auto z = gma_center(g);
    CHECK(z == center(g.algebra()));
    CHECK(z.size() == 3u);
    std::vector<oracle::Elem> zs;
    for (const auto& v : *z.elements()) zs.push_back(oracle::to_elem(v));
    CHECK(zs == oracle::brute_center(g.algebra()));
  }
  const Ring<Rational> q(RingSpec::rationals());
  const auto gq = full_matrix_gma(q, 2, 1);
  CHECK(gma_center(gq) == scalar_multiples_of_unit(gq.algebra()));
}

TEST_CASE("center isomorphism") {
  const auto g = full_matrix_gma(F3, 3, 1);
  const auto phi = center_iso_phi(g);
  const auto& ctx = g.context();
  CHECK(phi(ctx.a().unit()) == ctx.b().unit());
  const auto two_a = canon(F3, Vector<Zn>(F3.from_int(2) * ctx.a().unit()));
  const auto two_b = canon(F3, Vector<Zn>(F3.from_int(2) * ctx.b().unit()));
  CHECK(phi(two_a) == two_b);
  CHECK(phi.inverse(two_b) == two_a);
  CHECK(phi.table().size() == 3u);
  CHECK(phi.domain().size() == 3u);

  const auto t = triangular_gma(F3, 3, 1);
  const auto phit = center_iso_phi(t);
  const Vector<Zn> e33 = t.context().b().basis(t.context().b().dim() - 1);
  CHECK_THROWS_AS(phit.inverse(e33), Error);
}

TEST_CASE("center isomorphism needs a faithful M") {
  const auto ctx = unfaithful_context();
  const auto g = build_gma(ctx);
  try {
    center_iso_phi(g);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFaithful);
  }
}
