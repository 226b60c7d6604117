#pragma once

// Linear self-maps of algebras and generalized matrix algebras: k-commuting
// tests, the space of k-commuting maps, the sixteen-block decomposition, the
// structure conditions every k-commuting map satisfies, and the proper form
// Theta(x) = x lambda + zeta(x).
//
// A map is a dim x dim matrix whose column j is the image of e_j. As a vector
// of unknowns it is flattened column-major, so Theta(x) = (x^T kron I) vec.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gmalg/morita.hpp"
#include "gmalg/report.hpp"

namespace gmalg {

template <class S>
using LinMap = Matrix<S>;

template <class S>
Vector<S> vec(const LinMap<S>& m) {
  return Eigen::Map<const Vector<S>>(m.data(), m.size());
}

template <class S>
LinMap<S> unvec(const Vector<S>& v, Eigen::Index dim) {
  if (v.size() != dim * dim) fail(ErrorKind::DimensionMismatch, "flattened map has wrong length");
  return Eigen::Map<const Matrix<S>>(v.data(), dim, dim);
}

template <class S>
Vector<S> apply(const Ring<S>& ring, const LinMap<S>& theta, const Vector<S>& x) {
  return canon(ring, Vector<S>(theta * x));
}

template <class S>
void check_map(const Algebra<S>& a, const LinMap<S>& theta) {
  if (theta.rows() != a.dim() || theta.cols() != a.dim()) {
    fail(ErrorKind::DimensionMismatch, "map is " + std::to_string(theta.rows()) + "x" + std::to_string(theta.cols()) +
                                           " on an algebra of dim " + std::to_string(a.dim()));
  }
}

/// Test points on which a polynomial map of degree <= 2 with f(0) = 0 vanishes
/// iff it vanishes identically: every element when the module is small and
/// finite, otherwise {e_i, 2e_i, e_i + e_j} (enough when 2 is invertible).
template <class S>
std::vector<Vector<S>> quadratic_probe(const Ring<S>& ring, Eigen::Index dim,
                                       std::uint64_t budget = kDefaultEnumerationBudget) {
  std::vector<Vector<S>> out;
  if constexpr (std::is_same_v<S, Zn>) {
    std::uint64_t total = 1;
    bool small = true;
    for (Eigen::Index i = 0; i < dim && small; ++i) {
      total *= ring.size();
      small = total <= budget;
    }
    if (small) {
      for_each_vector(ring, dim, budget, [&](const Vector<Zn>& x) {
        out.push_back(x);
        return true;
      });
      return out;
    }
  }
  for (Eigen::Index i = 0; i < dim; ++i) {
    out.push_back(unit_vector(ring, dim, i));
    out.push_back(canon(ring, Vector<S>(ring.from_int(2) * unit_vector(ring, dim, i))));
    for (Eigen::Index j = i + 1; j < dim; ++j)
      out.push_back(canon(ring, Vector<S>(unit_vector(ring, dim, i) + unit_vector(ring, dim, j))));
  }
  return out;
}

template <class S>
struct KCommutingResult {
  bool holds = true;
  std::optional<Vector<S>> counterexample;
  explicit operator bool() const { return holds; }
};

/// [Theta(x), x]_k = 0 for every x. Over a finite ring every element is
/// scanned in lexicographic order and the first failure is returned. Over Q
/// only k = 1 is decided, through the polarized identity on basis pairs.
template <class S>
KCommutingResult<S> is_k_commuting(const Algebra<S>& a, const LinMap<S>& theta, int k,
                                   std::uint64_t budget = kDefaultEnumerationBudget) {
  if (k < 1) fail(ErrorKind::BadInput, "k must be at least 1");
  check_map(a, theta);
  const auto& r = a.ring();
  KCommutingResult<S> out;
  if constexpr (std::is_same_v<S, Zn>) {
    for_each_vector(r, a.dim(), budget, [&](const Vector<Zn>& x) {
      const Matrix<Zn> d = canon(r, Matrix<Zn>(a.right_mult(x) - a.left_mult(x)));
      Vector<Zn> cur = apply(r, theta, x);
      for (int i = 0; i < k && !is_zero(cur); ++i) cur = canon(r, Vector<Zn>(d * cur));
      if (!is_zero(cur)) {
        out.holds = false;
        out.counterexample = x;
        return false;
      }
      return true;
    });
    return out;
  } else {
    if (k != 1) fail(ErrorKind::NotEnumerable, "k-commuting test over Q is only decided for k = 1");
    auto f = [&](const Vector<S>& x) { return bracket(a, apply(r, theta, x), x); };
    for (Eigen::Index i = 0; i < a.dim(); ++i) {
      for (Eigen::Index j = i; j < a.dim(); ++j) {
        const auto ei = a.basis(i), ej = a.basis(j);
        const Vector<S> pol = bracket(a, apply(r, theta, ei), ej) + bracket(a, apply(r, theta, ej), ei);
        if (is_zero(canon(r, pol))) continue;
        out.holds = false;
        for (const Vector<S>& x : {ei, ej, Vector<S>(ei + ej)}) {
          if (!is_zero(f(x))) {
            out.counterexample = x;
            break;
          }
        }
        return out;
      }
    }
    return out;
  }
}

template <class S>
KCommutingResult<S> is_k_commuting(const GMAlgebra<S>& g, const LinMap<S>& theta, int k,
                                   std::uint64_t budget = kDefaultEnumerationBudget) {
  return is_k_commuting(g.algebra(), theta, k, budget);
}

/// Adds the linear constraints on vec(Theta) expressing that Theta is
/// k-commuting. Finite rings: (R_x - L_x)^k (x^T kron I) for every x. Over Q
/// with k = 1: the polarized rows e_i^T kron D_j + e_j^T kron D_i.
template <class S>
void add_commuting_constraints(const Algebra<S>& a, int k, RowEchelon<S>& rows,
                               std::uint64_t budget = kDefaultEnumerationBudget) {
  if (k < 1) fail(ErrorKind::BadInput, "k must be at least 1");
  const auto d = a.dim();
  const auto& r = a.ring();
  if constexpr (std::is_same_v<S, Zn>) {
    Matrix<Zn> block = zeros(r, d, d * d);
    for_each_vector(r, d, budget, [&](const Vector<Zn>& x) {
      const Matrix<Zn> p = ad_power(a, x, k);
      for (Eigen::Index j = 0; j < d; ++j) block.middleCols(j * d, d) = canon(r, Matrix<Zn>(x(j) * p));
      rows.add_rows(block);
      return true;
    });
  } else {
    if (k != 1) fail(ErrorKind::NotEnumerable, "k-commuting maps over Q are only computed for k = 1");
    std::vector<Matrix<S>> dd;
    for (Eigen::Index i = 0; i < d; ++i) dd.push_back(canon(r, Matrix<S>(a.right_basis(i) - a.left_basis(i))));
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = i; j < d; ++j) {
        Matrix<S> block = zeros(r, d, d * d);
        block.middleCols(i * d, d) += dd[j];
        block.middleCols(j * d, d) += dd[i];
        rows.add_rows(canon(r, block));
      }
  }
}

/// All k-commuting maps, as a submodule of flattened maps.
template <class S>
Submodule<S> commuting_space(const Algebra<S>& a, int k, std::uint64_t budget = kDefaultEnumerationBudget) {
  RowEchelon<S> rows(a.ring(), a.dim() * a.dim());
  add_commuting_constraints(a, k, rows, budget);
  return Submodule<S>(a.ring(), a.dim() * a.dim(), rows.kernel());
}

template <class S>
Submodule<S> commuting_space(const GMAlgebra<S>& g, int k, std::uint64_t budget = kDefaultEnumerationBudget) {
  return commuting_space(g.algebra(), k, budget);
}

/// Span of the proper maps x -> x lambda + zeta(x): R_z for central z, and
/// every map sending one basis element to a central z and the rest to 0.
template <class S>
Submodule<S> proper_span(const Algebra<S>& a) {
  const auto z = center(a);
  const auto d = a.dim();
  std::vector<Vector<S>> gens;
  for (const auto& c : z.generators()) gens.push_back(vec<S>(a.right_mult(c)));
  for (const auto& c : z.generators())
    for (Eigen::Index j = 0; j < d; ++j) {
      LinMap<S> m = zeros(a.ring(), d, d);
      m.col(j) = c;
      gens.push_back(vec(m));
    }
  return Submodule<S>(a.ring(), d * d, std::move(gens));
}

/// Sixteen blocks of a map on [A M; N B]: blocks[out][in] with both indices
/// in the order A, M, N, B. delta_i lands in A, tau_i in M, nu_i in N, mu_i
/// in B, and i = 1..4 names the source block.
template <class S>
struct BlockDecomposition {
  std::array<std::array<Matrix<S>, 4>, 4> blocks;

  Matrix<S>& block(Block out, Block in) { return blocks[static_cast<int>(out)][static_cast<int>(in)]; }
  const Matrix<S>& block(Block out, Block in) const { return blocks[static_cast<int>(out)][static_cast<int>(in)]; }

  const Matrix<S>& delta(int i) const { return blocks[0][i - 1]; }
  const Matrix<S>& tau(int i) const { return blocks[1][i - 1]; }
  const Matrix<S>& nu(int i) const { return blocks[2][i - 1]; }
  const Matrix<S>& mu(int i) const { return blocks[3][i - 1]; }
  Matrix<S>& delta(int i) { return blocks[0][i - 1]; }
  Matrix<S>& tau(int i) { return blocks[1][i - 1]; }
  Matrix<S>& nu(int i) { return blocks[2][i - 1]; }
  Matrix<S>& mu(int i) { return blocks[3][i - 1]; }
};

inline constexpr std::array<Block, 4> kBlocks{Block::A, Block::M, Block::N, Block::B};

inline std::string block_map_name(Block out, Block in) {
  constexpr std::array<const char*, 4> stems{"delta", "tau", "nu", "mu"};
  return std::string(stems[static_cast<int>(out)]) + std::to_string(static_cast<int>(in) + 1);
}

template <class S>
BlockDecomposition<S> decompose(const GMAlgebra<S>& g, const LinMap<S>& theta) {
  check_map(g.algebra(), theta);
  BlockDecomposition<S> dec;
  for (Block out : kBlocks)
    for (Block in : kBlocks)
      dec.block(out, in) = theta.block(g.offset(out), g.offset(in), g.size(out), g.size(in));
  return dec;
}

template <class S>
LinMap<S> reassemble(const GMAlgebra<S>& g, const BlockDecomposition<S>& dec) {
  LinMap<S> theta = zeros(g.ring(), g.dim(), g.dim());
  for (Block out : kBlocks)
    for (Block in : kBlocks) {
      const auto& b = dec.block(out, in);
      if (b.rows() != g.size(out) || b.cols() != g.size(in)) {
        fail(ErrorKind::DimensionMismatch, block_map_name(out, in) + " has the wrong shape");
      }
      theta.block(g.offset(out), g.offset(in), g.size(out), g.size(in)) = b;
    }
  return theta;
}

namespace detail {

// Evaluation helpers shared by the structure checks.
template <class S>
struct BlockCalculus {
  const GMAlgebra<S>& g;
  const BlockDecomposition<S>& dec;

  const MoritaContext<S>& ctx() const { return g.context(); }
  const Ring<S>& ring() const { return g.ring(); }

  Vector<S> at(const Matrix<S>& m, const Vector<S>& v) const { return canon(ring(), Vector<S>(m * v)); }
  Vector<S> d(int i, const Vector<S>& v) const { return at(dec.delta(i), v); }
  Vector<S> t(int i, const Vector<S>& v) const { return at(dec.tau(i), v); }
  Vector<S> nu(int i, const Vector<S>& v) const { return at(dec.nu(i), v); }
  Vector<S> mu(int i, const Vector<S>& v) const { return at(dec.mu(i), v); }

  Vector<S> one_a() const { return ctx().a().unit(); }
  Vector<S> one_b() const { return ctx().b().unit(); }
  Vector<S> two(const Vector<S>& v) const { return canon(ring(), Vector<S>(ring().from_int(2) * v)); }

  std::string show(const Vector<S>& v) const { return to_string(ring(), v); }
  std::string basis(Block blk, Eigen::Index i) const { return ctx().label(blk, i); }
};

template <class S>
bool same(const Ring<S>& r, const Vector<S>& x, const Vector<S>& y) {
  return canon(r, x) == canon(r, y);
}

}  // namespace detail

/// Runs every structure condition a k-commuting map must satisfy. The map is
/// checked to be k-commuting first.
template <class S>
Report verify_prop_2_2(const GMAlgebra<S>& g, const LinMap<S>& theta, int k,
                       std::uint64_t budget = kDefaultEnumerationBudget) {
  const auto kc = is_k_commuting(g, theta, k, budget);
  if (!kc.holds) {
    fail(ErrorKind::NotKCommuting,
         "map is not " + std::to_string(k) + "-commuting" +
             (kc.counterexample ? ", witness x = " + to_string(g.ring(), *kc.counterexample) : std::string{}));
  }
  const auto dec = decompose(g, theta);
  const detail::BlockCalculus<S> c{g, dec};
  const auto& ctx = g.context();
  const auto& r = g.ring();
  Report rep("structure of a " + std::to_string(k) + "-commuting map");

  // off-diagonal blocks that must vanish
  const std::array<std::pair<Block, Block>, 6> vanishing{{{Block::M, Block::A},
                                                          {Block::N, Block::A},
                                                          {Block::M, Block::B},
                                                          {Block::N, Block::B},
                                                          {Block::M, Block::N},
                                                          {Block::N, Block::M}}};
  for (const auto& [out, in] : vanishing) {
    const auto& m = dec.block(out, in);
    std::string witness;
    for (Eigen::Index j = 0; j < m.cols() && witness.empty(); ++j)
      if (!is_zero(Vector<S>(m.col(j)))) witness = c.basis(in, j) + " -> " + c.show(m.col(j));
    const auto name = block_map_name(out, in);
    rep.check("vanish." + name, name + " = 0", witness.empty(), witness);
  }

  const auto zka = zk_set(ctx.a(), k, budget);
  const auto zkb = zk_set(ctx.b(), k, budget);
  auto range_line = [&](Block out, Block in, const Submodule<S>& target, const char* target_name) {
    const auto& m = dec.block(out, in);
    std::string witness;
    for (Eigen::Index j = 0; j < m.cols() && witness.empty(); ++j)
      if (!target.contains(Vector<S>(m.col(j)))) witness = c.basis(in, j) + " -> " + c.show(m.col(j));
    const auto name = block_map_name(out, in);
    rep.check("range." + name, name + "(" + block_name(in) + ") in " + target_name, witness.empty(), witness);
  };
  range_line(Block::A, Block::M, zka, "Z(A)_k");
  range_line(Block::A, Block::N, zka, "Z(A)_k");
  range_line(Block::A, Block::B, zka, "Z(A)_k");
  range_line(Block::B, Block::A, zkb, "Z(B)_k");
  range_line(Block::B, Block::M, zkb, "Z(B)_k");
  range_line(Block::B, Block::N, zkb, "Z(B)_k");

  const auto d1 = is_k_commuting(ctx.a(), dec.delta(1), k, budget);
  rep.check("cond1.k_commuting", "[delta1(a), a]_k = 0", d1.holds,
            d1.counterexample ? "a = " + c.show(*d1.counterexample) : std::string{});
  const auto d1one = c.d(1, c.one_a());
  rep.check("cond1.unit", "delta1(1) in Z(A)_k", zka.contains(d1one), "delta1(1) = " + c.show(d1one));
  const auto m4 = is_k_commuting(ctx.b(), dec.mu(4), k, budget);
  rep.check("cond2.k_commuting", "[mu4(b), b]_k = 0", m4.holds,
            m4.counterexample ? "b = " + c.show(*m4.counterexample) : std::string{});
  const auto m4one = c.mu(4, c.one_b());
  rep.check("cond2.unit", "mu4(1) in Z(B)_k", zkb.contains(m4one), "mu4(1) = " + c.show(m4one));

  const Vector<S> d1_1 = d1one, d4_1 = c.d(4, c.one_b()), u1_1 = c.mu(1, c.one_a()), u4_1 = m4one;
  const Vector<S> a_sum = d1_1 + d4_1, b_sum = u1_1 + u4_1;
  const Vector<S> a_diff = d1_1 - d4_1, b_diff = u1_1 - u4_1;

  std::string w3;
  for (const auto& m : quadratic_probe(r, ctx.dim(Block::M), budget)) {
    const Vector<S> lhs = ctx.am(canon(r, Vector<S>(a_sum + c.two(c.d(2, m)))), m);
    const Vector<S> rhs = ctx.mb(m, canon(r, Vector<S>(b_sum + c.two(c.mu(2, m)))));
    if (!detail::same(r, lhs, rhs)) {
      w3 = "m = " + c.show(m);
      break;
    }
  }
  rep.check("cond3", "(delta1(1)+delta4(1)+2delta2(m))m = m(mu1(1)+mu4(1)+2mu2(m))", w3.empty(), w3);

  std::string w4;
  for (const auto& n : quadratic_probe(r, ctx.dim(Block::N), budget)) {
    const Vector<S> lhs = ctx.na(n, canon(r, Vector<S>(a_sum + c.two(c.d(3, n)))));
    const Vector<S> rhs = ctx.bn(canon(r, Vector<S>(b_sum + c.two(c.mu(3, n)))), n);
    if (!detail::same(r, lhs, rhs)) {
      w4 = "n = " + c.show(n);
      break;
    }
  }
  rep.check("cond4", "n(delta1(1)+delta4(1)+2delta3(n)) = (mu1(1)+mu4(1)+2mu3(n))n", w4.empty(), w4);

  std::string w5;
  for (Eigen::Index j = 0; j < ctx.dim(Block::M) && w5.empty(); ++j) {
    const auto m = ctx.basis(Block::M, j);
    const Vector<S> rhs = ctx.am(canon(r, a_diff), m) - ctx.mb(m, canon(r, b_diff));
    if (!detail::same(r, c.two(c.t(2, m)), rhs)) w5 = "m = " + c.basis(Block::M, j);
  }
  rep.check("cond5", "2tau2(m) = (delta1(1)-delta4(1))m - m(mu1(1)-mu4(1))", w5.empty(), w5);

  std::string w6;
  for (Eigen::Index j = 0; j < ctx.dim(Block::N) && w6.empty(); ++j) {
    const auto n = ctx.basis(Block::N, j);
    const Vector<S> rhs = ctx.na(n, canon(r, a_diff)) - ctx.bn(canon(r, b_diff), n);
    if (!detail::same(r, c.two(c.nu(3, n)), rhs)) w6 = "n = " + c.basis(Block::N, j);
  }
  rep.check("cond6", "2nu3(n) = n(delta1(1)-delta4(1)) - (mu1(1)-mu4(1))n", w6.empty(), w6);
  return rep;
}

template <class S>
struct HypothesisWitness {
  bool cond1 = false;
  bool cond2 = false;
  bool cond3 = false;
  std::optional<Vector<S>> m0;
  std::optional<Vector<S>> n0;
  bool all() const { return cond1 && cond2 && cond3; }
};

namespace detail {

template <class S>
void guard_theorem_inputs(const GMAlgebra<S>& g) {
  if (!is_two_torsion_free(g.ring().spec())) {
    fail(ErrorKind::TwoTorsion, g.ring().spec().str() + " is not 2-torsion free");
  }
  const auto f = check_faithful(g.context());
  if (!f.left_faithful) fail(ErrorKind::NotFaithful, "M is not faithful as a left A-module");
  if (!f.right_faithful) fail(ErrorKind::NotFaithful, "M is not faithful as a right B-module");
  if (!g.ring().enumerable()) fail(ErrorKind::NotEnumerable, "hypothesis check needs a finite ring");
}

// {diag(a, b) : a in Z(A), b in Z(B), a m0 = m0 b, n0 a = b n0}
template <class S>
Submodule<S> witness_set(const GMAlgebra<S>& g, const Vector<S>& m0, const Vector<S>& n0) {
  const auto& ctx = g.context();
  const auto& r = g.ring();
  const auto da = ctx.dim(Block::A), db = ctx.dim(Block::B), dm = ctx.dim(Block::M), dn = ctx.dim(Block::N);
  const Matrix<S> za = center_equations(ctx.a()), zb = center_equations(ctx.b());
  Matrix<S> sys = zeros(r, za.rows() + zb.rows() + dm + dn, da + db);
  sys.block(0, 0, za.rows(), da) = za;
  sys.block(za.rows(), da, zb.rows(), db) = zb;
  const auto off = za.rows() + zb.rows();
  for (Eigen::Index i = 0; i < da; ++i) {
    sys.block(off, i, dm, 1) = ctx.m().left[i] * m0;
    sys.block(off + dm, i, dn, 1) = ctx.n().right[i] * n0;
  }
  for (Eigen::Index i = 0; i < db; ++i) {
    sys.block(off, da + i, dm, 1) = -(ctx.m().right[i] * m0);
    sys.block(off + dm, da + i, dn, 1) = -(ctx.n().left[i] * n0);
  }
  std::vector<Vector<S>> gens;
  for (const auto& k : kernel(r, canon(r, sys))) gens.push_back(g.diag(k.head(da), k.tail(db)));
  return Submodule<S>(r, g.dim(), std::move(gens));
}

// Lexicographic order over the digits 1, 2, ..., n-1, 0.
template <class Fn>
void for_each_vector_zero_last(const Ring<Zn>& ring, Eigen::Index dim, std::uint64_t budget, Fn&& fn) {
  for_each_vector(ring, dim, budget, [&](const Vector<Zn>& x) {
    Vector<Zn> y = x;
    for (Eigen::Index i = 0; i < dim; ++i) y(i) = y(i) + ring.one();
    return fn(static_cast<const Vector<Zn>&>(y));
  });
}

}  // namespace detail

/// Decides the three hypotheses. The (m0, n0) search runs over M x N with M
/// the outer loop, each in lexicographic order with digits 1, ..., n-1, 0.
template <class S>
HypothesisWitness<S> check_thm_2_5_hypotheses(const GMAlgebra<S>& g, int k,
                                              std::uint64_t budget = kDefaultEnumerationBudget) {
  detail::guard_theorem_inputs(g);
  HypothesisWitness<S> w;
  if constexpr (std::is_same_v<S, Zn>) {
    const auto& ctx = g.context();
    const auto proj = pi_projections(g);
    w.cond1 = zk_set(ctx.a(), k, budget) == proj.pi_a;
    w.cond2 = zk_set(ctx.b(), k, budget) == proj.pi_b;
    const auto zg = center(g.algebra());
    const auto& r = g.ring();
    detail::for_each_vector_zero_last(r, ctx.dim(Block::M), budget, [&](const Vector<Zn>& m0) {
      detail::for_each_vector_zero_last(r, ctx.dim(Block::N), budget, [&](const Vector<Zn>& n0) {
        if (detail::witness_set(g, m0, n0) == zg) {
          w.cond3 = true;
          w.m0 = m0;
          w.n0 = n0;
          return false;
        }
        return true;
      });
      return !w.cond3;
    });
  }
  return w;
}

template <class S>
struct PropernessCertificate {
  Vector<S> lambda;
  LinMap<S> zeta;
  std::size_t free_dim = 0;  // kernel generators of the lambda system
};

/// Looks for a central lambda with Theta(e_j) - e_j lambda central for every
/// j. Returns the particular solution of that linear system.
template <class S>
std::optional<PropernessCertificate<S>> properness_certificate(const Algebra<S>& a, const LinMap<S>& theta) {
  check_map(a, theta);
  const auto& r = a.ring();
  const auto d = a.dim();
  const Matrix<S> kz = center_equations(a);
  const auto kr = kz.rows();
  Matrix<S> sys = zeros(r, kr * (d + 1), d);
  Vector<S> rhs = zeros(r, kr * (d + 1));
  sys.topRows(kr) = kz;
  for (Eigen::Index j = 0; j < d; ++j) {
    sys.middleRows(kr * (j + 1), kr) = kz * a.left_basis(j);
    rhs.segment(kr * (j + 1), kr) = kz * theta.col(j);
  }
  const auto sol = solve_linear(r, canon(r, sys), canon(r, rhs));
  if (!sol.consistent) return std::nullopt;
  PropernessCertificate<S> cert;
  cert.lambda = sol.particular;
  cert.zeta = canon(r, LinMap<S>(theta - a.right_mult(cert.lambda)));
  cert.free_dim = sol.kernel.size();
  return cert;
}

template <class S>
std::optional<PropernessCertificate<S>> properness_certificate(const GMAlgebra<S>& g, const LinMap<S>& theta) {
  return properness_certificate(g.algebra(), theta);
}

/// lambda central, zeta central-valued, Theta = R_lambda + zeta exactly.
template <class S>
bool certificate_holds(const Algebra<S>& a, const LinMap<S>& theta, const PropernessCertificate<S>& cert) {
  const auto z = center(a);
  if (!z.contains(cert.lambda)) return false;
  for (Eigen::Index j = 0; j < a.dim(); ++j)
    if (!z.contains(Vector<S>(cert.zeta.col(j)))) return false;
  return canon(a.ring(), LinMap<S>(a.right_mult(cert.lambda) + cert.zeta)) == canon(a.ring(), theta);
}

template <class S>
struct ProperFormResult {
  Vector<S> c;
  LinMap<S> omega;
};

/// Builds C = diag(delta1(1) - phi^-1(mu1(1)), phi(delta1(1)) - mu1(1)) and
/// Omega(X) = Theta(X) - XC, checking C central and Omega central-valued.
template <class S>
ProperFormResult<S> construct_proper_form(const GMAlgebra<S>& g, const LinMap<S>& theta, int k,
                                          std::uint64_t budget = kDefaultEnumerationBudget) {
  const auto kc = is_k_commuting(g, theta, k, budget);
  if (!kc.holds) fail(ErrorKind::NotKCommuting, "map is not " + std::to_string(k) + "-commuting");
  const auto hyp = check_thm_2_5_hypotheses(g, k, budget);
  if (!hyp.all()) fail(ErrorKind::HypothesesNotMet, "hypotheses of the properness theorem do not hold");

  const auto& ctx = g.context();
  const auto& r = g.ring();
  const auto dec = decompose(g, theta);
  const Vector<S> d1 = canon(r, Vector<S>(dec.delta(1) * ctx.a().unit()));
  const Vector<S> u1 = canon(r, Vector<S>(dec.mu(1) * ctx.a().unit()));
  const auto phi = center_iso_phi(g);
  Vector<S> ca, cb;
  try {
    ca = canon(r, Vector<S>(d1 - phi.inverse(u1)));
    cb = canon(r, Vector<S>(phi(d1) - u1));
  } catch (const Error& e) {
    fail(ErrorKind::TheoremViolation, std::string("building C: ") + e.what());
  }
  ProperFormResult<S> out;
  out.c = g.diag(ca, cb);
  const auto zg = center(g.algebra());
  if (!zg.contains(out.c)) fail(ErrorKind::TheoremViolation, "C = " + to_string(r, out.c) + " is not central");
  out.omega = canon(r, LinMap<S>(theta - g.algebra().right_mult(out.c)));
  for (Eigen::Index j = 0; j < g.dim(); ++j) {
    if (!zg.contains(Vector<S>(out.omega.col(j)))) {
      fail(ErrorKind::TheoremViolation, "Omega(" + g.algebra().labels()[j] + ") is not central");
    }
  }
  if (!(canon(r, LinMap<S>(g.algebra().right_mult(out.c) + out.omega)) == canon(r, theta))) {
    fail(ErrorKind::TheoremViolation, "XC + Omega(X) does not reproduce Theta");
  }
  return out;
}

/// The intermediate identities of the properness argument, evaluated on a
/// given decomposition. No preconditions are enforced here.
template <class S>
Report check_step_invariants(const GMAlgebra<S>& g, const BlockDecomposition<S>& dec,
                             std::uint64_t budget = kDefaultEnumerationBudget) {
  const detail::BlockCalculus<S> c{g, dec};
  const auto& ctx = g.context();
  const auto& r = g.ring();
  const auto zg = center(g.algebra());
  const auto dm = ctx.dim(Block::M), dn = ctx.dim(Block::N), da = ctx.dim(Block::A), db = ctx.dim(Block::B);
  auto same = [&](const Vector<S>& x, const Vector<S>& y) { return detail::same(r, x, y); };
  auto sub = [&](const Vector<S>& x, const Vector<S>& y) { return canon(r, Vector<S>(x - y)); };
  const Vector<S> d1 = c.d(1, c.one_a()), d4 = c.d(4, c.one_b()), u1 = c.mu(1, c.one_a()), u4 = c.mu(4, c.one_b());
  Report rep("intermediate identities");

  const auto unit_diag = g.diag(canon(r, Vector<S>(d1 + d4)), canon(r, Vector<S>(u1 + u4)));
  rep.check("unit_diagonal_central", "diag(delta1(1)+delta4(1), mu1(1)+mu4(1)) in Z(G)", zg.contains(unit_diag),
            c.show(unit_diag));

  std::string w;
  for (const auto& m : quadratic_probe(r, dm, budget))
    if (!same(ctx.am(c.d(2, m), m), ctx.mb(m, c.mu(2, m)))) {
      w = "m = " + c.show(m);
      break;
    }
  rep.check("delta2_square", "delta2(m)m = m mu2(m)", w.empty(), w);

  w.clear();
  for (const auto& n : quadratic_probe(r, dn, budget))
    if (!same(ctx.na(n, c.d(3, n)), ctx.bn(c.mu(3, n), n))) {
      w = "n = " + c.show(n);
      break;
    }
  rep.check("delta3_square", "n delta3(n) = mu3(n)n", w.empty(), w);

  w.clear();
  for (Eigen::Index j = 0; j < dm && w.empty(); ++j) {
    const auto m = ctx.basis(Block::M, j);
    const auto t = c.t(2, m);
    if (!same(t, sub(ctx.am(d1, m), ctx.mb(m, u1))) || !same(t, sub(ctx.mb(m, u4), ctx.am(d4, m))))
      w = "m = " + c.basis(Block::M, j);
  }
  rep.check("tau2_form", "tau2(m) = delta1(1)m - m mu1(1) = m mu4(1) - delta4(1)m", w.empty(), w);

  w.clear();
  for (Eigen::Index j = 0; j < dn && w.empty(); ++j) {
    const auto n = ctx.basis(Block::N, j);
    const auto t = c.nu(3, n);
    if (!same(t, sub(ctx.na(n, d1), ctx.bn(u1, n))) || !same(t, sub(ctx.bn(u4, n), ctx.na(n, d4))))
      w = "n = " + c.basis(Block::N, j);
  }
  rep.check("nu3_form", "nu3(n) = n delta1(1) - mu1(1)n = mu4(1)n - n delta4(1)", w.empty(), w);

  w.clear();
  for (Eigen::Index i = 0; i < dm && w.empty(); ++i)
    for (Eigen::Index j = 0; j < dn && w.empty(); ++j) {
      const auto m = ctx.basis(Block::M, i);
      const auto n = ctx.basis(Block::N, j);
      if (!same(ctx.am(c.d(3, n), m), ctx.mb(m, c.mu(3, n))))
        w = "m = " + c.basis(Block::M, i) + ", n = " + c.basis(Block::N, j);
    }
  rep.check("delta3_mixed", "delta3(n)m = m mu3(n)", w.empty(), w);

  w.clear();
  for (Eigen::Index i = 0; i < dm && w.empty(); ++i)
    for (Eigen::Index j = 0; j < dn && w.empty(); ++j) {
      const auto m = ctx.basis(Block::M, i);
      const auto n = ctx.basis(Block::N, j);
      if (!same(ctx.bn(c.mu(2, m), n), ctx.na(n, c.d(2, m))))
        w = "m = " + c.basis(Block::M, i) + ", n = " + c.basis(Block::N, j);
    }
  rep.check("mu2_mixed", "mu2(m)n = n delta2(m)", w.empty(), w);

  w.clear();
  for (Eigen::Index j = 0; j < dm && w.empty(); ++j) {
    const auto m = ctx.basis(Block::M, j);
    const auto x = g.diag(c.d(2, m), c.mu(2, m));
    if (!zg.contains(x)) w = "m = " + c.basis(Block::M, j) + ", diag = " + c.show(x);
  }
  rep.check("diag_m_central", "diag(delta2(m), mu2(m)) in Z(G)", w.empty(), w);

  w.clear();
  for (Eigen::Index j = 0; j < dn && w.empty(); ++j) {
    const auto n = ctx.basis(Block::N, j);
    const auto x = g.diag(c.d(3, n), c.mu(3, n));
    if (!zg.contains(x)) w = "n = " + c.basis(Block::N, j) + ", diag = " + c.show(x);
  }
  rep.check("diag_n_central", "diag(delta3(n), mu3(n)) in Z(G)", w.empty(), w);

  w.clear();
  for (Eigen::Index i = 0; i < da && w.empty(); ++i)
    for (Eigen::Index j = 0; j < dm && w.empty(); ++j) {
      const auto a = ctx.basis(Block::A, i);
      const auto m = ctx.basis(Block::M, j);
      const auto lhs = sub(ctx.am(c.d(1, a), m), ctx.mb(m, c.mu(1, a)));
      const auto r1 = ctx.am(a, sub(ctx.am(d1, m), ctx.mb(m, u1)));
      const auto r2 = ctx.am(a, sub(ctx.mb(m, u4), ctx.am(d4, m)));
      if (!same(lhs, r1) || !same(lhs, r2)) w = "a = " + c.basis(Block::A, i) + ", m = " + c.basis(Block::M, j);
    }
  rep.check("a_on_m", "delta1(a)m - m mu1(a) = a(delta1(1)m - m mu1(1)) = a(m mu4(1) - delta4(1)m)", w.empty(), w);

  w.clear();
  for (Eigen::Index i = 0; i < da && w.empty(); ++i)
    for (Eigen::Index j = 0; j < dn && w.empty(); ++j) {
      const auto a = ctx.basis(Block::A, i);
      const auto n = ctx.basis(Block::N, j);
      const auto lhs = sub(ctx.na(n, c.d(1, a)), ctx.bn(c.mu(1, a), n));
      const auto r1 = ctx.na(sub(ctx.na(n, d1), ctx.bn(u1, n)), a);
      const auto r2 = ctx.na(sub(ctx.bn(u4, n), ctx.na(n, d4)), a);
      if (!same(lhs, r1) || !same(lhs, r2)) w = "a = " + c.basis(Block::A, i) + ", n = " + c.basis(Block::N, j);
    }
  rep.check("a_on_n", "n delta1(a) - mu1(a)n = (n delta1(1) - mu1(1)n)a = (mu4(1)n - n delta4(1))a", w.empty(), w);

  w.clear();
  for (Eigen::Index i = 0; i < db && w.empty(); ++i)
    for (Eigen::Index j = 0; j < dm && w.empty(); ++j) {
      const auto b = ctx.basis(Block::B, i);
      const auto m = ctx.basis(Block::M, j);
      const auto lhs = sub(ctx.am(c.d(4, b), m), ctx.mb(m, c.mu(4, b)));
      const auto r1 = ctx.mb(sub(ctx.mb(m, u1), ctx.am(d1, m)), b);
      const auto r2 = ctx.mb(sub(ctx.am(d4, m), ctx.mb(m, u4)), b);
      if (!same(lhs, r1) || !same(lhs, r2)) w = "b = " + c.basis(Block::B, i) + ", m = " + c.basis(Block::M, j);
    }
  rep.check("b_on_m", "delta4(b)m - m mu4(b) = (m mu1(1) - delta1(1)m)b = (delta4(1)m - m mu4(1))b", w.empty(), w);

  w.clear();
  for (Eigen::Index i = 0; i < db && w.empty(); ++i)
    for (Eigen::Index j = 0; j < dn && w.empty(); ++j) {
      const auto b = ctx.basis(Block::B, i);
      const auto n = ctx.basis(Block::N, j);
      const auto lhs = sub(ctx.na(n, c.d(4, b)), ctx.bn(c.mu(4, b), n));
      const auto r1 = ctx.bn(b, sub(ctx.bn(u1, n), ctx.na(n, d1)));
      const auto r2 = ctx.bn(b, sub(ctx.na(n, d4), ctx.bn(u4, n)));
      if (!same(lhs, r1) || !same(lhs, r2)) w = "b = " + c.basis(Block::B, i) + ", n = " + c.basis(Block::N, j);
    }
  rep.check("b_on_n", "n delta4(b) - mu4(b)n = b(mu1(1)n - n delta1(1)) = b(n delta4(1) - mu4(1)n)", w.empty(), w);
  return rep;
}

/// Guards (k-commuting, hypotheses) and then the intermediate identities.
template <class S>
Report verify_step_invariants(const GMAlgebra<S>& g, const LinMap<S>& theta, int k,
                              std::uint64_t budget = kDefaultEnumerationBudget) {
  const auto kc = is_k_commuting(g, theta, k, budget);
  if (!kc.holds) fail(ErrorKind::NotKCommuting, "map is not " + std::to_string(k) + "-commuting");
  const auto hyp = check_thm_2_5_hypotheses(g, k, budget);
  if (!hyp.all()) fail(ErrorKind::HypothesesNotMet, "hypotheses of the properness theorem do not hold");
  return check_step_invariants(g, decompose(g, theta), budget);
}

/// Z(A)_k = R1 and Z(B)_k = R1.
template <class S>
bool check_corollary_2_6(const GMAlgebra<S>& g, int k, std::uint64_t budget = kDefaultEnumerationBudget) {
  const auto& ctx = g.context();
  return zk_set(ctx.a(), k, budget) == scalar_multiples_of_unit(ctx.a()) &&
         zk_set(ctx.b(), k, budget) == scalar_multiples_of_unit(ctx.b());
}

}  // namespace gmalg
