#pragma once

// Morita contexts (A, B, M, N, Phi, Psi) and the order-2 generalized matrix
// algebra [A M; N B] they generate. Global basis order is A, M, N, B.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "gmalg/algebra.hpp"

namespace gmalg {

/// A bimodule given by action matrices on a free module of rank `dim`.
/// `left[i]` is the action of the i-th basis element of the left algebra
/// (column j = e_i · m_j); `right[i]` likewise for the right algebra
/// (column j = m_j · f_i).
template <class S>
struct Bimodule {
  Eigen::Index dim = 0;
  std::vector<std::string> labels;
  std::vector<Matrix<S>> left;
  std::vector<Matrix<S>> right;
};

/// Bilinear pairing X x Y -> Z. `table[i]` is dim Z x dim Y with column j
/// equal to P(x_i, y_j).
template <class S>
struct Pairing {
  std::vector<Matrix<S>> table;
};

enum class Block { A = 0, M = 1, N = 2, B = 3 };

constexpr const char* block_name(Block b) {
  constexpr std::array<const char*, 4> names{"A", "M", "N", "B"};
  return names[static_cast<int>(b)];
}

template <class S>
class MoritaContext {
 public:
  MoritaContext(Algebra<S> a, Algebra<S> b, Bimodule<S> m, Bimodule<S> n, Pairing<S> phi, Pairing<S> psi)
      : a_(std::move(a)), b_(std::move(b)), m_(std::move(m)), n_(std::move(n)), phi_(std::move(phi)),
        psi_(std::move(psi)) {
    check_shapes();
  }

  const Ring<S>& ring() const { return a_.ring(); }
  const Algebra<S>& a() const { return a_; }
  const Algebra<S>& b() const { return b_; }
  const Bimodule<S>& m() const { return m_; }
  const Bimodule<S>& n() const { return n_; }
  const Pairing<S>& phi() const { return phi_; }
  const Pairing<S>& psi() const { return psi_; }

  Eigen::Index dim(Block blk) const {
    switch (blk) {
      case Block::A: return a_.dim();
      case Block::M: return m_.dim;
      case Block::N: return n_.dim;
      case Block::B: return b_.dim();
    }
    return 0;
  }

  // module actions on coordinate vectors
  Vector<S> am(const Vector<S>& a, const Vector<S>& m) const { return act(m_.left, a, m); }
  Vector<S> mb(const Vector<S>& m, const Vector<S>& b) const { return act(m_.right, b, m); }
  Vector<S> bn(const Vector<S>& b, const Vector<S>& n) const { return act(n_.left, b, n); }
  Vector<S> na(const Vector<S>& n, const Vector<S>& a) const { return act(n_.right, a, n); }
  Vector<S> phi(const Vector<S>& m, const Vector<S>& n) const { return pair(phi_, m, n, a_.dim()); }
  Vector<S> psi(const Vector<S>& n, const Vector<S>& m) const { return pair(psi_, n, m, b_.dim()); }

  Vector<S> zero(Block blk) const { return zeros(ring(), dim(blk)); }
  Vector<S> basis(Block blk, Eigen::Index i) const { return unit_vector(ring(), dim(blk), i); }

  std::string label(Block blk, Eigen::Index i) const {
    switch (blk) {
      case Block::A: return a_.labels()[i];
      case Block::B: return b_.labels()[i];
      case Block::M: return m_.labels.empty() ? "m" + std::to_string(i) : m_.labels[i];
      case Block::N: return n_.labels.empty() ? "n" + std::to_string(i) : n_.labels[i];
    }
    return {};
  }

 private:
  Vector<S> act(const std::vector<Matrix<S>>& mats, const Vector<S>& scalarlike, const Vector<S>& v) const {
    Vector<S> out = zeros(ring(), v.size());
    for (std::size_t i = 0; i < mats.size(); ++i) {
      const auto& c = scalarlike(static_cast<Eigen::Index>(i));
      if (!(c == ring().zero())) out += c * (mats[i] * v);
    }
    return canon(ring(), out);
  }

  Vector<S> pair(const Pairing<S>& p, const Vector<S>& x, const Vector<S>& y, Eigen::Index out_dim) const {
    Vector<S> out = zeros(ring(), out_dim);
    for (std::size_t i = 0; i < p.table.size(); ++i) {
      const auto& c = x(static_cast<Eigen::Index>(i));
      if (!(c == ring().zero())) out += c * (p.table[i] * y);
    }
    return canon(ring(), out);
  }

  void check_shapes() const {
    if (!(a_.ring().spec() == b_.ring().spec())) fail(ErrorKind::DimensionMismatch, "A and B over different rings");
    auto expect = [](bool ok, const std::string& what) {
      if (!ok) fail(ErrorKind::DimensionMismatch, what);
    };
    auto square_list = [&](const std::vector<Matrix<S>>& mats, Eigen::Index count, Eigen::Index d,
                           const std::string& what) {
      expect(static_cast<Eigen::Index>(mats.size()) == count, what + ": expected " + std::to_string(count) + " matrices");
      for (const auto& mat : mats) expect(mat.rows() == d && mat.cols() == d, what + ": matrix shape");
    };
    const auto da = a_.dim(), db = b_.dim(), dm = m_.dim, dn = n_.dim;
    expect(dm >= 0 && dn >= 0, "negative module dimension");
    square_list(m_.left, da, dm, "M left action");
    square_list(m_.right, db, dm, "M right action");
    square_list(n_.left, db, dn, "N left action");
    square_list(n_.right, da, dn, "N right action");
    expect(static_cast<Eigen::Index>(phi_.table.size()) == dm, "phi: expected one table per basis element of M");
    for (const auto& t : phi_.table) expect(t.rows() == da && t.cols() == dn, "phi: table shape");
    expect(static_cast<Eigen::Index>(psi_.table.size()) == dn, "psi: expected one table per basis element of N");
    for (const auto& t : psi_.table) expect(t.rows() == db && t.cols() == dm, "psi: table shape");
    expect(m_.labels.empty() || static_cast<Eigen::Index>(m_.labels.size()) == dm, "M label count");
    expect(n_.labels.empty() || static_cast<Eigen::Index>(n_.labels.size()) == dn, "N label count");
  }

  Algebra<S> a_, b_;
  Bimodule<S> m_, n_;
  Pairing<S> phi_, psi_;
};

struct Violation {
  std::string axiom;
  std::string witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool cites(const std::string& axiom) const {
    for (const auto& v : violations)
      if (v.axiom == axiom) return true;
    return false;
  }
};

/// Checks every Morita-context axiom on basis tuples. One entry per violated
/// axiom, carrying the first witnessing tuple.
template <class S>
ValidationReport validate_context(const MoritaContext<S>& ctx) {
  ValidationReport report;
  const auto& ring = ctx.ring();
  const auto da = ctx.dim(Block::A), db = ctx.dim(Block::B), dm = ctx.dim(Block::M), dn = ctx.dim(Block::N);
  auto basis = [&](Block blk, Eigen::Index i) { return ctx.basis(blk, i); };
  auto lbl = [&](Block blk, Eigen::Index i) { return ctx.label(blk, i); };
  auto record = [&](const std::string& axiom, const std::string& witness) {
    if (!report.cites(axiom)) report.violations.push_back({axiom, witness});
  };
  auto same = [&](const Vector<S>& x, const Vector<S>& y) { return canon(ring, x) == canon(ring, y); };

  if (dm == 0 && dn == 0) record("nonzero_bimodule", "dim M = dim N = 0");

  const auto& A = ctx.a();
  const auto& B = ctx.b();
  const Vector<S> one_a = A.unit(), one_b = B.unit();

  // M as an A-B bimodule
  for (Eigen::Index j = 0; j < dm; ++j) {
    const auto m = basis(Block::M, j);
    if (!same(ctx.am(one_a, m), m)) record("M.left_unital", lbl(Block::M, j));
    if (!same(ctx.mb(m, one_b), m)) record("M.right_unital", lbl(Block::M, j));
    for (Eigen::Index i = 0; i < da; ++i)
      for (Eigen::Index k = 0; k < da; ++k) {
        const auto ai = basis(Block::A, i), ak = basis(Block::A, k);
        if (!same(ctx.am(A.mul(ai, ak), m), ctx.am(ai, ctx.am(ak, m))))
          record("M.left_assoc", lbl(Block::A, i) + "," + lbl(Block::A, k) + "," + lbl(Block::M, j));
      }
    for (Eigen::Index i = 0; i < db; ++i)
      for (Eigen::Index k = 0; k < db; ++k) {
        const auto bi = basis(Block::B, i), bk = basis(Block::B, k);
        if (!same(ctx.mb(m, B.mul(bi, bk)), ctx.mb(ctx.mb(m, bi), bk)))
          record("M.right_assoc", lbl(Block::M, j) + "," + lbl(Block::B, i) + "," + lbl(Block::B, k));
      }
    for (Eigen::Index i = 0; i < da; ++i)
      for (Eigen::Index k = 0; k < db; ++k) {
        const auto ai = basis(Block::A, i), bk = basis(Block::B, k);
        if (!same(ctx.mb(ctx.am(ai, m), bk), ctx.am(ai, ctx.mb(m, bk))))
          record("M.bimodule", lbl(Block::A, i) + "," + lbl(Block::M, j) + "," + lbl(Block::B, k));
      }
  }
  // N as a B-A bimodule
  for (Eigen::Index j = 0; j < dn; ++j) {
    const auto n = basis(Block::N, j);
    if (!same(ctx.bn(one_b, n), n)) record("N.left_unital", lbl(Block::N, j));
    if (!same(ctx.na(n, one_a), n)) record("N.right_unital", lbl(Block::N, j));
    for (Eigen::Index i = 0; i < db; ++i)
      for (Eigen::Index k = 0; k < db; ++k) {
        const auto bi = basis(Block::B, i), bk = basis(Block::B, k);
        if (!same(ctx.bn(B.mul(bi, bk), n), ctx.bn(bi, ctx.bn(bk, n))))
          record("N.left_assoc", lbl(Block::B, i) + "," + lbl(Block::B, k) + "," + lbl(Block::N, j));
      }
    for (Eigen::Index i = 0; i < da; ++i)
      for (Eigen::Index k = 0; k < da; ++k) {
        const auto ai = basis(Block::A, i), ak = basis(Block::A, k);
        if (!same(ctx.na(n, A.mul(ai, ak)), ctx.na(ctx.na(n, ai), ak)))
          record("N.right_assoc", lbl(Block::N, j) + "," + lbl(Block::A, i) + "," + lbl(Block::A, k));
      }
    for (Eigen::Index i = 0; i < db; ++i)
      for (Eigen::Index k = 0; k < da; ++k) {
        const auto bi = basis(Block::B, i), ak = basis(Block::A, k);
        if (!same(ctx.na(ctx.bn(bi, n), ak), ctx.bn(bi, ctx.na(n, ak))))
          record("N.bimodule", lbl(Block::B, i) + "," + lbl(Block::N, j) + "," + lbl(Block::A, k));
      }
  }
  // pairings
  for (Eigen::Index i = 0; i < dm; ++i) {
    const auto m = basis(Block::M, i);
    for (Eigen::Index j = 0; j < dn; ++j) {
      const auto n = basis(Block::N, j);
      const std::string mn = lbl(Block::M, i) + "," + lbl(Block::N, j);
      const auto phi_mn = ctx.phi(m, n);
      const auto psi_nm = ctx.psi(n, m);
      for (Eigen::Index t = 0; t < da; ++t) {
        const auto a = basis(Block::A, t);
        if (!same(ctx.phi(ctx.am(a, m), n), A.mul(a, phi_mn)))
          record("phi.left_linear", lbl(Block::A, t) + "," + mn);
        if (!same(ctx.phi(m, ctx.na(n, a)), A.mul(phi_mn, a)))
          record("phi.right_linear", mn + "," + lbl(Block::A, t));
        if (!same(ctx.psi(ctx.na(n, a), m), ctx.psi(n, ctx.am(a, m))))
          record("psi.balanced", lbl(Block::N, j) + "," + lbl(Block::A, t) + "," + lbl(Block::M, i));
      }
      for (Eigen::Index t = 0; t < db; ++t) {
        const auto b = basis(Block::B, t);
        if (!same(ctx.psi(ctx.bn(b, n), m), B.mul(b, psi_nm)))
          record("psi.left_linear", lbl(Block::B, t) + "," + lbl(Block::N, j) + "," + lbl(Block::M, i));
        if (!same(ctx.psi(n, ctx.mb(m, b)), B.mul(psi_nm, b)))
          record("psi.right_linear", lbl(Block::N, j) + "," + lbl(Block::M, i) + "," + lbl(Block::B, t));
        if (!same(ctx.phi(ctx.mb(m, b), n), ctx.phi(m, ctx.bn(b, n))))
          record("phi.balanced", lbl(Block::M, i) + "," + lbl(Block::B, t) + "," + lbl(Block::N, j));
      }
      // Phi(m,n) m' = m Psi(n,m')
      for (Eigen::Index k = 0; k < dm; ++k) {
        const auto m2 = basis(Block::M, k);
        if (!same(ctx.am(phi_mn, m2), ctx.mb(m, ctx.psi(n, m2))))
          record("diagram.mnm", mn + "," + lbl(Block::M, k));
      }
      // Psi(n,m) n' = n Phi(m,n')
      for (Eigen::Index k = 0; k < dn; ++k) {
        const auto n2 = basis(Block::N, k);
        if (!same(ctx.bn(psi_nm, n2), ctx.na(n, ctx.phi(m, n2))))
          record("diagram.nmn", lbl(Block::N, j) + "," + lbl(Block::M, i) + "," + lbl(Block::N, k));
      }
    }
  }
  return report;
}

/// Block coordinates of an element of [A M; N B].
template <class S>
struct Parts {
  Vector<S> a, m, n, b;
};

template <class S>
class GMAlgebra {
 public:
  GMAlgebra(MoritaContext<S> ctx, Algebra<S> algebra) : ctx_(std::move(ctx)), algebra_(std::move(algebra)) {
    offsets_ = {0, ctx_.dim(Block::A), ctx_.dim(Block::A) + ctx_.dim(Block::M),
                ctx_.dim(Block::A) + ctx_.dim(Block::M) + ctx_.dim(Block::N)};
  }

  const MoritaContext<S>& context() const { return ctx_; }
  const Algebra<S>& algebra() const { return algebra_; }
  const Ring<S>& ring() const { return ctx_.ring(); }
  Eigen::Index dim() const { return algebra_.dim(); }

  Eigen::Index offset(Block blk) const { return offsets_[static_cast<int>(blk)]; }
  Eigen::Index size(Block blk) const { return ctx_.dim(blk); }

  Block block_of(Eigen::Index global) const {
    for (int b = 3; b >= 0; --b)
      if (global >= offsets_[b] && size(static_cast<Block>(b)) > 0) return static_cast<Block>(b);
    return Block::A;
  }
  Eigen::Index local_index(Eigen::Index global) const { return global - offset(block_of(global)); }

  Vector<S> embed(const Vector<S>& a, const Vector<S>& m, const Vector<S>& n, const Vector<S>& b) const {
    Vector<S> x(dim());
    x << a, m, n, b;
    return canon(ring(), x);
  }
  Vector<S> embed(Block blk, const Vector<S>& v) const {
    Vector<S> x = zeros(ring(), dim());
    x.segment(offset(blk), size(blk)) = v;
    return x;
  }
  Vector<S> diag(const Vector<S>& a, const Vector<S>& b) const {
    return embed(a, ctx_.zero(Block::M), ctx_.zero(Block::N), b);
  }
  Vector<S> part(const Vector<S>& x, Block blk) const { return x.segment(offset(blk), size(blk)); }
  Parts<S> split(const Vector<S>& x) const {
    algebra_.check(x);
    return {part(x, Block::A), part(x, Block::M), part(x, Block::N), part(x, Block::B)};
  }

 private:
  MoritaContext<S> ctx_;
  Algebra<S> algebra_;
  std::array<Eigen::Index, 4> offsets_{};
};

/// [a m; n b][a' m'; n' b'] = [aa' + Phi(m,n'), am' + mb'; na' + bn', Psi(n,m') + bb']
template <class S>
Vector<S> block_product(const MoritaContext<S>& ctx, const Parts<S>& x, const Parts<S>& y) {
  const auto& r = ctx.ring();
  Vector<S> a = ctx.a().mul(x.a, y.a) + ctx.phi(x.m, y.n);
  Vector<S> m = ctx.am(x.a, y.m) + ctx.mb(x.m, y.b);
  Vector<S> n = ctx.na(x.n, y.a) + ctx.bn(x.b, y.n);
  Vector<S> b = ctx.psi(x.n, y.m) + ctx.b().mul(x.b, y.b);
  Vector<S> out(a.size() + m.size() + n.size() + b.size());
  out << a, m, n, b;
  return canon(r, out);
}

/// Builds the generalized matrix algebra; InvalidContext when any axiom fails.
template <class S>
GMAlgebra<S> build_gma(const MoritaContext<S>& ctx) {
  const auto report = validate_context(ctx);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    fail(ErrorKind::InvalidContext, v.axiom + " fails at " + v.witness);
  }
  const auto& r = ctx.ring();
  const auto da = ctx.dim(Block::A), dm = ctx.dim(Block::M), dn = ctx.dim(Block::N), db = ctx.dim(Block::B);
  const auto d = da + dm + dn + db;

  std::vector<Parts<S>> basis;
  std::vector<std::string> labels;
  for (Block blk : {Block::A, Block::M, Block::N, Block::B}) {
    for (Eigen::Index i = 0; i < ctx.dim(blk); ++i) {
      Parts<S> p{ctx.zero(Block::A), ctx.zero(Block::M), ctx.zero(Block::N), ctx.zero(Block::B)};
      const auto e = ctx.basis(blk, i);
      switch (blk) {
        case Block::A: p.a = e; break;
        case Block::M: p.m = e; break;
        case Block::N: p.n = e; break;
        case Block::B: p.b = e; break;
      }
      basis.push_back(std::move(p));
      labels.push_back(std::string(block_name(blk)) + ":" + ctx.label(blk, i));
    }
  }
  std::vector<std::vector<Vector<S>>> prods(d, std::vector<Vector<S>>(d));
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) prods[i][j] = block_product(ctx, basis[i], basis[j]);

  Vector<S> unit(d);
  unit << ctx.a().unit(), ctx.zero(Block::M), ctx.zero(Block::N), ctx.b().unit();
  Algebra<S> alg(r, std::move(labels), std::move(prods), canon(r, unit));
  return GMAlgebra<S>(ctx, std::move(alg));
}

struct Faithfulness {
  bool left_faithful = false;   // M as a left A-module
  bool right_faithful = false;  // M as a right B-module
  bool n_left_faithful = false;   // N as a left B-module (informational)
  bool n_right_faithful = false;  // N as a right A-module (informational)
  bool both() const { return left_faithful && right_faithful; }
};

namespace detail {

// Stacks, for each module basis element v_j, the columns x_i -> action(x_i, v_j).
template <class S>
bool action_is_faithful(const Ring<S>& ring, const std::vector<Matrix<S>>& action, Eigen::Index module_dim) {
  const auto scalars = static_cast<Eigen::Index>(action.size());
  Matrix<S> sys = zeros(ring, module_dim * module_dim, scalars);
  for (Eigen::Index j = 0; j < module_dim; ++j)
    for (Eigen::Index i = 0; i < scalars; ++i) sys.block(j * module_dim, i, module_dim, 1) = action[i].col(j);
  return kernel(ring, sys).empty();
}

}  // namespace detail

template <class S>
Faithfulness check_faithful(const MoritaContext<S>& ctx) {
  Faithfulness f;
  f.left_faithful = detail::action_is_faithful(ctx.ring(), ctx.m().left, ctx.m().dim);
  f.right_faithful = detail::action_is_faithful(ctx.ring(), ctx.m().right, ctx.m().dim);
  f.n_left_faithful = detail::action_is_faithful(ctx.ring(), ctx.n().left, ctx.n().dim);
  f.n_right_faithful = detail::action_is_faithful(ctx.ring(), ctx.n().right, ctx.n().dim);
  return f;
}

/// {diag(a, b) : am = mb, na = bn for all m, n}, solved over module bases.
/// Equals the algebra center of G whenever M is faithful on both sides.
template <class S>
Submodule<S> gma_center(const GMAlgebra<S>& g) {
  const auto& ctx = g.context();
  const auto& r = g.ring();
  const auto da = ctx.dim(Block::A), db = ctx.dim(Block::B), dm = ctx.dim(Block::M), dn = ctx.dim(Block::N);
  Matrix<S> sys = zeros(r, dm * dm + dn * dn, da + db);
  for (Eigen::Index j = 0; j < dm; ++j) {
    for (Eigen::Index i = 0; i < da; ++i) sys.block(j * dm, i, dm, 1) = ctx.m().left[i].col(j);
    for (Eigen::Index i = 0; i < db; ++i) sys.block(j * dm, da + i, dm, 1) = -ctx.m().right[i].col(j);
  }
  const auto off = dm * dm;
  for (Eigen::Index j = 0; j < dn; ++j) {
    for (Eigen::Index i = 0; i < da; ++i) sys.block(off + j * dn, i, dn, 1) = ctx.n().right[i].col(j);
    for (Eigen::Index i = 0; i < db; ++i) sys.block(off + j * dn, da + i, dn, 1) = -ctx.n().left[i].col(j);
  }
  std::vector<Vector<S>> gens;
  for (const auto& k : kernel(r, canon(r, sys))) gens.push_back(g.diag(k.head(da), k.tail(db)));
  return Submodule<S>(r, g.dim(), std::move(gens));
}

template <class S>
struct CenterProjections {
  Submodule<S> pi_a;  // pi_A(Z(G)) inside A
  Submodule<S> pi_b;  // pi_B(Z(G)) inside B
};

template <class S>
CenterProjections<S> pi_projections(const GMAlgebra<S>& g) {
  const auto z = gma_center(g);
  std::vector<Vector<S>> ga, gb;
  for (const auto& v : z.generators()) {
    ga.push_back(g.part(v, Block::A));
    gb.push_back(g.part(v, Block::B));
  }
  return {Submodule<S>(g.ring(), g.size(Block::A), ga), Submodule<S>(g.ring(), g.size(Block::B), gb)};
}

/// The isomorphism phi : pi_A(Z(G)) -> pi_B(Z(G)) with am = m phi(a) and
/// na = phi(a) n.
template <class S>
class CenterIso {
 public:
  CenterIso(const GMAlgebra<S>& g, CenterProjections<S> proj) : g_(&g), proj_(std::move(proj)) {}

  const Submodule<S>& domain() const { return proj_.pi_a; }
  const Submodule<S>& codomain() const { return proj_.pi_b; }
  const std::vector<std::pair<Vector<S>, Vector<S>>>& table() const { return table_; }

  /// The unique b with am = mb for every basis m.
  Vector<S> operator()(const Vector<S>& a) const {
    const auto& ctx = g_->context();
    const auto dm = ctx.dim(Block::M), db = ctx.dim(Block::B);
    Matrix<S> sys = zeros(g_->ring(), dm * dm, db);
    Vector<S> rhs = zeros(g_->ring(), dm * dm);
    for (Eigen::Index j = 0; j < dm; ++j) {
      for (Eigen::Index i = 0; i < db; ++i) sys.block(j * dm, i, dm, 1) = ctx.m().right[i].col(j);
      rhs.segment(j * dm, dm) = ctx.am(a, ctx.basis(Block::M, j));
    }
    return unique_solution(sys, rhs, "phi");
  }

  /// The unique a with am = mb for every basis m.
  Vector<S> inverse(const Vector<S>& b) const {
    const auto& ctx = g_->context();
    const auto dm = ctx.dim(Block::M), da = ctx.dim(Block::A);
    Matrix<S> sys = zeros(g_->ring(), dm * dm, da);
    Vector<S> rhs = zeros(g_->ring(), dm * dm);
    for (Eigen::Index j = 0; j < dm; ++j) {
      for (Eigen::Index i = 0; i < da; ++i) sys.block(j * dm, i, dm, 1) = ctx.m().left[i].col(j);
      rhs.segment(j * dm, dm) = ctx.mb(ctx.basis(Block::M, j), b);
    }
    return unique_solution(sys, rhs, "phi^-1");
  }

  void set_table(std::vector<std::pair<Vector<S>, Vector<S>>> t) { table_ = std::move(t); }

 private:
  Vector<S> unique_solution(const Matrix<S>& sys, const Vector<S>& rhs, const char* what) const {
    const auto sol = solve_linear(g_->ring(), canon(g_->ring(), sys), rhs);
    if (!sol.consistent) fail(ErrorKind::NoSolution, std::string(what) + ": no preimage for the given element");
    if (!sol.kernel.empty()) fail(ErrorKind::NotFaithful, std::string(what) + ": value not unique");
    return sol.particular;
  }

  const GMAlgebra<S>* g_;
  CenterProjections<S> proj_;
  std::vector<std::pair<Vector<S>, Vector<S>>> table_;
};

/// Builds phi and verifies it: na = phi(a) n on basis n, bijective onto
/// pi_B(Z(G)), multiplicative. Any failed verification is a TheoremViolation.
template <class S>
CenterIso<S> center_iso_phi(const GMAlgebra<S>& g) {
  const auto& ctx = g.context();
  if (!check_faithful(ctx).both()) fail(ErrorKind::NotFaithful, "phi needs M faithful as left A- and right B-module");
  CenterIso<S> phi(g, pi_projections(g));
  const auto& r = g.ring();

  const bool finite = phi.domain().elements().has_value();
  const std::vector<Vector<S>> sources = finite ? *phi.domain().elements() : phi.domain().generators();
  std::vector<std::pair<Vector<S>, Vector<S>>> table;
  std::vector<Vector<S>> images;
  for (const auto& a : sources) {
    const auto b = phi(a);
    for (Eigen::Index j = 0; j < ctx.dim(Block::N); ++j) {
      const auto n = ctx.basis(Block::N, j);
      if (!(ctx.na(n, a) == ctx.bn(b, n))) fail(ErrorKind::TheoremViolation, "phi: na != phi(a)n");
    }
    images.push_back(b);
    table.emplace_back(a, b);
  }
  const Submodule<S> image(r, g.size(Block::B), images);
  if (!(image == phi.codomain())) fail(ErrorKind::TheoremViolation, "phi is not onto pi_B(Z(G))");
  if (finite && image.size() != phi.domain().size()) {
    fail(ErrorKind::TheoremViolation, "phi is not injective");
  }
  const std::size_t limit = std::min<std::size_t>(table.size(), 64);
  for (std::size_t i = 0; i < limit; ++i)
    for (std::size_t j = 0; j < limit; ++j) {
      const auto prod = ctx.a().mul(table[i].first, table[j].first);
      if (!(phi(prod) == ctx.b().mul(table[i].second, table[j].second))) {
        fail(ErrorKind::TheoremViolation, "phi is not multiplicative");
      }
    }
  phi.set_table(std::move(table));
  return phi;
}

}  // namespace gmalg
