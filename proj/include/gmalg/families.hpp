#pragma once

// Standard generalized matrix algebras built from matrix units: full matrix
// algebras, upper/lower triangular and block triangular algebras, plus the
// inflated algebras (M_n(A), X o Y = X Gamma Y).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gmalg/maps.hpp"

namespace gmalg {

/// (row, col), zero-based.
using MatrixUnit = std::pair<int, int>;

inline std::string unit_label(const MatrixUnit& u, int n) {
  if (n < 10) return "E" + std::to_string(u.first + 1) + std::to_string(u.second + 1);
  return "E" + std::to_string(u.first + 1) + "," + std::to_string(u.second + 1);
}

/// Inverse of unit_label, ignoring any "X:" block prefix.
std::optional<MatrixUnit> parse_unit_label(const std::string& label);

namespace detail {

template <class S>
Vector<S> unit_product(const Ring<S>& ring, const MatrixUnit& x, const MatrixUnit& y,
                       const std::vector<MatrixUnit>& target) {
  Vector<S> out = zeros(ring, static_cast<Eigen::Index>(target.size()));
  if (x.second != y.first) return out;
  const MatrixUnit p{x.first, y.second};
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (target[i] == p) {
      out(static_cast<Eigen::Index>(i)) = ring.one();
      return out;
    }
  }
  fail(ErrorKind::BadShape, "pattern is not closed under multiplication");
}

template <class S>
Algebra<S> unit_algebra(const Ring<S>& ring, const std::vector<MatrixUnit>& units, int n) {
  const auto d = static_cast<Eigen::Index>(units.size());
  std::vector<std::string> labels;
  std::vector<std::vector<Vector<S>>> prods(d, std::vector<Vector<S>>(d));
  Vector<S> one = zeros(ring, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    labels.push_back(unit_label(units[i], n));
    if (units[i].first == units[i].second) one(i) = ring.one();
    for (Eigen::Index j = 0; j < d; ++j) prods[i][j] = unit_product(ring, units[i], units[j], units);
  }
  return Algebra<S>(ring, std::move(labels), std::move(prods), one);
}

// action[i].col(j) = u_i v_j (left) or v_j u_i (right), in module coordinates
template <class S>
std::vector<Matrix<S>> unit_action(const Ring<S>& ring, const std::vector<MatrixUnit>& acting,
                                   const std::vector<MatrixUnit>& module, bool left) {
  const auto d = static_cast<Eigen::Index>(module.size());
  std::vector<Matrix<S>> out;
  for (const auto& u : acting) {
    Matrix<S> m = zeros(ring, d, d);
    for (Eigen::Index j = 0; j < d; ++j)
      m.col(j) = left ? unit_product(ring, u, module[j], module) : unit_product(ring, module[j], u, module);
    out.push_back(std::move(m));
  }
  return out;
}

// table[i].col(j) = x_i y_j in target coordinates
template <class S>
std::vector<Matrix<S>> unit_pairing(const Ring<S>& ring, const std::vector<MatrixUnit>& xs,
                                    const std::vector<MatrixUnit>& ys, const std::vector<MatrixUnit>& target) {
  std::vector<Matrix<S>> out;
  for (const auto& x : xs) {
    Matrix<S> m = zeros(ring, static_cast<Eigen::Index>(target.size()), static_cast<Eigen::Index>(ys.size()));
    for (std::size_t j = 0; j < ys.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = unit_product(ring, x, ys[j], target);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace detail

/// Matrix units (p, q) with allowed[p][q], split by index: the first `split`
/// entries of `order` index the A corner, the rest the B corner.
template <class S>
GMAlgebra<S> pattern_gma(const Ring<S>& ring, const std::vector<std::vector<bool>>& allowed,
                         const std::vector<int>& order, int split) {
  const int n = static_cast<int>(order.size());
  if (n < 2) fail(ErrorKind::BadShape, "need at least two indices");
  if (split < 1 || split >= n) fail(ErrorKind::BadSplit, "split must lie strictly between 0 and " + std::to_string(n));
  std::vector<int> side(n);
  for (int i = 0; i < n; ++i) side[order[i]] = i < split ? 0 : 1;
  std::array<std::vector<MatrixUnit>, 4> blocks;  // A, M, N, B
  for (int p : order)
    for (int q : order)
      if (allowed[p][q]) blocks[side[p] == 0 ? (side[q] == 0 ? 0 : 1) : (side[q] == 0 ? 2 : 3)].push_back({p, q});
  for (int p : order)
    if (!allowed[p][p]) fail(ErrorKind::BadShape, "pattern must contain the diagonal");

  const auto &ua = blocks[0], &um = blocks[1], &un = blocks[2], &ub = blocks[3];
  auto labels = [n](const std::vector<MatrixUnit>& us) {
    std::vector<std::string> out;
    for (const auto& u : us) out.push_back(unit_label(u, n));
    return out;
  };
  Bimodule<S> m{static_cast<Eigen::Index>(um.size()), labels(um), detail::unit_action(ring, ua, um, true),
                detail::unit_action(ring, ub, um, false)};
  Bimodule<S> nn{static_cast<Eigen::Index>(un.size()), labels(un), detail::unit_action(ring, ub, un, true),
                 detail::unit_action(ring, ua, un, false)};
  Pairing<S> phi{detail::unit_pairing(ring, um, un, ua)};
  Pairing<S> psi{detail::unit_pairing(ring, un, um, ub)};
  MoritaContext<S> ctx(detail::unit_algebra(ring, ua, n), detail::unit_algebra(ring, ub, n), std::move(m),
                       std::move(nn), std::move(phi), std::move(psi));
  return build_gma(ctx);
}

namespace detail {

inline std::vector<int> index_order(int n, bool reversed) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = reversed ? n - 1 - i : i;
  return order;
}

// block id of each index for block sizes d
inline std::vector<int> block_ids(const std::vector<int>& d) {
  std::vector<int> ids;
  for (std::size_t b = 0; b < d.size(); ++b) ids.insert(ids.end(), d[b], static_cast<int>(b));
  return ids;
}

}  // namespace detail

/// M_n(R) as [M_j M_{j x (n-j)}; M_{(n-j) x j} M_{n-j}].
template <class S>
GMAlgebra<S> full_matrix_gma(const Ring<S>& ring, int n, int split) {
  if (n < 2) fail(ErrorKind::BadShape, "full matrix algebra needs n >= 2");
  if (split < 1 || split >= n) fail(ErrorKind::BadSplit, "split must satisfy 1 <= split < n");
  return pattern_gma(ring, std::vector<std::vector<bool>>(n, std::vector<bool>(n, true)), detail::index_order(n, false),
                     split);
}

/// Block triangular matrices with diagonal block sizes d, split after the
/// first `split` blocks. The lower variant lists indices in reverse, so its
/// corner A holds the trailing blocks and M is the lower-left part.
template <class S>
GMAlgebra<S> block_triangular_gma(const Ring<S>& ring, const std::vector<int>& d, int split, bool lower = false) {
  if (d.empty()) fail(ErrorKind::BadShape, "block sizes must be nonempty");
  for (int x : d)
    if (x <= 0) fail(ErrorKind::BadShape, "block sizes must be positive");
  const int blocks = static_cast<int>(d.size());
  if (split < 1 || split >= blocks) fail(ErrorKind::BadSplit, "split must satisfy 1 <= split < number of blocks");
  const auto ids = detail::block_ids(d);
  const int n = static_cast<int>(ids.size());
  std::vector<std::vector<bool>> allowed(n, std::vector<bool>(n));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) allowed[p][q] = lower ? ids[p] >= ids[q] : ids[p] <= ids[q];
  int cut = 0;
  if (lower) {
    for (int b = blocks - 1; b >= blocks - split; --b) cut += d[b];
  } else {
    for (int b = 0; b < split; ++b) cut += d[b];
  }
  return pattern_gma(ring, allowed, detail::index_order(n, lower), cut);
}

/// Upper (or lower) triangular n x n matrices, split after index `split`.
template <class S>
GMAlgebra<S> triangular_gma(const Ring<S>& ring, int n, int split, bool lower = false) {
  if (n < 2) fail(ErrorKind::BadShape, "triangular algebra needs n >= 2");
  if (split < 1 || split >= n) fail(ErrorKind::BadSplit, "split must satisfy 1 <= split < n");
  return block_triangular_gma(ring, std::vector<int>(n, 1), split, lower);
}

/// The full matrix algebra with units in row-major order.
template <class S>
Algebra<S> matrix_algebra(const Ring<S>& ring, int n) {
  std::vector<MatrixUnit> units;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) units.push_back({p, q});
  return detail::unit_algebra(ring, units, n);
}

/// Checks x_i y_j mapped through `perm` equals perm(x_i) perm(y_j) in b, where
/// perm[i] is the image index of basis element i.
template <class S>
bool intertwines(const Algebra<S>& a, const Algebra<S>& b, const std::vector<Eigen::Index>& perm) {
  if (a.dim() != b.dim() || static_cast<Eigen::Index>(perm.size()) != a.dim()) return false;
  for (Eigen::Index i = 0; i < a.dim(); ++i)
    for (Eigen::Index j = 0; j < a.dim(); ++j) {
      const Vector<S> lhs = a.product(i, j);
      const Vector<S> rhs = b.product(perm[i], perm[j]);
      for (Eigen::Index t = 0; t < a.dim(); ++t)
        if (!(lhs(t) == rhs(perm[t]))) return false;
    }
  return true;
}

/// perm sending each basis element of `a` (labelled by matrix units) to the
/// equally labelled element of `b`; `transpose` matches E_pq with E_qp.
template <class S>
std::optional<std::vector<Eigen::Index>> unit_bijection(const Algebra<S>& a, const Algebra<S>& b,
                                                        bool transpose = false) {
  if (a.dim() != b.dim()) return std::nullopt;
  std::vector<Eigen::Index> perm;
  for (const auto& la : a.labels()) {
    auto u = parse_unit_label(la);
    if (!u) return std::nullopt;
    if (transpose) std::swap(u->first, u->second);
    Eigen::Index hit = -1;
    for (Eigen::Index j = 0; j < b.dim(); ++j)
      if (parse_unit_label(b.labels()[j]) == u) hit = j;
    if (hit < 0) return std::nullopt;
    perm.push_back(hit);
  }
  return perm;
}

template <class S>
struct InflatedSpec {
  Algebra<S> base;
  int n = 0;
  std::vector<std::vector<Vector<S>>> gamma;  // n x n entries in the base algebra
};

template <class S>
struct InflatedAlgebra {
  Algebra<S> algebra;   // X o Y = X Gamma Y
  Algebra<S> ordinary;  // M_n(A), same coordinates
  bool has_identity = false;
  Vector<S> gamma;                    // Gamma in the shared coordinates
  std::optional<Vector<S>> identity;  // Gamma^-1
  std::optional<LinMap<S>> sigma;     // X -> X Gamma^-1, ordinary -> inflated
};

namespace detail {

template <class S>
Algebra<S> twisted_matrix_algebra(const Algebra<S>& base, int n, const std::vector<std::vector<Vector<S>>>& gamma,
                                  std::optional<Vector<S>> unit) {
  const auto& r = base.ring();
  const auto da = base.dim();
  const auto d = static_cast<Eigen::Index>(n) * n * da;
  auto index = [&](int p, int q, Eigen::Index t) { return (static_cast<Eigen::Index>(p) * n + q) * da + t; };
  std::vector<std::string> labels(d);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (Eigen::Index t = 0; t < da; ++t)
        labels[index(p, q, t)] = unit_label({p, q}, n) + (da > 1 ? "*" + base.labels()[t] : std::string{});
  std::vector<std::vector<Vector<S>>> prods(d, std::vector<Vector<S>>(d, zeros(r, d)));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int rr = 0; rr < n; ++rr)
        for (int s = 0; s < n; ++s)
          for (Eigen::Index t = 0; t < da; ++t)
            for (Eigen::Index u = 0; u < da; ++u) {
              const Vector<S> mid = base.mul(base.mul(base.basis(t), gamma[q][rr]), base.basis(u));
              prods[index(p, q, t)][index(rr, s, u)].segment(index(p, s, 0), da) = mid;
            }
  return Algebra<S>(r, std::move(labels), std::move(prods), std::move(unit));
}

}  // namespace detail

/// Builds the inflated algebra. Gamma is inverted in M_n(A) by solving
/// Gamma X = I and X Gamma = I together; when that works the result is unital
/// with identity Gamma^-1, and sigma(X) = X Gamma^-1 is checked to be
/// multiplicative on basis pairs.
template <class S>
InflatedAlgebra<S> inflated_algebra(const InflatedSpec<S>& spec) {
  const auto& base = spec.base;
  const auto& r = base.ring();
  const int n = spec.n;
  if (n < 1) fail(ErrorKind::BadShape, "n must be positive");
  if (static_cast<int>(spec.gamma.size()) != n) fail(ErrorKind::BadShape, "Gamma must be n x n");
  for (const auto& row : spec.gamma) {
    if (static_cast<int>(row.size()) != n) fail(ErrorKind::BadShape, "Gamma must be n x n");
    for (const auto& e : row)
      if (e.size() != base.dim()) fail(ErrorKind::DimensionMismatch, "Gamma entry has wrong length");
  }
  std::vector<std::vector<Vector<S>>> eye(n, std::vector<Vector<S>>(n, base.zero()));
  for (int i = 0; i < n; ++i) eye[i][i] = base.unit();
  const auto ordinary = detail::twisted_matrix_algebra<S>(base, n, eye, std::nullopt);

  const auto da = base.dim();
  const auto d = ordinary.dim();
  auto flat = [&](const std::vector<std::vector<Vector<S>>>& m) {
    Vector<S> v(d);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) v.segment((static_cast<Eigen::Index>(p) * n + q) * da, da) = m[p][q];
    return canon(r, v);
  };
  const Vector<S> g = flat(spec.gamma);
  const Vector<S> one = flat(eye);
  Matrix<S> sys(2 * d, d);
  sys << ordinary.left_mult(g), ordinary.right_mult(g);
  Vector<S> rhs(2 * d);
  rhs << one, one;
  const auto inv = solve_linear(r, canon(r, sys), canon(r, rhs));

  std::optional<Vector<S>> identity;
  if (inv.consistent) identity = inv.particular;
  InflatedAlgebra<S> out{detail::twisted_matrix_algebra(base, n, spec.gamma, identity), ordinary, inv.consistent, g,
                         identity, std::nullopt};
  if (!identity) return out;

  const LinMap<S> sigma = ordinary.right_mult(*identity);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) {
      const Vector<S> lhs = out.algebra.mul(sigma.col(i), sigma.col(j));
      const Vector<S> rhs2 = apply(r, sigma, ordinary.product(i, j));
      if (!(lhs == rhs2)) fail(ErrorKind::TheoremViolation, "sigma is not multiplicative");
    }
  out.sigma = sigma;
  return out;
}

/// sigma^-1 Theta sigma: a map on the inflated algebra pulled back to M_n(A).
template <class S>
LinMap<S> transport_to_ordinary(const InflatedAlgebra<S>& inf, const LinMap<S>& theta) {
  if (!inf.sigma) fail(ErrorKind::InvalidAlgebra, "inflated algebra has no identity");
  const auto& r = inf.ordinary.ring();
  // sigma^-1(Y) = Y Gamma in the ordinary product
  const LinMap<S> sigma_inv = inf.ordinary.right_mult(inf.gamma);
  return canon(r, LinMap<S>(sigma_inv * theta * *inf.sigma));
}

}  // namespace gmalg
