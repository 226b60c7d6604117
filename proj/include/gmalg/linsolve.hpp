#pragma once

// Exact linear algebra over the coefficient rings: Gauss-Jordan elimination
// over fields, Smith-form diagonalization with explicit unimodular
// transforms over composite Z/nZ, and an incremental kernel-preserving row
// reducer for systems with many more equations than unknowns.

#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <type_traits>
#include <utility>
#include <vector>

#include "gmalg/scalar.hpp"

namespace gmalg {

/// All solutions of Ax = b: `particular + span(kernel)` when consistent.
template <class S>
struct SolutionSet {
  bool consistent = false;
  Vector<S> particular;
  std::vector<Vector<S>> kernel;
};

namespace detail {

inline std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
  std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    const auto q = a / b;
    a = std::exchange(b, a - q * b);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  s = s0;
  t = t0;
  return a;
}

template <class S>
S field_div(const Ring<S>& ring, const S& a, const S& b) {
  if constexpr (std::is_same_v<S, Rational>) {
    return a / b;
  } else {
    return a * *ring.inv(b);
  }
}

// 2x2 unimodular transform [[s, t], [b/g, -a/g]] taking (a, b) to (g, 0).
struct GcdCombo {
  Zn s, t, bg, ag;
};

inline GcdCombo gcd_combo(const Ring<Zn>& ring, std::int64_t a, std::int64_t b) {
  std::int64_t s = 0, t = 0;
  const auto g = ext_gcd(a, b, s, t);
  return {ring.from_int(s), ring.from_int(t), ring.from_int(b / g), ring.from_int(a / g)};
}

template <class RowA, class RowB>
void apply_combo(const GcdCombo& k, RowA&& hi, RowB&& lo) {
  for (Eigen::Index j = 0; j < hi.size(); ++j) {
    const Zn h = hi(j), l = lo(j);
    hi(j) = k.s * h + k.t * l;
    lo(j) = k.bg * h - k.ag * l;
  }
}

template <class S>
SolutionSet<S> solve_field(const Ring<S>& ring, const Matrix<S>& a, const Vector<S>& b) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Matrix<S> m(rows, cols + 1);
  m.leftCols(cols) = canon(ring, a);
  m.col(cols) = canon(ring, b);

  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && m(p, c) == ring.zero()) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const auto inv = *ring.inv(m(r, c));
    for (Eigen::Index j = 0; j <= cols; ++j) m(r, j) = m(r, j) * inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == ring.zero()) continue;
      const S f = m(i, c);
      for (Eigen::Index j = 0; j <= cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }

  SolutionSet<S> out;
  out.consistent = true;
  for (Eigen::Index i = r; i < rows; ++i) {
    if (!(m(i, cols) == ring.zero())) out.consistent = false;
  }
  out.particular = zeros(ring, cols);
  if (out.consistent) {
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) out.particular(pivot_cols[i]) = m(i, cols);
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector<S> k = zeros(ring, cols);
    k(f) = ring.one();
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) k(pivot_cols[i]) = -m(i, f);
    out.kernel.push_back(canon(ring, k));
  }
  return out;
}

/// D = U * A * V with D diagonal and U, V invertible over Z/nZ.
struct SmithForm {
  Matrix<Zn> d, u, v;
  Eigen::Index pivots = 0;
};

SmithForm smith_form(const Ring<Zn>& ring, const Matrix<Zn>& a);

SolutionSet<Zn> solve_smith(const Ring<Zn>& ring, const Matrix<Zn>& a, const Vector<Zn>& b);

}  // namespace detail

/// Solve Ax = b exactly. Inconsistency is reported through `consistent`.
template <class S>
SolutionSet<S> solve_linear(const Ring<S>& ring, const Matrix<S>& a, const Vector<S>& b) {
  if (a.rows() != b.size()) fail(ErrorKind::DimensionMismatch, "rhs length does not match row count");
  if constexpr (std::is_same_v<S, Zn>) {
    if (!ring.is_field()) return detail::solve_smith(ring, a, b);
  }
  return detail::solve_field(ring, a, b);
}

/// Generators of {x : Ax = 0}; empty means the kernel is zero.
template <class S>
std::vector<Vector<S>> kernel(const Ring<S>& ring, const Matrix<S>& a) {
  return solve_linear(ring, a, zeros(ring, a.rows())).kernel;
}

/// Incremental row reducer. Rows are combined only by invertible operations,
/// so the kernel of everything added equals the kernel of `matrix()`, which
/// never has more rows than columns.
template <class S>
class RowEchelon {
 public:
  RowEchelon(const Ring<S>& ring, Eigen::Index cols) : ring_(ring), cols_(cols), rows_(cols) {}

  Eigen::Index cols() const { return cols_; }

  void add_row(Vector<S> v) {
    if (v.size() != cols_) fail(ErrorKind::DimensionMismatch, "row length mismatch");
    v = canon(ring_, v);
    Eigen::Index c = 0;
    while (true) {
      while (c < cols_ && v(c) == ring_.zero()) ++c;
      if (c == cols_) return;
      auto& slot = rows_[c];
      if (!slot) {
        slot = std::move(v);
        ++count_;
        return;
      }
      eliminate(*slot, v, c);
      ++c;
    }
  }

  template <class Derived>
  void add_rows(const Eigen::MatrixBase<Derived>& block) {
    for (Eigen::Index i = 0; i < block.rows(); ++i) add_row(block.row(i).transpose());
  }

  Eigen::Index rank_bound() const { return count_; }

  Matrix<S> matrix() const {
    Matrix<S> out = zeros(ring_, count_, cols_);
    Eigen::Index r = 0;
    for (const auto& row : rows_) {
      if (row) out.row(r++) = row->transpose();
    }
    return out;
  }

  std::vector<Vector<S>> kernel() const { return gmalg::kernel(ring_, matrix()); }

 private:
  void eliminate(Vector<S>& pivot_row, Vector<S>& v, Eigen::Index c) {
    if constexpr (std::is_same_v<S, Zn>) {
      if (!ring_.is_field()) {
        const auto a = ring_.rep(pivot_row(c)), b = ring_.rep(v(c));
        if (b % a == 0) {
          v -= ring_.from_int(b / a) * pivot_row;
        } else {
          detail::apply_combo(detail::gcd_combo(ring_, a, b), pivot_row, v);
          pivot_row = canon(ring_, pivot_row);
        }
        v = canon(ring_, v);
        return;
      }
    }
    const S f = detail::field_div(ring_, v(c), pivot_row(c));
    v -= f * pivot_row;
    v = canon(ring_, v);
  }

  Ring<S> ring_;
  Eigen::Index cols_;
  std::vector<std::optional<Vector<S>>> rows_;
  Eigen::Index count_ = 0;
};

/// Every element of the span of `gens` (sorted, canonical), or nothing when
/// the span would exceed `budget` elements.
std::optional<std::vector<Vector<Zn>>> span_elements(const Ring<Zn>& ring, const std::vector<Vector<Zn>>& gens,
                                                     Eigen::Index ambient, std::uint64_t budget);

}  // namespace gmalg
