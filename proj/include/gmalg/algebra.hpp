#pragma once

// Finite-dimensional associative algebras over an exact ring, given by
// structure constants: e_i * e_j = sum_k c[i][j][k] e_k.

#include <functional>
#include <string>
#include <vector>

#include "gmalg/submodule.hpp"

namespace gmalg {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1000000;

/// Calls `fn` on every vector of R^dim in lexicographic order (first
/// coordinate most significant). Stops early if `fn` returns false.
template <class Fn>
void for_each_vector(const Ring<Zn>& ring, Eigen::Index dim, std::uint64_t budget, Fn&& fn) {
  std::uint64_t total = 1;
  for (Eigen::Index i = 0; i < dim; ++i) {
    total *= ring.size();
    if (total > budget) {
      fail(ErrorKind::BudgetExceeded,
           std::to_string(ring.size()) + "^" + std::to_string(dim) + " exceeds budget " + std::to_string(budget));
    }
  }
  Vector<Zn> x = zeros(ring, dim);
  std::vector<std::int64_t> digits(dim, 0);
  while (true) {
    if (!fn(static_cast<const Vector<Zn>&>(x))) return;
    Eigen::Index i = dim - 1;
    while (i >= 0 && digits[i] + 1 == ring.modulus()) {
      digits[i] = 0;
      x(i) = ring.zero();
      --i;
    }
    if (i < 0) return;
    ++digits[i];
    x(i) = ring.from_int(digits[i]);
  }
}

template <class S>
class Algebra {
 public:
  /// `products[i][j]` holds the coordinates of e_i * e_j. Associativity and
  /// (when given) two-sided unitality are checked; violations throw
  /// InvalidAlgebra.
  Algebra(const Ring<S>& ring, std::vector<std::string> labels, std::vector<std::vector<Vector<S>>> products,
          std::optional<Vector<S>> unit)
      : ring_(ring), labels_(std::move(labels)) {
    dim_ = static_cast<Eigen::Index>(products.size());
    if (dim_ == 0) fail(ErrorKind::InvalidAlgebra, "algebra must have positive dimension");
    if (static_cast<Eigen::Index>(labels_.size()) != dim_) {
      fail(ErrorKind::DimensionMismatch, "label count does not match dimension");
    }
    left_.assign(dim_, zeros(ring_, dim_, dim_));
    right_.assign(dim_, zeros(ring_, dim_, dim_));
    for (Eigen::Index i = 0; i < dim_; ++i) {
      if (static_cast<Eigen::Index>(products[i].size()) != dim_) {
        fail(ErrorKind::DimensionMismatch, "structure constants are not dim x dim x dim");
      }
      for (Eigen::Index j = 0; j < dim_; ++j) {
        const auto& p = products[i][j];
        if (p.size() != dim_) fail(ErrorKind::DimensionMismatch, "structure constants are not dim x dim x dim");
        left_[i].col(j) = canon(ring_, p);
        right_[j].col(i) = canon(ring_, p);
      }
    }
    if (unit) {
      if (unit->size() != dim_) fail(ErrorKind::DimensionMismatch, "unit has wrong length");
      unit_ = canon(ring_, *unit);
    }
    const auto problems = violations();
    if (!problems.empty()) fail(ErrorKind::InvalidAlgebra, problems.front());
  }

  const Ring<S>& ring() const { return ring_; }
  Eigen::Index dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_unit() const { return unit_.has_value(); }
  const Vector<S>& unit() const {
    if (!unit_) fail(ErrorKind::InvalidAlgebra, "algebra has no identity element");
    return *unit_;
  }
  const std::optional<Vector<S>>& unit_opt() const { return unit_; }

  /// Coordinates of e_i * e_j.
  Vector<S> product(Eigen::Index i, Eigen::Index j) const { return left_[i].col(j); }
  const S& structure_constant(Eigen::Index i, Eigen::Index j, Eigen::Index k) const { return left_[i](k, j); }

  /// Matrix of y -> e_i y.
  const Matrix<S>& left_basis(Eigen::Index i) const { return left_[i]; }
  /// Matrix of y -> y e_j.
  const Matrix<S>& right_basis(Eigen::Index j) const { return right_[j]; }

  Vector<S> basis(Eigen::Index i) const { return unit_vector(ring_, dim_, i); }
  Vector<S> zero() const { return zeros(ring_, dim_); }

  Matrix<S> left_mult(const Vector<S>& x) const {
    check(x);
    Matrix<S> out = zeros(ring_, dim_, dim_);
    for (Eigen::Index i = 0; i < dim_; ++i)
      if (!(x(i) == ring_.zero())) out += x(i) * left_[i];
    return canon(ring_, out);
  }
  Matrix<S> right_mult(const Vector<S>& x) const {
    check(x);
    Matrix<S> out = zeros(ring_, dim_, dim_);
    for (Eigen::Index i = 0; i < dim_; ++i)
      if (!(x(i) == ring_.zero())) out += x(i) * right_[i];
    return canon(ring_, out);
  }

  Vector<S> mul(const Vector<S>& x, const Vector<S>& y) const {
    check(y);
    return canon(ring_, Vector<S>(left_mult(x) * y));
  }

  void check(const Vector<S>& x) const {
    if (x.size() != dim_) {
      fail(ErrorKind::DimensionMismatch,
           "element of length " + std::to_string(x.size()) + " in algebra of dim " + std::to_string(dim_));
    }
  }

  /// Associativity / unit failures on basis elements, one message each.
  std::vector<std::string> violations() const {
    std::vector<std::string> out;
    for (Eigen::Index i = 0; i < dim_; ++i) {
      for (Eigen::Index j = 0; j < dim_; ++j) {
        const Vector<S> ij = left_[i].col(j);
        for (Eigen::Index k = 0; k < dim_; ++k) {
          const Vector<S> lhs = right_[k] * ij;
          const Vector<S> rhs = left_[i] * left_[j].col(k);
          if (!is_zero(canon(ring_, Vector<S>(lhs - rhs)))) {
            out.push_back("associativity fails on (" + labels_[i] + "," + labels_[j] + "," + labels_[k] + ")");
          }
        }
      }
    }
    if (unit_) {
      const Matrix<S> lu = left_mult(*unit_), ru = right_mult(*unit_);
      for (Eigen::Index i = 0; i < dim_; ++i) {
        if (!(canon(ring_, Vector<S>(lu.col(i))) == basis(i)) || !(canon(ring_, Vector<S>(ru.col(i))) == basis(i))) {
          out.push_back("unit does not act as identity on " + labels_[i]);
        }
      }
    }
    return out;
  }

 private:
  Ring<S> ring_;
  std::vector<std::string> labels_;
  Eigen::Index dim_ = 0;
  std::vector<Matrix<S>> left_, right_;
  std::optional<Vector<S>> unit_;
};

template <class S>
Vector<S> mul(const Algebra<S>& a, const Vector<S>& x, const Vector<S>& y) {
  return a.mul(x, y);
}

/// xy - yx
template <class S>
Vector<S> bracket(const Algebra<S>& a, const Vector<S>& x, const Vector<S>& y) {
  return canon(a.ring(), Vector<S>(a.mul(x, y) - a.mul(y, x)));
}

/// [x, y]_0 = x, [x, y]_k = [[x, y]_{k-1}, y].
template <class S>
Vector<S> iterated_bracket(const Algebra<S>& a, const Vector<S>& x, const Vector<S>& y, int k) {
  if (k < 0) fail(ErrorKind::BadInput, "bracket order must be nonnegative");
  a.check(x);
  Vector<S> cur = canon(a.ring(), x);
  for (int i = 0; i < k; ++i) cur = bracket(a, cur, y);
  return cur;
}

/// Matrix of v -> [v, y]_k, i.e. (R_y - L_y)^k.
template <class S>
Matrix<S> ad_power(const Algebra<S>& a, const Vector<S>& y, int k) {
  const Matrix<S> d = canon(a.ring(), Matrix<S>(a.right_mult(y) - a.left_mult(y)));
  Matrix<S> p = identity(a.ring(), a.dim());
  for (int i = 0; i < k; ++i) p = canon(a.ring(), Matrix<S>(d * p));
  return p;
}

/// x commutes with every basis element.
template <class S>
bool is_central(const Algebra<S>& a, const Vector<S>& x) {
  for (Eigen::Index i = 0; i < a.dim(); ++i) {
    if (!is_zero(bracket(a, x, a.basis(i)))) return false;
  }
  return true;
}

/// Stacked rows (R_{e_i} - L_{e_i}); its kernel is the center.
template <class S>
Matrix<S> center_equations(const Algebra<S>& a) {
  const auto d = a.dim();
  Matrix<S> rows = zeros(a.ring(), d * d, d);
  for (Eigen::Index i = 0; i < d; ++i) rows.middleRows(i * d, d) = a.right_basis(i) - a.left_basis(i);
  return canon(a.ring(), rows);
}

template <class S>
Submodule<S> center(const Algebra<S>& a) {
  return Submodule<S>(a.ring(), a.dim(), kernel(a.ring(), center_equations(a)));
}

/// Z(A)_k = {a : [a, x]_k = 0 for all x}: intersection of ker (R_x - L_x)^k
/// over every element x. Requires an enumerable ring unless k = 1.
template <class S>
Submodule<S> zk_set(const Algebra<S>& a, int k, std::uint64_t budget = kDefaultEnumerationBudget) {
  if (k < 1) fail(ErrorKind::BadInput, "Z(A)_k needs k >= 1");
  if (k == 1) return center(a);
  if constexpr (std::is_same_v<S, Zn>) {
    RowEchelon<Zn> rows(a.ring(), a.dim());
    for_each_vector(a.ring(), a.dim(), budget, [&](const Vector<Zn>& x) {
      rows.add_rows(ad_power(a, x, k));
      return true;
    });
    return Submodule<Zn>(a.ring(), a.dim(), rows.kernel());
  } else {
    fail(ErrorKind::NotEnumerable, "Z(A)_k for k >= 2 is only computed over finite rings");
  }
}

/// R·1
template <class S>
Submodule<S> scalar_multiples_of_unit(const Algebra<S>& a) {
  return Submodule<S>::cyclic(a.ring(), a.unit());
}

/// Same module, product reversed: c'[i][j] = c[j][i].
template <class S>
Algebra<S> opposite(const Algebra<S>& a) {
  std::vector<std::vector<Vector<S>>> prods(a.dim(), std::vector<Vector<S>>(a.dim()));
  for (Eigen::Index i = 0; i < a.dim(); ++i)
    for (Eigen::Index j = 0; j < a.dim(); ++j) prods[i][j] = a.product(j, i);
  return Algebra<S>(a.ring(), a.labels(), std::move(prods), a.unit_opt());
}

/// The ring itself as a one-dimensional algebra.
template <class S>
Algebra<S> ground_algebra(const Ring<S>& ring, const std::string& label = "1") {
  Vector<S> one = unit_vector(ring, 1, 0);
  return Algebra<S>(ring, {label}, {{one}}, one);
}

}  // namespace gmalg
