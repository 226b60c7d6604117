#pragma once

// Brute-force reference computations over Z/nZ. Everything here works on raw
// residues and structure-constant tables read out of the algebra once; none
// of the elimination, submodule or bracket code is reused.

#include <cstdint>
#include <optional>
#include <vector>

#include "gmalg/algebra.hpp"

namespace gmalg::oracle {

using Elem = std::vector<std::int64_t>;

inline constexpr std::uint64_t kDefaultBudget = 1000000;

class Table {
 public:
  explicit Table(const Algebra<Zn>& a);

  std::int64_t modulus() const { return n_; }
  int dim() const { return d_; }

  Elem mul(const Elem& x, const Elem& y) const;
  Elem commutator(const Elem& x, const Elem& y) const;
  Elem sub(const Elem& x, const Elem& y) const;
  Elem basis(int i) const;
  static bool is_zero(const Elem& x);

 private:
  std::int64_t n_;
  int d_;
  std::vector<std::int64_t> c_;  // c_[(i * d + j) * d + k]
};

/// Raw map matrix (column j = image of e_j) applied to x.
Elem apply_map(const Matrix<Zn>& theta, std::int64_t n, const Elem& x);

/// Every element of R^dim, lexicographic with the first coordinate most
/// significant. BudgetExceeded past `budget`.
std::vector<Elem> enumerate_elements(std::int64_t n, int dim, std::uint64_t budget = kDefaultBudget);
std::vector<Elem> enumerate_elements(const Algebra<Zn>& a, std::uint64_t budget = kDefaultBudget);

/// {a : ax = xa for all x}
std::vector<Elem> brute_center(const Algebra<Zn>& a, std::uint64_t budget = kDefaultBudget);

/// {a : [a, x]_k = 0 for all x}
std::vector<Elem> brute_zk(const Algebra<Zn>& a, int k, std::uint64_t budget = kDefaultBudget);

/// First x (lexicographic) with [Theta(x), x]_k != 0, or nothing.
std::optional<Elem> brute_k_commuting(const Algebra<Zn>& a, const Matrix<Zn>& theta, int k,
                                      std::uint64_t budget = kDefaultBudget);

/// First central lambda (lexicographic) with Theta(e_j) - e_j lambda central
/// for every j, or nothing.
std::optional<Elem> brute_properness(const Algebra<Zn>& a, const Matrix<Zn>& theta,
                                     std::uint64_t budget = kDefaultBudget);

Elem to_elem(const Vector<Zn>& v);
Vector<Zn> to_vector(const Ring<Zn>& ring, const Elem& e);

}  // namespace gmalg::oracle
