#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "gmalg/linsolve.hpp"

namespace gmalg {

inline constexpr std::uint64_t kElementListBudget = 100000;

/// Submodule of a free module R^d given by generators. Over a finite ring the
/// full element list is kept as well (sorted, canonical) whenever it fits in
/// the element budget.
template <class S>
class Submodule {
 public:
  Submodule(const Ring<S>& ring, Eigen::Index ambient, std::vector<Vector<S>> gens,
            std::uint64_t budget = kElementListBudget)
      : ring_(ring), ambient_(ambient) {
    for (auto& g : gens) {
      if (g.size() != ambient) fail(ErrorKind::DimensionMismatch, "generator length mismatch");
      auto c = canon(ring_, g);
      if (!is_zero(c)) gens_.push_back(std::move(c));
    }
    if constexpr (std::is_same_v<S, Zn>) {
      elements_ = span_elements(ring_, gens_, ambient_, budget);
    }
  }

  /// R·v
  static Submodule cyclic(const Ring<S>& ring, const Vector<S>& v) { return Submodule(ring, v.size(), {v}); }

  const Ring<S>& ring() const { return ring_; }
  Eigen::Index ambient() const { return ambient_; }
  const std::vector<Vector<S>>& generators() const { return gens_; }
  const std::optional<std::vector<Vector<S>>>& elements() const { return elements_; }

  /// Number of elements when the list is materialized.
  std::optional<std::uint64_t> size() const {
    if (!elements_) return std::nullopt;
    return elements_->size();
  }

  bool is_zero_module() const { return gens_.empty(); }

  Matrix<S> generator_matrix() const {
    Matrix<S> g = zeros(ring_, ambient_, static_cast<Eigen::Index>(gens_.size()));
    for (std::size_t j = 0; j < gens_.size(); ++j) g.col(static_cast<Eigen::Index>(j)) = gens_[j];
    return g;
  }

  bool contains(const Vector<S>& v) const {
    if (v.size() != ambient_) fail(ErrorKind::DimensionMismatch, "vector length mismatch");
    const auto c = canon(ring_, v);
    if (is_zero(c)) return true;
    if (elements_) {
      return std::binary_search(elements_->begin(), elements_->end(), c,
                                [](const Vector<S>& x, const Vector<S>& y) { return lex_less(x, y); });
    }
    if (gens_.empty()) return false;
    return solve_linear(ring_, generator_matrix(), c).consistent;
  }

  bool contains(const Submodule& other) const {
    return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const auto& g) { return contains(g); });
  }

  friend bool operator==(const Submodule& a, const Submodule& b) {
    if (a.ambient_ != b.ambient_) return false;
    if (a.elements_ && b.elements_) return *a.elements_ == *b.elements_;
    return a.contains(b) && b.contains(a);
  }

 private:
  Ring<S> ring_;
  Eigen::Index ambient_;
  std::vector<Vector<S>> gens_;
  std::optional<std::vector<Vector<S>>> elements_;
};

}  // namespace gmalg
