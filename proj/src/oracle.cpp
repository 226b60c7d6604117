#include "gmalg/oracle.hpp"

#include <algorithm>
#include <set>

namespace gmalg::oracle {

namespace {

std::int64_t md(std::int64_t v, std::int64_t n) {
  v %= n;
  return v < 0 ? v + n : v;
}

}  // namespace

Table::Table(const Algebra<Zn>& a)
    : n_(a.ring().modulus()), d_(static_cast<int>(a.dim())), c_(static_cast<std::size_t>(d_) * d_ * d_) {
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j)
      for (int k = 0; k < d_; ++k) c_[(static_cast<std::size_t>(i) * d_ + j) * d_ + k] = a.ring().rep(a.structure_constant(i, j, k));
}

Elem Table::mul(const Elem& x, const Elem& y) const {
  Elem out(d_, 0);
  for (int i = 0; i < d_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < d_; ++j) {
      if (y[j] == 0) continue;
      const std::int64_t f = x[i] * y[j] % n_;
      const auto* row = &c_[(static_cast<std::size_t>(i) * d_ + j) * d_];
      for (int k = 0; k < d_; ++k) out[k] = (out[k] + f * row[k]) % n_;
    }
  }
  return out;
}

Elem Table::sub(const Elem& x, const Elem& y) const {
  Elem out(d_);
  for (int i = 0; i < d_; ++i) out[i] = md(x[i] - y[i], n_);
  return out;
}

Elem Table::commutator(const Elem& x, const Elem& y) const { return sub(mul(x, y), mul(y, x)); }

Elem Table::basis(int i) const {
  Elem e(d_, 0);
  e[i] = 1 % n_;
  return e;
}

bool Table::is_zero(const Elem& x) {
  return std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v == 0; });
}

Elem apply_map(const Matrix<Zn>& theta, std::int64_t n, const Elem& x) {
  const auto d = static_cast<int>(theta.rows());
  Elem out(d, 0);
  for (int j = 0; j < static_cast<int>(theta.cols()); ++j) {
    if (x[j] == 0) continue;
    for (int i = 0; i < d; ++i) out[i] = md(out[i] + x[j] * md(theta(i, j).value(), n), n);
  }
  return out;
}

std::vector<Elem> enumerate_elements(std::int64_t n, int dim, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (int i = 0; i < dim; ++i) {
    total *= static_cast<std::uint64_t>(n);
    if (total > budget) fail(ErrorKind::BudgetExceeded, "enumeration of " + std::to_string(n) + "^" +
                                                            std::to_string(dim) + " elements exceeds budget");
  }
  std::vector<Elem> out;
  out.reserve(total);
  Elem x(dim, 0);
  for (std::uint64_t c = 0; c < total; ++c) {
    out.push_back(x);
    for (int i = dim - 1; i >= 0; --i) {
      if (++x[i] < n) break;
      x[i] = 0;
    }
  }
  return out;
}

std::vector<Elem> enumerate_elements(const Algebra<Zn>& a, std::uint64_t budget) {
  return enumerate_elements(a.ring().modulus(), static_cast<int>(a.dim()), budget);
}

std::vector<Elem> brute_zk(const Algebra<Zn>& a, int k, std::uint64_t budget) {
  if (k < 1) fail(ErrorKind::BadInput, "k must be at least 1");
  const Table t(a);
  const auto all = enumerate_elements(a, budget);
  std::vector<Elem> out;
  for (const auto& cand : all) {
    bool ok = true;
    for (const auto& x : all) {
      Elem cur = cand;
      for (int i = 0; i < k && !Table::is_zero(cur); ++i) cur = t.commutator(cur, x);
      if (!Table::is_zero(cur)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(cand);
  }
  return out;
}

std::vector<Elem> brute_center(const Algebra<Zn>& a, std::uint64_t budget) { return brute_zk(a, 1, budget); }

std::optional<Elem> brute_k_commuting(const Algebra<Zn>& a, const Matrix<Zn>& theta, int k, std::uint64_t budget) {
  if (k < 1) fail(ErrorKind::BadInput, "k must be at least 1");
  const Table t(a);
  for (const auto& x : enumerate_elements(a, budget)) {
    Elem cur = apply_map(theta, t.modulus(), x);
    for (int i = 0; i < k && !Table::is_zero(cur); ++i) cur = t.commutator(cur, x);
    if (!Table::is_zero(cur)) return x;
  }
  return std::nullopt;
}

std::optional<Elem> brute_properness(const Algebra<Zn>& a, const Matrix<Zn>& theta, std::uint64_t budget) {
  const Table t(a);
  const auto z = brute_center(a, budget);
  const std::set<Elem> zset(z.begin(), z.end());
  for (const auto& lambda : z) {
    bool ok = true;
    for (int j = 0; j < t.dim() && ok; ++j) {
      const auto e = t.basis(j);
      ok = zset.count(t.sub(apply_map(theta, t.modulus(), e), t.mul(e, lambda))) > 0;
    }
    if (ok) return lambda;
  }
  return std::nullopt;
}

Elem to_elem(const Vector<Zn>& v) {
  Elem e(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) e[i] = v(i).value();
  return e;
}

Vector<Zn> to_vector(const Ring<Zn>& ring, const Elem& e) {
  Vector<Zn> v(static_cast<Eigen::Index>(e.size()));
  for (std::size_t i = 0; i < e.size(); ++i) v(static_cast<Eigen::Index>(i)) = ring.from_int(e[i]);
  return v;
}

}  // namespace gmalg::oracle
