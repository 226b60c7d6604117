#include "gmalg/linsolve.hpp"

#include <algorithm>
#include <numeric>

namespace gmalg {
namespace detail {

SmithForm smith_form(const Ring<Zn>& ring, const Matrix<Zn>& a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  SmithForm f{canon(ring, a), identity(ring, rows), identity(ring, cols), 0};
  auto& d = f.d;
  Eigen::Index t = 0;
  while (t < std::min(rows, cols)) {
    // pivot: nonzero entry whose gcd with n is smallest
    Eigen::Index pi = -1, pj = -1;
    std::int64_t best = 0;
    for (Eigen::Index j = t; j < cols; ++j) {
      for (Eigen::Index i = t; i < rows; ++i) {
        const auto r = ring.rep(d(i, j));
        if (r == 0) continue;
        const auto g = std::gcd(r, ring.modulus());
        if (pi < 0 || g < best) {
          pi = i;
          pj = j;
          best = g;
        }
      }
    }
    if (pi < 0) break;
    if (pi != t) {
      d.row(pi).swap(d.row(t));
      f.u.row(pi).swap(f.u.row(t));
    }
    if (pj != t) {
      d.col(pj).swap(d.col(t));
      f.v.col(pj).swap(f.v.col(t));
    }
    bool clean = false;
    while (!clean) {
      clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        const auto b = ring.rep(d(i, t));
        if (b == 0) continue;
        const auto p = ring.rep(d(t, t));
        if (b % p == 0) {
          const Zn q = ring.from_int(b / p);
          d.row(i) -= q * d.row(t);
          f.u.row(i) -= q * f.u.row(t);
        } else {
          const auto k = gcd_combo(ring, p, b);
          apply_combo(k, d.row(t), d.row(i));
          apply_combo(k, f.u.row(t), f.u.row(i));
          clean = false;
        }
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        const auto b = ring.rep(d(t, j));
        if (b == 0) continue;
        const auto p = ring.rep(d(t, t));
        if (b % p == 0) {
          const Zn q = ring.from_int(b / p);
          d.col(j) -= q * d.col(t);
          f.v.col(j) -= q * f.v.col(t);
        } else {
          const auto k = gcd_combo(ring, p, b);
          apply_combo(k, d.col(t), d.col(j));
          apply_combo(k, f.v.col(t), f.v.col(j));
          clean = false;
        }
      }
    }
    ++t;
  }
  f.pivots = t;
  f.d = canon(ring, d);
  f.u = canon(ring, f.u);
  f.v = canon(ring, f.v);
  return f;
}

SolutionSet<Zn> solve_smith(const Ring<Zn>& ring, const Matrix<Zn>& a, const Vector<Zn>& b) {
  const auto n = ring.modulus();
  const auto f = smith_form(ring, a);
  const Vector<Zn> c = canon(ring, Vector<Zn>(f.u * canon(ring, b)));
  const Eigen::Index cols = a.cols();

  SolutionSet<Zn> out;
  out.consistent = true;
  Vector<Zn> y = zeros(ring, cols);
  for (Eigen::Index i = 0; i < f.pivots; ++i) {
    const auto di = ring.rep(f.d(i, i));
    const auto g = std::gcd(di, n);
    const auto ci = ring.rep(c(i));
    if (ci % g != 0) {
      out.consistent = false;
      continue;
    }
    const auto reduced = n / g;
    if (reduced > 1) {
      const Ring<Zn> sub(reduced);
      const auto inv = sub.inv(sub.from_int(di / g));
      y(i) = ring.from_int((ci / g) * inv->value() % reduced);
      out.kernel.push_back(canon(ring, Vector<Zn>(ring.from_int(reduced) * f.v.col(i))));
    }
  }
  for (Eigen::Index i = f.pivots; i < a.rows(); ++i) {
    if (!(c(i) == ring.zero())) out.consistent = false;
  }
  for (Eigen::Index j = f.pivots; j < cols; ++j) out.kernel.push_back(f.v.col(j));
  out.particular = out.consistent ? canon(ring, Vector<Zn>(f.v * y)) : zeros(ring, cols);
  return out;
}

}  // namespace detail

std::optional<std::vector<Vector<Zn>>> span_elements(const Ring<Zn>& ring, const std::vector<Vector<Zn>>& gens,
                                                     Eigen::Index ambient, std::uint64_t budget) {
  auto key_less = [](const Vector<Zn>& x, const Vector<Zn>& y) { return lex_less(x, y); };
  std::set<Vector<Zn>, decltype(key_less)> seen(key_less);
  seen.insert(zeros(ring, ambient));
  for (const auto& g : gens) {
    const auto cg = canon(ring, g);
    std::vector<Vector<Zn>> frontier(seen.begin(), seen.end());
    for (const auto& base : frontier) {
      Vector<Zn> cur = base;
      for (std::int64_t c = 1; c < ring.modulus(); ++c) {
        cur = canon(ring, Vector<Zn>(cur + cg));
        if (!seen.insert(cur).second) break;
        if (seen.size() > budget) return std::nullopt;
      }
    }
  }
  return std::vector<Vector<Zn>>(seen.begin(), seen.end());
}

}  // namespace gmalg
