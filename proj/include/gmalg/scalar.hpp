#pragma once

// Exact coefficient rings: residues modulo n (runtime modulus) and rationals
// with arbitrary-precision numerator/denominator. Both are usable as Eigen
// scalar types.

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gmalg/errors.hpp"

namespace gmalg {

/// Residue class modulo a runtime modulus.
///
/// A modulus of zero marks an integer literal that has not met a ring yet;
/// Eigen creates these through `Scalar(0)` / `Scalar(1)`. Mixed arithmetic
/// adopts the nonzero modulus, so a literal never leaks into canonical data
/// once it has been combined with a real residue. `Ring<Zn>::canon` attaches
/// the modulus explicitly.
class Zn {
 public:
  constexpr Zn() = default;
  constexpr Zn(int literal) : value_(literal) {}  // NOLINT(google-explicit-constructor)
  Zn(std::int64_t value, std::int64_t modulus) : value_(reduce(value, modulus)), modulus_(modulus) {}

  std::int64_t value() const { return value_; }
  std::int64_t modulus() const { return modulus_; }

  friend Zn operator+(const Zn& a, const Zn& b) {
    const auto n = common(a, b);
    return n ? Zn(a.value_ + b.value_, n) : literal(a.value_ + b.value_);
  }
  friend Zn operator-(const Zn& a, const Zn& b) {
    const auto n = common(a, b);
    return n ? Zn(a.value_ - b.value_, n) : literal(a.value_ - b.value_);
  }
  friend Zn operator*(const Zn& a, const Zn& b) {
    const auto n = common(a, b);
    if (!n) return literal(a.value_ * b.value_);
    const auto p = static_cast<__int128>(reduce(a.value_, n)) * reduce(b.value_, n);
    return Zn(static_cast<std::int64_t>(p % n), n);
  }
  Zn operator-() const { return modulus_ ? Zn(-value_, modulus_) : literal(-value_); }
  Zn& operator+=(const Zn& b) { return *this = *this + b; }
  Zn& operator-=(const Zn& b) { return *this = *this - b; }
  Zn& operator*=(const Zn& b) { return *this = *this * b; }

  friend bool operator==(const Zn& a, const Zn& b) {
    const auto n = common(a, b);
    if (!n) return a.value_ == b.value_;
    return reduce(a.value_ - b.value_, n) == 0;
  }
  friend bool operator!=(const Zn& a, const Zn& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Zn& x) { return os << x.value_; }

 private:
  static std::int64_t reduce(std::int64_t v, std::int64_t n) {
    if (n == 0) return v;
    const auto r = v % n;
    return r < 0 ? r + n : r;
  }
  static Zn literal(std::int64_t v) {
    Zn z;
    z.value_ = v;
    return z;
  }
  static std::int64_t common(const Zn& a, const Zn& b) {
    if (a.modulus_ && b.modulus_ && a.modulus_ != b.modulus_) {
      fail(ErrorKind::DimensionMismatch, "residues with different moduli combined");
    }
    return a.modulus_ ? a.modulus_ : b.modulus_;
  }

  std::int64_t value_ = 0;
  std::int64_t modulus_ = 0;
};

using BigInt = boost::multiprecision::cpp_int;

/// Rational number in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(boost::multiprecision::cpp_rational q) : q_(std::move(q)) {}
  Rational(const BigInt& num, const BigInt& den) : q_(num, den) {}

  BigInt numerator() const { return boost::multiprecision::numerator(q_); }
  BigInt denominator() const { return boost::multiprecision::denominator(q_); }
  bool is_zero() const { return q_ == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.q_ + b.q_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.q_ - b.q_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.q_ * b.q_); }
  friend Rational operator/(const Rational& a, const Rational& b) { return Rational(a.q_ / b.q_); }
  Rational operator-() const { return Rational(-q_); }
  Rational& operator+=(const Rational& b) { q_ += b.q_; return *this; }
  Rational& operator-=(const Rational& b) { q_ -= b.q_; return *this; }
  Rational& operator*=(const Rational& b) { q_ *= b.q_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

  std::string str() const;
  static Rational parse(const std::string& text);

  friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

 private:
  boost::multiprecision::cpp_rational q_;
};

}  // namespace gmalg

namespace Eigen {

template <>
struct NumTraits<gmalg::Zn> : GenericNumTraits<gmalg::Zn> {
  using Real = gmalg::Zn;
  using NonInteger = gmalg::Zn;
  using Literal = gmalg::Zn;
  using Nested = gmalg::Zn;
  enum { IsComplex = 0, IsInteger = 1, IsSigned = 1, RequireInitialization = 1, ReadCost = 1, AddCost = 2, MulCost = 4 };
};

template <>
struct NumTraits<gmalg::Rational> : GenericNumTraits<gmalg::Rational> {
  using Real = gmalg::Rational;
  using NonInteger = gmalg::Rational;
  using Literal = gmalg::Rational;
  using Nested = gmalg::Rational;
  enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 1, AddCost = 40, MulCost = 80 };
};

}  // namespace Eigen

namespace gmalg {

template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

enum class RingKind { Zmod, Rationals };

/// Which coefficient ring a document or computation lives over.
struct RingSpec {
  RingKind kind = RingKind::Zmod;
  std::int64_t n = 0;  // modulus; unused for Rationals

  static RingSpec zmod(std::int64_t n) {
    if (n < 2) fail(ErrorKind::BadInput, "Zmod(n) requires n >= 2, got " + std::to_string(n));
    return {RingKind::Zmod, n};
  }
  static RingSpec rationals() { return {RingKind::Rationals, 0}; }

  bool enumerable() const { return kind == RingKind::Zmod; }
  std::string str() const { return kind == RingKind::Zmod ? "Zmod(" + std::to_string(n) + ")" : "Q"; }

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// 2x = 0 implies x = 0.
inline bool is_two_torsion_free(const RingSpec& spec) {
  return spec.kind == RingKind::Rationals || spec.n % 2 == 1;
}

bool is_prime(std::int64_t n);

template <class S>
class Ring;

/// Arithmetic table for Z/nZ.
template <>
class Ring<Zn> {
 public:
  using Scalar = Zn;

  explicit Ring(std::int64_t n) : spec_(RingSpec::zmod(n)), prime_(is_prime(n)) {}
  explicit Ring(const RingSpec& spec) : Ring(spec.n) {
    if (spec.kind != RingKind::Zmod) fail(ErrorKind::BadInput, "Ring<Zn> needs a Zmod spec");
  }

  const RingSpec& spec() const { return spec_; }
  std::int64_t modulus() const { return spec_.n; }
  bool is_field() const { return prime_; }
  bool enumerable() const { return true; }
  std::uint64_t size() const { return static_cast<std::uint64_t>(spec_.n); }

  Zn zero() const { return Zn(0, spec_.n); }
  Zn one() const { return Zn(1, spec_.n); }
  Zn from_int(std::int64_t v) const { return Zn(v, spec_.n); }
  Zn canon(const Zn& x) const { return Zn(x.value(), spec_.n); }
  std::int64_t rep(const Zn& x) const { return canon(x).value(); }

  std::optional<Zn> inv(const Zn& x) const;

  /// Ascending residues 0..n-1.
  std::vector<Zn> elements() const {
    std::vector<Zn> out;
    out.reserve(size());
    for (std::int64_t v = 0; v < spec_.n; ++v) out.push_back(from_int(v));
    return out;
  }
  std::size_t index_of(const Zn& x) const { return static_cast<std::size_t>(rep(x)); }

  std::string str(const Zn& x) const { return std::to_string(rep(x)); }

 private:
  RingSpec spec_;
  bool prime_;
};

/// Arithmetic table for Q.
template <>
class Ring<Rational> {
 public:
  using Scalar = Rational;

  Ring() = default;
  explicit Ring(const RingSpec& spec) {
    if (spec.kind != RingKind::Rationals) fail(ErrorKind::BadInput, "Ring<Rational> needs a Q spec");
  }

  RingSpec spec() const { return RingSpec::rationals(); }
  bool is_field() const { return true; }
  bool enumerable() const { return false; }
  std::uint64_t size() const { fail(ErrorKind::NotEnumerable, "Q is infinite"); }

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(std::int64_t v) const { return Rational(BigInt(v), BigInt(1)); }
  const Rational& canon(const Rational& x) const { return x; }

  std::optional<Rational> inv(const Rational& x) const {
    if (x.is_zero()) return std::nullopt;
    return Rational(1) / x;
  }
  Rational div(const Rational& a, const Rational& b) const { return a / b; }

  std::vector<Rational> elements() const { fail(ErrorKind::NotEnumerable, "Q is infinite"); }
  std::size_t index_of(const Rational&) const { fail(ErrorKind::NotEnumerable, "Q is infinite"); }

  std::string str(const Rational& x) const { return x.str(); }
};

/// enumerate_scalars: every ring element in ascending order.
template <class S>
std::vector<S> enumerate_scalars(const Ring<S>& ring) {
  return ring.elements();
}

template <class S>
Vector<S> canon(const Ring<S>& ring, const Vector<S>& v) {
  Vector<S> out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = ring.canon(v(i));
  return out;
}

template <class S>
Matrix<S> canon(const Ring<S>& ring, const Matrix<S>& m) {
  Matrix<S> out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) out(i, j) = ring.canon(m(i, j));
  return out;
}

template <class S>
Vector<S> zeros(const Ring<S>& ring, Eigen::Index n) {
  return Vector<S>::Constant(n, ring.zero());
}

template <class S>
Matrix<S> zeros(const Ring<S>& ring, Eigen::Index r, Eigen::Index c) {
  return Matrix<S>::Constant(r, c, ring.zero());
}

template <class S>
Matrix<S> identity(const Ring<S>& ring, Eigen::Index n) {
  Matrix<S> m = zeros(ring, n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = ring.one();
  return m;
}

template <class S>
Vector<S> unit_vector(const Ring<S>& ring, Eigen::Index n, Eigen::Index i) {
  Vector<S> v = zeros(ring, n);
  v(i) = ring.one();
  return v;
}

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!(m(i, j) == S(0))) return false;
  return true;
}

/// Strict weak order on canonical vectors (lexicographic, first coordinate
/// most significant). Used to keep element lists sorted and reproducible.
inline bool lex_less(const Vector<Zn>& a, const Vector<Zn>& b) {
  for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
    if (a(i).value() != b(i).value()) return a(i).value() < b(i).value();
  }
  return a.size() < b.size();
}

inline bool lex_less(const Vector<Rational>& a, const Vector<Rational>& b) {
  for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return a.size() < b.size();
}

template <class S>
std::string to_string(const Ring<S>& ring, const Vector<S>& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += ring.str(v(i));
  }
  return out + ")";
}

}  // namespace gmalg
