#include "gmalg/scalar.hpp"

#include <numeric>
#include <utility>

namespace gmalg {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<Zn> Ring<Zn>::inv(const Zn& x) const {
  // extended Euclid on representatives
  std::int64_t a = rep(x), b = spec_.n;
  std::int64_t s0 = 1, s1 = 0;
  while (b != 0) {
    const auto q = a / b;
    a = std::exchange(b, a - q * b);
    s0 = std::exchange(s1, s0 - q * s1);
  }
  if (a != 1) return std::nullopt;
  return from_int(s0);
}

std::string Rational::str() const {
  const auto den = denominator();
  if (den == 1) return numerator().str();
  return numerator().str() + "/" + den.str();
}

Rational Rational::parse(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text), BigInt(1));
    BigInt num(text.substr(0, slash)), den(text.substr(slash + 1));
    if (den == 0) fail(ErrorKind::BadInput, "zero denominator in '" + text + "'");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    fail(ErrorKind::BadInput, "cannot parse rational '" + text + "'");
  }
}

}  // namespace gmalg
