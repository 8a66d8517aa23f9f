#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hnlab/scalar.hpp"

namespace hnlab {

/// Univariate polynomial in t over a field; coefficients ascending, trailing zeros trimmed.
class KtPoly {
 public:
  explicit KtPoly(Field field) : field_(field) {}
  KtPoly(Field field, std::vector<Scalar> coefficients);

  static KtPoly constant(const Scalar& c);
  static KtPoly monomial(const Scalar& c, std::size_t degree);
  static KtPoly from_ints(Field field, std::initializer_list<long> coefficients);
  static KtPoly from_ints(Field field, const std::vector<long>& coefficients);

  Field field() const noexcept { return field_; }
  const std::vector<Scalar>& coefficients() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  Scalar coeff(std::size_t i) const;
  Scalar leading() const;
  /// Largest k with t^k dividing the polynomial; the zero polynomial is rejected.
  std::size_t valuation() const;

  KtPoly operator-() const;
  KtPoly& operator+=(const KtPoly& rhs);
  KtPoly& operator-=(const KtPoly& rhs);
  friend KtPoly operator+(KtPoly lhs, const KtPoly& rhs) { return lhs += rhs; }
  friend KtPoly operator-(KtPoly lhs, const KtPoly& rhs) { return lhs -= rhs; }
  friend KtPoly operator*(const KtPoly& lhs, const KtPoly& rhs);
  KtPoly scaled(const Scalar& s) const;
  KtPoly shifted(std::size_t k) const;  ///< multiply by t^k

  /// Euclidean division: *this = q * divisor + r with deg r < deg divisor.
  std::pair<KtPoly, KtPoly> divmod(const KtPoly& divisor) const;
  KtPoly operator/(const KtPoly& divisor) const { return divmod(divisor).first; }
  KtPoly operator%(const KtPoly& divisor) const { return divmod(divisor).second; }
  bool divides(const KtPoly& other) const;

  /// Leading coefficient scaled to 1; zero stays zero.
  KtPoly monic() const;
  KtPoly truncated(std::size_t precision) const;  ///< reduce mod t^precision
  Scalar evaluate(const Scalar& t) const;

  friend bool operator==(const KtPoly& lhs, const KtPoly& rhs) = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();

  Field field_;
  std::vector<Scalar> c_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
KtPoly gcd(const KtPoly& a, const KtPoly& b);

struct Bezout {
  KtPoly g, x, y;  ///< g = x a + y b, g monic (or zero when a = b = 0)
};
Bezout xgcd(const KtPoly& a, const KtPoly& b);

/// Inverse of a power series with nonzero constant term, modulo t^precision.
KtPoly series_inverse(const KtPoly& unit, std::size_t precision);

/// Lexicographic order on (degree, coefficients); gives deterministic sorting of invariant lists.
bool canonical_less(const KtPoly& a, const KtPoly& b);

}  // namespace hnlab
