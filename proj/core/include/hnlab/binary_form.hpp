#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hnlab/kt_poly.hpp"
#include "hnlab/scalar.hpp"

namespace hnlab {

/// Homogeneous form in x, y. Coefficient i multiplies x^(degree-i) y^i.
/// The zero form has no degree.
class BinaryForm {
 public:
  static BinaryForm zero(Field field);
  /// Rejects an all-zero coefficient list; use zero() for the zero form.
  BinaryForm(Field field, std::vector<Scalar> coefficients);
  static BinaryForm from_ints(Field field, const std::vector<long>& coefficients);
  /// c * x^(degree-i) y^i
  static BinaryForm monomial(const Scalar& c, long degree, long i);
  /// Zero coefficient lists give the zero form.
  static BinaryForm from_coefficients(Field field, std::vector<Scalar> coefficients);

  Field field() const noexcept { return field_; }
  bool is_zero() const noexcept { return zero_; }
  /// Throws for the zero form.
  long degree() const;
  const std::vector<Scalar>& coefficients() const noexcept { return c_; }
  /// Coefficient of x^(degree-i) y^i; zero outside [0, degree].
  Scalar coeff(long i) const;

  BinaryForm operator-() const;
  BinaryForm scaled(const Scalar& s) const;
  /// Sum of two forms of equal degree (or with the zero form).
  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + (-b); }
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);

  Scalar evaluate(const Scalar& x, const Scalar& y) const;

  /// f(x, 1) as a polynomial in x.
  KtPoly dehomogenize() const;
  /// Inverse of dehomogenize for a target degree >= deg p.
  static BinaryForm homogenize(const KtPoly& p, long degree);

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) = default;

  std::string to_string() const;

 private:
  BinaryForm(Field field, bool zero) : field_(field), zero_(zero) {}

  Field field_;
  bool zero_ = true;
  std::vector<Scalar> c_;
};

BinaryForm multiply(const BinaryForm& a, const BinaryForm& b);
BinaryForm power(const BinaryForm& a, unsigned exponent);

/// Greatest common divisor, normalized so the first nonzero coefficient (the
/// highest power of x present) is 1. gcd(0, 0) is the zero form.
BinaryForm gcd(const BinaryForm& a, const BinaryForm& b);

}  // namespace hnlab
