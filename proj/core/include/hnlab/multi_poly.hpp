#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hnlab/binary_form.hpp"
#include "hnlab/scalar.hpp"

namespace hnlab {

/// Sparse polynomial in a fixed number of variables x_1..x_n.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;

  MultiPoly(Field field, std::size_t variables);

  /// coefficient * x^exponents
  static MultiPoly monomial(const Scalar& coefficient, Exponents exponents);
  /// Terms as (coefficient, exponent vector) with integer coefficients.
  static MultiPoly from_terms(Field field, std::size_t variables, const std::vector<std::pair<long, Exponents>>& terms);

  Field field() const noexcept { return field_; }
  std::size_t variables() const noexcept { return n_; }
  const std::map<Exponents, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Total degree of a homogeneous polynomial; rejects inhomogeneous or zero input.
  unsigned homogeneous_degree() const;
  bool is_homogeneous() const;

  void add_term(const Scalar& coefficient, const Exponents& exponents);

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

  std::string to_string() const;

 private:
  Field field_;
  std::size_t n_;
  std::map<Exponents, Scalar> terms_;
};

/// Derivative with respect to x_{variable}, variables numbered from 0.
MultiPoly partial(const MultiPoly& p, std::size_t variable);

/// Q(g_1, ..., g_n) for Q homogeneous of degree e and forms g_i of a common
/// degree d; the result has degree d*e (or is the zero form).
BinaryForm substitute(const MultiPoly& q, const std::vector<BinaryForm>& g);

}  // namespace hnlab
