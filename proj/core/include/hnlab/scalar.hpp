#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hnlab {

/// Raised when an operation receives input outside its contract.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Scalar;

/// The ground field of a computation: the rationals, or F_p for an odd prime p < 2^31.
class Field {
 public:
  static Field rationals() noexcept { return Field{0}; }
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint32_t characteristic() const noexcept { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  Scalar from_fraction(long num, long den) const;

  std::string name() const;

  friend bool operator==(Field, Field) = default;

 private:
  explicit Field(std::uint32_t p) noexcept : p_(p) {}
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator; residues are kept in [0, p).
class Scalar {
 public:
  Scalar() : Scalar(Field::rationals(), 0) {}
  Scalar(Field field, long value);
  Scalar(Field field, const mpq_class& value);

  Field field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Only meaningful over the rationals.
  const mpq_class& rational() const;
  /// Only meaningful over a prime field.
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  Scalar inverse() const;

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  void require_same_field(const Scalar& rhs) const;

  Field field_;
  std::uint64_t residue_ = 0;
  mpq_class rational_;
};

}  // namespace hnlab
