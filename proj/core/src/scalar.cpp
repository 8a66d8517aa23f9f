#include "hnlab/scalar.hpp"

#include <ostream>

namespace hnlab {

namespace {

std::uint64_t reduce(long value, std::uint32_t p) {
  long r = value % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint32_t p) {
  // extended Euclid on signed values; a is nonzero mod p
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_rational(const mpq_class& q, std::uint32_t p) {
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = q.get_den() % p;
  if (den == 0) throw InputError("rational with denominator divisible by p cannot be reduced");
  return (num.get_ui() * mod_inverse(den.get_ui(), p)) % p;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p == 2) throw InputError("characteristic 2 is not supported");
  if (p >= (std::uint64_t{1} << 31)) throw InputError("prime must be below 2^31");
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  return Field{static_cast<std::uint32_t>(p)};
}

Scalar Field::zero() const { return Scalar(*this, 0); }
Scalar Field::one() const { return Scalar(*this, 1); }
Scalar Field::from_int(long value) const { return Scalar(*this, value); }

Scalar Field::from_fraction(long num, long den) const {
  if (den == 0) throw InputError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(*this, q);
}

std::string Field::name() const { return is_rational() ? "Q" : "F_" + std::to_string(p_); }

Scalar::Scalar(Field field, long value) : field_(field) {
  if (field_.is_rational())
    rational_ = value;
  else
    residue_ = reduce(value, field_.characteristic());
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field) {
  if (field_.is_rational()) {
    rational_ = value;
    rational_.canonicalize();
  } else {
    residue_ = reduce_rational(value, field_.characteristic());
  }
}

bool Scalar::is_zero() const noexcept { return field_.is_rational() ? sgn(rational_) == 0 : residue_ == 0; }

bool Scalar::is_one() const noexcept { return field_.is_rational() ? rational_ == 1 : residue_ == 1; }

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw InputError("scalar is not rational");
  return rational_;
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw InputError("scalar is not a residue");
  return residue_;
}

void Scalar::require_same_field(const Scalar& rhs) const {
  if (!(field_ == rhs.field_))
    throw InputError("mixed fields: " + field_.name() + " and " + rhs.field_.name());
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (field_.is_rational())
    out.rational_ = -rational_;
  else if (residue_ != 0)
    out.residue_ = field_.characteristic() - residue_;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational())
    rational_ += rhs.rational_;
  else
    residue_ = (residue_ + rhs.residue_) % field_.characteristic();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational())
    rational_ -= rhs.rational_;
  else
    residue_ = (residue_ + field_.characteristic() - rhs.residue_) % field_.characteristic();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational())
    rational_ *= rhs.rational_;
  else
    residue_ = (residue_ * rhs.residue_) % field_.characteristic();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar out = *this;
  if (field_.is_rational())
    out.rational_ = 1 / rational_;
  else
    out.residue_ = mod_inverse(residue_, field_.characteristic());
  return out;
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  if (!(lhs.field_ == rhs.field_)) return false;
  return lhs.field_.is_rational() ? lhs.rational_ == rhs.rational_ : lhs.residue_ == rhs.residue_;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? rational_.get_str() : std::to_string(residue_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace hnlab
