#include "hnlab/kt_poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace hnlab {

KtPoly::KtPoly(Field field, std::vector<Scalar> coefficients) : field_(field), c_(std::move(coefficients)) {
  for (const auto& c : c_)
    if (!(c.field() == field_)) throw InputError("polynomial coefficients from mixed fields");
  trim();
}

KtPoly KtPoly::constant(const Scalar& c) { return KtPoly(c.field(), {c}); }

KtPoly KtPoly::monomial(const Scalar& c, std::size_t degree) {
  std::vector<Scalar> coeffs(degree + 1, c.field().zero());
  coeffs[degree] = c;
  return KtPoly(c.field(), std::move(coeffs));
}

KtPoly KtPoly::from_ints(Field field, std::initializer_list<long> coefficients) {
  return from_ints(field, std::vector<long>(coefficients));
}

KtPoly KtPoly::from_ints(Field field, const std::vector<long>& coefficients) {
  std::vector<Scalar> c;
  c.reserve(coefficients.size());
  for (long v : coefficients) c.push_back(field.from_int(v));
  return KtPoly(field, std::move(c));
}

void KtPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar KtPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }

Scalar KtPoly::leading() const { return c_.empty() ? field_.zero() : c_.back(); }

std::size_t KtPoly::valuation() const {
  if (is_zero()) throw InputError("valuation of the zero polynomial");
  std::size_t k = 0;
  while (c_[k].is_zero()) ++k;
  return k;
}

KtPoly KtPoly::operator-() const {
  KtPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

KtPoly& KtPoly::operator+=(const KtPoly& rhs) {
  if (!(field_ == rhs.field_)) throw InputError("polynomials from mixed fields");
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), field_.zero());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  trim();
  return *this;
}

KtPoly& KtPoly::operator-=(const KtPoly& rhs) {
  if (!(field_ == rhs.field_)) throw InputError("polynomials from mixed fields");
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), field_.zero());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  trim();
  return *this;
}

KtPoly operator*(const KtPoly& lhs, const KtPoly& rhs) {
  if (!(lhs.field_ == rhs.field_)) throw InputError("polynomials from mixed fields");
  if (lhs.is_zero() || rhs.is_zero()) return KtPoly(lhs.field_);
  std::vector<Scalar> out(lhs.c_.size() + rhs.c_.size() - 1, lhs.field_.zero());
  for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
    if (lhs.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += lhs.c_[i] * rhs.c_[j];
  }
  return KtPoly(lhs.field_, std::move(out));
}

KtPoly KtPoly::scaled(const Scalar& s) const {
  KtPoly out = *this;
  for (auto& c : out.c_) c *= s;
  out.trim();
  return out;
}

KtPoly KtPoly::shifted(std::size_t k) const {
  if (is_zero()) return *this;
  KtPoly out(field_);
  out.c_.assign(k, field_.zero());
  out.c_.insert(out.c_.end(), c_.begin(), c_.end());
  return out;
}

std::pair<KtPoly, KtPoly> KtPoly::divmod(const KtPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (!(field_ == divisor.field_)) throw InputError("polynomials from mixed fields");
  KtPoly rem = *this;
  if (rem.degree() < divisor.degree()) return {KtPoly(field_), rem};
  const std::size_t dd = divisor.c_.size() - 1;
  const Scalar inv_lead = divisor.c_.back().inverse();
  std::vector<Scalar> quot(rem.c_.size() - dd, field_.zero());
  for (std::size_t k = rem.c_.size(); k-- > dd;) {
    const Scalar q = rem.c_[k] * inv_lead;
    quot[k - dd] = q;
    if (q.is_zero()) continue;
    for (std::size_t i = 0; i <= dd; ++i) rem.c_[k - dd + i] -= q * divisor.c_[i];
  }
  rem.trim();
  return {KtPoly(field_, std::move(quot)), rem};
}

bool KtPoly::divides(const KtPoly& other) const {
  if (is_zero()) return other.is_zero();
  return other.divmod(*this).second.is_zero();
}

KtPoly KtPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(c_.back().inverse());
}

KtPoly KtPoly::truncated(std::size_t precision) const {
  KtPoly out = *this;
  if (out.c_.size() > precision) out.c_.resize(precision, field_.zero());
  out.trim();
  return out;
}

Scalar KtPoly::evaluate(const Scalar& t) const {
  Scalar acc = field_.zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
  return acc;
}

std::string KtPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c_[i].is_one();
    if (i == 0 || !unit) os << c_[i];
    if (i > 0) os << (unit ? "" : "*") << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

KtPoly gcd(const KtPoly& a, const KtPoly& b) {
  KtPoly x = a, y = b;
  while (!y.is_zero()) {
    KtPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Bezout xgcd(const KtPoly& a, const KtPoly& b) {
  const Field f = a.field();
  // remainders are kept monic, which keeps rational coefficients from swelling
  KtPoly r0 = a, r1 = b, x0 = KtPoly::constant(f.one()), x1(f), y0(f), y1 = KtPoly::constant(f.one());
  auto normalize = [](KtPoly& r, KtPoly& x, KtPoly& y) {
    if (r.is_zero()) return;
    const Scalar inv = r.leading().inverse();
    r = r.scaled(inv);
    x = x.scaled(inv);
    y = y.scaled(inv);
  };
  normalize(r0, x0, y0);
  normalize(r1, x1, y1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    KtPoly x = x0 - q * x1, y = y0 - q * y1;
    normalize(r, x, y);
    r0 = std::exchange(r1, std::move(r));
    x0 = std::exchange(x1, std::move(x));
    y0 = std::exchange(y1, std::move(y));
  }
  return {r0, x0, y0};
}

KtPoly series_inverse(const KtPoly& unit, std::size_t precision) {
  const Field f = unit.field();
  if (unit.coeff(0).is_zero()) throw InputError("series_inverse: constant term is zero");
  const Scalar inv0 = unit.coeff(0).inverse();
  std::vector<Scalar> out(precision, f.zero());
  for (std::size_t k = 0; k < precision; ++k) {
    Scalar acc = k == 0 ? f.one() : f.zero();
    for (std::size_t i = 1; i <= k; ++i) acc -= unit.coeff(i) * out[k - i];
    out[k] = acc * inv0;
  }
  return KtPoly(f, std::move(out));
}

bool canonical_less(const KtPoly& a, const KtPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.coefficients().size(); i-- > 0;) {
    const auto& x = a.coefficients()[i];
    const auto& y = b.coefficients()[i];
    if (x == y) continue;
    if (x.field().is_rational()) return x.rational() < y.rational();
    return x.residue() < y.residue();
  }
  return false;
}

}  // namespace hnlab
