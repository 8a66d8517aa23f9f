#include "hnlab/binary_form.hpp"

#include <algorithm>
#include <sstream>

namespace hnlab {

BinaryForm BinaryForm::zero(Field field) { return BinaryForm(field, true); }

BinaryForm::BinaryForm(Field field, std::vector<Scalar> coefficients) : field_(field), zero_(false), c_(std::move(coefficients)) {
  if (c_.empty()) throw InputError("binary form needs degree+1 coefficients");
  bool any = false;
  for (const auto& c : c_) {
    if (!(c.field() == field_)) throw InputError("binary form coefficients from mixed fields");
    any = any || !c.is_zero();
  }
  if (!any) throw InputError("nonzero binary form with all coefficients zero");
}

BinaryForm BinaryForm::from_ints(Field field, const std::vector<long>& coefficients) {
  std::vector<Scalar> c;
  for (long v : coefficients) c.push_back(field.from_int(v));
  return from_coefficients(field, std::move(c));
}

BinaryForm BinaryForm::monomial(const Scalar& c, long degree, long i) {
  if (degree < 0 || i < 0 || i > degree) throw InputError("monomial exponent out of range");
  if (c.is_zero()) return zero(c.field());
  std::vector<Scalar> coeffs(degree + 1, c.field().zero());
  coeffs[i] = c;
  return BinaryForm(c.field(), std::move(coeffs));
}

BinaryForm BinaryForm::from_coefficients(Field field, std::vector<Scalar> coefficients) {
  const bool any = std::any_of(coefficients.begin(), coefficients.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (!any) return zero(field);
  return BinaryForm(field, std::move(coefficients));
}

long BinaryForm::degree() const {
  if (zero_) throw InputError("the zero form has no degree");
  return static_cast<long>(c_.size()) - 1;
}

Scalar BinaryForm::coeff(long i) const {
  if (zero_ || i < 0 || i >= static_cast<long>(c_.size())) return field_.zero();
  return c_[i];
}

BinaryForm BinaryForm::operator-() const {
  BinaryForm out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

BinaryForm BinaryForm::scaled(const Scalar& s) const {
  if (zero_ || s.is_zero()) return zero(field_);
  BinaryForm out = *this;
  for (auto& c : out.c_) c *= s;
  return out;
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  if (!(a.field_ == b.field_)) throw InputError("binary forms from mixed fields");
  if (a.zero_) return b;
  if (b.zero_) return a;
  if (a.c_.size() != b.c_.size()) throw InputError("sum of binary forms of different degrees");
  std::vector<Scalar> c = a.c_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
  return BinaryForm::from_coefficients(a.field_, std::move(c));
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  if (!(a.field_ == b.field_)) throw InputError("binary forms from mixed fields");
  if (a.zero_ || b.zero_) return BinaryForm::zero(a.field_);
  std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  // over a field the product of nonzero forms is nonzero
  return BinaryForm(a.field_, std::move(c));
}

Scalar BinaryForm::evaluate(const Scalar& x, const Scalar& y) const {
  if (zero_) return field_.zero();
  const long d = degree();
  // sum of c_i x^(d-i) y^i
  Scalar acc = field_.zero();
  Scalar ypow = field_.one();
  std::vector<Scalar> xpow(d + 1, field_.one());
  for (long k = 1; k <= d; ++k) xpow[k] = xpow[k - 1] * x;
  for (long i = 0; i <= d; ++i) {
    acc += c_[i] * xpow[d - i] * ypow;
    ypow *= y;
  }
  return acc;
}

KtPoly BinaryForm::dehomogenize() const {
  if (zero_) return KtPoly(field_);
  const long d = degree();
  std::vector<Scalar> p(d + 1, field_.zero());
  for (long i = 0; i <= d; ++i) p[d - i] = c_[i];
  return KtPoly(field_, std::move(p));
}

BinaryForm BinaryForm::homogenize(const KtPoly& p, long degree) {
  if (p.is_zero()) return zero(p.field());
  if (p.degree() > degree) throw InputError("homogenize: target degree below polynomial degree");
  std::vector<Scalar> c(degree + 1, p.field().zero());
  for (long i = 0; i <= degree; ++i) c[i] = p.coeff(degree - i);
  return BinaryForm(p.field(), std::move(c));
}

std::string BinaryForm::to_string() const {
  if (zero_) return "0";
  std::ostringstream os;
  const long d = degree();
  bool first = true;
  for (long i = 0; i <= d; ++i) {
    if (c_[i].is_zero()) continue;
    std::vector<std::string> factors;
    if (!c_[i].is_one() || d == 0) factors.push_back(c_[i].to_string());
    auto var = [&](const char* v, long e) {
      if (e == 1) factors.emplace_back(v);
      if (e > 1) factors.push_back(std::string(v) + "^" + std::to_string(e));
    };
    var("x", d - i);
    var("y", i);
    os << (first ? "" : " + ");
    first = false;
    for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
  }
  return os.str();
}

BinaryForm multiply(const BinaryForm& a, const BinaryForm& b) { return a * b; }

BinaryForm power(const BinaryForm& a, unsigned exponent) {
  BinaryForm out = BinaryForm::monomial(a.field().one(), 0, 0);
  for (unsigned k = 0; k < exponent; ++k) out = out * a;
  return out;
}

namespace {

// number of leading x-free slots: f is divisible by y^k exactly
long y_order(const BinaryForm& f) {
  long k = 0;
  while (f.coeff(k).is_zero()) ++k;
  return k;
}

}  // namespace

BinaryForm gcd(const BinaryForm& a, const BinaryForm& b) {
  if (!(a.field() == b.field())) throw InputError("binary forms from mixed fields");
  const Field f = a.field();
  if (a.is_zero() && b.is_zero()) return BinaryForm::zero(f);
  auto normalize = [&](const BinaryForm& g) {
    const long k = y_order(g);
    return g.scaled(g.coeff(k).inverse());
  };
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  // a = y^ka * A, with A(x,1) of full degree; likewise b
  const long ka = y_order(a), kb = y_order(b);
  const KtPoly pa = a.dehomogenize(), pb = b.dehomogenize();
  // dehomogenizing drops the y-power; A(x,1) has degree deg a - ka
  const KtPoly g = gcd(pa, pb);
  const long ky = std::min(ka, kb);
  const BinaryForm core = BinaryForm::homogenize(g, g.degree());
  return normalize(core * BinaryForm::monomial(f.one(), ky, ky));
}

}  // namespace hnlab
