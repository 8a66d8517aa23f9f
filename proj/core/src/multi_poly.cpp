#include "hnlab/multi_poly.hpp"

#include <numeric>
#include <sstream>

namespace hnlab {

MultiPoly::MultiPoly(Field field, std::size_t variables) : field_(field), n_(variables) {}

MultiPoly MultiPoly::monomial(const Scalar& coefficient, Exponents exponents) {
  MultiPoly p(coefficient.field(), exponents.size());
  p.add_term(coefficient, exponents);
  return p;
}

MultiPoly MultiPoly::from_terms(Field field, std::size_t variables, const std::vector<std::pair<long, Exponents>>& terms) {
  MultiPoly p(field, variables);
  for (const auto& [c, e] : terms) p.add_term(field.from_int(c), e);
  return p;
}

void MultiPoly::add_term(const Scalar& coefficient, const Exponents& exponents) {
  if (exponents.size() != n_) throw InputError("exponent vector length does not match variable count");
  if (!(coefficient.field() == field_)) throw InputError("polynomial coefficients from mixed fields");
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto total = [](const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); };
  const unsigned d = total(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (total(e) != d) return false;
  return true;
}

unsigned MultiPoly::homogeneous_degree() const {
  if (terms_.empty()) throw InputError("the zero polynomial has no degree");
  if (!is_homogeneous()) throw InputError("polynomial is not homogeneous");
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0u);
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (a.n_ != b.n_) throw InputError("polynomials in different numbers of variables");
  MultiPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(c, e);
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.n_ != b.n_) throw InputError("polynomials in different numbers of variables");
  MultiPoly out(a.field_, a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MultiPoly::Exponents e(a.n_);
      for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(ca * cb, e);
    }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    os << (first ? "" : " + ") << it->second;
    first = false;
    for (std::size_t i = 0; i < n_; ++i) {
      if (it->first[i] == 0) continue;
      os << "*x" << (i + 1);
      if (it->first[i] > 1) os << '^' << it->first[i];
    }
  }
  return os.str();
}

MultiPoly partial(const MultiPoly& p, std::size_t variable) {
  if (variable >= p.variables()) throw InputError("partial: variable index out of range");
  MultiPoly out(p.field(), p.variables());
  for (const auto& [e, c] : p.terms()) {
    if (e[variable] == 0) continue;
    MultiPoly::Exponents d = e;
    d[variable] -= 1;
    out.add_term(c * p.field().from_int(static_cast<long>(e[variable])), d);
  }
  return out;
}

BinaryForm substitute(const MultiPoly& q, const std::vector<BinaryForm>& g) {
  const Field f = q.field();
  if (g.size() != q.variables()) throw InputError("substitute: need one form per variable");
  if (!q.is_homogeneous()) throw InputError("substitute: polynomial is not homogeneous");
  long d = -1;
  for (const auto& gi : g) {
    if (!(gi.field() == f)) throw InputError("substitute: mixed fields");
    if (gi.is_zero()) continue;
    if (d < 0)
      d = gi.degree();
    else if (gi.degree() != d)
      throw InputError("substitute: forms of different degrees");
  }
  if (q.is_zero()) return BinaryForm::zero(f);

  std::vector<std::vector<BinaryForm>> powers(g.size());
  BinaryForm out = BinaryForm::zero(f);
  for (const auto& [e, c] : q.terms()) {
    BinaryForm term = BinaryForm::monomial(c, 0, 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(BinaryForm::monomial(f.one(), 0, 0));
      while (cache.size() <= e[i]) cache.push_back(cache.back() * g[i]);
      term = term * cache[e[i]];
    }
    out = out + term;
  }
  return out;
}

}  // namespace hnlab
