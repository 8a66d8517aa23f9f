#include "hnlab/hn_polygon.hpp"

#include <numeric>
#include <sstream>

#include "hnlab/scalar.hpp"

namespace hnlab::hn {

Slope::Slope(long num, long den) {
  if (den <= 0) throw InputError("slope denominator must be positive");
  const long g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Slope Slope::parse(const std::string& text) {
  try {
    const auto slash = text.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const long n = std::stol(text, &used);
      if (used != text.size()) throw InputError("");
      return Slope(n, 1);
    }
    const std::string ns = text.substr(0, slash), ds = text.substr(slash + 1);
    const long n = std::stol(ns, &used);
    if (used != ns.size()) throw InputError("");
    const long d = std::stol(ds, &used);
    if (used != ds.size()) throw InputError("");
    return Slope(n, d);
  } catch (const std::logic_error&) {
    throw InputError("cannot parse slope '" + text + "'");
  }
}

Slope operator+(const Slope& a, const Slope& b) {
  return Slope(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
  const wide_int lhs = static_cast<wide_int>(a.num_) * b.den_;
  const wide_int rhs = static_cast<wide_int>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Slope::to_string() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

SlopeMultiset::SlopeMultiset(std::initializer_list<Summand> summands) {
  for (const auto& [s, m] : summands) add(s, m);
}

SlopeMultiset::SlopeMultiset(const std::vector<Summand>& summands) {
  for (const auto& [s, m] : summands) add(s, m);
}

void SlopeMultiset::add(const Slope& slope, std::size_t multiplicity) {
  if (multiplicity == 0) return;
  summands_[slope] += multiplicity;
}

std::size_t SlopeMultiset::multiplicity(const Slope& slope) const {
  auto it = summands_.find(slope);
  return it == summands_.end() ? 0 : it->second;
}

std::vector<SlopeMultiset::Summand> SlopeMultiset::summands() const { return {summands_.begin(), summands_.end()}; }

std::string SlopeMultiset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [s, m] : summands_) {
    os << (first ? "" : ", ") << s.to_string();
    if (m > 1) os << " x" << m;
    first = false;
  }
  os << '}';
  return os.str();
}

std::size_t rank(const SlopeMultiset& t) {
  std::size_t r = 0;
  for (const auto& [s, m] : t.summands()) r += m * static_cast<std::size_t>(s.den());
  return r;
}

long degree(const SlopeMultiset& t) {
  long d = 0;
  for (const auto& [s, m] : t.summands()) d += static_cast<long>(m) * s.num();
  return d;
}

Slope mu_max(const SlopeMultiset& t) {
  if (t.empty()) throw InputError("mu_max of an empty type");
  return t.summands().front().first;
}

Slope mu_min(const SlopeMultiset& t) {
  if (t.empty()) throw InputError("mu_min of an empty type");
  return t.summands().back().first;
}

HNType dual(const HNType& t) {
  HNType out;
  for (const auto& [s, m] : t.summands()) out.add(-s, m);
  return out;
}

HNType tensor(const HNType& a, const HNType& b) {
  // O(l)^m (x) O(u)^m' = O(l+u)^(m m' h h' / h'')
  HNType out;
  for (const auto& [s1, m1] : a.summands())
    for (const auto& [s2, m2] : b.summands()) {
      const Slope sum = s1 + s2;
      const std::size_t copies = static_cast<std::size_t>(s1.den() * s2.den() / sum.den());
      out.add(sum, m1 * m2 * copies);
    }
  return out;
}

HNType bundle_of_isocrystal(const NewtonSlopes& n) {
  HNType out;
  for (const auto& [s, m] : n.summands()) out.add(-s, m);
  return out;
}

HNType bundle_of_pdiv(const NewtonSlopes& h) {
  NewtonSlopes isocrystal;
  for (const auto& [s, m] : h.summands()) {
    if (s < Slope(0) || s > Slope(1)) throw InputError("p-divisible group slope " + s.to_string() + " outside [0,1]");
    isocrystal.add(Slope(1) - s, m);
  }
  return tensor(bundle_of_isocrystal(isocrystal), HNType{{Slope(1), 1}});
}

H0Dim h0_dim(const HNType& t) {
  std::size_t zeros = 0;
  for (const auto& [s, m] : t.summands()) {
    if (s > Slope(0)) return H0Dim::unbounded();
    if (s == Slope(0)) zeros += m;
  }
  return H0Dim::finite(zeros);
}

bool h1_vanishes(const HNType& t) { return t.empty() || mu_min(t) >= Slope(0); }

bool all_slopes_positive(const HNType& t) { return t.empty() || mu_min(t) > Slope(0); }

bool is_isoclinic(const NewtonSlopes& n) { return n.distinct() == 1; }

}  // namespace hnlab::hn
