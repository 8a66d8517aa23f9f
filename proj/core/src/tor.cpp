#include "hnlab/tor.hpp"

#include <algorithm>
#include <sstream>

namespace hnlab::tor {

namespace {

std::vector<KtPoly> nonunit(const std::vector<KtPoly>& invariants) {
  std::vector<KtPoly> out;
  for (const auto& d : invariants)
    if (!d.is_constant()) out.push_back(d);
  return out;
}

}  // namespace

KtModule::KtModule(Field field, std::size_t free_rank, const std::vector<KtPoly>& cyclic_orders)
    : field_(field), free_rank_(free_rank) {
  std::vector<KtPoly> orders;
  for (const auto& d : cyclic_orders) {
    if (!(d.field() == field)) throw InputError("module data from mixed fields");
    if (d.is_zero()) {
      ++free_rank_;  // k[t]/(0) is free
      continue;
    }
    if (!d.is_constant()) orders.push_back(d);
  }
  if (orders.empty()) return;
  torsion_ = nonunit(smith_invariants(PolyMatrix::diagonal(field, orders)));
}

KtModule KtModule::cokernel(const PolyMatrix& presentation) {
  const auto inv = smith_invariants(presentation);
  KtModule m(presentation.field(), presentation.rows() - inv.size());
  m.torsion_ = nonunit(inv);
  return m;
}

std::size_t KtModule::torsion_length() const {
  std::size_t n = 0;
  for (const auto& d : torsion_) n += static_cast<std::size_t>(d.degree());
  return n;
}

std::string KtModule::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank_ > 0) {
    os << "k[t]^" << free_rank_;
    first = false;
  }
  for (const auto& d : torsion_) {
    os << (first ? "" : " + ") << "k[t]/(" << d.to_string() << ")";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

KtModule tensor_modules(const KtModule& a, const KtModule& b) {
  std::vector<KtPoly> orders;
  for (std::size_t k = 0; k < a.free_rank(); ++k) orders.insert(orders.end(), b.torsion().begin(), b.torsion().end());
  for (std::size_t k = 0; k < b.free_rank(); ++k) orders.insert(orders.end(), a.torsion().begin(), a.torsion().end());
  for (const auto& d : a.torsion())
    for (const auto& e : b.torsion()) orders.push_back(gcd(d, e));
  return KtModule(a.field(), a.free_rank() * b.free_rank(), orders);
}

KtModule tor1(const KtModule& a, const KtModule& b) {
  std::vector<KtPoly> orders;
  for (const auto& d : a.torsion())
    for (const auto& e : b.torsion()) orders.push_back(gcd(d, e));
  return KtModule(a.field(), 0, orders);
}

PresentedSES::PresentedSES(PolyMatrix inclusion) : i_(std::move(inclusion)) {
  if (rank_over_fractions(i_) != i_.cols()) throw InputError("inclusion K -> A is not injective");
}

Homology homology(const PolyMatrix& d2, const PolyMatrix& d1) {
  const Field f = d1.field();
  if (d2.rows() != d1.cols()) throw InputError("homology: composable maps required");
  // ker d1 is a saturated summand of C1, so the invariants of d2 computed in C1
  // are its invariants inside ker d1
  const auto inv2 = smith_invariants(d2);
  const auto inv1 = smith_invariants(d1);
  return Homology{KtModule(f, d2.cols() - inv2.size()), KtModule(f, d1.cols() - inv1.size() - inv2.size(), nonunit(inv2)),
                  KtModule(f, d1.rows() - inv1.size(), nonunit(inv1))};
}

TensorComplex tensor_complex(const PresentedSES& s1, const PresentedSES& s2) {
  const Field f = s1.inclusion().field();
  const PolyMatrix& i = s1.inclusion();
  const PolyMatrix& ip = s2.inclusion();
  const auto id = [&](std::size_t n) { return PolyMatrix::identity(f, n); };
  // C2 = K(x)K', C1 = (A(x)K') (+) (K(x)A'), C0 = A(x)A'
  PolyMatrix d2 = vstack(kron(i, id(s2.rank_k())), kron(id(s1.rank_k()), ip));
  PolyMatrix d1 = hstack(kron(id(s1.rank_a()), ip), -kron(i, id(s2.rank_a())));
  return TensorComplex{std::move(d2), std::move(d1)};
}

HomologyReport complex_homology_check(const PresentedSES& s1, const PresentedSES& s2) {
  if (!(s1.inclusion().field() == s2.inclusion().field())) throw InputError("sequences over different fields");
  const TensorComplex c = tensor_complex(s1, s2);
  if (!(c.d1 * c.d2).is_zero()) throw std::logic_error("tensor complex: d1 d2 != 0");
  const KtModule b1 = s1.quotient(), b2 = s2.quotient();
  HomologyReport report{homology(c.d2, c.d1), tor1(b1, b2), tensor_modules(b1, b2)};
  report.h2_zero = report.homology.h2.is_zero();
  report.h1_matches_tor = report.homology.h1 == report.expected_tor;
  report.h0_matches_tensor = report.homology.h0 == report.expected_tensor;
  return report;
}

}  // namespace hnlab::tor
