#include "hnlab/rz.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hnlab/scalar.hpp"

namespace hnlab::rz {

using hn::HNType;
using hn::Slope;

RZDatum RZDatum::make(long height, long dimension) {
  if (height < 1) throw InputError("height must be positive");
  if (dimension <= 0 || dimension >= height) throw InputError("dimension must satisfy 0 < d < n");
  return RZDatum{height, dimension};
}

std::pair<std::size_t, long> tangent_rank_degree(const RZDatum& datum) {
  const long n = datum.height, d = datum.dimension;
  return {static_cast<std::size_t>(n * n - 1), n * d - d * d};
}

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

}  // namespace

bool canonical_greater(const HNType& a, const HNType& b) {
  const auto sa = a.summands(), sb = b.summands();
  return std::lexicographical_compare(sb.begin(), sb.end(), sa.begin(), sa.end());
}

std::vector<HNType> enumerate_profiles(std::size_t rank, long degree, Slope slope_min, Slope slope_max) {
  if (rank == 0) throw InputError("enumerate_profiles: rank must be positive");
  std::vector<HNType> out;
  if (slope_min > slope_max) return out;

  std::vector<Slope> candidates;
  for (long h = 1; h <= static_cast<long>(rank); ++h) {
    const long lo = ceil_div(slope_min.num() * h, slope_min.den());
    const long hi = floor_div(slope_max.num() * h, slope_max.den());
    for (long d = lo; d <= hi; ++d)
      if (std::gcd(d, h) == 1) candidates.emplace_back(d, h);
  }
  std::sort(candidates.begin(), candidates.end(), std::greater<>());
  if (candidates.empty()) return out;
  const Slope lowest = candidates.back();

  std::vector<std::pair<Slope, std::size_t>> chosen;
  std::function<void(std::size_t, long, long)> rec = [&](std::size_t idx, long left_rank, long left_degree) {
    if (left_rank == 0) {
      if (left_degree == 0) out.emplace_back(chosen);
      return;
    }
    if (idx == candidates.size()) return;
    // the remaining average slope must lie between the lowest candidate and this one
    const Slope& top = candidates[idx];
    if (static_cast<hn::wide_int>(left_degree) * top.den() > static_cast<hn::wide_int>(left_rank) * top.num()) return;
    if (static_cast<hn::wide_int>(left_degree) * lowest.den() < static_cast<hn::wide_int>(left_rank) * lowest.num()) return;
    const long h = top.den(), d = top.num();
    for (long m = left_rank / h; m >= 0; --m) {
      if (m > 0) chosen.emplace_back(top, static_cast<std::size_t>(m));
      rec(idx + 1, left_rank - m * h, left_degree - m * d);
      if (m > 0) chosen.pop_back();
    }
  };
  rec(0, static_cast<long>(rank), degree);
  std::sort(out.begin(), out.end(), canonical_greater);
  return out;
}

std::set<std::size_t> allowed_zero_multiplicities(long height) {
  if (height < 1) throw InputError("height must be positive");
  std::set<std::size_t> out{0};
  for (long m = 1; m <= height; ++m)
    for (long e = 1; m * e <= height; ++e)
      if (height % (m * e) == 0 && m * e * e > 1) out.insert(static_cast<std::size_t>(m * e * e - 1));
  return out;
}

PointClass classify_point(const HNType& profile) {
  if (!profile.empty() && hn::mu_min(profile) < Slope(0))
    throw InputError("tangent profile " + profile.to_string() + " has a negative slope");
  return profile.multiplicity(Slope(0)) > 0 ? PointClass::special : PointClass::nonspecial_smooth;
}

TangentProfile annotate(const HNType& profile, const RZDatum& datum) {
  TangentProfile t;
  t.hn = profile;
  t.special = classify_point(profile) == PointClass::special;
  t.zero_mult = profile.multiplicity(Slope(0));
  t.smooth = hn::all_slopes_positive(profile);
  const hn::H0Dim h0 = hn::h0_dim(hn::dual(profile));
  t.dim_ax = h0.value + 1;
  t.admissible = allowed_zero_multiplicities(datum.height).count(t.zero_mult) > 0;
  return t;
}

std::vector<TangentProfile> filter_admissible(const std::vector<HNType>& profiles, const RZDatum& datum) {
  const auto [rank, degree] = tangent_rank_degree(datum);
  std::vector<TangentProfile> out;
  for (const auto& p : profiles) {
    if (hn::rank(p) != rank || hn::degree(p) != degree)
      throw InputError("profile " + p.to_string() + " does not have the datum's rank and degree");
    TangentProfile t = annotate(p, datum);
    if (t.admissible) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace hnlab::rz
