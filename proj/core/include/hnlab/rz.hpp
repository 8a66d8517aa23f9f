#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "hnlab/hn_polygon.hpp"

namespace hnlab::rz {

/// Basic Rapoport-Zink datum for an isoclinic p-divisible group of height n and dimension d.
struct RZDatum {
  long height = 1;     ///< n
  long dimension = 0;  ///< d, with 0 < d < n

  /// Rejects n < 1 or d outside (0, n).
  static RZDatum make(long height, long dimension);
  hn::Slope newton_slope() const { return hn::Slope(dimension, height); }
  /// dim of End(H) over the base field, n^2.
  long endomorphism_dimension() const { return height * height; }
};

/// (n^2 - 1, n d - d^2)
std::pair<std::size_t, long> tangent_rank_degree(const RZDatum& datum);

/// All HN types of the given rank and degree with every slope in [slope_min, slope_max],
/// sorted by canonical_greater (descending).
std::vector<hn::HNType> enumerate_profiles(std::size_t rank, long degree, hn::Slope slope_min, hn::Slope slope_max);

/// Descending lexicographic order on the (slope, multiplicity) lists.
bool canonical_greater(const hn::HNType& a, const hn::HNType& b);

/// {0} together with m e^2 - 1 for m e | n and m e^2 > 1.
std::set<std::size_t> allowed_zero_multiplicities(long height);

enum class PointClass { special, nonspecial_smooth };

/// Rejects types with a negative slope.
PointClass classify_point(const hn::HNType& profile);

struct TangentProfile {
  hn::HNType hn;
  std::size_t zero_mult = 0;
  bool special = false;
  bool smooth = false;
  std::size_t dim_ax = 1;  ///< h0 of the dual plus one
  bool admissible = false;
};

/// Annotates one profile; `admissible` reflects the zero-multiplicity filter.
TangentProfile annotate(const hn::HNType& profile, const RZDatum& datum);

/// Keeps profiles whose slope-0 multiplicity is allowed for the datum's height.
std::vector<TangentProfile> filter_admissible(const std::vector<hn::HNType>& profiles, const RZDatum& datum);

}  // namespace hnlab::rz
