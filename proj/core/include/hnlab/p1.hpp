#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hnlab/binary_form.hpp"
#include "hnlab/matrix.hpp"
#include "hnlab/multi_poly.hpp"
#include "hnlab/random.hpp"

namespace hnlab::p1 {

/// Splitting type {c_1 >= ... >= c_r} of the bundle (+)O(c_l) on P^1.
class SplitType {
 public:
  SplitType() = default;
  SplitType(std::initializer_list<long> twists);
  explicit SplitType(std::vector<long> twists);

  const std::vector<long>& twists() const noexcept { return twists_; }
  std::size_t rank() const noexcept { return twists_.size(); }
  long degree() const;
  bool empty() const noexcept { return twists_.empty(); }

  std::string to_string() const;

  friend bool operator==(const SplitType&, const SplitType&) = default;
  friend auto operator<=>(const SplitType&, const SplitType&) = default;

 private:
  std::vector<long> twists_;
};

std::size_t h0_twist(const SplitType& s, long m);
std::size_t h1_twist(const SplitType& s, long m);

/// Map (+)O(a_i) -> (+)O(b_j); entry (j, i) is a form of degree b_j - a_i or zero.
/// Summands keep the order they were given in.
class GradedMap {
 public:
  GradedMap(Field field, std::vector<long> source, std::vector<long> target, std::vector<BinaryForm> entries);

  Field field() const noexcept { return field_; }
  const std::vector<long>& source() const noexcept { return source_; }
  const std::vector<long>& target() const noexcept { return target_; }
  const BinaryForm& entry(std::size_t j, std::size_t i) const { return entries_[j * source_.size() + i]; }

  SplitType source_type() const { return SplitType(source_); }
  SplitType target_type() const { return SplitType(target_); }

  static GradedMap identity(Field field, const std::vector<long>& twists);

 private:
  Field field_;
  std::vector<long> source_;
  std::vector<long> target_;
  std::vector<BinaryForm> entries_;
};

/// Point (x0 : y0) of P^1, normalized to (1 : y) or (0 : 1).
class ProjectivePoint {
 public:
  ProjectivePoint(Scalar x, Scalar y);
  static ProjectivePoint infinity(Field field) { return ProjectivePoint(field.one(), field.zero()); }

  const Scalar& x() const noexcept { return x_; }
  const Scalar& y() const noexcept { return y_; }

 private:
  Scalar x_;
  Scalar y_;
};

/// Subspace K of the fiber of (+)O(a_i) at a point; columns of `basis` span K.
/// The fiber is trivialized by evaluating sections at the normalized point.
struct FiberSubspace {
  ProjectivePoint point;
  Matrix basis;

  FiberSubspace(ProjectivePoint p, Matrix b);
  std::size_t dimension() const noexcept { return basis.cols(); }
};

std::size_t generic_rank(const GradedMap& phi);

/// dim of the kernel of H^0 of the twist by O(m): (+)H^0(O(a_i+m)) -> (+)H^0(O(b_j+m)).
std::size_t graded_kernel_dim(const GradedMap& phi, long m);

/// Splitting type read off from the Hilbert-function first differences of
/// h0(m) = dim H^0(E(m)). The scan starts at `m_start` where h0 must vanish
/// and stops once the difference reaches `rank`; exceeding `m_cap` throws.
SplitType split_type_from_h0(const std::function<std::size_t(long)>& h0, long m_start, std::size_t rank, long m_cap);

SplitType kernel_split_type(const GradedMap& phi);

/// True iff the maximal minors have no common zero on P^1.
bool is_fiberwise_surjective(const GradedMap& phi);

/// Elementary modification E' = {s : s(point) in K} of E with its summands in descending order.
SplitType modify(const SplitType& e, const FiberSubspace& k);

/// dim{s in H^0(E(m)) : s(point) in K}
std::size_t modified_h0(const SplitType& e, const FiberSubspace& k, long m);

struct JacobianReport {
  GradedMap derivative;     ///< D_g P : O(d)^n -> O(d*delta)
  std::size_t hom_dim = 0;  ///< n * h0(O(d(delta-1))), the space D_g P ranges over
  bool surjective = false;
  SplitType kernel;
  std::size_t h0_kernel = 0;
  bool generic = false;  ///< h1 of the kernel vanishes, i.e. all twists >= -1
};

JacobianReport jacobian_analysis(const MultiPoly& p, const std::vector<BinaryForm>& g);

struct SampleConfig {
  std::size_t variables = 3;   ///< n
  long form_degree = 1;        ///< d
  unsigned poly_degree = 4;    ///< delta
  Field field = Field::rationals();
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  long coefficient_bound = 1;  ///< integer coefficients in [-bound, bound] over Q
  std::optional<MultiPoly> polynomial;  ///< sampled per trial when absent
};

struct FrequencyTable {
  std::map<SplitType, std::size_t> counts;
  std::size_t accepted = 0;
  std::size_t rejected = 0;  ///< draws where D_g P is not fiberwise surjective
};

MultiPoly random_homogeneous(Field field, std::size_t variables, unsigned degree, SplitMix64& rng, long bound);
/// Uniform coefficients; may return the zero form.
BinaryForm random_form(Field field, long degree, SplitMix64& rng, long bound);

FrequencyTable sample_experiment(const SampleConfig& config);

}  // namespace hnlab::p1
