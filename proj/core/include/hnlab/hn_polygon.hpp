#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hnlab::hn {

// 128-bit intermediate for cross-multiplied slope comparisons
__extension__ using wide_int = __int128;

/// Reduced rational d/h with h > 0. As a stable bundle, O(d/h) has rank h and degree d.
class Slope {
 public:
  Slope(long num = 0, long den = 1);

  long num() const noexcept { return num_; }
  long den() const noexcept { return den_; }

  /// Parses "d/h" or "d".
  static Slope parse(const std::string& text);

  Slope operator-() const { return Slope(-num_, den_); }
  friend Slope operator+(const Slope& a, const Slope& b);
  friend Slope operator-(const Slope& a, const Slope& b) { return a + (-b); }
  friend bool operator==(const Slope& a, const Slope& b) = default;
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b);

  std::string to_string() const;

 private:
  long num_;
  long den_;
};

/// Multiset of slopes, stored with multiplicities per distinct slope in
/// descending slope order.
class SlopeMultiset {
 public:
  using Summand = std::pair<Slope, std::size_t>;

  SlopeMultiset() = default;
  SlopeMultiset(std::initializer_list<Summand> summands);
  explicit SlopeMultiset(const std::vector<Summand>& summands);

  /// Zero multiplicities are ignored.
  void add(const Slope& slope, std::size_t multiplicity);

  bool empty() const noexcept { return summands_.empty(); }
  std::size_t multiplicity(const Slope& slope) const;
  std::vector<Summand> summands() const;
  std::size_t distinct() const noexcept { return summands_.size(); }

  std::string to_string() const;

  friend bool operator==(const SlopeMultiset& a, const SlopeMultiset& b) = default;

 protected:
  std::map<Slope, std::size_t, std::greater<>> summands_;
};

/// Harder-Narasimhan type of a bundle on the Fargues-Fontaine curve.
class HNType : public SlopeMultiset {
 public:
  using SlopeMultiset::SlopeMultiset;
  friend bool operator==(const HNType& a, const HNType& b) = default;
};

/// Newton slopes of an isocrystal or p-divisible group, one multiplicity per stable slope.
class NewtonSlopes : public SlopeMultiset {
 public:
  using SlopeMultiset::SlopeMultiset;
  friend bool operator==(const NewtonSlopes& a, const NewtonSlopes& b) = default;
};

std::size_t rank(const SlopeMultiset& t);
long degree(const SlopeMultiset& t);
Slope mu_max(const SlopeMultiset& t);
Slope mu_min(const SlopeMultiset& t);

HNType dual(const HNType& t);
HNType tensor(const HNType& a, const HNType& b);

/// E(N): HN slopes are the negatives of the Newton slopes.
HNType bundle_of_isocrystal(const NewtonSlopes& n);
/// E(H) = E(N) (x) O(1) where N has slopes 1 - s_i; equal to the slopes of H.
HNType bundle_of_pdiv(const NewtonSlopes& h);

/// dim H^0, which is infinite as soon as a positive slope is present.
struct H0Dim {
  bool infinite = false;
  std::size_t value = 0;

  static H0Dim finite(std::size_t v) { return {false, v}; }
  static H0Dim unbounded() { return {true, 0}; }
  friend bool operator==(const H0Dim&, const H0Dim&) = default;
};

H0Dim h0_dim(const HNType& t);
bool h1_vanishes(const HNType& t);
bool all_slopes_positive(const HNType& t);
bool is_isoclinic(const NewtonSlopes& n);

}  // namespace hnlab::hn
