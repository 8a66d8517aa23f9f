#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hnlab/poly_matrix.hpp"

namespace hnlab::tor {

/// Finitely generated k[t]-module: k[t]^free_rank (+) (+)_i k[t]/(d_i), with
/// monic nonconstant invariant factors d_1 | d_2 | ...
class KtModule {
 public:
  explicit KtModule(Field field, std::size_t free_rank = 0) : field_(field), free_rank_(free_rank) {}
  /// Accepts any list of cyclic torsion orders; normalizes to invariant factors.
  KtModule(Field field, std::size_t free_rank, const std::vector<KtPoly>& cyclic_orders);

  static KtModule cokernel(const PolyMatrix& presentation);

  Field field() const noexcept { return field_; }
  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<KtPoly>& torsion() const noexcept { return torsion_; }
  bool is_zero() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
  /// k-dimension of the torsion part.
  std::size_t torsion_length() const;

  friend bool operator==(const KtModule&, const KtModule&) = default;

  std::string to_string() const;

 private:
  Field field_;
  std::size_t free_rank_ = 0;
  std::vector<KtPoly> torsion_;
};

KtModule tensor_modules(const KtModule& a, const KtModule& b);
KtModule tor1(const KtModule& a, const KtModule& b);

/// 0 -> K -> A -> B -> 0 with K, A free and the map given by `inclusion` (rank A x rank K).
class PresentedSES {
 public:
  /// Rejects maps that are not injective.
  explicit PresentedSES(PolyMatrix inclusion);

  const PolyMatrix& inclusion() const noexcept { return i_; }
  std::size_t rank_a() const noexcept { return i_.rows(); }
  std::size_t rank_k() const noexcept { return i_.cols(); }
  KtModule quotient() const { return KtModule::cokernel(i_); }

 private:
  PolyMatrix i_;
};

/// Homology of C2 -d2-> C1 -d1-> C0 of free modules.
struct Homology {
  KtModule h2;
  KtModule h1;
  KtModule h0;
};

Homology homology(const PolyMatrix& d2, const PolyMatrix& d1);

/// K(x)K' -> (A(x)K') (+) (K(x)A') -> A(x)A', maps (i(x)1, 1(x)i') and 1(x)i' - i(x)1.
struct TensorComplex {
  PolyMatrix d2;
  PolyMatrix d1;
};

TensorComplex tensor_complex(const PresentedSES& s1, const PresentedSES& s2);

struct HomologyReport {
  Homology homology;
  KtModule expected_tor;
  KtModule expected_tensor;
  bool h2_zero = false;
  bool h1_matches_tor = false;
  bool h0_matches_tensor = false;
  bool passed() const { return h2_zero && h1_matches_tor && h0_matches_tensor; }
};

HomologyReport complex_homology_check(const PresentedSES& s1, const PresentedSES& s2);

}  // namespace hnlab::tor
