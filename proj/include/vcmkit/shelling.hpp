#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "vcmkit/complex.hpp"

namespace vcmkit {

using ShellingOrder = std::vector<Face>;

struct ShellingCheck {
  bool ok = true;
  /// 1-based (i, j): facet F_i meets earlier facet F_j in a face that no
  /// codimension-1 intersection F_i ∩ F_{j'} (j' < i) contains.
  std::optional<std::pair<int, int>> witness;
};

/// Checks that every F_i (i ≥ 2) meets the union of earlier facets in a pure
/// codimension-1 subcomplex. Throws PreconditionFailed on an impure complex or
/// when `order` is not a permutation of the facets.
[[nodiscard]] ShellingCheck verify_shelling(const SimplicialComplex& complex, const ShellingOrder& order);

/// Facets are the size-r faces with exactly one same-component vertex pair.
/// Empty for r = 1.
[[nodiscard]] SimplicialComplex irrelevant_complex(const Shape& shape);

/// An unordered same-component vertex pair {x_{c,low}, x_{c,high}}, low < high.
struct PairKey {
  int component = 1;
  int low = 0;
  int high = 1;

  /// Component first, then (low, high) lexicographically.
  friend auto operator<=>(const PairKey&, const PairKey&) = default;
};

[[nodiscard]] std::strong_ordering compare_pairs(const PairKey& a, const PairKey& b);

/// A facet of the part of Δ_irr missing component `excluded`: the pair plus
/// one index for each remaining component, in ascending component order.
struct FacetKey {
  int excluded = 1;
  PairKey pair;
  std::vector<int> rest;

  [[nodiscard]] Face to_face(const Shape& shape) const;
  /// Inverse of to_face. Throws InvalidInput if `face` is not a Δ_irr facet.
  static FacetKey from_face(const Face& face, const Shape& shape);
};

/// Tuple-lexicographic first, then pair order. Throws InvalidInput when the
/// keys exclude different components.
[[nodiscard]] std::strong_ordering compare_facets(const FacetKey& a, const FacetKey& b);

/// R, then the facets of Δ_irr missing component r, r-1, ..., 1, each block in
/// ascending compare_facets order. R may be any balanced facet; the order is
/// built for R = {x_{i,0}} and mapped back through per-component swaps.
/// Throws PreconditionFailed on a zero shape entry or an unbalanced R.
[[nodiscard]] ShellingOrder irrelevant_shelling_order(const Shape& shape, const Face& balanced_facet);

struct BalancedCertificate {
  /// Irrelevant-only augmentation Δ'.
  SimplicialComplex augmentation;
  /// A shelling of Δ ∪ Δ'.
  ShellingOrder order;
};

/// Constructs Δ' and a shelling of Δ ∪ Δ' for a pure balanced Δ.
/// Throws PreconditionFailed naming the offending facet otherwise.
[[nodiscard]] BalancedCertificate balanced_vcm_certificate(const SimplicialComplex& complex);

/// Δ with the facets of `order` appended (helper for certificate checks).
[[nodiscard]] SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace vcmkit
