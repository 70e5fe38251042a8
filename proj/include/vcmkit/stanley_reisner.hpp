#pragma once

#include <vector>

#include "vcmkit/complex.hpp"

namespace vcmkit {

/// A squarefree monomial ideal, given by the supports of its minimal generators.
///
/// The unit ideal is a flag; no generator is ever the empty set.
class SqfIdeal {
 public:
  SqfIdeal(Shape shape, std::vector<Face> generators);
  static SqfIdeal unit(Shape shape);
  static SqfIdeal zero(Shape shape) { return SqfIdeal(std::move(shape), {}); }

  [[nodiscard]] const Shape& shape() const { return shape_; }
  [[nodiscard]] const std::vector<Face>& generators() const { return generators_; }
  [[nodiscard]] bool is_unit() const { return unit_; }
  [[nodiscard]] bool is_zero() const { return !unit_ && generators_.empty(); }

  /// Whether the squarefree monomial with support `face` lies in the ideal.
  [[nodiscard]] bool contains(const Face& monomial_support) const;

  friend bool operator==(const SqfIdeal&, const SqfIdeal&) = default;

 private:
  SqfIdeal() = default;

  Shape shape_;
  std::vector<Face> generators_;
  bool unit_ = false;
};

/// The irrelevant ideal B, generated by all balanced faces.
[[nodiscard]] SqfIdeal irrelevant_ideal(const Shape& shape);

/// I_Δ: generated by the minimal non-faces. The void complex maps to the unit ideal.
[[nodiscard]] SqfIdeal ideal_of(const SimplicialComplex& complex);

/// Δ_I. Throws UnitIdeal for the unit ideal.
[[nodiscard]] SimplicialComplex complex_of(const SqfIdeal& ideal);

struct PrimeComponent {
  /// Generators X \ F of the prime attached to facet F.
  VertexSet generators;
  int codim = 0;
};

/// One associated prime per facet, in facet order.
[[nodiscard]] std::vector<PrimeComponent> prime_components(const SimplicialComplex& complex);

/// The complex of I_Δ : B^∞.
[[nodiscard]] SimplicialComplex saturate_by_B(const SimplicialComplex& complex);

[[nodiscard]] bool is_B_saturated(const SimplicialComplex& complex);

/// |n| - dim V(I_Δ) in P^n. Throws EmptyVariety when Δ has no relevant facet.
[[nodiscard]] int codim(const SimplicialComplex& complex);

/// (|n| + r) - (dim Δ + 1). Throws PreconditionFailed for the void complex.
[[nodiscard]] int codim_affine(const SimplicialComplex& complex);

}  // namespace vcmkit
