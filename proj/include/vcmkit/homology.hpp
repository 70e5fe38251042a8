#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "vcmkit/complex.hpp"
#include "vcmkit/exact_matrix.hpp"

namespace vcmkit {

/// Default vertex bound for Hochster enumeration (2^n restrictions).
inline constexpr int kDefaultHochsterVertexBound = 20;

/// Matrix of ∂_d from d-faces (columns) to (d-1)-faces (rows), both in
/// canonical order, with sign (-1)^k for dropping the k-th smallest vertex.
/// ∂_0 maps every vertex to the empty face.
[[nodiscard]] ExactMatrix boundary_matrix(const SimplicialComplex& complex, int d, const CoefficientField& field);

/// Ranks of reduced homology H̃_d for d = -1 .. dim.
struct HomologyRanks {
  /// ranks[k] is the rank of H̃_{k-1}. Empty for the void complex.
  std::vector<int> ranks;

  [[nodiscard]] int operator[](int d) const {
    const auto k = static_cast<std::size_t>(d + 1);
    return d >= -1 && k < ranks.size() ? ranks[k] : 0;
  }
  [[nodiscard]] int total() const;
  friend bool operator==(const HomologyRanks&, const HomologyRanks&) = default;
};

[[nodiscard]] HomologyRanks reduced_homology_ranks(const SimplicialComplex& complex, const CoefficientField& field);

/// Homology of a downward-closed face family sorted by cardinality.
[[nodiscard]] HomologyRanks reduced_homology_ranks(const std::vector<Face>& faces, const CoefficientField& field);

/// Multigraded Betti numbers β_{i,σ} of S/I_Δ. Only non-zero entries are stored.
class BettiTable {
 public:
  using Key = std::pair<int, VertexSet>;

  void set(int i, const VertexSet& sigma, int value);
  [[nodiscard]] int at(int i, const VertexSet& sigma) const;
  [[nodiscard]] const std::map<Key, int>& entries() const { return entries_; }
  /// Largest i with some β_{i,σ} ≠ 0; -1 if the table is empty.
  [[nodiscard]] int max_index() const;
  /// Σ_σ β_{i,σ}.
  [[nodiscard]] int total(int i) const;

 private:
  std::map<Key, int> entries_;
};

/// Hochster: β_{i,σ} = rank H̃_{|σ|-i-1}(Δ|_σ) over every σ ⊆ X.
/// Throws BoundExceeded above `vertex_bound` vertices.
[[nodiscard]] BettiTable hochster_betti(const SimplicialComplex& complex, const CoefficientField& field,
                                        int vertex_bound = kDefaultHochsterVertexBound);

[[nodiscard]] int projective_dimension(const SimplicialComplex& complex, const CoefficientField& field,
                                       int vertex_bound = kDefaultHochsterVertexBound);

struct ReisnerResult {
  bool cohen_macaulay = true;
  /// First face (by size, then canonical order) whose link has homology below its dimension.
  std::optional<Face> witness_face;
  int witness_degree = 0;
};

/// Reisner's criterion. Throws PreconditionFailed on the void complex.
[[nodiscard]] ReisnerResult is_CM_reisner(const SimplicialComplex& complex, const CoefficientField& field);

/// pdim(S/I_Δ) == codim_affine(Δ).
[[nodiscard]] bool is_CM_pdim(const SimplicialComplex& complex, const CoefficientField& field,
                              int vertex_bound = kDefaultHochsterVertexBound);

/// Homology over F_2, F_3 and Q side by side. Disagreement signals torsion.
struct FieldAgreement {
  HomologyRanks over_2;
  HomologyRanks over_3;
  HomologyRanks over_q;
  [[nodiscard]] bool disagree() const { return !(over_2 == over_q) || !(over_3 == over_q); }
};

[[nodiscard]] FieldAgreement compare_fields(const SimplicialComplex& complex);

}  // namespace vcmkit
