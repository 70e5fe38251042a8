#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "vcmkit/shape.hpp"

namespace vcmkit {

/// A simplicial complex on X_n, stored by its facets.
///
/// The facet list is an antichain kept in canonical order. Two states without
/// positive-dimensional faces are distinguished: the void complex (no faces
/// at all, no facets) and {∅} (a single empty facet).
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// The complex generated by `candidates`; dominated and duplicate faces are
  /// dropped. Throws InvalidInput if a candidate uses a vertex outside X_n.
  static SimplicialComplex from_facets(Shape shape, std::vector<Face> candidates);
  static SimplicialComplex from_facets(Shape shape, const std::vector<std::vector<Vertex>>& candidates);

  /// The complex with no faces at all.
  static SimplicialComplex void_complex(Shape shape) { return from_facets(std::move(shape), std::vector<Face>{}); }
  /// The complex {∅}.
  static SimplicialComplex irrelevant_only(Shape shape) { return from_facets(std::move(shape), std::vector<Face>{Face{}}); }
  static SimplicialComplex simplex(Shape shape);

  [[nodiscard]] const Shape& shape() const { return shape_; }
  [[nodiscard]] const std::vector<Face>& facets() const { return facets_; }
  [[nodiscard]] bool is_void() const { return facets_.empty(); }

  /// Max facet dimension; std::nullopt for the void complex. {∅} has dimension -1.
  [[nodiscard]] std::optional<int> dim() const;

  [[nodiscard]] bool contains(const Face& face) const;

  /// Every face, ordered by cardinality and then canonically.
  [[nodiscard]] std::vector<Face> faces() const;
  /// Faces with exactly `d + 1` vertices, canonically ordered.
  [[nodiscard]] std::vector<Face> faces_of_dimension(int d) const;
  /// Union of all facets.
  [[nodiscard]] VertexSet used_vertices() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.shape_ == b.shape_ && a.facets_ == b.facets_;
  }

 private:
  SimplicialComplex(Shape shape, std::vector<Face> facets) : shape_(std::move(shape)), facets_(std::move(facets)) {}

  Shape shape_;
  std::vector<Face> facets_;
};

/// Ordering of faces by cardinality, then canonical order.
bool size_then_canonical(const Face& a, const Face& b);

[[nodiscard]] std::optional<int> dim(const SimplicialComplex& complex);

/// All facets share one cardinality. The void complex counts as pure.
[[nodiscard]] bool is_pure(const SimplicialComplex& complex);

/// { τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ }. Throws NotAFace when σ ∉ Δ.
[[nodiscard]] SimplicialComplex link(const SimplicialComplex& complex, const Face& sigma);

/// { σ ∈ Δ : σ ⊆ W }.
[[nodiscard]] SimplicialComplex restriction(const SimplicialComplex& complex, const VertexSet& subset);

/// Δ * v on the same shape. Throws PreconditionFailed if v is already used.
[[nodiscard]] SimplicialComplex cone(const SimplicialComplex& complex, int vertex);

/// Appends a P^0 factor to the shape and cones over its single vertex.
[[nodiscard]] SimplicialComplex cone_on_new_point(const SimplicialComplex& complex);

/// Moves the complex to `target` through a vertex-id map (`map[old] = new`).
[[nodiscard]] SimplicialComplex relabel(const SimplicialComplex& complex, const Shape& target,
                                        const std::vector<int>& map);
[[nodiscard]] Face relabel(const Face& face, const std::vector<int>& map);

/// Every facet holds exactly one vertex from each component.
[[nodiscard]] bool is_balanced(const SimplicialComplex& complex);
[[nodiscard]] bool is_balanced_face(const Face& face, const Shape& shape);

/// Drops every irrelevant facet together with the faces only it generated.
[[nodiscard]] SimplicialComplex remove_irrelevant_facets(const SimplicialComplex& complex);

/// Facet-adjacency connectivity of a pure complex; throws PreconditionFailed otherwise.
[[nodiscard]] bool gallery_connected(const SimplicialComplex& complex);

struct RelevantPurityReport {
  std::vector<Face> relevant_facets;
  bool equal_dimension = true;
  /// No relevant facets at all: the check passes vacuously.
  bool vacuous = false;
};

/// Necessary condition for a virtual resolution of length codim: every
/// relevant facet has the same dimension.
[[nodiscard]] RelevantPurityReport relevant_purity_check(const SimplicialComplex& complex);

/// All 2^k subsets of `face` (k < 64), in increasing mask order.
template <class Fn>
void for_each_subface(const Face& face, Fn&& fn) {
  const std::vector<int> ids = face.elements();
  const std::uint64_t count = std::uint64_t{1} << ids.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Face sub;
    for (std::size_t b = 0; b < ids.size(); ++b) {
      if ((mask >> b) & 1U) sub.insert(ids[b]);
    }
    fn(sub);
  }
}

}  // namespace vcmkit
