#pragma once

#include <compare>
#include <string>
#include <vector>

#include "vcmkit/vertex_set.hpp"

namespace vcmkit {

/// A vertex x_{component,index} of X_n. Components are 1-based, indices 0-based.
struct Vertex {
  int component = 1;
  int index = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// The vector n = (n_1, ..., n_r) of a product of projective spaces.
///
/// "Component" always means the vertex block {x_{i,0}, ..., x_{i,n_i}} of one
/// factor. Vertices get dense ids in (component, index) order, so ascending
/// ids coincide with the canonical vertex order.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<int> entries);

  [[nodiscard]] int r() const { return static_cast<int>(entries_.size()); }
  [[nodiscard]] const std::vector<int>& entries() const { return entries_; }
  /// n_i for a 1-based component i.
  [[nodiscard]] int entry(int component) const { return entries_[static_cast<std::size_t>(component - 1)]; }
  /// |n| = n_1 + ... + n_r.
  [[nodiscard]] int norm() const { return norm_; }
  /// |X_n| = |n| + r.
  [[nodiscard]] int vertex_count() const { return norm_ + r(); }

  [[nodiscard]] bool is_valid(const Vertex& v) const;
  /// Throws InvalidInput when `v` does not belong to X_n.
  [[nodiscard]] int id(const Vertex& v) const;
  [[nodiscard]] Vertex vertex(int id) const;
  [[nodiscard]] int component_of(int id) const { return component_of_[static_cast<std::size_t>(id)]; }
  /// Id of x_{component,0}.
  [[nodiscard]] int offset(int component) const { return offsets_[static_cast<std::size_t>(component - 1)]; }

  /// All vertices of one component as a set.
  [[nodiscard]] VertexSet component_set(int component) const;
  [[nodiscard]] VertexSet all_vertices() const { return VertexSet::range(vertex_count()); }

  /// Builds a face from (component, index) pairs; throws on invalid vertices.
  [[nodiscard]] VertexSet face(const std::vector<Vertex>& vertices) const;
  [[nodiscard]] std::vector<Vertex> vertices_of(const VertexSet& face) const;

  /// "x_1_0,x_2_1" style rendering used in reports and error messages.
  [[nodiscard]] std::string format(const VertexSet& face) const;
  [[nodiscard]] std::string format() const;

  friend bool operator==(const Shape& a, const Shape& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<int> entries_;
  std::vector<int> offsets_;
  std::vector<int> component_of_;
  int norm_ = 0;
};

using Face = VertexSet;

/// Number of vertices of `face` in each component (index 0 is component 1).
[[nodiscard]] std::vector<int> component_counts(const Shape& shape, const Face& face);

/// True iff the face has a vertex in every component.
[[nodiscard]] bool is_relevant(const Face& face, const Shape& shape);

}  // namespace vcmkit
