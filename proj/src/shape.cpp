#include "vcmkit/shape.hpp"

#include <sstream>

#include "vcmkit/errors.hpp"

namespace vcmkit {

Shape::Shape(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidInput("shape must have at least one component");
  int id = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0) throw InvalidInput("shape entries must be non-negative");
    offsets_.push_back(id);
    for (int j = 0; j <= entries_[i]; ++j) component_of_.push_back(static_cast<int>(i) + 1);
    id += entries_[i] + 1;
    norm_ += entries_[i];
  }
}

bool Shape::is_valid(const Vertex& v) const {
  return v.component >= 1 && v.component <= r() && v.index >= 0 && v.index <= entry(v.component);
}

int Shape::id(const Vertex& v) const {
  if (!is_valid(v)) {
    throw InvalidInput("vertex [" + std::to_string(v.component) + ", " + std::to_string(v.index) +
                       "] is not in X_" + format());
  }
  return offset(v.component) + v.index;
}

Vertex Shape::vertex(int id) const {
  const int c = component_of(id);
  return Vertex{c, id - offset(c)};
}

VertexSet Shape::component_set(int component) const {
  VertexSet s;
  for (int j = 0; j <= entry(component); ++j) s.insert(offset(component) + j);
  return s;
}

VertexSet Shape::face(const std::vector<Vertex>& vertices) const {
  VertexSet s;
  for (const Vertex& v : vertices) s.insert(id(v));
  return s;
}

std::vector<Vertex> Shape::vertices_of(const VertexSet& face) const {
  std::vector<Vertex> out;
  face.for_each([&](int id) { out.push_back(vertex(id)); });
  return out;
}

std::string Shape::format(const VertexSet& face) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  face.for_each([&](int id) {
    const Vertex v = vertex(id);
    os << (first ? "" : ",") << "x_" << v.component << '_' << v.index;
    first = false;
  });
  os << '}';
  return os.str();
}

std::string Shape::format() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
  os << ')';
  return os.str();
}

std::vector<int> component_counts(const Shape& shape, const Face& face) {
  std::vector<int> counts(static_cast<std::size_t>(shape.r()), 0);
  face.for_each([&](int id) { ++counts[static_cast<std::size_t>(shape.component_of(id) - 1)]; });
  return counts;
}

bool is_relevant(const Face& face, const Shape& shape) {
  for (int c = 1; c <= shape.r(); ++c) {
    if (!face.intersects(shape.component_set(c))) return false;
  }
  return true;
}

}  // namespace vcmkit
