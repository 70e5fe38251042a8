#include "vcmkit/complex.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "vcmkit/errors.hpp"

namespace vcmkit {

namespace {

constexpr int kMaxFacetSizeForEnumeration = 30;

std::vector<Face> maximal_elements(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Face> kept;
  for (const Face& f : faces) {
    const bool dominated =
        std::any_of(kept.begin(), kept.end(), [&](const Face& g) { return f.is_subset_of(g); });
    if (!dominated) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

bool size_then_canonical(const Face& a, const Face& b) {
  const int sa = a.size();
  const int sb = b.size();
  if (sa != sb) return sa < sb;
  return a < b;
}

SimplicialComplex SimplicialComplex::from_facets(Shape shape, std::vector<Face> candidates) {
  const int n = shape.vertex_count();
  for (const Face& f : candidates) {
    if (f.max_element() >= n) {
      throw InvalidInput("face uses vertex id " + std::to_string(f.max_element()) + " outside X_" + shape.format());
    }
  }
  return SimplicialComplex(std::move(shape), maximal_elements(std::move(candidates)));
}

SimplicialComplex SimplicialComplex::from_facets(Shape shape, const std::vector<std::vector<Vertex>>& candidates) {
  std::vector<Face> faces;
  faces.reserve(candidates.size());
  for (const auto& c : candidates) faces.push_back(shape.face(c));
  return from_facets(std::move(shape), std::move(faces));
}

SimplicialComplex SimplicialComplex::simplex(Shape shape) {
  Face all = shape.all_vertices();
  return from_facets(std::move(shape), std::vector<Face>{all});
}

std::optional<int> SimplicialComplex::dim() const {
  if (facets_.empty()) return std::nullopt;
  int best = -1;
  for (const Face& f : facets_) best = std::max(best, f.size() - 1);
  return best;
}

bool SimplicialComplex::contains(const Face& face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](const Face& f) { return face.is_subset_of(f); });
}

std::vector<Face> SimplicialComplex::faces() const {
  std::unordered_set<Face, VertexSetHash> seen;
  for (const Face& f : facets_) {
    if (f.size() > kMaxFacetSizeForEnumeration) {
      throw BoundExceeded("facet with " + std::to_string(f.size()) + " vertices is too large to enumerate");
    }
    for_each_subface(f, [&](const Face& sub) { seen.insert(sub); });
  }
  std::vector<Face> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), size_then_canonical);
  return out;
}

std::vector<Face> SimplicialComplex::faces_of_dimension(int d) const {
  std::vector<Face> out;
  if (d < -1) return out;
  const auto k = static_cast<std::size_t>(d + 1);
  std::unordered_set<Face, VertexSetHash> seen;
  for (const Face& f : facets_) {
    const std::vector<int> ids = f.elements();
    if (ids.size() < k) continue;
    // Walk k-combinations of the facet's vertices.
    std::vector<bool> pick(ids.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      Face sub;
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (pick[i]) sub.insert(ids[i]);
      }
      seen.insert(sub);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  out.assign(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet SimplicialComplex::used_vertices() const {
  VertexSet s;
  for (const Face& f : facets_) s |= f;
  return s;
}

std::optional<int> dim(const SimplicialComplex& complex) { return complex.dim(); }

bool is_pure(const SimplicialComplex& complex) {
  const auto& facets = complex.facets();
  if (facets.empty()) return true;
  const int size = facets.front().size();
  return std::all_of(facets.begin(), facets.end(), [&](const Face& f) { return f.size() == size; });
}

SimplicialComplex link(const SimplicialComplex& complex, const Face& sigma) {
  if (!complex.contains(sigma)) {
    throw NotAFace("link: " + complex.shape().format(sigma) + " is not a face");
  }
  std::vector<Face> parts;
  for (const Face& f : complex.facets()) {
    if (sigma.is_subset_of(f)) parts.push_back(f - sigma);
  }
  return SimplicialComplex::from_facets(complex.shape(), std::move(parts));
}

SimplicialComplex restriction(const SimplicialComplex& complex, const VertexSet& subset) {
  std::vector<Face> parts;
  parts.reserve(complex.facets().size());
  for (const Face& f : complex.facets()) parts.push_back(f & subset);
  return SimplicialComplex::from_facets(complex.shape(), std::move(parts));
}

SimplicialComplex cone(const SimplicialComplex& complex, int vertex) {
  if (vertex < 0 || vertex >= complex.shape().vertex_count()) {
    throw InvalidInput("cone: vertex id out of range");
  }
  if (complex.used_vertices().contains(vertex)) {
    throw PreconditionFailed("cone: vertex " + complex.shape().format(Face{vertex}) + " already used");
  }
  std::vector<Face> facets = complex.facets();
  for (Face& f : facets) f.insert(vertex);
  return SimplicialComplex::from_facets(complex.shape(), std::move(facets));
}

SimplicialComplex cone_on_new_point(const SimplicialComplex& complex) {
  std::vector<int> entries = complex.shape().entries();
  entries.push_back(0);
  Shape extended(std::move(entries));
  // Existing ids are unchanged: the new component's vertex is appended last.
  std::vector<int> identity(static_cast<std::size_t>(complex.shape().vertex_count()));
  std::iota(identity.begin(), identity.end(), 0);
  const SimplicialComplex moved = relabel(complex, extended, identity);
  return cone(moved, extended.vertex_count() - 1);
}

Face relabel(const Face& face, const std::vector<int>& map) {
  Face out;
  face.for_each([&](int id) { out.insert(map[static_cast<std::size_t>(id)]); });
  return out;
}

SimplicialComplex relabel(const SimplicialComplex& complex, const Shape& target, const std::vector<int>& map) {
  std::vector<Face> facets;
  facets.reserve(complex.facets().size());
  for (const Face& f : complex.facets()) facets.push_back(relabel(f, map));
  return SimplicialComplex::from_facets(target, std::move(facets));
}

bool is_balanced_face(const Face& face, const Shape& shape) {
  const std::vector<int> counts = component_counts(shape, face);
  return std::all_of(counts.begin(), counts.end(), [](int c) { return c == 1; });
}

bool is_balanced(const SimplicialComplex& complex) {
  return std::all_of(complex.facets().begin(), complex.facets().end(),
                     [&](const Face& f) { return is_balanced_face(f, complex.shape()); });
}

SimplicialComplex remove_irrelevant_facets(const SimplicialComplex& complex) {
  std::vector<Face> kept;
  for (const Face& f : complex.facets()) {
    if (is_relevant(f, complex.shape())) kept.push_back(f);
  }
  return SimplicialComplex::from_facets(complex.shape(), std::move(kept));
}

bool gallery_connected(const SimplicialComplex& complex) {
  if (!is_pure(complex)) throw PreconditionFailed("gallery_connected: complex is not pure");
  const auto& facets = complex.facets();
  if (facets.size() <= 1) return true;
  const int ridge = facets.front().size() - 1;
  std::vector<bool> reached(facets.size(), false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < facets.size(); ++j) {
      if (!reached[j] && facets[i].intersection_size(facets[j]) == ridge) {
        reached[j] = true;
        ++count;
        stack.push_back(j);
      }
    }
  }
  return count == facets.size();
}

RelevantPurityReport relevant_purity_check(const SimplicialComplex& complex) {
  RelevantPurityReport report;
  for (const Face& f : complex.facets()) {
    if (is_relevant(f, complex.shape())) report.relevant_facets.push_back(f);
  }
  report.vacuous = report.relevant_facets.empty();
  if (!report.vacuous) {
    const int size = report.relevant_facets.front().size();
    report.equal_dimension = std::all_of(report.relevant_facets.begin(), report.relevant_facets.end(),
                                         [&](const Face& f) { return f.size() == size; });
  }
  return report;
}

}  // namespace vcmkit
