#include "vcmkit/stanley_reisner.hpp"

#include <algorithm>
#include <unordered_set>

#include "vcmkit/errors.hpp"

namespace vcmkit {

SqfIdeal::SqfIdeal(Shape shape, std::vector<Face> generators) : shape_(std::move(shape)) {
  for (const Face& g : generators) {
    if (g.empty()) throw InvalidInput("ideal generators must be non-empty; use SqfIdeal::unit");
    if (g.max_element() >= shape_.vertex_count()) throw InvalidInput("ideal generator outside X_" + shape_.format());
  }
  std::sort(generators.begin(), generators.end(), size_then_canonical);
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (const Face& g : generators) {
    const bool redundant =
        std::any_of(generators_.begin(), generators_.end(), [&](const Face& h) { return h.is_subset_of(g); });
    if (!redundant) generators_.push_back(g);
  }
  std::sort(generators_.begin(), generators_.end());
}

SqfIdeal SqfIdeal::unit(Shape shape) {
  SqfIdeal ideal;
  ideal.shape_ = std::move(shape);
  ideal.unit_ = true;
  return ideal;
}

bool SqfIdeal::contains(const Face& monomial_support) const {
  if (unit_) return true;
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Face& g) { return g.is_subset_of(monomial_support); });
}

SqfIdeal irrelevant_ideal(const Shape& shape) {
  std::vector<Face> gens{Face{}};
  for (int c = 1; c <= shape.r(); ++c) {
    std::vector<Face> next;
    for (const Face& partial : gens) {
      for (int j = 0; j <= shape.entry(c); ++j) {
        Face f = partial;
        f.insert(shape.offset(c) + j);
        next.push_back(f);
      }
    }
    gens = std::move(next);
  }
  return SqfIdeal(shape, std::move(gens));
}

SqfIdeal ideal_of(const SimplicialComplex& complex) {
  const Shape& shape = complex.shape();
  if (complex.is_void()) return SqfIdeal::unit(shape);

  // Minimal non-faces by increasing cardinality: c is one iff c ∉ Δ and every
  // c \ {v} ∈ Δ. Each candidate is produced once, from c minus its maximum.
  const int n = shape.vertex_count();
  std::vector<Face> generators;
  std::vector<Face> layer{Face{}};
  std::unordered_set<Face, VertexSetHash> face_set;
  for (const Face& f : complex.faces()) face_set.insert(f);
  while (!layer.empty()) {
    std::vector<Face> next;
    for (const Face& base : layer) {
      for (int v = base.max_element() + 1; v < n; ++v) {
        Face c = base;
        c.insert(v);
        if (face_set.contains(c)) {
          next.push_back(c);
          continue;
        }
        bool minimal = true;
        c.for_each([&](int u) {
          if (!minimal) return;
          Face sub = c;
          sub.erase(u);
          if (!face_set.contains(sub)) minimal = false;
        });
        if (minimal) generators.push_back(c);
      }
    }
    layer = std::move(next);
  }
  return SqfIdeal(shape, std::move(generators));
}

namespace {

// Maximal subsets of `universe` that contain no generator.
void maximal_independent(const std::vector<int>& order, std::size_t pos, Face& current,
                         const std::vector<Face>& generators, std::vector<Face>& out) {
  if (pos == order.size()) {
    for (int v : order) {
      if (current.contains(v)) continue;
      Face grown = current;
      grown.insert(v);
      const bool blocked = std::any_of(generators.begin(), generators.end(),
                                       [&](const Face& g) { return g.is_subset_of(grown); });
      if (!blocked) return;
    }
    out.push_back(current);
    return;
  }
  const int v = order[pos];
  current.insert(v);
  const bool blocked =
      std::any_of(generators.begin(), generators.end(), [&](const Face& g) { return g.is_subset_of(current); });
  if (!blocked) maximal_independent(order, pos + 1, current, generators, out);
  current.erase(v);
  maximal_independent(order, pos + 1, current, generators, out);
}

}  // namespace

SimplicialComplex complex_of(const SqfIdeal& ideal) {
  if (ideal.is_unit()) throw UnitIdeal("complex_of: the unit ideal has no Stanley-Reisner complex");
  const Shape& shape = ideal.shape();
  std::vector<int> order = shape.all_vertices().elements();
  std::vector<Face> facets;
  Face current;
  maximal_independent(order, 0, current, ideal.generators(), facets);
  return SimplicialComplex::from_facets(shape, std::move(facets));
}

std::vector<PrimeComponent> prime_components(const SimplicialComplex& complex) {
  const VertexSet all = complex.shape().all_vertices();
  std::vector<PrimeComponent> out;
  for (const Face& f : complex.facets()) {
    const VertexSet gens = all - f;
    out.push_back(PrimeComponent{gens, gens.size()});
  }
  return out;
}

SimplicialComplex saturate_by_B(const SimplicialComplex& complex) {
  // The prime <X \ F> contains B iff F misses a component, so saturation
  // removes exactly the irrelevant facets.
  return remove_irrelevant_facets(complex);
}

bool is_B_saturated(const SimplicialComplex& complex) { return saturate_by_B(complex) == complex; }

int codim(const SimplicialComplex& complex) {
  const Shape& shape = complex.shape();
  int best = -1;
  for (const Face& f : complex.facets()) {
    if (is_relevant(f, shape)) best = std::max(best, f.size() - shape.r());
  }
  if (best < 0) throw EmptyVariety("codim: V(I_Δ) is empty (no relevant facet)");
  return shape.norm() - best;
}

int codim_affine(const SimplicialComplex& complex) {
  const auto d = complex.dim();
  if (!d) throw PreconditionFailed("codim_affine: void complex");
  return complex.shape().vertex_count() - (*d + 1);
}

}  // namespace vcmkit
