#include "vcmkit/shelling.hpp"

#include <algorithm>
#include <numeric>

#include "vcmkit/errors.hpp"

namespace vcmkit {

ShellingCheck verify_shelling(const SimplicialComplex& complex, const ShellingOrder& order) {
  if (!is_pure(complex)) throw PreconditionFailed("verify_shelling: complex is not pure");
  std::vector<Face> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != complex.facets()) {
    throw PreconditionFailed("verify_shelling: order is not a permutation of the facets");
  }

  ShellingCheck result;
  std::vector<Face> meets;
  for (std::size_t i = 1; i < order.size(); ++i) {
    const Face& facet = order[i];
    const int ridge = facet.size() - 1;
    meets.clear();
    for (std::size_t j = 0; j < i; ++j) meets.push_back(facet & order[j]);
    for (std::size_t j = 0; j < i; ++j) {
      const bool covered = std::any_of(meets.begin(), meets.end(), [&](const Face& m) {
        return m.size() == ridge && meets[j].is_subset_of(m);
      });
      if (!covered) {
        result.ok = false;
        result.witness = std::make_pair(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
        return result;
      }
    }
  }
  return result;
}

namespace {

void check_key(const FacetKey& key, const Shape& shape) {
  const int r = shape.r();
  if (r < 2 || key.excluded < 1 || key.excluded > r || key.pair.component == key.excluded ||
      key.pair.component < 1 || key.pair.component > r || key.rest.size() != static_cast<std::size_t>(r - 2) ||
      key.pair.low < 0 || key.pair.low >= key.pair.high || key.pair.high > shape.entry(key.pair.component)) {
    throw InvalidInput("malformed facet key");
  }
}

// Components other than the pair's and the excluded one, ascending.
std::vector<int> rest_components(int r, int excluded, int pair_component) {
  std::vector<int> out;
  for (int c = 1; c <= r; ++c) {
    if (c != excluded && c != pair_component) out.push_back(c);
  }
  return out;
}

std::vector<FacetKey> facet_keys(const Shape& shape, int excluded) {
  std::vector<FacetKey> keys;
  const int r = shape.r();
  for (int c = 1; c <= r; ++c) {
    if (c == excluded) continue;
    const std::vector<int> others = rest_components(r, excluded, c);
    for (int low = 0; low <= shape.entry(c); ++low) {
      for (int high = low + 1; high <= shape.entry(c); ++high) {
        // Odometer over the remaining components.
        std::vector<int> rest(others.size(), 0);
        for (;;) {
          keys.push_back(FacetKey{excluded, PairKey{c, low, high}, rest});
          bool advanced = false;
          for (std::size_t pos = rest.size(); pos-- > 0;) {
            if (rest[pos] < shape.entry(others[pos])) {
              ++rest[pos];
              advanced = true;
              break;
            }
            rest[pos] = 0;
          }
          if (!advanced) break;
        }
      }
    }
  }
  return keys;
}

}  // namespace

Face FacetKey::to_face(const Shape& shape) const {
  check_key(*this, shape);
  Face f;
  f.insert(shape.offset(pair.component) + pair.low);
  f.insert(shape.offset(pair.component) + pair.high);
  const std::vector<int> others = rest_components(shape.r(), excluded, pair.component);
  for (std::size_t t = 0; t < others.size(); ++t) f.insert(shape.id(Vertex{others[t], rest[t]}));
  return f;
}

FacetKey FacetKey::from_face(const Face& face, const Shape& shape) {
  const int r = shape.r();
  if (r < 2 || face.size() != r) throw InvalidInput("face is not a facet of the irrelevant complex");
  const std::vector<int> counts = component_counts(shape, face);
  int excluded = 0;
  int paired = 0;
  for (int c = 1; c <= r; ++c) {
    const int k = counts[static_cast<std::size_t>(c - 1)];
    if (k == 0 && excluded == 0) {
      excluded = c;
    } else if (k == 2 && paired == 0) {
      paired = c;
    } else if (k != 1) {
      throw InvalidInput("face is not a facet of the irrelevant complex");
    }
  }
  if (excluded == 0 || paired == 0) throw InvalidInput("face is not a facet of the irrelevant complex");
  FacetKey key;
  key.excluded = excluded;
  std::vector<int> pair_indices;
  std::vector<std::pair<int, int>> others;
  face.for_each([&](int id) {
    const Vertex v = shape.vertex(id);
    if (v.component == paired) {
      pair_indices.push_back(v.index);
    } else {
      others.emplace_back(v.component, v.index);
    }
  });
  key.pair = PairKey{paired, pair_indices[0], pair_indices[1]};
  for (const auto& [component, index] : others) key.rest.push_back(index);
  return key;
}

std::strong_ordering compare_pairs(const PairKey& a, const PairKey& b) { return a <=> b; }

std::strong_ordering compare_facets(const FacetKey& a, const FacetKey& b) {
  if (a.excluded != b.excluded) throw InvalidInput("compare_facets: keys exclude different components");
  if (const auto c = a.rest <=> b.rest; c != 0) return c;
  return compare_pairs(a.pair, b.pair);
}

SimplicialComplex irrelevant_complex(const Shape& shape) {
  std::vector<Face> facets;
  if (shape.r() >= 2) {
    for (int k = 1; k <= shape.r(); ++k) {
      for (const FacetKey& key : facet_keys(shape, k)) facets.push_back(key.to_face(shape));
    }
  }
  return SimplicialComplex::from_facets(shape, std::move(facets));
}

ShellingOrder irrelevant_shelling_order(const Shape& shape, const Face& balanced_facet) {
  for (int c = 1; c <= shape.r(); ++c) {
    if (shape.entry(c) == 0) throw PreconditionFailed("irrelevant_shelling_order: shape " + shape.format() + " has a zero entry");
  }
  if (!is_balanced_face(balanced_facet, shape) || balanced_facet.max_element() >= shape.vertex_count()) {
    throw PreconditionFailed("irrelevant_shelling_order: " + shape.format(balanced_facet) + " is not balanced");
  }

  // Swap x_{c,0} with R's vertex in every component; the map is an involution.
  std::vector<int> swap(static_cast<std::size_t>(shape.vertex_count()));
  std::iota(swap.begin(), swap.end(), 0);
  balanced_facet.for_each([&](int id) {
    const int zero = shape.offset(shape.component_of(id));
    std::swap(swap[static_cast<std::size_t>(id)], swap[static_cast<std::size_t>(zero)]);
  });

  ShellingOrder order{balanced_facet};
  if (shape.r() < 2) return order;
  for (int k = shape.r(); k >= 1; --k) {
    std::vector<FacetKey> keys = facet_keys(shape, k);
    std::sort(keys.begin(), keys.end(), [](const FacetKey& a, const FacetKey& b) { return compare_facets(a, b) < 0; });
    for (const FacetKey& key : keys) order.push_back(relabel(key.to_face(shape), swap));
  }
  return order;
}

SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<Face> facets = a.facets();
  facets.insert(facets.end(), b.facets().begin(), b.facets().end());
  return SimplicialComplex::from_facets(a.shape(), std::move(facets));
}

BalancedCertificate balanced_vcm_certificate(const SimplicialComplex& complex) {
  const Shape& shape = complex.shape();
  if (complex.is_void()) throw PreconditionFailed("balanced_vcm_certificate: complex has no facets");
  for (const Face& f : complex.facets()) {
    if (!is_balanced_face(f, shape)) {
      throw PreconditionFailed("balanced_vcm_certificate: facet " + shape.format(f) + " is not balanced");
    }
  }
  // Balanced facets all have r vertices, so balanced implies pure here.

  // Components with n_i > 0 first, zeros trailing; original relative order kept.
  std::vector<int> components(static_cast<std::size_t>(shape.r()));
  std::iota(components.begin(), components.end(), 1);
  std::stable_partition(components.begin(), components.end(), [&](int c) { return shape.entry(c) > 0; });
  std::vector<int> permuted_entries;
  for (int c : components) permuted_entries.push_back(shape.entry(c));
  const Shape permuted(permuted_entries);
  std::vector<int> to_permuted(static_cast<std::size_t>(shape.vertex_count()));
  std::vector<int> from_permuted(to_permuted.size());
  for (std::size_t pos = 0; pos < components.size(); ++pos) {
    const int c = components[pos];
    for (int j = 0; j <= shape.entry(c); ++j) {
      const int old_id = shape.offset(c) + j;
      const int new_id = permuted.offset(static_cast<int>(pos) + 1) + j;
      to_permuted[static_cast<std::size_t>(old_id)] = new_id;
      from_permuted[static_cast<std::size_t>(new_id)] = old_id;
    }
  }

  const auto nonzero = static_cast<std::size_t>(
      std::count_if(permuted_entries.begin(), permuted_entries.end(), [](int e) { return e > 0; }));
  if (nonzero == 0) {
    return BalancedCertificate{SimplicialComplex::void_complex(shape), complex.facets()};
  }

  const Shape prefix(std::vector<int>(permuted_entries.begin(), permuted_entries.begin() + static_cast<std::ptrdiff_t>(nonzero)));
  const VertexSet prefix_ids = prefix.all_vertices();
  // The trailing components are single points; every balanced facet holds them all.
  const VertexSet apex = permuted.all_vertices() - prefix_ids;

  std::vector<Face> prefix_facets;
  for (const Face& f : complex.facets()) prefix_facets.push_back(relabel(f, to_permuted) & prefix_ids);
  std::sort(prefix_facets.begin(), prefix_facets.end());

  const Face& start = prefix_facets.front();
  ShellingOrder order = irrelevant_shelling_order(prefix, start);
  for (std::size_t i = 1; i < prefix_facets.size(); ++i) order.push_back(prefix_facets[i]);
  const SimplicialComplex prefix_augmentation = irrelevant_complex(prefix);

  std::vector<Face> augmentation;
  for (const Face& f : prefix_augmentation.facets()) augmentation.push_back(relabel(f | apex, from_permuted));
  for (Face& f : order) f = relabel(f | apex, from_permuted);

  return BalancedCertificate{SimplicialComplex::from_facets(shape, std::move(augmentation)), std::move(order)};
}

}  // namespace vcmkit
