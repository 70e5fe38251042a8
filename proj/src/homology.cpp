#include "vcmkit/homology.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "vcmkit/errors.hpp"
#include "vcmkit/parallel.hpp"
#include "vcmkit/stanley_reisner.hpp"

namespace vcmkit {

namespace {

using FaceIndex = std::unordered_map<Face, Eigen::Index, VertexSetHash>;

IntMatrix boundary_between(const std::vector<Face>& lower, const std::vector<Face>& upper) {
  FaceIndex row_of;
  for (std::size_t i = 0; i < lower.size(); ++i) row_of.emplace(lower[i], static_cast<Eigen::Index>(i));
  IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(lower.size()), static_cast<Eigen::Index>(upper.size()));
  for (std::size_t col = 0; col < upper.size(); ++col) {
    const std::vector<int> ids = upper[col].elements();
    for (std::size_t k = 0; k < ids.size(); ++k) {
      Face sub = upper[col];
      sub.erase(ids[k]);
      m(row_of.at(sub), static_cast<Eigen::Index>(col)) = (k % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

// Splits a size-sorted face family into per-dimension layers (layer k holds
// faces with k vertices).
std::vector<std::vector<Face>> layers_of(const std::vector<Face>& faces) {
  std::vector<std::vector<Face>> layers;
  for (const Face& f : faces) {
    const auto k = static_cast<std::size_t>(f.size());
    if (layers.size() <= k) layers.resize(k + 1);
    layers[k].push_back(f);
  }
  for (auto& layer : layers) std::sort(layer.begin(), layer.end());
  return layers;
}

}  // namespace

int HomologyRanks::total() const { return std::accumulate(ranks.begin(), ranks.end(), 0); }

ExactMatrix boundary_matrix(const SimplicialComplex& complex, int d, const CoefficientField& field) {
  if (d < -1) throw InvalidInput("boundary_matrix: degree below -1");
  const std::vector<Face> upper = complex.faces_of_dimension(d);
  if (d == -1) {
    // ∂_{-1}: C_{-1} -> 0.
    return ExactMatrix(field, IntMatrix::Zero(0, static_cast<Eigen::Index>(upper.size())));
  }
  const std::vector<Face> lower = complex.faces_of_dimension(d - 1);
  return ExactMatrix(field, boundary_between(lower, upper));
}

HomologyRanks reduced_homology_ranks(const std::vector<Face>& faces, const CoefficientField& field) {
  HomologyRanks out;
  if (faces.empty()) return out;
  const auto layers = layers_of(faces);
  const std::size_t top = layers.size();  // dimensions -1 .. top-2
  // boundary_rank[k] = rank of ∂ from layer k to layer k-1 (k ≥ 1).
  std::vector<Eigen::Index> boundary_rank(top + 1, 0);
  for (std::size_t k = 1; k < top; ++k) {
    if (layers[k].empty()) continue;
    boundary_rank[k] = rank(boundary_between(layers[k - 1], layers[k]), field);
  }
  out.ranks.resize(top, 0);
  for (std::size_t k = 0; k < top; ++k) {
    const auto chains = static_cast<Eigen::Index>(layers[k].size());
    out.ranks[k] = static_cast<int>(chains - boundary_rank[k] - boundary_rank[k + 1]);
  }
  return out;
}

HomologyRanks reduced_homology_ranks(const SimplicialComplex& complex, const CoefficientField& field) {
  if (complex.is_void()) return {};
  return reduced_homology_ranks(complex.faces(), field);
}

void BettiTable::set(int i, const VertexSet& sigma, int value) {
  if (value == 0) {
    entries_.erase({i, sigma});
  } else {
    entries_[{i, sigma}] = value;
  }
}

int BettiTable::at(int i, const VertexSet& sigma) const {
  const auto it = entries_.find({i, sigma});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::max_index() const {
  int best = -1;
  for (const auto& [key, value] : entries_) best = std::max(best, key.first);
  return best;
}

int BettiTable::total(int i) const {
  int sum = 0;
  for (const auto& [key, value] : entries_) {
    if (key.first == i) sum += value;
  }
  return sum;
}

BettiTable hochster_betti(const SimplicialComplex& complex, const CoefficientField& field, int vertex_bound) {
  const int n = complex.shape().vertex_count();
  if (n > vertex_bound || n >= 63) {
    throw BoundExceeded("hochster_betti: " + std::to_string(n) + " vertices exceeds bound " +
                        std::to_string(vertex_bound));
  }
  BettiTable table;
  if (complex.is_void()) return table;  // S/I_Δ = 0.

  const std::vector<Face> faces = complex.faces();
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<HomologyRanks> per_subset(subsets);
  parallel_for(subsets, [&](std::size_t mask) {
    const VertexSet sigma = VertexSet::from_mask(mask);
    std::vector<Face> restricted;
    for (const Face& f : faces) {
      if (f.is_subset_of(sigma)) restricted.push_back(f);
    }
    per_subset[mask] = reduced_homology_ranks(restricted, field);
  });
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    const VertexSet sigma = VertexSet::from_mask(mask);
    const int size = sigma.size();
    const HomologyRanks& h = per_subset[mask];
    for (int d = -1; d + 1 < static_cast<int>(h.ranks.size()); ++d) {
      if (h[d] != 0) table.set(size - d - 1, sigma, h[d]);
    }
  }
  return table;
}

int projective_dimension(const SimplicialComplex& complex, const CoefficientField& field, int vertex_bound) {
  return hochster_betti(complex, field, vertex_bound).max_index();
}

ReisnerResult is_CM_reisner(const SimplicialComplex& complex, const CoefficientField& field) {
  if (complex.is_void()) throw PreconditionFailed("is_CM_reisner: void complex");
  ReisnerResult result;
  for (const Face& sigma : complex.faces()) {
    const SimplicialComplex lk = link(complex, sigma);
    const int lk_dim = *lk.dim();
    const HomologyRanks h = reduced_homology_ranks(lk, field);
    for (int i = -1; i < lk_dim; ++i) {
      if (h[i] != 0) {
        result.cohen_macaulay = false;
        result.witness_face = sigma;
        result.witness_degree = i;
        return result;
      }
    }
  }
  return result;
}

bool is_CM_pdim(const SimplicialComplex& complex, const CoefficientField& field, int vertex_bound) {
  return projective_dimension(complex, field, vertex_bound) == codim_affine(complex);
}

FieldAgreement compare_fields(const SimplicialComplex& complex) {
  return FieldAgreement{reduced_homology_ranks(complex, CoefficientField::prime(2)),
                        reduced_homology_ranks(complex, CoefficientField::prime(3)),
                        reduced_homology_ranks(complex, CoefficientField::rationals())};
}

}  // namespace vcmkit
