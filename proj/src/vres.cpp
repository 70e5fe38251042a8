#include "vcmkit/vres.hpp"

#include <algorithm>

#include "vcmkit/errors.hpp"
#include "vcmkit/homology.hpp"
#include "vcmkit/stanley_reisner.hpp"

namespace vcmkit {

void FreeComplexPresentation::validate() const {
  if (differentials.empty()) throw ShapeMismatch("presentation has no matrices");
  if (ranks.size() != differentials.size() + 1) {
    throw ShapeMismatch("presentation declares " + std::to_string(ranks.size()) + " ranks for " +
                        std::to_string(differentials.size()) + " matrices");
  }
  for (std::size_t k = 0; k < differentials.size(); ++k) {
    const PolyMatrix& m = differentials[k];
    if (m.rows() != ranks[k] || m.cols() != ranks[k + 1]) {
      throw ShapeMismatch("matrix " + std::to_string(k + 1) + " is " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + ", expected " + std::to_string(ranks[k]) + "x" +
                          std::to_string(ranks[k + 1]));
    }
  }
}

bool CompositionReport::ok() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const CompositionResult& p) { return p.zero; });
}

CompositionReport compose_check(const FreeComplexPresentation& presentation) {
  presentation.validate();
  CompositionReport report;
  for (std::size_t k = 0; k + 1 < presentation.differentials.size(); ++k) {
    const PolyMatrix product = multiply(presentation.differentials[k], presentation.differentials[k + 1]);
    CompositionResult result;
    result.pair = static_cast<int>(k) + 1;
    for (Eigen::Index i = 0; i < product.rows() && result.zero; ++i) {
      for (Eigen::Index j = 0; j < product.cols(); ++j) {
        if (!product(i, j).is_zero()) {
          result.zero = false;
          result.offending_entry = std::make_pair(i, j);
          break;
        }
      }
    }
    report.pairs.push_back(result);
  }
  return report;
}

std::vector<Face> enumerate_irrelevant_candidate_facets(const SimplicialComplex& complex) {
  std::vector<Face> out;
  const auto d = complex.dim();
  if (!d) return out;
  const Shape& shape = complex.shape();
  const int n = shape.vertex_count();
  const int k = *d + 1;
  if (k > n) return out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    const Face f = Face::from_ids(pick);
    if (!is_relevant(f, shape) && !complex.contains(f)) out.push_back(f);
    int pos = k - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++pick[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i) pick[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i - 1)] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool only_irrelevant_difference(const SimplicialComplex& base, const SimplicialComplex& augmentation) {
  // A relevant face of Δ' outside Δ forces a relevant facet of Δ' outside Δ,
  // and every face of an irrelevant facet is irrelevant.
  return std::all_of(augmentation.facets().begin(), augmentation.facets().end(), [&](const Face& f) {
    return !is_relevant(f, base.shape()) || base.contains(f);
  });
}

namespace {

VcmCertificate build_certificate(const SimplicialComplex& complex, const SimplicialComplex& augmentation,
                                 const CoefficientField& field) {
  VcmCertificate cert{complex, augmentation, false, codim(complex), PdimEvidence{field, 0}, std::nullopt};
  cert.pdim.projective_dimension = projective_dimension(union_of(complex, augmentation), field);
  cert.verdict = cert.pdim.projective_dimension == cert.codim;
  return cert;
}

}  // namespace

VcmCertificate certify_vcm_via_union(const SimplicialComplex& complex, const SimplicialComplex& augmentation,
                                     const CoefficientField& field) {
  if (!(augmentation.shape() == complex.shape())) throw PreconditionFailed("augmentation lives on a different shape");
  if (!is_B_saturated(complex)) throw PreconditionFailed("certify_vcm_via_union: complex is not B-saturated");
  if (!only_irrelevant_difference(complex, augmentation)) {
    throw PreconditionFailed("certify_vcm_via_union: augmentation adds a relevant face");
  }
  return build_certificate(complex, augmentation, field);
}

VcmCertificate certify_balanced(const SimplicialComplex& complex, const CoefficientField& field) {
  BalancedCertificate balanced = balanced_vcm_certificate(complex);
  VcmCertificate cert = build_certificate(complex, balanced.augmentation, field);
  cert.shelling = std::move(balanced.order);
  return cert;
}

RecheckResult recheck_certificate(const VcmCertificate& certificate) {
  const SimplicialComplex& complex = certificate.input;
  const SimplicialComplex& augmentation = certificate.augmentation;
  if (!(augmentation.shape() == complex.shape())) return {false, "augmentation lives on a different shape"};
  if (!is_B_saturated(complex)) return {false, "input is not B-saturated"};
  if (!only_irrelevant_difference(complex, augmentation)) return {false, "augmentation adds a relevant face"};
  const SimplicialComplex merged = union_of(complex, augmentation);
  if (certificate.shelling) {
    if (!is_pure(merged)) return {false, "union is not pure"};
    std::vector<Face> sorted = *certificate.shelling;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != merged.facets()) return {false, "shelling order does not list the facets of the union"};
    const ShellingCheck check = verify_shelling(merged, *certificate.shelling);
    if (!check.ok) {
      return {false, "shelling fails at facet " + std::to_string(check.witness->first) + " against facet " +
                         std::to_string(check.witness->second)};
    }
  }
  const int expected_codim = codim(complex);
  if (expected_codim != certificate.codim) return {false, "recorded codim does not match"};
  const int pdim = projective_dimension(merged, certificate.pdim.field);
  if (pdim != certificate.pdim.projective_dimension) return {false, "recorded projective dimension does not match"};
  if (certificate.verdict != (pdim == expected_codim)) return {false, "verdict does not follow from pdim and codim"};
  return {};
}

const char* to_string(SearchOutcome::Status status) {
  switch (status) {
    case SearchOutcome::Status::Certified:
      return "certified";
    case SearchOutcome::Status::Exhausted:
      return "exhausted";
    case SearchOutcome::Status::BudgetExceeded:
      return "budget_exceeded";
  }
  return "unknown";
}

SearchOutcome augmentation_search(const SimplicialComplex& complex, const CoefficientField& field,
                                  std::uint64_t budget) {
  if (!is_B_saturated(complex)) throw PreconditionFailed("augmentation_search: complex is not B-saturated");
  if (!is_pure(complex)) throw PreconditionFailed("augmentation_search: complex is not pure");
  if (complex.is_void()) throw PreconditionFailed("augmentation_search: complex has no facets");

  SearchOutcome outcome;
  const std::vector<Face> candidates = enumerate_irrelevant_candidate_facets(complex);
  outcome.candidate_count = candidates.size();
  const std::size_t m = candidates.size();

  // Subsets by increasing size; within a size, index combinations in lexicographic order.
  for (std::size_t size = 0; size <= m; ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      if (outcome.subsets_tested >= budget) {
        outcome.status = SearchOutcome::Status::BudgetExceeded;
        outcome.reason = "budget of " + std::to_string(budget) + " subsets exhausted";
        return outcome;
      }
      ++outcome.subsets_tested;
      std::vector<Face> chosen;
      for (std::size_t i : pick) chosen.push_back(candidates[i]);
      const SimplicialComplex augmentation = SimplicialComplex::from_facets(complex.shape(), std::move(chosen));
      if (is_CM_reisner(union_of(complex, augmentation), field).cohen_macaulay) {
        outcome.status = SearchOutcome::Status::Certified;
        outcome.certificate = build_certificate(complex, augmentation, field);
        return outcome;
      }
      std::size_t pos = size;
      while (pos > 0 && pick[pos - 1] == m - size + pos - 1) --pos;
      if (pos == 0) break;
      ++pick[pos - 1];
      for (std::size_t i = pos; i < size; ++i) pick[i] = pick[i - 1] + 1;
    }
  }
  outcome.status = SearchOutcome::Status::Exhausted;
  outcome.reason = m == 0 ? "no irrelevant candidate facets of required dimension"
                          : "all " + std::to_string(outcome.subsets_tested) +
                                " augmentations tested; none is Cohen-Macaulay";
  return outcome;
}

}  // namespace vcmkit
