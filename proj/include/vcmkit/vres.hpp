#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vcmkit/complex.hpp"
#include "vcmkit/exact_matrix.hpp"
#include "vcmkit/polynomial.hpp"
#include "vcmkit/shelling.hpp"

namespace vcmkit {

/// F_0 <- F_1 <- ... <- F_k with graded shifts dropped. `differentials[k-1]`
/// is the rank(F_{k-1}) x rank(F_k) matrix of F_k -> F_{k-1}.
struct FreeComplexPresentation {
  Shape shape;
  std::vector<int> ranks;
  std::vector<PolyMatrix> differentials;

  /// Throws ShapeMismatch naming the first inconsistent matrix.
  void validate() const;
};

struct CompositionResult {
  /// 1-based k: the product d_k * d_{k+1}.
  int pair = 0;
  bool zero = true;
  /// First non-zero entry of the product (0-based row, col).
  std::optional<std::pair<Eigen::Index, Eigen::Index>> offending_entry;
};

struct CompositionReport {
  std::vector<CompositionResult> pairs;
  [[nodiscard]] bool ok() const;
};

/// Every consecutive product vanishes over the integers.
[[nodiscard]] CompositionReport compose_check(const FreeComplexPresentation& presentation);

struct ExampleFixture {
  std::string name;
  SimplicialComplex complex;
  /// Short vertex names a..f.
  std::map<std::string, Vertex> labels;
  std::optional<FreeComplexPresentation> presentation;
};

[[nodiscard]] std::vector<std::string> fixture_names();
/// "glued-tetrahedra" (two tetrahedra glued along an edge) or "eight-tetrahedra"
/// (a 3-dimensional complex on (2,2) whose resolution is one step too long).
/// Throws InvalidInput for any other name.
[[nodiscard]] ExampleFixture example_fixture(const std::string& name);

/// Irrelevant faces of X with dim Δ + 1 vertices that are not faces of Δ.
[[nodiscard]] std::vector<Face> enumerate_irrelevant_candidate_facets(const SimplicialComplex& complex);

struct PdimEvidence {
  CoefficientField field = CoefficientField::prime(2);
  int projective_dimension = 0;
};

/// Evidence that Δ is virtually Cohen-Macaulay through an irrelevant augmentation.
struct VcmCertificate {
  SimplicialComplex input;
  SimplicialComplex augmentation;
  bool verdict = false;
  int codim = 0;
  PdimEvidence pdim;
  std::optional<ShellingOrder> shelling;
};

struct RecheckResult {
  bool ok = true;
  std::string reason;
};

/// Re-derives every claim in `certificate` from scratch.
[[nodiscard]] RecheckResult recheck_certificate(const VcmCertificate& certificate);

/// Δ' \ Δ consists of irrelevant faces only.
[[nodiscard]] bool only_irrelevant_difference(const SimplicialComplex& base, const SimplicialComplex& augmentation);

/// Certification through a union: the minimal resolution of S/I_{Δ∪Δ'} is a
/// virtual resolution of S/I_Δ; verdict is pdim(Δ ∪ Δ') == codim(Δ).
/// Throws PreconditionFailed if Δ is not B-saturated or Δ' adds a relevant face.
[[nodiscard]] VcmCertificate certify_vcm_via_union(const SimplicialComplex& complex,
                                                   const SimplicialComplex& augmentation,
                                                   const CoefficientField& field);

/// Wraps balanced_vcm_certificate with the pdim confirmation.
[[nodiscard]] VcmCertificate certify_balanced(const SimplicialComplex& complex, const CoefficientField& field);

inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000;

struct SearchOutcome {
  enum class Status { Certified, Exhausted, BudgetExceeded };
  Status status = Status::Exhausted;
  std::optional<VcmCertificate> certificate;
  std::string reason;
  std::uint64_t subsets_tested = 0;
  std::size_t candidate_count = 0;
};

[[nodiscard]] const char* to_string(SearchOutcome::Status status);

/// Tries augmentations Δ' ⊆ candidates by increasing size, then
/// lexicographically, returning the first with Δ ∪ Δ' Cohen-Macaulay.
/// An Exhausted outcome says nothing about Δ being virtually Cohen-Macaulay.
/// Throws PreconditionFailed unless Δ is B-saturated and pure.
[[nodiscard]] SearchOutcome augmentation_search(const SimplicialComplex& complex, const CoefficientField& field,
                                                std::uint64_t budget = kDefaultSearchBudget);

}  // namespace vcmkit
