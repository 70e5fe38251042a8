#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "vcmkit/errors.hpp"
#include "vcmkit/homology.hpp"
#include "vcmkit/shelling.hpp"

using namespace vcmkit;

namespace {

SimplicialComplex from_faces(const Shape& s, std::vector<Face> facets) {
  return SimplicialComplex::from_facets(s, std::move(facets));
}

bool same_elements(std::vector<Face> a, std::vector<Face> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

TEST_CASE("verify_shelling agrees with the definition") {
  std::mt19937_64 rng(83);
  const Shape s({2, 2});
  int shellable = 0;
  int not_shellable = 0;
  for (int trial = 0; trial < 300; ++trial) {
    // Random pure 2-dimensional complexes on six vertices.
    std::vector<Face> facets;
    const int count = 2 + static_cast<int>(rng() % 4);
    while (static_cast<int>(facets.size()) < count) {
      Face f;
      while (f.size() < 3) f.insert(static_cast<int>(rng() % 6));
      if (std::find(facets.begin(), facets.end(), f) == facets.end()) facets.push_back(f);
    }
    const auto c = from_faces(s, facets);
    std::shuffle(facets.begin(), facets.end(), rng);
    const bool expected = oracle::is_shelling(facets);
    const auto check = verify_shelling(c, facets);
    CHECK(check.ok == expected);
    if (!check.ok) {
      REQUIRE(check.witness.has_value());
      CHECK(check.witness->second < check.witness->first);
    }
    (expected ? shellable : not_shellable)++;
  }
  CHECK(shellable > 20);
  CHECK(not_shellable > 20);
}

TEST_CASE("verify_shelling preconditions") {
  const Shape s({2, 2});
  const auto c = from_faces(s, {VertexSet{0, 1}, VertexSet{1, 2}});
  CHECK(verify_shelling(c, {VertexSet{0, 1}, VertexSet{1, 2}}).ok);
  CHECK_THROWS_AS((void)verify_shelling(c, {VertexSet{0, 1}}), PreconditionFailed);
  CHECK_THROWS_AS((void)verify_shelling(c, {VertexSet{0, 1}, VertexSet{3, 4}}), PreconditionFailed);
  const auto impure = from_faces(s, {VertexSet{0, 1}, VertexSet{3}});
  CHECK_THROWS_AS((void)verify_shelling(impure, impure.facets()), PreconditionFailed);
  // Two disjoint edges: the second meets the first in the empty face only.
  const auto apart = from_faces(s, {VertexSet{0, 1}, VertexSet{3, 4}});
  const auto check = verify_shelling(apart, apart.facets());
  CHECK_FALSE(check.ok);
  CHECK(check.witness == std::pair{2, 1});
}

TEST_CASE("irrelevant complex matches brute force") {
  for (const Shape& s : {Shape({1, 1}), Shape({2, 1}), Shape({1, 1, 1}), Shape({2, 2}), Shape({3}), Shape({2, 0, 1})}) {
    const auto c = irrelevant_complex(s);
    if (s.r() == 1) {
      CHECK(c.is_void());
      continue;
    }
    CHECK(c.facets() == oracle::irrelevant_facets(s));
  }
  CHECK(irrelevant_complex(Shape({1, 1, 1})).facets().size() == 12);
  CHECK(irrelevant_complex(Shape({1, 1})).facets().size() == 2);
}

TEST_CASE("facet keys round trip and compare as a total order") {
  for (const Shape& s : {Shape({2, 1}), Shape({1, 1, 1}), Shape({2, 2}), Shape({1, 2, 1})}) {
    const auto irr = irrelevant_complex(s);
    for (const Face& face : irr.facets()) {
      const FacetKey key = FacetKey::from_face(face, s);
      CHECK(key.to_face(s) == face);
    }
    for (int k = 1; k <= s.r(); ++k) {
      std::vector<FacetKey> keys;
      for (const Face& face : irr.facets()) {
        const FacetKey key = FacetKey::from_face(face, s);
        if (key.excluded == k) keys.push_back(key);
      }
      for (const auto& a : keys) {
        CHECK(compare_facets(a, a) == 0);
        for (const auto& b : keys) {
          CHECK((compare_facets(a, b) < 0) == (compare_facets(b, a) > 0));
          if (compare_facets(a, b) == 0) CHECK(a.to_face(s) == b.to_face(s));
          for (const auto& c : keys) {
            if (compare_facets(a, b) < 0 && compare_facets(b, c) < 0) CHECK(compare_facets(a, c) < 0);
          }
        }
      }
    }
  }
  const Shape s({1, 1, 1});
  const auto a = FacetKey::from_face(s.face({{1, 0}, {1, 1}, {2, 0}}), s);
  const auto b = FacetKey::from_face(s.face({{1, 0}, {1, 1}, {3, 0}}), s);
  CHECK(a.excluded != b.excluded);
  CHECK_THROWS_AS((void)compare_facets(a, b), InvalidInput);
  CHECK_THROWS_AS((void)FacetKey::from_face(s.face({{1, 0}, {2, 0}, {3, 0}}), s), InvalidInput);
}

TEST_CASE("pair order is component first") {
  CHECK(compare_pairs({1, 0, 2}, {2, 0, 1}) < 0);
  CHECK(compare_pairs({1, 0, 2}, {1, 1, 2}) < 0);
  CHECK(compare_pairs({1, 0, 1}, {1, 0, 2}) < 0);
}

TEST_CASE("shelling order of P1 x P1") {
  const Shape s({1, 1});
  const Face r = s.face({{1, 0}, {2, 0}});
  const auto order = irrelevant_shelling_order(s, r);
  const std::vector<Face> expected{r, s.face({{1, 0}, {1, 1}}), s.face({{2, 0}, {2, 1}})};
  CHECK(order == expected);
  CHECK_THROWS_AS((void)irrelevant_shelling_order(Shape({1, 0}), s.face({{1, 0}})), PreconditionFailed);
  CHECK_THROWS_AS((void)irrelevant_shelling_order(s, s.face({{1, 0}, {1, 1}})), PreconditionFailed);
}

TEST_CASE("shelling order covers R and the irrelevant complex exactly once") {
  for (const Shape& s : {Shape({2, 1}), Shape({1, 1, 1}), Shape({2, 2}), Shape({3, 1})}) {
    for (const Face& r : oracle::balanced_grid(s)) {
      const auto order = irrelevant_shelling_order(s, r);
      auto expected = irrelevant_complex(s).facets();
      expected.push_back(r);
      CHECK(same_elements(order, expected));
      CHECK(order.front() == r);
      CHECK(oracle::is_shelling(order));
    }
  }
}

TEST_CASE("balanced certificates on small shapes") {
  SUBCASE("P1 x P1 with one point") {
    const Shape s({1, 1});
    const auto c = from_faces(s, {s.face({{1, 1}, {2, 0}})});
    const auto cert = balanced_vcm_certificate(c);
    CHECK(cert.augmentation == irrelevant_complex(s));
    CHECK(verify_shelling(union_of(c, cert.augmentation), cert.order).ok);
    CHECK(cert.order.front() == c.facets().front());
  }
  SUBCASE("a point of P0 x P0") {
    const Shape s({0, 0});
    const auto c = from_faces(s, {VertexSet{0, 1}});
    const auto cert = balanced_vcm_certificate(c);
    CHECK(cert.augmentation.is_void());
    CHECK(cert.order == c.facets());
  }
  SUBCASE("P1 x P0 cones over the zero component") {
    const Shape s({1, 0});
    const auto c = from_faces(s, {VertexSet{0, 2}, VertexSet{1, 2}});
    const auto cert = balanced_vcm_certificate(c);
    CHECK(cert.augmentation.is_void());
    CHECK(verify_shelling(union_of(c, cert.augmentation), cert.order).ok);
  }
  SUBCASE("zero components in the middle") {
    const Shape s({1, 0, 1});
    const auto c = from_faces(s, {VertexSet{0, 2, 4}, VertexSet{1, 2, 3}});
    const auto cert = balanced_vcm_certificate(c);
    for (const Face& f : cert.augmentation.facets()) CHECK(f.contains(2));
    CHECK(verify_shelling(union_of(c, cert.augmentation), cert.order).ok);
  }
  SUBCASE("rejects an unbalanced facet") {
    const Shape s({1, 1});
    CHECK_THROWS_AS((void)balanced_vcm_certificate(from_faces(s, {VertexSet{0, 1}})), PreconditionFailed);
    CHECK_THROWS_AS((void)balanced_vcm_certificate(SimplicialComplex::void_complex(s)), PreconditionFailed);
  }
}

TEST_CASE("coning preserves shellability") {
  std::mt19937_64 rng(89);
  const Shape s({2, 2});
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Face> facets;
    const int count = 1 + static_cast<int>(rng() % 4);
    while (static_cast<int>(facets.size()) < count) {
      Face f;
      while (f.size() < 2) f.insert(static_cast<int>(rng() % 5));
      facets.push_back(f);
    }
    const auto c = from_faces(s, facets);
    const auto coned = cone(c, 5);
    const bool base = oracle::find_shelling(c).has_value();
    CHECK(oracle::find_shelling(coned).has_value() == base);
    if (base) {
      auto order = *oracle::find_shelling(c);
      for (Face& f : order) f.insert(5);
      CHECK(verify_shelling(coned, order).ok);
    }
  }
}

TEST_CASE("shellable complexes are Cohen-Macaulay") {
  std::mt19937_64 rng(97);
  const Shape s({2, 2});
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Face> facets;
    const int count = 1 + static_cast<int>(rng() % 5);
    while (static_cast<int>(facets.size()) < count) {
      Face f;
      while (f.size() < 3) f.insert(static_cast<int>(rng() % 6));
      facets.push_back(f);
    }
    const auto c = from_faces(s, facets);
    if (oracle::find_shelling(c)) {
      CHECK(is_CM_reisner(c, CoefficientField::prime(2)).cohen_macaulay);
      CHECK(is_CM_reisner(c, CoefficientField::rationals()).cohen_macaulay);
    }
  }
}
