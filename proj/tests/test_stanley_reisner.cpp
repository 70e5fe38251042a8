#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "vcmkit/errors.hpp"
#include "vcmkit/saturation_oracle.hpp"
#include "vcmkit/stanley_reisner.hpp"

using namespace vcmkit;

namespace {

Monomial indicator(const Face& face, int n) {
  Monomial m(static_cast<std::size_t>(n), 0);
  face.for_each([&](int id) { m[static_cast<std::size_t>(id)] = 1; });
  return m;
}

MonomialGens gens_of(const SqfIdeal& ideal) {
  const int n = ideal.shape().vertex_count();
  if (ideal.is_unit()) return {Monomial(static_cast<std::size_t>(n), 0)};
  MonomialGens out;
  for (const Face& g : ideal.generators()) out.push_back(indicator(g, n));
  return minimalize(out);
}

}  // namespace

TEST_CASE("ideal_of matches the minimal non-faces") {
  std::mt19937_64 rng(41);
  for (const Shape& s : {Shape({1, 1}), Shape({2, 1}), Shape({1, 1, 1}), Shape({2, 2}), Shape({4})}) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto c = oracle::random_complex(s, rng);
      CHECK(ideal_of(c).generators() == oracle::minimal_nonfaces(c));
    }
  }
}

TEST_CASE("complex and ideal round trip on every antichain up to six vertices") {
  for (const Shape& s : {Shape({1}), Shape({1, 1}), Shape({2, 1}), Shape({1, 1, 1}), Shape({2, 2})}) {
    if (s.vertex_count() > 5) continue;
    for (const auto& facets : oracle::antichains(s.vertex_count())) {
      const auto c = SimplicialComplex::from_facets(s, facets);
      const auto ideal = ideal_of(c);
      if (c.is_void()) {
        CHECK(ideal.is_unit());
        CHECK_THROWS_AS((void)complex_of(ideal), UnitIdeal);
        continue;
      }
      CHECK(complex_of(ideal) == c);
      for (auto m = std::uint64_t{0}; m < (std::uint64_t{1} << s.vertex_count()); ++m) {
        const auto face = VertexSet::from_mask(m);
        CHECK(ideal.contains(face) == !c.contains(face));
      }
    }
  }
}

TEST_CASE("round trip on six vertices, sampled") {
  std::mt19937_64 rng(43);
  const Shape s({2, 2});
  for (int trial = 0; trial < 300; ++trial) {
    const auto c = oracle::random_complex(s, rng, 0.7);
    CHECK(complex_of(ideal_of(c)) == c);
  }
}

TEST_CASE("SqfIdeal keeps minimal generators") {
  const Shape s({1, 1});
  const SqfIdeal ideal(s, {VertexSet{0, 1}, VertexSet{0}, VertexSet{2, 3}, VertexSet{0, 2}});
  CHECK(ideal.generators() == std::vector<Face>{VertexSet{0}, VertexSet{2, 3}});
  CHECK_THROWS_AS(SqfIdeal(s, {VertexSet{}}), InvalidInput);
  CHECK(SqfIdeal::zero(s).is_zero());
  CHECK(complex_of(SqfIdeal::zero(s)) == SimplicialComplex::simplex(s));
}

TEST_CASE("irrelevant ideal of P1 x P1") {
  const auto b = irrelevant_ideal(Shape({1, 1}));
  CHECK(b.generators() == std::vector<Face>{VertexSet{0, 2}, VertexSet{0, 3}, VertexSet{1, 2}, VertexSet{1, 3}});
}

TEST_CASE("prime components intersect to the Stanley-Reisner ideal") {
  std::mt19937_64 rng(47);
  const Shape s({2, 1});
  for (int trial = 0; trial < 50; ++trial) {
    const auto c = oracle::random_complex(s, rng);
    const auto primes = prime_components(c);
    REQUIRE(primes.size() == c.facets().size());
    const auto ideal = ideal_of(c);
    for (int sample = 0; sample < 40; ++sample) {
      const auto m = VertexSet::from_mask(rng() & 31U);
      bool in_all = true;
      for (const auto& p : primes) in_all = in_all && m.intersects(p.generators);
      CHECK(in_all == ideal.contains(m));
    }
    for (std::size_t k = 0; k < primes.size(); ++k) {
      CHECK(primes[k].codim == s.vertex_count() - c.facets()[k].size());
    }
  }
}

TEST_CASE("saturation removes irrelevant facets") {
  const Shape s({1, 1});
  const auto c = SimplicialComplex::from_facets(s, std::vector<Face>{VertexSet{0, 2}, VertexSet{0, 1}});
  CHECK_FALSE(is_B_saturated(c));
  const auto sat = saturate_by_B(c);
  CHECK(sat.facets() == std::vector<Face>{VertexSet{0, 2}});
  CHECK(is_B_saturated(sat));
}

TEST_CASE("squarefree saturation agrees with the colon-ideal oracle") {
  std::mt19937_64 rng(53);
  for (const Shape& s : {Shape({1, 1}), Shape({2, 1}), Shape({1, 1, 1})}) {
    const auto b = gens_of(irrelevant_ideal(s));
    for (int trial = 0; trial < 40; ++trial) {
      const auto c = oracle::random_complex(s, rng);
      const auto expected = saturation_oracle(gens_of(ideal_of(c)), b, 8);
      const auto sat = saturate_by_B(c);
      CHECK(gens_of(ideal_of(sat)) == expected);
    }
  }
}

TEST_CASE("colon and saturation on non-squarefree ideals") {
  // (x^2 y, x y^2) : (x y) = (x, y)
  const MonomialGens i{{2, 1}, {1, 2}};
  CHECK(colon(i, Monomial{1, 1}) == MonomialGens{{0, 1}, {1, 0}});
  // (x^3) : (x)^∞ is the unit ideal.
  CHECK(saturation_oracle({{3, 0}}, {{1, 0}}, 5) == MonomialGens{{0, 0}});
  // (x y) : (x, y)^∞ = (x y): no generator divides into the unit.
  CHECK(saturation_oracle({{1, 1}}, {{1, 0}, {0, 1}}, 5) == MonomialGens{{1, 1}});
  CHECK(intersect({{1, 0}}, {{0, 1}}) == MonomialGens{{1, 1}});
  CHECK(ideal_contains({{1, 0}}, {3, 4}));
  CHECK_FALSE(ideal_contains({}, {0, 0}));
  CHECK_THROWS_AS((void)saturation_oracle({{5, 0}}, {{1, 0}}, 2), BoundExceeded);
}

TEST_CASE("codimension on small examples") {
  const Shape s({1, 1});
  // A point of P1 x P1 is a balanced edge.
  const auto point = SimplicialComplex::from_facets(s, std::vector<Face>{VertexSet{0, 2}});
  CHECK(codim(point) == 2);
  CHECK(codim_affine(point) == 2);
  // A line {x_1_0 = 0} corresponds to facet {x11, x20, x21}.
  const auto line = SimplicialComplex::from_facets(s, std::vector<Face>{VertexSet{1, 2, 3}});
  CHECK(codim(line) == 1);
  CHECK_THROWS_AS((void)codim(SimplicialComplex::from_facets(s, std::vector<Face>{VertexSet{0, 1}})), EmptyVariety);
  CHECK_THROWS_AS((void)codim_affine(SimplicialComplex::void_complex(s)), PreconditionFailed);
}
