#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "vcmkit/errors.hpp"
#include "vcmkit/homology.hpp"
#include "vcmkit/polynomial.hpp"
#include "vcmkit/stanley_reisner.hpp"
#include "vcmkit/vres.hpp"

using namespace vcmkit;

namespace {

const CoefficientField kF2 = CoefficientField::prime(2);

Polynomial x(const Shape& s, int c, int j) { return Polynomial::variable(s.id({c, j}), s.vertex_count()); }

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const Shape s({1, 1});
  const Polynomial a = x(s, 1, 0);
  const Polynomial b = x(s, 2, 1);
  CHECK((a + b) * (a - b) == a * a - b * b);
  CHECK((a - a).is_zero());
  CHECK(Polynomial(0).is_zero());
  CHECK((Polynomial(3) * a).to_string(s) == "3*x_1_0");
  CHECK((-a).to_string(s) == "-x_1_0");
  CHECK((a * b - Polynomial(2)).to_string(s) == "x_1_0*x_2_1 - 2");
  CHECK(Polynomial::constant(BigInt(5)) == Polynomial(5));
  CHECK(Polynomial::variable(0, 4) == Polynomial::variable(0, 2));
}

TEST_CASE("polynomial products agree with evaluation") {
  std::mt19937_64 rng(101);
  const Shape s({1, 1});
  std::uniform_int_distribution<int> coeff(-3, 3);
  const auto random_poly = [&] {
    Polynomial p;
    for (int t = 0; t < 3; ++t) {
      Polynomial term(coeff(rng));
      for (int v = 0; v < 4; ++v) {
        if (rng() % 2 == 0) term *= Polynomial::variable(v, 4);
      }
      p += term;
    }
    return p;
  };
  const auto evaluate = [](const Polynomial& p, const std::vector<BigInt>& point) {
    BigInt total = 0;
    for (const auto& [exponent, c] : p.terms()) {
      BigInt term = c;
      for (std::size_t v = 0; v < exponent.size(); ++v) {
        for (int e = 0; e < exponent[v]; ++e) term *= point[v];
      }
      total += term;
    }
    return total;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = random_poly();
    const Polynomial q = random_poly();
    std::vector<BigInt> point;
    for (int v = 0; v < 4; ++v) point.emplace_back(coeff(rng));
    CHECK(evaluate(p * q, point) == evaluate(p, point) * evaluate(q, point));
    CHECK(evaluate(p - q, point) == evaluate(p, point) - evaluate(q, point));
  }
}

TEST_CASE("polynomial parsing") {
  const Shape s({2, 2});
  const auto labels = example_fixture("glued-tetrahedra").labels;
  CHECK(parse_polynomial("a*e - 2*f", s, labels) == x(s, 1, 0) * x(s, 2, 1) - Polynomial(2) * x(s, 2, 2));
  CHECK(parse_polynomial("x_1_2 * x_1_2", s) == x(s, 1, 2) * x(s, 1, 2));
  CHECK(parse_polynomial("-a - b", s, labels) == -(x(s, 1, 0) + x(s, 1, 1)));
  CHECK_THROWS_AS((void)parse_polynomial("-(a + b)", s, labels), InvalidInput);
  CHECK(parse_polynomial("0", s).is_zero());
  CHECK_THROWS_AS((void)parse_polynomial("x_3_0", s), InvalidInput);
  CHECK_THROWS_AS((void)parse_polynomial("a +", s, labels), InvalidInput);
  CHECK_THROWS_AS((void)parse_polynomial("zz", s, labels), InvalidInput);
  try {
    (void)parse_polynomial("a * * b", s, labels);
    FAIL("expected a parse error");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find('4') != std::string::npos);
  }
}

TEST_CASE("fixture presentations compose to zero") {
  for (const auto& name : fixture_names()) {
    const ExampleFixture fixture = example_fixture(name);
    REQUIRE(fixture.presentation.has_value());
    fixture.presentation->validate();
    const auto report = compose_check(*fixture.presentation);
    CHECK(report.ok());
    CHECK(report.pairs.size() == fixture.presentation->differentials.size() - 1);
  }
  CHECK(example_fixture("glued-tetrahedra").presentation->ranks == std::vector<int>{2, 4, 2});
  CHECK(example_fixture("eight-tetrahedra").presentation->ranks == std::vector<int>{3, 8, 5});
  CHECK_THROWS_AS((void)example_fixture("nope"), InvalidInput);
}

TEST_CASE("composition survives variable permutations") {
  std::mt19937_64 rng(103);
  for (const auto& name : fixture_names()) {
    const auto original = *example_fixture(name).presentation;
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<int> map(6);
      std::iota(map.begin(), map.end(), 0);
      std::shuffle(map.begin(), map.end(), rng);
      FreeComplexPresentation moved = original;
      for (auto& d : moved.differentials) d = d.unaryExpr([&](const Polynomial& p) { return p.substitute(map); });
      CHECK(compose_check(moved).ok());
    }
  }
}

TEST_CASE("a corrupted entry is located") {
  auto presentation = *example_fixture("glued-tetrahedra").presentation;
  presentation.differentials[1](2, 1) = presentation.differentials[1](2, 1) + Polynomial(1);
  const auto report = compose_check(presentation);
  CHECK_FALSE(report.ok());
  REQUIRE(report.pairs.size() == 1);
  CHECK(report.pairs[0].pair == 1);
  REQUIRE(report.pairs[0].offending_entry.has_value());
  CHECK(report.pairs[0].offending_entry->second == 1);

  auto broken = *example_fixture("glued-tetrahedra").presentation;
  broken.ranks[1] = 5;
  CHECK_THROWS_AS(broken.validate(), ShapeMismatch);
  CHECK_THROWS_AS((void)multiply(PolyMatrix(2, 3), PolyMatrix(2, 3)), ShapeMismatch);
}

TEST_CASE("glued tetrahedra invariants") {
  const auto fixture = example_fixture("glued-tetrahedra");
  const auto& c = fixture.complex;
  CHECK(c.facets().size() == 2);
  CHECK(codim(c) == 2);
  CHECK_FALSE(gallery_connected(c));
  const auto reisner = is_CM_reisner(c, kF2);
  CHECK_FALSE(reisner.cohen_macaulay);
  CHECK(*reisner.witness_face == c.shape().face({{2, 0}, {2, 1}}));
  CHECK(enumerate_irrelevant_candidate_facets(c).empty());
  const auto outcome = augmentation_search(c, kF2);
  CHECK(outcome.status == SearchOutcome::Status::Exhausted);
  CHECK(outcome.subsets_tested == 1);
}

TEST_CASE("eight tetrahedra invariants") {
  const auto c = example_fixture("eight-tetrahedra").complex;
  CHECK(codim(c) == 2);
  CHECK(projective_dimension(c, kF2) == 3);
  CHECK(projective_dimension(c, CoefficientField::rationals()) == 3);
  CHECK(enumerate_irrelevant_candidate_facets(c).empty());
  CHECK(augmentation_search(c, kF2).status == SearchOutcome::Status::Exhausted);
}

TEST_CASE("search finds the smallest augmentation") {
  const Shape s({1, 1});
  // Two disjoint points of P1 x P1; joining them by an irrelevant edge gives a path.
  const auto c = SimplicialComplex::from_facets(s, std::vector<Face>{VertexSet{0, 2}, VertexSet{1, 3}});
  const auto outcome = augmentation_search(c, kF2);
  REQUIRE(outcome.status == SearchOutcome::Status::Certified);
  CHECK(outcome.candidate_count == 2);
  const auto& cert = *outcome.certificate;
  CHECK(cert.augmentation.facets() == std::vector<Face>{VertexSet{0, 1}});
  CHECK(cert.verdict);
  CHECK(cert.codim == 2);
  CHECK(recheck_certificate(cert).ok);

  const auto cm = SimplicialComplex::from_facets(s, std::vector<Face>{VertexSet{0, 2}});
  const auto direct = augmentation_search(cm, kF2);
  REQUIRE(direct.status == SearchOutcome::Status::Certified);
  CHECK(direct.certificate->augmentation.is_void());
  CHECK(direct.subsets_tested == 1);

  const auto tight = augmentation_search(c, kF2, 1);
  CHECK(tight.status == SearchOutcome::Status::BudgetExceeded);

  const auto unsaturated = SimplicialComplex::from_facets(s, std::vector<Face>{VertexSet{0, 2}, VertexSet{0, 1}});
  CHECK_THROWS_AS((void)augmentation_search(unsaturated, kF2), PreconditionFailed);
}

TEST_CASE("certificates are rechecked from scratch") {
  const Shape s({2, 1});
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = oracle::random_pure_balanced(s, rng);
    auto cert = certify_balanced(c, kF2);
    CHECK(cert.verdict);
    CHECK(recheck_certificate(cert).ok);

    auto tampered = cert;
    tampered.pdim.projective_dimension += 1;
    CHECK_FALSE(recheck_certificate(tampered).ok);
    tampered = cert;
    std::reverse(tampered.shelling->begin(), tampered.shelling->end());
    CHECK(recheck_certificate(tampered).ok == oracle::is_shelling(*tampered.shelling));
    tampered.shelling->pop_back();
    CHECK_FALSE(recheck_certificate(tampered).ok);
    tampered = cert;
    tampered.codim = 5;
    CHECK_FALSE(recheck_certificate(tampered).ok);
  }
  const auto relevant = SimplicialComplex::from_facets(Shape({1, 1}), std::vector<Face>{VertexSet{1, 3}});
  const auto base = SimplicialComplex::from_facets(Shape({1, 1}), std::vector<Face>{VertexSet{0, 2}});
  CHECK_FALSE(only_irrelevant_difference(base, relevant));
  CHECK_THROWS_AS((void)certify_vcm_via_union(base, relevant, kF2), PreconditionFailed);
}
