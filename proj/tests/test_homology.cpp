#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "vcmkit/errors.hpp"
#include "vcmkit/homology.hpp"
#include "vcmkit/stanley_reisner.hpp"

using namespace vcmkit;

namespace {

const CoefficientField kF2 = CoefficientField::prime(2);
const CoefficientField kF3 = CoefficientField::prime(3);
const CoefficientField kQ = CoefficientField::rationals();

SimplicialComplex from_ids(const Shape& s, std::initializer_list<std::initializer_list<int>> facets) {
  std::vector<Face> out;
  for (auto ids : facets) out.push_back(VertexSet(ids));
  return SimplicialComplex::from_facets(s, out);
}

// Six-vertex triangulation of the real projective plane.
SimplicialComplex rp2() {
  return from_ids(Shape({5}), {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                               {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}});
}

IntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int spread) {
  std::uniform_int_distribution<int> entry(-spread, spread);
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = entry(rng);
  }
  return m;
}

}  // namespace

TEST_CASE("field parsing and primality") {
  CHECK(CoefficientField::parse("Q").is_rational());
  CHECK(CoefficientField::parse("7").characteristic() == 7);
  CHECK_THROWS_AS(CoefficientField::parse("9"), InvalidInput);
  CHECK_THROWS_AS(CoefficientField::parse("x"), InvalidInput);
  CHECK_THROWS_AS(CoefficientField::prime(2147483659), InvalidInput);
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("Bareiss rank agrees with rational elimination") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 7);
    const int cols = 1 + static_cast<int>(rng() % 7);
    IntMatrix m = random_matrix(rng, rows, cols, trial % 2 == 0 ? 2 : 1000000);
    // Force some rank deficiency.
    if (rows > 2 && trial % 3 == 0) m.row(rows - 1) = 3 * m.row(0) - 5 * m.row(1);
    CHECK(rank(m, kQ) == oracle::rational_rank(m));
  }
}

TEST_CASE("rank mod p sees characteristic") {
  IntMatrix m(2, 2);
  m << 2, 0, 0, 2;
  CHECK(rank(m, kF2) == 0);
  CHECK(rank(m, kF3) == 2);
  CHECK(rank(m, kQ) == 2);
  CHECK(rank(IntMatrix(0, 4), kQ) == 0);
}

TEST_CASE("boundary of a boundary vanishes") {
  std::mt19937_64 rng(67);
  for (const Shape& s : {Shape({2, 2}), Shape({1, 1, 1}), Shape({5})}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto c = oracle::random_complex(s, rng, 0.8);
      const int top = *c.dim();
      for (int d = 1; d <= top; ++d) {
        const auto lower = boundary_matrix(c, d - 1, kQ).entries();
        const auto upper = boundary_matrix(c, d, kQ).entries();
        REQUIRE(lower.cols() == upper.rows());
        CHECK((lower * upper).isZero());
      }
    }
  }
}

TEST_CASE("boundary signs and the augmentation map") {
  const auto tri = from_ids(Shape({2}), {{0, 1, 2}});
  const IntMatrix d1 = boundary_matrix(tri, 1, kQ).entries();
  // Rows: vertices 0,1,2. Columns: edges {0,1},{0,2},{1,2}.
  IntMatrix expected(3, 3);
  expected << -1, -1, 0, 1, 0, -1, 0, 1, 1;
  CHECK(d1 == expected);
  const auto d0 = boundary_matrix(tri, 0, kQ);
  CHECK(d0.rows() == 1);
  CHECK(d0.entries() == IntMatrix::Ones(1, 3));
  CHECK(boundary_matrix(tri, -1, kQ).rows() == 0);
}

TEST_CASE("reduced homology of standard spaces") {
  const Shape s({5});
  const auto circle = from_ids(s, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(reduced_homology_ranks(circle, kQ).ranks == std::vector<int>{0, 0, 1});
  const auto two_points = from_ids(s, {{0}, {1}});
  CHECK(reduced_homology_ranks(two_points, kQ).ranks == std::vector<int>{0, 1});
  const auto disjoint_edges = from_ids(s, {{0, 1}, {2, 3}});
  CHECK(reduced_homology_ranks(disjoint_edges, kF2)[0] == 1);
  CHECK(reduced_homology_ranks(SimplicialComplex::irrelevant_only(s), kQ).ranks == std::vector<int>{1});
  CHECK(reduced_homology_ranks(SimplicialComplex::void_complex(s), kQ).ranks.empty());
  CHECK(reduced_homology_ranks(from_ids(s, {{0, 1, 2, 3}}), kQ).total() == 0);
}

TEST_CASE("projective plane exposes torsion") {
  const auto c = rp2();
  CHECK(c.facets().size() == 10);
  const auto cmp = compare_fields(c);
  CHECK(cmp.disagree());
  CHECK(cmp.over_q.total() == 0);
  CHECK(cmp.over_2[1] == 1);
  CHECK(cmp.over_2[2] == 1);
  CHECK(cmp.over_3.total() == 0);
}

TEST_CASE("homology agrees with a rational oracle") {
  std::mt19937_64 rng(71);
  for (const Shape& s : {Shape({2, 2}), Shape({1, 1, 1}), Shape({5})}) {
    for (int trial = 0; trial < 30; ++trial) {
      const auto c = oracle::random_complex(s, rng, 0.6);
      CHECK(reduced_homology_ranks(c, kQ).ranks == oracle::rational_reduced_homology(c));
    }
  }
}

TEST_CASE("Hochster formula on small ideals") {
  const Shape s({3});
  // Four isolated points: S/I with I generated by the six edges.
  const auto points = from_ids(s, {{0}, {1}, {2}, {3}});
  const auto betti = hochster_betti(points, kQ);
  CHECK(betti.total(0) == 1);
  CHECK(betti.total(1) == 6);
  CHECK(betti.total(2) == 8);
  CHECK(betti.total(3) == 3);
  CHECK(betti.max_index() == 3);
  CHECK(projective_dimension(points, kQ) == 3);
  CHECK(betti.at(1, VertexSet{0, 1}) == 1);
  CHECK(betti.at(1, VertexSet{0}) == 0);

  // Boundary of a triangle: principal ideal, pdim 1.
  const auto circle = from_ids(Shape({2}), {{0, 1}, {1, 2}, {0, 2}});
  CHECK(projective_dimension(circle, kF2) == 1);
  CHECK(hochster_betti(circle, kF2).at(1, VertexSet{0, 1, 2}) == 1);
  // Full simplex: zero ideal.
  CHECK(projective_dimension(from_ids(Shape({2}), {{0, 1, 2}}), kQ) == 0);
  CHECK_THROWS_AS((void)hochster_betti(points, kQ, 3), BoundExceeded);
}

TEST_CASE("first Betti numbers count minimal generators") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 40; ++trial) {
    const auto c = oracle::random_complex(Shape({2, 2}), rng);
    CHECK(hochster_betti(c, kF2).total(1) == static_cast<int>(ideal_of(c).generators().size()));
  }
}

TEST_CASE("Betti numbers are invariant under relabelling") {
  std::mt19937_64 rng(79);
  const Shape s({2, 2});
  std::vector<int> map{3, 5, 0, 1, 4, 2};
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = oracle::random_complex(s, rng);
    const auto moved = relabel(c, s, map);
    const auto a = hochster_betti(c, kQ);
    const auto b = hochster_betti(moved, kQ);
    for (int i = 0; i <= a.max_index(); ++i) CHECK(a.total(i) == b.total(i));
    CHECK(a.max_index() == b.max_index());
  }
}

TEST_CASE("Reisner criterion and witnesses") {
  const Shape s({5});
  // Two triangles sharing one vertex: the link of that vertex is two disjoint edges.
  const auto bowtie = from_ids(s, {{0, 1, 2}, {0, 3, 4}});
  const auto result = is_CM_reisner(bowtie, kQ);
  CHECK_FALSE(result.cohen_macaulay);
  REQUIRE(result.witness_face.has_value());
  CHECK(*result.witness_face == VertexSet{0});
  CHECK(result.witness_degree == 0);
  CHECK_FALSE(is_CM_pdim(bowtie, kQ));

  const auto disk = from_ids(s, {{0, 1, 2}, {0, 2, 3}});
  CHECK(is_CM_reisner(disk, kQ).cohen_macaulay);
  CHECK(is_CM_pdim(disk, kQ));

  // RP^2 is CM exactly in characteristic other than 2.
  CHECK(is_CM_reisner(rp2(), kQ).cohen_macaulay);
  CHECK_FALSE(is_CM_reisner(rp2(), kF2).cohen_macaulay);
  CHECK(is_CM_pdim(rp2(), kQ));
  CHECK_FALSE(is_CM_pdim(rp2(), kF2));

  CHECK_THROWS_AS((void)is_CM_reisner(SimplicialComplex::void_complex(s), kQ), PreconditionFailed);
}
