#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace chessideal;
using namespace testing_support;

namespace {

SimplicialComplex complex_of(std::size_t n, std::initializer_list<std::initializer_list<std::size_t>> facets) {
  std::vector<VertexSet> sets;
  for (auto f : facets) {
    VertexSet s;
    for (auto v : f) s.insert(v - 1);
    sets.push_back(s);
  }
  return SimplicialComplex::from_facets(VariableSet::indexed(n), std::move(sets));
}

SimplicialComplex hollow_triangle() { return complex_of(3, {{1, 2}, {2, 3}, {1, 3}}); }

// Six-vertex real projective plane.
SimplicialComplex rp2() {
  return complex_of(6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2},
                        {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}});
}

SparseMatrix dense_to_sparse(const std::vector<std::vector<std::uint32_t>>& rows, const FieldSpec& f) {
  std::vector<MatrixEntry> e;
  for (std::uint32_t r = 0; r < rows.size(); ++r) {
    for (std::uint32_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c] % f.characteristic() != 0) e.push_back({r, c, rows[r][c]});
    }
  }
  return SparseMatrix(rows.size(), rows.empty() ? 0 : rows[0].size(), std::move(e), f);
}

}  // namespace

TEST(FieldSpec, ValidatesCharacteristic) {
  EXPECT_EQ(FieldSpec().characteristic(), 32003u);
  EXPECT_EQ(FieldSpec::gf2().characteristic(), 2u);
  EXPECT_THROW(FieldSpec(4), std::invalid_argument);
  EXPECT_THROW(FieldSpec(1), std::invalid_argument);
  FieldSpec f(7);
  for (std::uint32_t a = 1; a < 7; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  EXPECT_EQ(f.sign(3), 6u);
  EXPECT_EQ(FieldSpec::gf2().sign(3), 1u);
}

TEST(FacesOfDim, Examples) {
  EXPECT_EQ(faces_of_dim(hollow_triangle(), 1).size(), 3u);
  EXPECT_TRUE(faces_of_dim(hollow_triangle(), 2).empty());
  EXPECT_EQ(faces_of_dim(hollow_triangle(), -1).size(), 1u);
  EXPECT_EQ(faces_of_dim(chessboard_complex(Board(3, 3)), 2).size(), 6u);
  EXPECT_EQ(faces_of_dim(chessboard_complex(Board(3, 3)), 1).size(), 18u);
}

TEST(BoundaryMatrix, SingleEdge) {
  FieldSpec f;
  auto d = boundary_matrix(complex_of(2, {{1, 2}}), 1, f);
  EXPECT_EQ(d.rows(), 2u);
  EXPECT_EQ(d.cols(), 1u);
  ASSERT_EQ(d.entries().size(), 2u);
  // d[v0 v1] = v1 - v0
  EXPECT_EQ(d.entries()[0].value, f.neg(1));
  EXPECT_EQ(d.entries()[1].value, 1u);
  EXPECT_EQ(rank(d, f), 1u);
}

TEST(Rank, Examples) {
  FieldSpec f;
  EXPECT_EQ(rank(SparseMatrix(3, 3, {}, f), f), 0u);
  EXPECT_EQ(rank(dense_to_sparse({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, f), f), 3u);
  auto gf2 = FieldSpec::gf2();
  EXPECT_EQ(rank(boundary_matrix(hollow_triangle(), 1, gf2), gf2), 2u);
  // rank depends on the field: det = 3
  auto m = std::vector<std::vector<std::uint32_t>>{{1, 1}, {1, 4}};
  EXPECT_EQ(rank(dense_to_sparse(m, FieldSpec(3)), FieldSpec(3)), 1u);
  EXPECT_EQ(rank(dense_to_sparse(m, FieldSpec(5)), FieldSpec(5)), 2u);
}

TEST(SparseMatrix, RejectsBadEntries) {
  FieldSpec f;
  EXPECT_THROW(SparseMatrix(2, 2, {{2, 0, 1}}, f), std::out_of_range);
  EXPECT_THROW(SparseMatrix(2, 2, {{0, 0, 1}, {0, 0, 2}}, f), std::invalid_argument);
}

TEST(Rank, DenseAndSparseKernelsAgree) {
  std::mt19937 rng(31);
  for (std::uint32_t p : {2U, 3U, 32003U}) {
    FieldSpec f(p);
    for (int trial = 0; trial < 60; ++trial) {
      std::uniform_int_distribution<std::size_t> dim(1, 14);
      const std::size_t rows = dim(rng), cols = dim(rng);
      std::bernoulli_distribution present(0.3);
      std::uniform_int_distribution<std::uint32_t> val(1, p - 1);
      std::vector<detail::SparseColumn> columns(cols);
      for (std::size_t c = 0; c < cols; ++c) {
        for (std::uint32_t r = 0; r < rows; ++r) {
          if (present(rng)) columns[c].emplace_back(r, val(rng));
        }
      }
      const auto dense = p == 2 ? detail::dense_rank_gf2(rows, columns) : detail::dense_rank_modp(rows, columns, f);
      const auto sparse = detail::sparse_column_reduction(rows, columns, f).rank;
      EXPECT_EQ(dense, sparse) << "p=" << p << " trial " << trial;
      EXPECT_LE(dense, std::min(rows, cols));
    }
  }
}

TEST(ReducedBetti, Examples) {
  FieldSpec f;
  auto tri = reduced_betti(hollow_triangle(), f);
  EXPECT_EQ(tri.at(0), 0u);
  EXPECT_EQ(tri.at(1), 1u);
  auto two_points = reduced_betti(complex_of(2, {{1}, {2}}), f);
  EXPECT_EQ(two_points.at(0), 1u);
  auto two_edges = reduced_betti(complex_of(4, {{1, 2}, {3, 4}}), f);
  EXPECT_EQ(two_edges.at(0), 1u);
  EXPECT_EQ(two_edges.at(1), 0u);
}

TEST(ReducedBetti, DegenerateComplexes) {
  FieldSpec f;
  auto vars = VariableSet::indexed(3);
  EXPECT_TRUE(reduced_betti(SimplicialComplex::void_complex(vars), f).is_zero());
  auto irr = reduced_betti(SimplicialComplex::irrelevant(vars), f);
  EXPECT_EQ(irr.at(-1), 1u);
  EXPECT_TRUE(reduced_betti(SimplicialComplex::simplex(vars), f).is_zero());
}

TEST(ReducedBetti, ChessboardComplexes) {
  FieldSpec f;
  // 6-cycle
  EXPECT_EQ(reduced_betti(chessboard_complex(Board(2, 3)), f).at(1), 1u);
  // Euler characteristic 9 - 18 + 6, connected, no 2-cycles
  auto b33 = reduced_betti(chessboard_complex(Board(3, 3)), f);
  EXPECT_EQ(b33.at(0), 0u);
  EXPECT_EQ(b33.at(1), 4u);
  EXPECT_EQ(b33.at(2), 0u);
  // the 3 x 4 chessboard complex is a torus
  auto b34 = reduced_betti(chessboard_complex(Board(3, 4)), f);
  EXPECT_EQ(b34.values(), (std::vector<std::size_t>{0, 0, 2, 1}));
}

TEST(ReducedBetti, TorsionShowsUpOnlyInCharacteristicTwo) {
  auto odd = reduced_betti(rp2(), FieldSpec(32003));
  auto two = reduced_betti(rp2(), FieldSpec::gf2());
  EXPECT_TRUE(odd.is_zero());
  EXPECT_EQ(two.at(1), 1u);
  EXPECT_EQ(two.at(2), 1u);
}

TEST(ReducedBetti, ConesAreAcyclic) {
  std::mt19937 rng(32);
  FieldSpec f;
  for (int trial = 0; trial < 30; ++trial) {
    auto base = facet_complex(random_squarefree(rng, 6, 5));
    std::vector<VertexSet> coned;
    for (auto s : base.facets()) coned.push_back(s | VertexSet::of({6}));
    auto cone = SimplicialComplex::from_facets(VariableSet::indexed(7), coned);
    EXPECT_TRUE(reduced_betti(cone, f).is_zero()) << "trial " << trial;
  }
}

TEST(ReducedBetti, EulerCharacteristicAndChainCondition) {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    auto delta = facet_complex(random_squarefree(rng, 8, 6));
    auto table = FaceTable::of(delta);
    for (auto f : {FieldSpec(), FieldSpec::gf2()}) {
      EXPECT_TRUE(boundary_squares_to_zero(table, f));
      auto b = reduced_betti(table, f);
      long chi = 0, bchi = 0;
      for (int d = -1; d <= table.top_dimension(); ++d) {
        long sign = (d + 1) % 2 == 0 ? 1 : -1;
        chi += sign * static_cast<long>(table.count(d));
        bchi += sign * static_cast<long>(b.at(d));
      }
      EXPECT_EQ(chi, bchi);
    }
  }
}

TEST(FaceTable, PredicateMatchesFacetConstruction) {
  auto delta = chessboard_complex(Board(2, 3));
  auto a = FaceTable::of(delta);
  auto b = FaceTable::from_predicate(VertexSet::prefix(6), [&](VertexSet s) { return delta.contains_face(s); });
  ASSERT_EQ(a.top_dimension(), b.top_dimension());
  for (int d = -1; d <= a.top_dimension(); ++d) EXPECT_EQ(a.faces(d), b.faces(d));
}
