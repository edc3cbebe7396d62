#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "test_support.hpp"

using namespace chessideal;
using namespace testing_support;

namespace {

// Ordered column tuples, one per row, pairwise distinct.
std::size_t count_placements(std::size_t m, std::size_t n) {
  std::size_t c = 1;
  for (std::size_t k = 0; k < m; ++k) c *= n - k;
  return c;
}

std::size_t choose(std::size_t n, std::size_t k) { return static_cast<std::size_t>(verify::detail::binomial(n, k)); }

}  // namespace

TEST(Board, IndexingIsABijection) {
  Board b(3, 4);
  for (std::size_t f = 0; f < b.cell_count(); ++f) {
    auto [i, j] = b.cell(f);
    EXPECT_EQ(b.index(i, j), f);
  }
  EXPECT_EQ(b.index(2, 3), 6u);
  EXPECT_EQ(b.vars()->label(b.index(2, 3)), "x[2,3]");
  EXPECT_THROW(b.index(0, 1), std::out_of_range);
  EXPECT_THROW(b.index(4, 1), std::out_of_range);
  EXPECT_THROW(Board(3, 2), std::invalid_argument);
  EXPECT_THROW(Board(0, 2), std::invalid_argument);
}

TEST(ChessboardComplex, FacetCounts) {
  EXPECT_EQ(chessboard_complex(Board(1, 5)).facets().size(), 5u);
  EXPECT_EQ(chessboard_complex(Board(3, 3)).facets().size(), 6u);
  EXPECT_EQ(chessboard_complex(Board(2, 4)).facets().size(), 12u);
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = m; n <= 5; ++n) {
      auto d = chessboard_complex(Board(m, n));
      EXPECT_EQ(d.facets().size(), count_placements(m, n));
      EXPECT_EQ(d.dimension(), static_cast<int>(m) - 1);
    }
  }
}

TEST(FacetIdeal, ListedExamples) {
  Board b(3, 3);
  std::vector<Monomial> six = {cell(b, {{1, 1}, {2, 2}, {3, 3}}), cell(b, {{1, 1}, {2, 3}, {3, 2}}),
                               cell(b, {{1, 2}, {2, 1}, {3, 3}}), cell(b, {{1, 2}, {2, 3}, {3, 1}}),
                               cell(b, {{1, 3}, {2, 1}, {3, 2}}), cell(b, {{1, 3}, {2, 2}, {3, 1}})};
  EXPECT_EQ(facet_ideal(b), min_gens(six, b.vars()));

  Board r(1, 3);
  EXPECT_EQ(facet_ideal(r), min_gens({cell(r, {{1, 1}}), cell(r, {{1, 2}}), cell(r, {{1, 3}})}, r.vars()));

  Board s(2, 2);
  EXPECT_EQ(facet_ideal(s), min_gens({cell(s, {{1, 1}, {2, 2}}), cell(s, {{1, 2}, {2, 1}})}, s.vars()));
}

TEST(StanleyReisner, Examples) {
  Board b(2, 2);
  EXPECT_EQ(stanley_reisner_ideal(b), min_gens({cell(b, {{1, 1}, {1, 2}}), cell(b, {{2, 1}, {2, 2}}),
                                                cell(b, {{1, 1}, {2, 1}}), cell(b, {{1, 2}, {2, 2}})},
                                               b.vars()));
  EXPECT_EQ(stanley_reisner_ideal(Board(1, 4)).size(), 6u);
  EXPECT_EQ(stanley_reisner_ideal(Board(3, 3)).size(), 18u);
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = m; n <= 4; ++n) {
      Board c(m, n);
      EXPECT_EQ(stanley_reisner_ideal(c), sr_ideal_of_complex(chessboard_complex(c))) << m << "x" << n;
    }
  }
}

TEST(MinimalPrimesFormula, SmallBoards) {
  Board b(2, 2);
  auto p = minimal_primes_formula(b);
  EXPECT_EQ(p.size(), 4u);
  EXPECT_EQ(p, minimal_primes(facet_ideal(b)));
  Board r(1, 4);
  EXPECT_EQ(minimal_primes_formula(r), (std::vector<VertexSet>{r.row(1)}));
}

TEST(MinimalPrimesFormula, AgreesWithCoverEnumeration) {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = m; n <= 5; ++n) {
      if (m * n > 16) continue;
      Board b(m, n);
      auto formula = minimal_primes_formula(b);
      EXPECT_EQ(formula, minimal_primes(facet_ideal(b))) << m << "x" << n;
      std::size_t expected = 0;
      for (std::size_t s = 0; s < m; ++s) expected += choose(m, s) * choose(n, m - 1 - s);
      EXPECT_EQ(formula.size(), expected);
    }
  }
}

TEST(PrimeProfile, ClosedFormBranches) {
  EXPECT_EQ(prime_profile(Board(3, 3)), (PrimeProfile{3, 6, 4}));
  EXPECT_EQ(prime_profile(Board(2, 3)), (PrimeProfile{3, 3, 4}));
  EXPECT_EQ(prime_profile(Board(1, 5)), (PrimeProfile{5, 0, 5}));
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = m; n <= 5; ++n) {
      if (m * n > 16) continue;
      Board b(m, n);
      EXPECT_EQ(prime_profile(b), prime_profile_of(minimal_primes(facet_ideal(b)), b.cell_count())) << m << "x" << n;
    }
  }
}

TEST(Subcomplexes, TwoByThreeExample) {
  Board b(2, 3);
  auto a = subcomplex_A(b, 2);
  auto expected_a = std::vector<VertexSet>{VertexSet::of({b.index(1, 1), b.index(2, 3)}),
                                           VertexSet::of({b.index(1, 2), b.index(2, 3)})};
  std::sort(expected_a.begin(), expected_a.end(), LexLess{});
  EXPECT_EQ(a.facets(), expected_a);
  auto bb = subcomplex_B(b, 2);
  auto expected_b = std::vector<VertexSet>{VertexSet::of({b.index(1, 1)}), VertexSet::of({b.index(1, 3)})};
  EXPECT_EQ(bb.facets(), expected_b);
  EXPECT_THROW(subcomplex_A(b, 4), std::out_of_range);
}

TEST(Subcomplexes, DOnSquareBoardIsEverything) {
  for (std::size_t m = 1; m <= 4; ++m) {
    Board b(m, m);
    std::vector<std::size_t> cols(m);
    std::iota(cols.begin(), cols.end(), std::size_t{1});
    EXPECT_EQ(subcomplex_D(b, cols), chessboard_complex(b));
  }
  Board b(2, 3);
  EXPECT_THROW(subcomplex_D(b, {2, 1}), std::invalid_argument);
  EXPECT_THROW(subcomplex_D(b, {1}), std::invalid_argument);
}

TEST(Subcomplexes, FacetIdealIsTheSumOverColumnChoices) {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = m; n <= 5; ++n) {
      Board b(m, n);
      auto total = MonomialIdeal::zero(b.vars());
      detail::for_each_combination(n, m, [&](const std::vector<std::size_t>& cols) {
        total = sum(total, facet_ideal(subcomplex_D(b, cols)));
      });
      EXPECT_EQ(total, facet_ideal(b)) << m << "x" << n;
    }
  }
}

TEST(Subcomplexes, ARecursionAndRowReduction) {
  // A_{m,i} = A_{m,i-1} minus the facets through x_{m,i}; A_{m,n} is empty.
  Board b(2, 4);
  std::size_t previous = chessboard_complex(b).facets().size();
  for (std::size_t i = 1; i <= 4; ++i) {
    auto a = subcomplex_A(b, i);
    EXPECT_LE(a.facets().size(), previous);
    previous = a.facets().size();
  }
  EXPECT_TRUE(subcomplex_A(b, 4).is_void());
  auto rr = row_reduced_complex(Board(3, 4));
  EXPECT_EQ(rr.facets().size(), count_placements(2, 4));
}

TEST(Fixtures, SixQuadrics) {
  auto l = fixture_ideal(Fixture::six_quadrics);
  EXPECT_EQ(l.nvars(), 6u);
  EXPECT_EQ(l.size(), 9u);
  for (const auto& g : l.gens()) EXPECT_EQ(g.degree(), 2);
}

TEST(Fixtures, TwoNMinusThreeAtThree) {
  Board b(2, 3);
  auto l = fixture_ideal(Fixture::two_n_minus_3, 3);
  // both rows, plus the single surviving column for every deleted pair
  auto expected = min_gens({cell(b, {{1, 1}, {1, 2}, {1, 3}}), cell(b, {{2, 1}, {2, 2}, {2, 3}}),
                            cell(b, {{1, 3}, {2, 3}}), cell(b, {{1, 2}, {2, 2}}), cell(b, {{1, 1}, {2, 1}})},
                           b.vars());
  EXPECT_EQ(l, expected);
}

TEST(Fixtures, TwoNMinusFiveDegrees) {
  auto l = fixture_ideal(Fixture::two_n_minus_5, 4);
  std::set<long> degrees;
  for (const auto& g : l.gens()) degrees.insert(g.degree());
  // rows minus one cell have degree n-1; the pair terms keep 2(n-3) cells
  EXPECT_EQ(degrees, (std::set<long>{2, 3}));
  EXPECT_THROW(fixture_ideal(Fixture::two_n_minus_5, 3), std::invalid_argument);
  EXPECT_THROW(fixture_ideal(Fixture::two_n_minus_3, 2), std::invalid_argument);
}
