#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ring.hpp"
#include "simplicial.hpp"
#include "vertex_set.hpp"

namespace chessideal {

// An m x n board (1 <= m <= n) whose cells are the variables x[i,j] in
// row-major order: x[1,1] > x[1,2] > ... > x[1,n] > x[2,1] > ...
class Board {
 public:
  Board(std::size_t m, std::size_t n) : m_(m), n_(n) {
    if (m < 1) throw std::invalid_argument("board needs at least one row");
    if (m > n) {
      throw std::invalid_argument("board must have m <= n (got " + std::to_string(m) + "x" + std::to_string(n) +
                                  "); transpose explicitly");
    }
    require_vertex_capacity(m * n);
    std::vector<std::string> labels;
    labels.reserve(m * n);
    for (std::size_t i = 1; i <= m; ++i) {
      for (std::size_t j = 1; j <= n; ++j) labels.push_back(cell_label(i, j));
    }
    vars_ = std::make_shared<const VariableSet>(std::move(labels));
  }

  static std::string cell_label(std::size_t i, std::size_t j) {
    return "x[" + std::to_string(i) + "," + std::to_string(j) + "]";
  }

  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }
  std::size_t cell_count() const { return m_ * n_; }
  const VariableSetPtr& vars() const { return vars_; }

  // 1-based (row, col) -> flat index
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i < 1 || i > m_ || j < 1 || j > n_) throw std::out_of_range("cell outside the board");
    return (i - 1) * n_ + (j - 1);
  }
  std::pair<std::size_t, std::size_t> cell(std::size_t flat) const {
    if (flat >= m_ * n_) throw std::out_of_range("flat index outside the board");
    return {flat / n_ + 1, flat % n_ + 1};
  }

  VertexSet row(std::size_t i) const {
    VertexSet s;
    for (std::size_t j = 1; j <= n_; ++j) s.insert(index(i, j));
    return s;
  }
  VertexSet column(std::size_t j) const {
    VertexSet s;
    for (std::size_t i = 1; i <= m_; ++i) s.insert(index(i, j));
    return s;
  }
  VertexSet all_cells() const { return VertexSet::prefix(m_ * n_); }

  Monomial cell_monomial(std::size_t i, std::size_t j) const {
    return Monomial::from_support(cell_count(), VertexSet::of({index(i, j)}));
  }

 private:
  std::size_t m_;
  std::size_t n_;
  VariableSetPtr vars_;
};

namespace detail {

// Non-attacking placements of one rook per row in `rows`, restricted to
// columns in `cols`, as cell sets of `board`.
inline std::vector<VertexSet> rook_placements(const Board& board, const std::vector<std::size_t>& rows,
                                              const std::vector<std::size_t>& cols) {
  std::vector<VertexSet> out;
  std::vector<bool> used(board.cols() + 1, false);
  auto place = [&](auto&& self, std::size_t r, VertexSet acc) -> void {
    if (r == rows.size()) {
      out.push_back(acc);
      return;
    }
    for (auto c : cols) {
      if (used[c]) continue;
      used[c] = true;
      VertexSet next = acc;
      next.insert(board.index(rows[r], c));
      self(self, r + 1, next);
      used[c] = false;
    }
  };
  if (rows.size() <= cols.size()) place(place, 0, VertexSet{});
  return out;
}

inline std::vector<std::size_t> iota_from_one(std::size_t k) {
  std::vector<std::size_t> v(k);
  std::iota(v.begin(), v.end(), std::size_t{1});
  return v;
}

template <typename F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (pick.size() == k) {
      f(pick);
      return;
    }
    for (std::size_t x = start; x <= n; ++x) {
      if (n - x + 1 < k - pick.size()) break;
      pick.push_back(x);
      self(self, x + 1);
      pick.pop_back();
    }
  };
  rec(rec, 1);
}

}  // namespace detail

inline SimplicialComplex chessboard_complex(const Board& b) {
  return SimplicialComplex::from_facets(
      b.vars(), detail::rook_placements(b, detail::iota_from_one(b.rows()), detail::iota_from_one(b.cols())));
}

inline MonomialIdeal facet_ideal(const Board& b) { return facet_ideal(chessboard_complex(b)); }

// Stanley-Reisner ideal of the chessboard complex: all same-row and
// same-column pairs of cells.
inline MonomialIdeal stanley_reisner_ideal(const Board& b) {
  std::vector<Monomial> gens;
  const auto n = b.cell_count();
  for (std::size_t i = 1; i <= b.rows(); ++i) {
    for (std::size_t j = 1; j <= b.cols(); ++j) {
      for (std::size_t k = j + 1; k <= b.cols(); ++k) {
        gens.push_back(Monomial::from_support(n, VertexSet::of({b.index(i, j), b.index(i, k)})));
      }
      for (std::size_t l = i + 1; l <= b.rows(); ++l) {
        gens.push_back(Monomial::from_support(n, VertexSet::of({b.index(i, j), b.index(l, j)})));
      }
    }
  }
  return MonomialIdeal::from_generators(std::move(gens), b.vars());
}

// Minimal primes from the closed form: delete s rows and m-1-s columns,
// keep every remaining cell.
inline std::vector<VertexSet> minimal_primes_formula(const Board& b) {
  std::vector<VertexSet> primes;
  const auto m = b.rows(), n = b.cols();
  for (std::size_t s = 0; s < m; ++s) {
    detail::for_each_combination(m, s, [&](const std::vector<std::size_t>& del_rows) {
      detail::for_each_combination(n, m - 1 - s, [&](const std::vector<std::size_t>& del_cols) {
        VertexSet keep = b.all_cells();
        for (auto r : del_rows) keep = keep - b.row(r);
        for (auto c : del_cols) keep = keep - b.column(c);
        primes.push_back(keep);
      });
    });
  }
  std::sort(primes.begin(), primes.end(), LexLess{});
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

struct PrimeProfile {
  std::size_t height = 0;
  std::size_t dim = 0;
  std::size_t bight = 0;
  bool operator==(const PrimeProfile&) const = default;
};

// Closed forms for height, dim(S/F) and bight of the facet ideal.
inline PrimeProfile prime_profile(const Board& b) {
  const auto m = b.rows(), n = b.cols();
  PrimeProfile p;
  p.height = n;
  p.dim = (m - 1) * n;
  p.bight = (n < 2 * m - 1) ? (n + 1) * (n + 1) / 4 : (n - m + 1) * m;
  return p;
}

// The same profile read off an explicit list of minimal primes.
inline PrimeProfile prime_profile_of(const std::vector<VertexSet>& primes, std::size_t nvars) {
  if (primes.empty()) throw std::invalid_argument("prime_profile_of: empty prime list");
  PrimeProfile p;
  p.height = primes.front().size();
  for (auto q : primes) {
    p.height = std::min(p.height, q.size());
    p.bight = std::max(p.bight, q.size());
  }
  p.dim = nvars - p.height;
  return p;
}

// A_{m,i}: facets avoiding the bottom-row cells in columns 1..i.
inline SimplicialComplex subcomplex_A(const Board& b, std::size_t i) {
  if (i < 1 || i > b.cols()) throw std::out_of_range("subcomplex_A: column index out of range");
  VertexSet banned;
  for (std::size_t s = 1; s <= i; ++s) banned.insert(b.index(b.rows(), s));
  std::vector<VertexSet> kept;
  const auto full = chessboard_complex(b);
  for (auto f : full.facets()) {
    if (!f.intersects(banned)) kept.push_back(f);
  }
  return SimplicialComplex::from_facets(b.vars(), std::move(kept));
}

// B_{m,i}: chessboard complex of the board with row m and column i removed,
// on the original cell variables.
inline SimplicialComplex subcomplex_B(const Board& b, std::size_t i) {
  if (i < 1 || i > b.cols()) throw std::out_of_range("subcomplex_B: column index out of range");
  std::vector<std::size_t> cols;
  for (std::size_t c = 1; c <= b.cols(); ++c) {
    if (c != i) cols.push_back(c);
  }
  return SimplicialComplex::from_facets(b.vars(),
                                        detail::rook_placements(b, detail::iota_from_one(b.rows() - 1), cols));
}

// D_{i_1..i_m}: chessboard complex on the m x m board of the chosen columns.
inline SimplicialComplex subcomplex_D(const Board& b, const std::vector<std::size_t>& cols) {
  if (cols.size() != b.rows()) throw std::invalid_argument("subcomplex_D: need exactly m columns");
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (cols[k] < 1 || cols[k] > b.cols()) throw std::out_of_range("subcomplex_D: column index out of range");
    if (k > 0 && cols[k] <= cols[k - 1]) throw std::invalid_argument("subcomplex_D: columns must be increasing");
  }
  return SimplicialComplex::from_facets(b.vars(), detail::rook_placements(b, detail::iota_from_one(b.rows()), cols));
}

// The chessboard complex of the first m-1 rows, on the original variables.
inline SimplicialComplex row_reduced_complex(const Board& b) {
  return SimplicialComplex::from_facets(
      b.vars(), detail::rook_placements(b, detail::iota_from_one(b.rows() - 1), detail::iota_from_one(b.cols())));
}

enum class Fixture { six_quadrics, two_n_minus_3, two_n_minus_5 };

// Fixture ideals with known regularity:
//   six_quadrics   (x1x2, x1x3, x2x3, x4x5, x4x6, x5x6, x1x4, x2x5, x3x6) in 6 variables, reg 3;
//   two_n_minus_3  on a 2 x n board: both full rows, plus for every pair i < j
//                  the product of both rows with columns i, j removed; reg 2n-3;
//   two_n_minus_5  on a 2 x n board: each row with one cell removed, plus for
//                  every pair i < j <= n-1 the product of both rows restricted to
//                  columns 1..n-1 with columns i, j removed; reg 2n-5.
inline MonomialIdeal fixture_ideal(Fixture which, std::size_t n = 0) {
  if (which == Fixture::six_quadrics) {
    auto vars = VariableSet::indexed(6);
    std::vector<Monomial> gens;
    const std::size_t pairs[9][2] = {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}, {1, 4}, {2, 5}, {3, 6}};
    for (auto& p : pairs) gens.push_back(Monomial::from_indices(6, {p[0] - 1, p[1] - 1}));
    return MonomialIdeal::from_generators(std::move(gens), std::move(vars));
  }
  const std::size_t min_n = which == Fixture::two_n_minus_3 ? 3 : 4;
  if (n < min_n) throw std::invalid_argument("fixture_ideal: n must be at least " + std::to_string(min_n));
  Board b(2, n);
  const auto cells = b.cell_count();
  auto rows_without = [&](std::size_t last_col, VertexSet removed_cols_mask) {
    VertexSet s;
    for (std::size_t r = 1; r <= 2; ++r) {
      for (std::size_t c = 1; c <= last_col; ++c) {
        if (!removed_cols_mask.contains(c)) s.insert(b.index(r, c));
      }
    }
    return s;
  };
  std::vector<Monomial> gens;
  if (which == Fixture::two_n_minus_3) {
    gens.push_back(Monomial::from_support(cells, b.row(1)));
    gens.push_back(Monomial::from_support(cells, b.row(2)));
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        gens.push_back(Monomial::from_support(cells, rows_without(n, VertexSet::of({i, j}))));
      }
    }
  } else {
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t r = 1; r <= 2; ++r) {
        VertexSet s = b.row(r);
        s.erase(b.index(r, j));
        gens.push_back(Monomial::from_support(cells, s));
      }
    }
    for (std::size_t i = 1; i <= n - 1; ++i) {
      for (std::size_t j = i + 1; j <= n - 1; ++j) {
        gens.push_back(Monomial::from_support(cells, rows_without(n - 1, VertexSet::of({i, j}))));
      }
    }
  }
  return MonomialIdeal::from_generators(std::move(gens), b.vars());
}

}  // namespace chessideal
