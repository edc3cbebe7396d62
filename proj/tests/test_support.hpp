#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <random>
#include <vector>

#include "chessideal/chessideal.hpp"

namespace testing_support {

using namespace chessideal;

inline MonomialIdeal ideal_of(std::size_t nvars, std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<Monomial> gens;
  for (auto r : rows) gens.emplace_back(std::vector<Monomial::exponent_type>(r.begin(), r.end()));
  return MonomialIdeal::from_generators(std::move(gens), VariableSet::indexed(nvars));
}

inline MonomialIdeal squarefree_of(std::size_t nvars, std::initializer_list<std::initializer_list<std::size_t>> sets) {
  std::vector<Monomial> gens;
  for (auto s : sets) {
    std::vector<std::size_t> zero_based;
    for (auto v : s) zero_based.push_back(v - 1);
    gens.push_back(Monomial::from_support(nvars, VertexSet::of(zero_based)));
  }
  return MonomialIdeal::from_generators(std::move(gens), VariableSet::indexed(nvars));
}

inline Monomial cell(const Board& b, std::initializer_list<std::pair<std::size_t, std::size_t>> cells) {
  std::vector<Monomial::exponent_type> e(b.cell_count(), 0);
  for (auto [i, j] : cells) e[b.index(i, j)] += 1;
  return Monomial(std::move(e));
}

// Every subset of [0, n) that meets all edges and is inclusion-minimal.
inline std::vector<VertexSet> brute_minimal_covers(const std::vector<VertexSet>& edges, std::size_t n) {
  std::vector<VertexSet> covers;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
    VertexSet s(w);
    if (std::all_of(edges.begin(), edges.end(), [&](VertexSet e) { return e.intersects(s); })) covers.push_back(s);
  }
  std::vector<VertexSet> minimal;
  for (auto c : covers) {
    bool smaller = std::any_of(covers.begin(), covers.end(), [&](VertexSet d) { return d != c && d.subset_of(c); });
    if (!smaller) minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end(), LexLess{});
  return minimal;
}

// All pairwise products, then divisibility pruning by hand.
inline std::vector<Monomial> brute_product_gens(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> all;
  for (const auto& u : a.gens()) {
    for (const auto& v : b.gens()) all.push_back(multiply(u, v));
  }
  std::sort(all.begin(), all.end(), CanonicalOrder{});
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<Monomial> kept;
  for (const auto& m : all) {
    bool redundant = std::any_of(all.begin(), all.end(), [&](const Monomial& o) { return !(o == m) && divides(o, m); });
    if (!redundant) kept.push_back(m);
  }
  return kept;
}

// Taylor complex: beta_{i,j}(I) bounded above by the number of (i+1)-subsets of
// generators whose lcm has degree j; equality when the Taylor resolution is minimal,
// e.g. for generators forming a regular sequence.
inline std::map<std::pair<int, int>, std::uint64_t> taylor_counts(const MonomialIdeal& ideal) {
  std::map<std::pair<int, int>, std::uint64_t> out;
  const auto& g = ideal.gens();
  const std::size_t r = g.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
    Monomial l = Monomial::unit(ideal.nvars());
    int count = 0;
    for (std::size_t k = 0; k < r; ++k) {
      if ((mask >> k) & 1U) {
        l = lcm(l, g[k]);
        ++count;
      }
    }
    out[{count - 1, static_cast<int>(l.degree())}] += 1;
  }
  return out;
}

inline MonomialIdeal random_ideal(std::mt19937& rng, std::size_t nvars, int max_gens, int max_exp) {
  return verify::detail::random_ideal(rng, nvars, max_gens, max_exp);
}

inline MonomialIdeal random_squarefree(std::mt19937& rng, std::size_t nvars, int max_gens) {
  return radical(random_ideal(rng, nvars, max_gens, 1));
}

}  // namespace testing_support
