#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ring.hpp"
#include "transversal.hpp"
#include "vertex_set.hpp"

namespace chessideal {

// A simplicial complex stored by its facets. The void complex has no facets;
// the irrelevant complex has the single facet {}.
class SimplicialComplex {
 public:
  static SimplicialComplex from_facets(VariableSetPtr vertices, std::vector<VertexSet> sets) {
    if (!vertices) throw std::invalid_argument("null vertex set");
    require_vertex_capacity(vertices->count());
    const auto universe = VertexSet::prefix(vertices->count());
    for (auto s : sets) {
      if (!s.subset_of(universe)) throw std::out_of_range("facet uses a vertex outside the vertex set");
    }
    std::sort(sets.begin(), sets.end(), LexLess{});
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> maximal;
    for (auto s : sets) {
      bool covered = std::any_of(sets.begin(), sets.end(), [&](VertexSet t) { return t != s && s.subset_of(t); });
      if (!covered) maximal.push_back(s);
    }
    return SimplicialComplex(std::move(vertices), std::move(maximal));
  }

  static SimplicialComplex void_complex(VariableSetPtr vertices) { return from_facets(std::move(vertices), {}); }
  static SimplicialComplex irrelevant(VariableSetPtr vertices) { return from_facets(std::move(vertices), {VertexSet{}}); }
  static SimplicialComplex simplex(VariableSetPtr vertices) {
    auto n = vertices->count();
    return from_facets(std::move(vertices), {VertexSet::prefix(n)});
  }

  const VariableSet& vertices() const { return *vertices_; }
  const VariableSetPtr& vertices_ptr() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_->count(); }
  const std::vector<VertexSet>& facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }
  bool is_irrelevant() const { return facets_.size() == 1 && facets_.front().empty(); }

  // -1 for the irrelevant complex; void complexes have no dimension.
  int dimension() const {
    if (is_void()) throw std::logic_error("the void complex has no dimension");
    std::size_t d = 0;
    for (auto f : facets_) d = std::max(d, f.size());
    return static_cast<int>(d) - 1;
  }

  bool contains_face(VertexSet s) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return s.subset_of(f); });
  }

  VertexSet vertex_union() const {
    VertexSet u;
    for (auto f : facets_) u |= f;
    return u;
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return *a.vertices_ == *b.vertices_ && a.facets_ == b.facets_;
  }

 private:
  SimplicialComplex(VariableSetPtr v, std::vector<VertexSet> f) : vertices_(std::move(v)), facets_(std::move(f)) {}

  VariableSetPtr vertices_;
  std::vector<VertexSet> facets_;
};

// Delta|_A
inline SimplicialComplex induced_subcomplex(const SimplicialComplex& delta, VertexSet a) {
  if (!a.subset_of(VertexSet::prefix(delta.vertex_count()))) {
    throw std::out_of_range("induced_subcomplex: subset is not contained in the vertex set");
  }
  std::vector<VertexSet> pieces;
  pieces.reserve(delta.facets().size());
  for (auto f : delta.facets()) pieces.push_back(f & a);
  return SimplicialComplex::from_facets(delta.vertices_ptr(), std::move(pieces));
}

inline MonomialIdeal facet_ideal(const SimplicialComplex& delta) {
  std::vector<Monomial> gens;
  gens.reserve(delta.facets().size());
  for (auto f : delta.facets()) gens.push_back(Monomial::from_support(delta.vertex_count(), f));
  return MonomialIdeal::from_generators(std::move(gens), delta.vertices_ptr());
}

// The complex whose facets are the generator supports of a squarefree ideal.
inline SimplicialComplex facet_complex(const MonomialIdeal& ideal) {
  if (!is_squarefree(ideal)) throw std::invalid_argument("facet_complex: ideal must be squarefree");
  return SimplicialComplex::from_facets(ideal.ambient_ptr(), detail::generator_supports(ideal));
}

inline std::vector<VertexSet> minimal_vertex_covers(const SimplicialComplex& delta) {
  if (delta.is_void()) throw std::invalid_argument("minimal_vertex_covers: void complex has no facets");
  return minimal_transversals(delta.facets());
}

// delta(I): faces are the vertex sets whose product is not in I.
inline SimplicialComplex sr_complex_of_ideal(const MonomialIdeal& ideal) {
  if (!is_squarefree(ideal)) throw std::invalid_argument("sr_complex_of_ideal: ideal must be squarefree");
  if (ideal.is_unit()) throw std::invalid_argument("sr_complex_of_ideal: ideal must be proper");
  require_vertex_capacity(ideal.nvars());
  const auto all = VertexSet::prefix(ideal.nvars());
  if (ideal.is_zero()) return SimplicialComplex::simplex(ideal.ambient_ptr());
  std::vector<VertexSet> facets;
  for (auto p : minimal_primes(ideal)) facets.push_back(all - p);
  return SimplicialComplex::from_facets(ideal.ambient_ptr(), std::move(facets));
}

// I_Delta: minimal non-faces are the minimal transversals of the facet complements.
inline MonomialIdeal sr_ideal_of_complex(const SimplicialComplex& delta) {
  if (delta.is_void()) throw std::invalid_argument("sr_ideal_of_complex: void complex");
  const auto all = VertexSet::prefix(delta.vertex_count());
  std::vector<VertexSet> complements;
  for (auto f : delta.facets()) complements.push_back(all - f);
  std::vector<Monomial> gens;
  for (auto t : minimal_transversals(complements)) gens.push_back(Monomial::from_support(delta.vertex_count(), t));
  return MonomialIdeal::from_generators(std::move(gens), delta.vertices_ptr());
}

struct MatchingBound {
  long value = 0;
  std::vector<VertexSet> witness;
};

// {F_1..F_k} is induced when the facets are pairwise disjoint and no other
// facet of Delta lies inside their union.
inline bool is_induced_matching(const SimplicialComplex& delta, const std::vector<VertexSet>& chosen) {
  VertexSet uni;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    for (std::size_t j = i + 1; j < chosen.size(); ++j) {
      if (chosen[i].intersects(chosen[j])) return false;
    }
    uni |= chosen[i];
  }
  for (auto h : delta.facets()) {
    if (h.subset_of(uni) && std::find(chosen.begin(), chosen.end(), h) == chosen.end()) return false;
  }
  return true;
}

// max |F_1 u ... u F_k| - k over induced matchings with k <= k_max.
// Searches subsets of facets only up to k_max; larger matchings are not seen.
inline MatchingBound induced_matching_bound(const SimplicialComplex& delta, std::size_t k_max = 3) {
  if (k_max < 1) throw std::invalid_argument("induced_matching_bound: k_max must be at least 1");
  MatchingBound best;
  const auto& facets = delta.facets();
  std::vector<VertexSet> chosen;
  auto search = [&](auto&& self, std::size_t start, VertexSet used) -> void {
    if (!chosen.empty() && is_induced_matching(delta, chosen)) {
      long value = static_cast<long>(used.size()) - static_cast<long>(chosen.size());
      if (value > best.value || (best.witness.empty() && value >= best.value)) {
        best.value = value;
        best.witness = chosen;
      }
    }
    if (chosen.size() == k_max) return;
    for (std::size_t i = start; i < facets.size(); ++i) {
      if (facets[i].intersects(used)) continue;
      chosen.push_back(facets[i]);
      self(self, i + 1, used | facets[i]);
      chosen.pop_back();
    }
  };
  search(search, 0, VertexSet{});
  return best;
}

}  // namespace chessideal
