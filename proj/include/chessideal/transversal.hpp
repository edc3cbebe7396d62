#pragma once

#include <algorithm>
#include <vector>

#include "vertex_set.hpp"

namespace chessideal {

// All inclusion-minimal transversals (hitting sets) of a set family.
//
// Depth-first search: take the first edge not yet hit, branch on each of its
// vertices in increasing order, and forbid the vertices already tried at that
// level in the later branches. Every minimal transversal is reached exactly
// once through its smallest vertex on each branching edge; leaves that are
// not minimal are dropped. An empty edge admits no transversal, so the result
// is empty. An empty family has the single transversal {}.
//
// Output is sorted with LexLess and duplicate-free.
inline std::vector<VertexSet> minimal_transversals(const std::vector<VertexSet>& edges) {
  std::vector<VertexSet> result;
  for (auto e : edges) {
    if (e.empty()) return result;
  }

  // Keep only inclusion-minimal edges; supersets are hit automatically.
  std::vector<VertexSet> family;
  for (auto e : edges) {
    bool dominated = false;
    for (auto f : edges) {
      if (f != e && f.subset_of(e)) { dominated = true; break; }
    }
    if (!dominated && std::find(family.begin(), family.end(), e) == family.end()) family.push_back(e);
  }
  std::sort(family.begin(), family.end(), [](VertexSet a, VertexSet b) { return a.size() < b.size(); });

  auto hits_all = [&](VertexSet t) {
    for (auto e : family) {
      if (!e.intersects(t)) return false;
    }
    return true;
  };
  auto is_minimal = [&](VertexSet t) {
    for (auto v : t.elements()) {
      VertexSet smaller = t;
      smaller.erase(v);
      if (hits_all(smaller)) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, VertexSet chosen, VertexSet forbidden) -> void {
    const VertexSet* open = nullptr;
    for (const auto& e : family) {
      if (!e.intersects(chosen)) { open = &e; break; }
    }
    if (open == nullptr) {
      if (is_minimal(chosen)) result.push_back(chosen);
      return;
    }
    VertexSet candidates = *open - forbidden;
    VertexSet tried;
    for (auto v : candidates.elements()) {
      VertexSet next = chosen;
      next.insert(v);
      self(self, next, forbidden | tried);
      tried.insert(v);
    }
  };
  search(search, VertexSet{}, VertexSet{});

  std::sort(result.begin(), result.end(), LexLess{});
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

}  // namespace chessideal
