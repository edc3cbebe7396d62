#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "transversal.hpp"
#include "vertex_set.hpp"

namespace chessideal {

// Ordered, labelled variables x_0 > x_1 > ... > x_{n-1}.
class VariableSet {
 public:
  explicit VariableSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw std::invalid_argument("a variable set needs at least one variable");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_) {
      if (l.empty() || l.find_first_of(" \t\r\n") != std::string::npos) {
        throw std::invalid_argument("variable label must be non-empty without whitespace: '" + l + "'");
      }
      if (!seen.insert(l).second) throw std::invalid_argument("duplicate variable label: " + l);
    }
  }

  // x1, x2, ..., xn
  static std::shared_ptr<const VariableSet> indexed(std::size_t n, const std::string& stem = "x") {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(stem + std::to_string(i));
    return std::make_shared<const VariableSet>(std::move(labels));
  }

  std::size_t count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  std::optional<std::size_t> index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
  }

  bool operator==(const VariableSet&) const = default;

 private:
  std::vector<std::string> labels_;
};

using VariableSetPtr = std::shared_ptr<const VariableSet>;

class Monomial {
 public:
  using exponent_type = std::int32_t;

  Monomial() = default;
  explicit Monomial(std::vector<exponent_type> exponents) : exps_(std::move(exponents)) {
    for (auto e : exps_) {
      if (e < 0) throw std::invalid_argument("negative exponent");
    }
  }

  static Monomial unit(std::size_t nvars) { return Monomial(std::vector<exponent_type>(nvars, 0)); }

  static Monomial from_support(std::size_t nvars, VertexSet support) {
    std::vector<exponent_type> e(nvars, 0);
    for (auto v : support.elements()) {
      if (v >= nvars) throw std::out_of_range("support index beyond variable count");
      e[v] = 1;
    }
    return Monomial(std::move(e));
  }

  static Monomial from_indices(std::size_t nvars, std::initializer_list<std::size_t> idx) {
    std::vector<exponent_type> e(nvars, 0);
    for (auto v : idx) e.at(v) += 1;
    return Monomial(std::move(e));
  }

  std::size_t nvars() const { return exps_.size(); }
  exponent_type exponent(std::size_t i) const { return exps_.at(i); }
  std::span<const exponent_type> exponents() const { return exps_; }

  long degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0L); }
  bool is_unit() const {
    return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
  }
  bool is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e <= 1; });
  }

  VertexSet support() const {
    require_vertex_capacity(exps_.size());
    VertexSet s;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] > 0) s.insert(i);
    }
    return s;
  }

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<exponent_type> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto e : m.exponents()) {
      h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

namespace detail {
inline void require_same_length(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("monomials live in different ambient rings");
}
}  // namespace detail

inline bool divides(const Monomial& a, const Monomial& b) {
  detail::require_same_length(a, b);
  auto x = a.exponents(), y = b.exponents();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > y[i]) return false;
  }
  return true;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  detail::require_same_length(a, b);
  std::vector<Monomial::exponent_type> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exponent(i), b.exponent(i));
  return Monomial(std::move(e));
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  detail::require_same_length(a, b);
  std::vector<Monomial::exponent_type> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.exponent(i), b.exponent(i));
  return Monomial(std::move(e));
}

inline Monomial multiply(const Monomial& a, const Monomial& b) {
  detail::require_same_length(a, b);
  std::vector<Monomial::exponent_type> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) {
    assert(a.exponent(i) <= std::numeric_limits<Monomial::exponent_type>::max() - b.exponent(i));
    e[i] = a.exponent(i) + b.exponent(i);
  }
  return Monomial(std::move(e));
}

// a / gcd(a, b): componentwise max(a - b, 0).
inline Monomial quotient_by_gcd(const Monomial& a, const Monomial& b) {
  detail::require_same_length(a, b);
  std::vector<Monomial::exponent_type> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exponent(i) - b.exponent(i), 0);
  return Monomial(std::move(e));
}

// Canonical generator order: degree ascending, then lexicographically
// descending with x_0 > x_1 > ... (so x1 comes before x2, x1x3 before x2x3).
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    auto x = a.exponents(), y = b.exponents();
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] != y[i]) return x[i] > y[i];
    }
    return false;
  }
};

class MonomialIdeal {
 public:
  // Canonicalizes: drops duplicates and non-minimal generators, sorts.
  static MonomialIdeal from_generators(std::vector<Monomial> raw, VariableSetPtr ambient) {
    if (!ambient) throw std::invalid_argument("null variable set");
    for (const auto& m : raw) {
      if (m.nvars() != ambient->count()) {
        throw std::invalid_argument("generator length " + std::to_string(m.nvars()) +
                                    " does not match " + std::to_string(ambient->count()) + " variables");
      }
    }
    std::sort(raw.begin(), raw.end(), CanonicalOrder{});
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    std::vector<Monomial> kept;
    for (auto& m : raw) {
      // Divisors have degree <= m, so they were already considered.
      bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& g) { return divides(g, m); });
      if (!redundant) kept.push_back(std::move(m));
    }
    return MonomialIdeal(std::move(ambient), std::move(kept));
  }

  static MonomialIdeal zero(VariableSetPtr ambient) { return from_generators({}, std::move(ambient)); }
  static MonomialIdeal unit(VariableSetPtr ambient) {
    auto n = ambient->count();
    return from_generators({Monomial::unit(n)}, std::move(ambient));
  }

  const VariableSet& ambient() const { return *ambient_; }
  const VariableSetPtr& ambient_ptr() const { return ambient_; }
  std::size_t nvars() const { return ambient_->count(); }
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_unit(); }

  bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return *a.ambient_ == *b.ambient_ && a.gens_ == b.gens_;
  }

 private:
  MonomialIdeal(VariableSetPtr ambient, std::vector<Monomial> gens)
      : ambient_(std::move(ambient)), gens_(std::move(gens)) {}

  VariableSetPtr ambient_;
  std::vector<Monomial> gens_;
};

inline MonomialIdeal min_gens(std::vector<Monomial> raw, VariableSetPtr ambient) {
  return MonomialIdeal::from_generators(std::move(raw), std::move(ambient));
}

namespace detail {
inline void require_same_ambient(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(a.ambient() == b.ambient())) throw std::invalid_argument("ideals live in different ambient rings");
}
inline void require_same_ambient(const MonomialIdeal& a, const Monomial& f) {
  if (a.nvars() != f.nvars()) throw std::invalid_argument("monomial does not belong to the ideal's ring");
}
}  // namespace detail

inline MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::require_same_ambient(a, b);
  std::vector<Monomial> all = a.gens();
  all.insert(all.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal::from_generators(std::move(all), a.ambient_ptr());
}

// (I, f)
inline MonomialIdeal adjoin(const MonomialIdeal& a, const Monomial& f) {
  detail::require_same_ambient(a, f);
  std::vector<Monomial> all = a.gens();
  all.push_back(f);
  return MonomialIdeal::from_generators(std::move(all), a.ambient_ptr());
}

inline MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::require_same_ambient(a, b);
  std::vector<Monomial> all;
  all.reserve(a.size() * b.size());
  for (const auto& u : a.gens()) {
    for (const auto& v : b.gens()) all.push_back(multiply(u, v));
  }
  return MonomialIdeal::from_generators(std::move(all), a.ambient_ptr());
}

inline MonomialIdeal power(const MonomialIdeal& a, int t) {
  if (t < 1) throw std::invalid_argument("power exponent must be at least 1");
  MonomialIdeal result = a;
  for (int k = 1; k < t; ++k) result = product(result, a);
  return result;
}

inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::require_same_ambient(a, b);
  std::vector<Monomial> all;
  all.reserve(a.size() * b.size());
  for (const auto& u : a.gens()) {
    for (const auto& v : b.gens()) all.push_back(lcm(u, v));
  }
  return MonomialIdeal::from_generators(std::move(all), a.ambient_ptr());
}

// I : f = (u / gcd(u, f) : u in G(I))
inline MonomialIdeal colon(const MonomialIdeal& a, const Monomial& f) {
  detail::require_same_ambient(a, f);
  std::vector<Monomial> all;
  all.reserve(a.size());
  for (const auto& u : a.gens()) all.push_back(quotient_by_gcd(u, f));
  return MonomialIdeal::from_generators(std::move(all), a.ambient_ptr());
}

// I : J = intersection of I : g over g in G(J); I : (0) is the unit ideal.
inline MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::require_same_ambient(a, b);
  MonomialIdeal result = MonomialIdeal::unit(a.ambient_ptr());
  for (const auto& g : b.gens()) result = intersect(result, colon(a, g));
  return result;
}

inline bool is_squarefree(const MonomialIdeal& a) {
  return std::all_of(a.gens().begin(), a.gens().end(), [](const Monomial& g) { return g.is_squarefree(); });
}

inline VertexSet support(const MonomialIdeal& a) {
  VertexSet s;
  for (const auto& g : a.gens()) s |= g.support();
  return s;
}

// sqrt(I): generated by the supports of the generators.
inline MonomialIdeal radical(const MonomialIdeal& a) {
  std::vector<Monomial> all;
  for (const auto& g : a.gens()) all.push_back(Monomial::from_support(a.nvars(), g.support()));
  return MonomialIdeal::from_generators(std::move(all), a.ambient_ptr());
}

// Ideal generated by the given variables.
inline MonomialIdeal prime_ideal(VertexSet vars, VariableSetPtr ambient) {
  std::vector<Monomial> all;
  for (auto v : vars.elements()) all.push_back(Monomial::from_support(ambient->count(), VertexSet::of({v})));
  return MonomialIdeal::from_generators(std::move(all), std::move(ambient));
}

namespace detail {
inline void require_squarefree_proper_nonzero(const MonomialIdeal& a, const char* what) {
  if (!is_squarefree(a)) throw std::invalid_argument(std::string(what) + ": ideal must be squarefree");
  if (a.is_zero()) throw std::invalid_argument(std::string(what) + ": ideal must be nonzero");
  if (a.is_unit()) throw std::invalid_argument(std::string(what) + ": ideal must be proper");
}

inline std::vector<VertexSet> generator_supports(const MonomialIdeal& a) {
  require_vertex_capacity(a.nvars());
  std::vector<VertexSet> out;
  out.reserve(a.size());
  for (const auto& g : a.gens()) out.push_back(g.support());
  return out;
}
}  // namespace detail

// Minimal primes of a squarefree ideal, as variable subsets: the minimal
// vertex covers of the complex whose facets are the generator supports.
inline std::vector<VertexSet> minimal_primes(const MonomialIdeal& a) {
  detail::require_squarefree_proper_nonzero(a, "minimal_primes");
  return minimal_transversals(detail::generator_supports(a));
}

inline MonomialIdeal alexander_dual(const MonomialIdeal& a) {
  detail::require_squarefree_proper_nonzero(a, "alexander_dual");
  std::vector<Monomial> all;
  for (auto p : minimal_primes(a)) all.push_back(Monomial::from_support(a.nvars(), p));
  return MonomialIdeal::from_generators(std::move(all), a.ambient_ptr());
}

// Rename variables: variable i of `a` becomes variable perm[i] of `target`.
inline MonomialIdeal relabel(const MonomialIdeal& a, const std::vector<std::size_t>& perm, VariableSetPtr target) {
  if (perm.size() != a.nvars()) throw std::invalid_argument("relabel map has wrong length");
  std::vector<Monomial> all;
  for (const auto& g : a.gens()) {
    std::vector<Monomial::exponent_type> e(target->count(), 0);
    for (std::size_t i = 0; i < perm.size(); ++i) e.at(perm[i]) += g.exponent(i);
    all.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal::from_generators(std::move(all), std::move(target));
}

enum class PathKind { path, cycle };

// Path ideal of length m on the path or cycle with n vertices x1..xn:
// consecutive windows x_i ... x_{i+m-1}; on the cycle indices wrap mod n.
inline MonomialIdeal path_ideal(PathKind kind, std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw std::invalid_argument("path_ideal: n and m must be positive");
  if (m > n) throw std::invalid_argument("path_ideal: window length exceeds vertex count");
  auto vars = VariableSet::indexed(n);
  std::vector<Monomial> all;
  std::size_t starts = kind == PathKind::path ? n - m + 1 : n;
  for (std::size_t i = 0; i < starts; ++i) {
    std::vector<Monomial::exponent_type> e(n, 0);
    for (std::size_t k = 0; k < m; ++k) e[(i + k) % n] = 1;
    all.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal::from_generators(std::move(all), std::move(vars));
}

}  // namespace chessideal
