#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "homology.hpp"
#include "parallel.hpp"
#include "ring.hpp"
#include "simplicial.hpp"

namespace chessideal {

struct ComputeOptions {
  FieldSpec field{};
  unsigned threads = 0;  // 0 = hardware concurrency
};

enum class BettiSubject { ideal, quotient };

inline const char* to_string(BettiSubject s) { return s == BettiSubject::ideal ? "ideal" : "quotient"; }

// Graded Betti numbers beta_{i,j} of I or of S/I.
class BettiTable {
 public:
  using Entries = std::map<std::pair<int, int>, std::uint64_t>;

  BettiTable(BettiSubject subject, std::size_t nvars, FieldSpec field, Entries entries)
      : subject_(subject), nvars_(nvars), field_(field), entries_(std::move(entries)) {
    std::erase_if(entries_, [](const auto& kv) { return kv.second == 0; });
  }

  BettiSubject subject() const { return subject_; }
  std::size_t nvars() const { return nvars_; }
  const FieldSpec& field() const { return field_; }
  const Entries& entries() const { return entries_; }

  std::uint64_t operator()(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
  }

  // max{j - i : beta_{i,j} != 0}
  long reg() const {
    require_nonempty();
    long r = std::numeric_limits<long>::min();
    for (const auto& [ij, v] : entries_) r = std::max<long>(r, ij.second - ij.first);
    return r;
  }
  // max{i : beta_{i,j} != 0}
  long pd() const {
    require_nonempty();
    long p = 0;
    for (const auto& [ij, v] : entries_) p = std::max<long>(p, ij.first);
    return p;
  }
  // Auslander-Buchsbaum in the table's own ring; depth(I) = depth(S/I) + 1.
  long depth() const {
    long quotient_pd = subject_ == BettiSubject::quotient ? pd() : pd() + 1;
    long d = static_cast<long>(nvars_) - quotient_pd;
    return subject_ == BettiSubject::quotient ? d : d + 1;
  }

  // beta_{i,j}(S/I) = beta_{i-1,j}(I) for i >= 1, beta_{0,0}(S/I) = 1.
  BettiTable to_quotient() const {
    if (subject_ == BettiSubject::quotient) return *this;
    Entries e{{{0, 0}, 1}};
    for (const auto& [ij, v] : entries_) e[{ij.first + 1, ij.second}] += v;
    return BettiTable(BettiSubject::quotient, nvars_, field_, std::move(e));
  }
  BettiTable to_ideal() const {
    if (subject_ == BettiSubject::ideal) return *this;
    Entries e;
    for (const auto& [ij, v] : entries_) {
      if (ij.first >= 1) e[{ij.first - 1, ij.second}] += v;
    }
    return BettiTable(BettiSubject::ideal, nvars_, field_, std::move(e));
  }

  bool same_numbers(const BettiTable& o) const { return subject_ == o.subject_ && entries_ == o.entries_; }
  bool operator==(const BettiTable& o) const {
    return same_numbers(o) && nvars_ == o.nvars_ && field_ == o.field_;
  }

 private:
  void require_nonempty() const {
    if (entries_.empty()) throw std::logic_error("empty Betti table has no regularity or projective dimension");
  }

  BettiSubject subject_;
  std::size_t nvars_;
  FieldSpec field_;
  Entries entries_;
};

namespace detail {

inline void require_nonzero_proper(const MonomialIdeal& ideal, const char* what) {
  if (ideal.is_zero()) throw std::invalid_argument(std::string(what) + ": zero ideal");
  if (ideal.is_unit()) throw std::invalid_argument(std::string(what) + ": unit ideal");
}

// Squarefree membership for every subset of the ambient variables:
// table[mask] != 0 iff some generator support is contained in mask.
inline constexpr std::size_t kMembershipTableBits = 22;

inline std::vector<std::uint8_t> squarefree_membership_table(const MonomialIdeal& ideal) {
  const auto n = ideal.nvars();
  std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
  for (const auto& g : ideal.gens()) table[g.support().bits()] = 1;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t bit = std::size_t{1} << v;
    for (std::size_t mask = 0; mask < table.size(); ++mask) {
      if ((mask & bit) != 0 && table[mask ^ bit] != 0) table[mask] = 1;
    }
  }
  return table;
}

using PartialEntries = BettiTable::Entries;

inline BettiTable merge_partials(std::vector<PartialEntries>& partials, BettiSubject subject, std::size_t nvars,
                                 const FieldSpec& field) {
  BettiTable::Entries total;
  for (auto& p : partials) {
    for (const auto& [ij, v] : p) total[ij] += v;
  }
  return BettiTable(subject, nvars, field, std::move(total));
}

}  // namespace detail

// Every lcm of a nonempty set of minimal generators, in canonical order.
// Built as the join closure of the generators.
inline std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal) {
  detail::require_nonzero_proper(ideal, "lcm_lattice");
  const auto& gens = ideal.gens();
  std::vector<Monomial> out;
  if (is_squarefree(ideal)) {
    auto masks = detail::generator_supports(ideal);
    std::unordered_set<VertexSet::word_type> seen;
    std::vector<VertexSet::word_type> frontier;
    for (auto g : masks) {
      if (seen.insert(g.bits()).second) frontier.push_back(g.bits());
    }
    while (!frontier.empty()) {
      std::vector<VertexSet::word_type> next;
      for (auto x : frontier) {
        for (auto g : masks) {
          auto y = x | g.bits();
          if (seen.insert(y).second) next.push_back(y);
        }
      }
      frontier = std::move(next);
    }
    out.reserve(seen.size());
    for (auto w : seen) out.push_back(Monomial::from_support(ideal.nvars(), VertexSet(w)));
  } else {
    std::unordered_set<Monomial, MonomialHash> seen(gens.begin(), gens.end());
    std::vector<Monomial> frontier(gens.begin(), gens.end());
    while (!frontier.empty()) {
      std::vector<Monomial> next;
      for (const auto& x : frontier) {
        for (const auto& g : gens) {
          auto y = lcm(x, g);
          if (seen.insert(y).second) next.push_back(std::move(y));
        }
      }
      frontier = std::move(next);
    }
    out.assign(seen.begin(), seen.end());
  }
  std::sort(out.begin(), out.end(), CanonicalOrder{});
  return out;
}

// Upper bound on the multidegree/face pairs a Betti sweep visits:
// sum over multidegrees b below the lcm of all generators of 2^|supp b|,
// i.e. the product over support variables of (1 + 2 * max exponent).
// Saturates at 2^62.
inline std::uint64_t predicted_sweep_size(const MonomialIdeal& ideal) {
  constexpr std::uint64_t cap = std::uint64_t{1} << 62;
  std::vector<Monomial::exponent_type> top(ideal.nvars(), 0);
  for (const auto& g : ideal.gens()) {
    for (std::size_t v = 0; v < top.size(); ++v) top[v] = std::max(top[v], g.exponent(v));
  }
  std::uint64_t total = 1;
  for (auto e : top) {
    if (e == 0) continue;
    auto factor = static_cast<std::uint64_t>(1 + 2 * static_cast<std::uint64_t>(e));
    if (total > cap / factor) return cap;
    total *= factor;
  }
  return total;
}

// The upper Koszul simplicial complex
//   K^b(I) = { squarefree tau <= b : x^(b - tau) in I }.
// A generator g | b divides x^(b - tau) exactly when tau avoids the set
// T_g = { v : g_v = b_v }, so K^b is the union of the simplices supp(b) \ T_g.
inline FaceTable upper_koszul_complex(const MonomialIdeal& ideal, const Monomial& b) {
  const auto supp = b.support();
  std::vector<VertexSet> tight;
  for (const auto& g : ideal.gens()) {
    if (!divides(g, b)) continue;
    VertexSet t;
    for (auto v : supp.elements()) {
      if (g.exponent(v) == b.exponent(v)) t.insert(v);
    }
    tight.push_back(t);
  }
  std::vector<VertexSet> minimal;
  for (auto t : tight) {
    bool dominated = std::any_of(tight.begin(), tight.end(), [&](VertexSet u) { return u != t && u.subset_of(t); });
    if (!dominated && std::find(minimal.begin(), minimal.end(), t) == minimal.end()) minimal.push_back(t);
  }
  return FaceTable::from_predicate(supp, [&](VertexSet tau) {
    return std::any_of(minimal.begin(), minimal.end(), [&](VertexSet t) { return !t.intersects(tau); });
  });
}

// beta_{i,b}(I) = dim H~_{i-1}(K^b(I)) over every b in the lcm lattice,
// collected by total degree. Works for any monomial ideal.
inline BettiTable betti_table_koszul(const MonomialIdeal& ideal, const ComputeOptions& opts = {}) {
  detail::require_nonzero_proper(ideal, "betti_table_koszul");
  require_vertex_capacity(ideal.nvars());
  const auto lattice = lcm_lattice(ideal);
  const bool use_table = is_squarefree(ideal) && ideal.nvars() <= detail::kMembershipTableBits;
  std::vector<std::uint8_t> member;
  if (use_table) member = detail::squarefree_membership_table(ideal);

  const unsigned threads = resolve_thread_count(opts.threads);
  std::vector<detail::PartialEntries> partial(threads);
  parallel_for(lattice.size(), threads, [&](std::size_t k, unsigned worker) {
    const auto& b = lattice[k];
    FaceTable faces;
    if (use_table) {
      const auto sigma = b.support();
      faces = FaceTable::from_predicate(sigma, [&](VertexSet tau) { return member[(sigma - tau).bits()] != 0; });
    } else {
      faces = upper_koszul_complex(ideal, b);
    }
    auto rb = reduced_betti(faces, opts.field);
    const int degree = static_cast<int>(b.degree());
    for (int d = -1; d <= faces.top_dimension(); ++d) {
      if (auto v = rb.at(d); v != 0) partial[worker][{d + 1, degree}] += v;
    }
  });
  return detail::merge_partials(partial, BettiSubject::ideal, ideal.nvars(), opts.field);
}

// Hochster: beta_{i,sigma}(I) = dim H~_{|sigma|-i-2}(delta(I)|_sigma) over all
// vertex subsets sigma of the support (subsets meeting a variable outside the
// support restrict to cones and contribute nothing).
inline BettiTable betti_table_hochster(const MonomialIdeal& ideal, const ComputeOptions& opts = {}) {
  detail::require_nonzero_proper(ideal, "betti_table_hochster");
  if (!is_squarefree(ideal)) throw std::invalid_argument("betti_table_hochster: ideal must be squarefree");
  require_vertex_capacity(ideal.nvars());
  const auto supp = support(ideal);
  if (supp.size() > 30) throw std::length_error("betti_table_hochster: support too large to sweep");
  const auto gens = detail::generator_supports(ideal);
  const bool use_table = ideal.nvars() <= detail::kMembershipTableBits;
  std::vector<std::uint8_t> member;
  if (use_table) member = detail::squarefree_membership_table(ideal);
  auto in_ideal = [&](VertexSet tau) {
    if (use_table) return member[tau.bits()] != 0;
    return std::any_of(gens.begin(), gens.end(), [&](VertexSet g) { return g.subset_of(tau); });
  };

  const auto positions = supp.elements();
  const std::size_t subsets = std::size_t{1} << positions.size();
  const unsigned threads = resolve_thread_count(opts.threads);
  std::vector<detail::PartialEntries> partial(threads);
  parallel_for(subsets, threads, [&](std::size_t packed, unsigned worker) {
    if (packed == 0) return;
    const VertexSet sigma = deposit(packed, positions);
    auto faces = FaceTable::from_predicate(sigma, [&](VertexSet tau) { return !in_ideal(tau); });
    auto rb = reduced_betti(faces, opts.field);
    const int size = static_cast<int>(sigma.size());
    for (int d = -1; d <= faces.top_dimension(); ++d) {
      const int i = size - d - 2;
      if (auto v = rb.at(d); v != 0 && i >= 0) partial[worker][{i, size}] += v;
    }
  });
  return detail::merge_partials(partial, BettiSubject::ideal, ideal.nvars(), opts.field);
}

enum class BettiRoute { koszul, hochster };

// For a squarefree ideal both sweeps visit pairs tau <= sigma of the support:
// Hochster walks the pairs with tau a face of delta(I), the Koszul side the
// pairs with sigma \ tau a non-face. The two counts add up to 3^|supp|.
inline BettiRoute preferred_route(const MonomialIdeal& ideal) {
  if (!is_squarefree(ideal) || ideal.is_zero() || ideal.is_unit()) return BettiRoute::koszul;
  const auto supp = support(ideal);
  if (supp.size() > 30) return BettiRoute::koszul;
  const auto gens = detail::generator_supports(ideal);
  const auto n = supp.size();
  std::uint64_t face_pairs = 0, total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= 3;
  for_each_subset(supp, [&](VertexSet tau) {
    bool face = std::none_of(gens.begin(), gens.end(), [&](VertexSet g) { return g.subset_of(tau); });
    if (face) face_pairs += std::uint64_t{1} << (n - tau.size());
  });
  return 2 * face_pairs < total ? BettiRoute::hochster : BettiRoute::koszul;
}

// Betti table of I by the cheaper applicable route.
inline BettiTable betti_table(const MonomialIdeal& ideal, const ComputeOptions& opts = {}) {
  return preferred_route(ideal) == BettiRoute::hochster ? betti_table_hochster(ideal, opts)
                                                        : betti_table_koszul(ideal, opts);
}

// Hilbert series of S/I for squarefree I, from the f-vector of delta(I):
//   HS = sum_i f_{i-1} t^i / (1-t)^i = numerator / (1-t)^ambient.
struct HilbertSeries {
  std::size_t ambient = 0;
  std::vector<std::int64_t> numerator;  // over (1-t)^ambient
  std::vector<std::int64_t> h_vector;   // numerator with every (1-t) factor cancelled
  std::size_t krull_dim = 0;            // remaining power of (1-t)

  // Degree of HS as a rational function.
  long a_invariant() const { return static_cast<long>(h_vector.size()) - 1 - static_cast<long>(krull_dim); }
};

inline std::vector<std::int64_t> f_polynomial(const MonomialIdeal& ideal, std::size_t ambient) {
  // coefficient of t^i = number of faces with i vertices
  const auto supp = support(ideal);
  if (supp.size() > 30) throw std::length_error("f_polynomial: support too large");
  if (ambient < supp.size()) throw std::invalid_argument("f_polynomial: ambient smaller than support");
  const auto gens = detail::generator_supports(ideal);
  std::vector<std::int64_t> f(supp.size() + 1, 0);
  for_each_subset(supp, [&](VertexSet tau) {
    bool face = std::none_of(gens.begin(), gens.end(), [&](VertexSet g) { return g.subset_of(tau); });
    if (face) ++f[tau.size()];
  });
  // Join with the full simplex on the variables outside the support.
  for (std::size_t k = supp.size(); k < ambient; ++k) {
    std::vector<std::int64_t> g(f.size() + 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
      g[i] += f[i];
      g[i + 1] += f[i];
    }
    f = std::move(g);
  }
  while (f.size() > 1 && f.back() == 0) f.pop_back();
  return f;
}

inline HilbertSeries hilbert_series(const MonomialIdeal& ideal, std::size_t ambient) {
  if (!is_squarefree(ideal)) throw std::invalid_argument("hilbert_series: ideal must be squarefree");
  if (ideal.is_unit()) throw std::invalid_argument("hilbert_series: ideal must be proper");
  if (ambient < support(ideal).size()) throw std::invalid_argument("hilbert_series: ambient smaller than support");
  const auto f = f_polynomial(ideal, ambient);

  // binom(k, r) (-1)^r rows of (1-t)^k
  auto one_minus_t_pow = [](std::size_t k) {
    std::vector<std::int64_t> c(k + 1, 0);
    c[0] = 1;
    for (std::size_t step = 0; step < k; ++step) {
      for (std::size_t r = step + 1; r > 0; --r) c[r] -= c[r - 1];
    }
    return c;
  };
  HilbertSeries hs;
  hs.ambient = ambient;
  hs.numerator.assign(ambient + 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    auto c = one_minus_t_pow(ambient - i);
    for (std::size_t r = 0; r < c.size(); ++r) hs.numerator[i + r] += f[i] * c[r];
  }
  while (hs.numerator.size() > 1 && hs.numerator.back() == 0) hs.numerator.pop_back();

  hs.h_vector = hs.numerator;
  hs.krull_dim = ambient;
  auto value_at_one = [](const std::vector<std::int64_t>& p) {
    std::int64_t s = 0;
    for (auto c : p) s += c;
    return s;
  };
  while (hs.krull_dim > 0 && value_at_one(hs.h_vector) == 0) {
    // divide by (1 - t): q_k = sum_{r<=k} p_r
    std::vector<std::int64_t> q(hs.h_vector.size() - 1);
    std::int64_t acc = 0;
    for (std::size_t k = 0; k < q.size(); ++k) {
      acc += hs.h_vector[k];
      q[k] = acc;
    }
    hs.h_vector = std::move(q);
    --hs.krull_dim;
  }
  return hs;
}

struct InvariantReport {
  std::size_t ambient = 0;
  std::size_t generators = 0;
  long reg = 0;    // reg(S/I)
  long pd = 0;     // pd(S/I)
  long depth = 0;  // depth(S/I) relative to `ambient` variables
  long dim = 0;
  std::size_t height = 0;
  std::size_t bight = 0;
  std::optional<long> a_invariant;  // squarefree ideals only
  FieldSpec field{};
  std::optional<std::uint32_t> cross_field;
  bool torsion_warning = false;
  std::int64_t wall_time_ms = 0;
};

// reg/pd from the Betti table; depth = ambient - pd; height,
// bight and dim from the minimal primes of the radical. Variables of the
// ambient ring outside the support raise depth and dim by one each.
// With `cross_field`, the table is recomputed over that field and any
// difference sets torsion_warning.
inline InvariantReport invariant_report(const MonomialIdeal& ideal, std::optional<std::size_t> ambient_count = {},
                                        const ComputeOptions& opts = {},
                                        std::optional<FieldSpec> cross_field = std::nullopt) {
  const auto start = std::chrono::steady_clock::now();
  if (ideal.is_unit()) throw std::invalid_argument("invariant_report: unit ideal");
  const std::size_t ambient = ambient_count.value_or(ideal.nvars());
  const auto supp = support(ideal);
  if (ambient < supp.size()) throw std::invalid_argument("invariant_report: ambient smaller than support");

  InvariantReport rep;
  rep.ambient = ambient;
  rep.generators = ideal.size();
  rep.field = opts.field;
  if (ideal.is_zero()) {
    rep.reg = 0;
    rep.pd = 0;
    rep.depth = static_cast<long>(ambient);
    rep.dim = static_cast<long>(ambient);
    rep.a_invariant = -static_cast<long>(ambient);
  } else {
    auto table = betti_table(ideal, opts).to_quotient();
    rep.reg = table.reg();
    rep.pd = table.pd();
    rep.depth = static_cast<long>(ambient) - rep.pd;
    if (cross_field && !(*cross_field == opts.field)) {
      ComputeOptions other = opts;
      other.field = *cross_field;
      rep.cross_field = cross_field->characteristic();
      auto table2 = betti_table(ideal, other).to_quotient();
      rep.torsion_warning = !table.same_numbers(table2);
    }
    auto primes = minimal_primes(radical(ideal));
    rep.height = primes.front().size();
    for (auto p : primes) {
      rep.height = std::min(rep.height, p.size());
      rep.bight = std::max(rep.bight, p.size());
    }
    rep.dim = static_cast<long>(ambient) - static_cast<long>(rep.height);
    if (is_squarefree(ideal)) rep.a_invariant = hilbert_series(ideal, ambient).a_invariant();
  }
  if (rep.depth > rep.dim) throw std::logic_error("depth exceeds dimension");
  rep.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                         .count();
  return rep;
}

// reg(S/J) with the conventions needed by exact-sequence recursions:
// S/(1) = 0 has no regularity (nullopt), S/(0) = S has regularity 0.
inline std::optional<long> quotient_reg(const MonomialIdeal& ideal, const ComputeOptions& opts = {}) {
  if (ideal.is_unit()) return std::nullopt;
  if (ideal.is_zero()) return 0;
  return betti_table(ideal, opts).reg() - 1;
}

// Ideal-level regularity, reg(J) = reg(S/J) + 1.
inline std::optional<long> ideal_reg(const MonomialIdeal& ideal, const ComputeOptions& opts = {}) {
  auto q = quotient_reg(ideal, opts);
  if (!q) return std::nullopt;
  return *q + 1;
}

struct TeraiCheck {
  long pd_quotient = 0;  // pd(S/I)
  long reg_dual = 0;     // reg(I^v)
  bool holds = false;
};

// pd(S/I) = reg(I^v), both sides from independent Betti tables.
inline TeraiCheck terai_check(const MonomialIdeal& ideal, const ComputeOptions& opts = {}) {
  detail::require_squarefree_proper_nonzero(ideal, "terai_check");
  TeraiCheck c;
  c.pd_quotient = betti_table_koszul(ideal, opts).pd() + 1;
  c.reg_dual = betti_table_koszul(alexander_dual(ideal), opts).reg();
  c.holds = c.pd_quotient == c.reg_dual;
  return c;
}

// |supp I| - |G(I)| + 1 when I is squarefree and every generator has a
// variable dividing no other generator; nullopt otherwise.
inline std::optional<long> private_variable_reg(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit() || !is_squarefree(ideal)) return std::nullopt;
  const auto supports = detail::generator_supports(ideal);
  for (std::size_t k = 0; k < supports.size(); ++k) {
    VertexSet others;
    for (std::size_t l = 0; l < supports.size(); ++l) {
      if (l != k) others |= supports[l];
    }
    if ((supports[k] - others).empty()) return std::nullopt;
  }
  return static_cast<long>(support(ideal).size()) - static_cast<long>(ideal.size()) + 1;
}

enum class ColonMode { add_generators, peel_generators };

struct ColonStep {
  Monomial monomial;
  std::optional<long> colon_reg;  // reg of the colon ideal; nullopt when it is the unit ideal
  long degree = 0;
  std::optional<long> term;       // contribution to the max
};

struct ColonBound {
  long bound = 0;      // upper bound for reg(I)
  long base_reg = 0;   // reg of the final ideal in the sequence
  std::vector<ColonStep> trace;
};

// Replays the exact-sequence recursion on ideal regularity.
//
// add_generators: J_0 = I, J_k = J_{k-1} + (f_k);
//   reg(I) <= max{ reg(J_{k-1} : f_k) + deg f_k, reg(J_last) }.
// peel_generators: order is G(I) = {u_1..u_r}, J_k = (u_{k+1}, ..., u_r);
//   reg(I) <= max{ reg(J_k : u_k) + deg u_k - 1, reg(J_r) }.
// The zero ideal counts with reg 1 (S/(0) = S has reg 0); a unit colon
// ideal contributes nothing.
inline ColonBound colon_sequence_reg_bound(const MonomialIdeal& ideal, const std::vector<Monomial>& order,
                                           ColonMode mode, const ComputeOptions& opts = {}) {
  if (ideal.is_zero() || ideal.is_unit()) throw std::invalid_argument("colon_sequence_reg_bound: need a nonzero proper ideal");
  for (const auto& f : order) {
    if (f.nvars() != ideal.nvars()) throw std::invalid_argument("colon_sequence_reg_bound: monomial from another ring");
    if (f.is_unit()) throw std::invalid_argument("colon_sequence_reg_bound: unit monomial in order");
  }
  ColonBound out;
  std::optional<long> best;
  auto take = [&](std::optional<long> v) {
    if (v && (!best || *v > *best)) best = v;
  };

  if (mode == ColonMode::add_generators) {
    MonomialIdeal current = ideal;
    for (const auto& f : order) {
      ColonStep step{f, ideal_reg(colon(current, f), opts), f.degree(), std::nullopt};
      if (step.colon_reg) step.term = *step.colon_reg + step.degree;
      take(step.term);
      out.trace.push_back(std::move(step));
      current = adjoin(current, f);
    }
    out.base_reg = ideal_reg(current, opts).value();
  } else {
    auto sorted_order = order;
    std::sort(sorted_order.begin(), sorted_order.end(), CanonicalOrder{});
    if (sorted_order != ideal.gens()) {
      throw std::invalid_argument("colon_sequence_reg_bound: peel order must list each minimal generator once");
    }
    for (std::size_t k = 0; k < order.size(); ++k) {
      std::vector<Monomial> rest(order.begin() + static_cast<std::ptrdiff_t>(k + 1), order.end());
      auto remaining = MonomialIdeal::from_generators(std::move(rest), ideal.ambient_ptr());
      ColonStep step{order[k], ideal_reg(colon(remaining, order[k]), opts), order[k].degree(), std::nullopt};
      if (step.colon_reg) step.term = *step.colon_reg + step.degree - 1;
      take(step.term);
      out.trace.push_back(std::move(step));
    }
    out.base_reg = 1;
  }
  take(out.base_reg);
  out.bound = *best;
  return out;
}

struct QuotientInvariants {
  long reg = 0;
  long depth = 0;
};

struct SumPrediction {
  long reg = 0;
  long depth = 0;
};

// Powers of a sum of ideals in disjoint variables. With a_k = S1/I^k and
// b_k = S2/J^k (k = 1..t):
//   reg(S/(I+J)^t)   = max_{i in [t-1], j in [t]} { reg a_{t-i} + reg b_i + 1, reg a_{t-j+1} + reg b_j }
//   depth(S/(I+J)^t) = min_{i in [t-1], j in [t]} { depth a_{t-i} + depth b_i + 1, depth a_{t-j+1} + depth b_j }
inline SumPrediction sum_formula_predict(const std::vector<QuotientInvariants>& first,
                                         const std::vector<QuotientInvariants>& second, int t) {
  if (t < 1) throw std::invalid_argument("sum_formula_predict: t must be positive");
  const auto need = static_cast<std::size_t>(t);
  if (first.size() < need || second.size() < need) {
    throw std::invalid_argument("sum_formula_predict: invariant tables must cover powers 1..t");
  }
  auto a = [&](int k) { return first[static_cast<std::size_t>(k - 1)]; };
  auto b = [&](int k) { return second[static_cast<std::size_t>(k - 1)]; };
  SumPrediction p{std::numeric_limits<long>::min(), std::numeric_limits<long>::max()};
  for (int i = 1; i <= t - 1; ++i) {
    p.reg = std::max(p.reg, a(t - i).reg + b(i).reg + 1);
    p.depth = std::min(p.depth, a(t - i).depth + b(i).depth + 1);
  }
  for (int j = 1; j <= t; ++j) {
    p.reg = std::max(p.reg, a(t - j + 1).reg + b(j).reg);
    p.depth = std::min(p.depth, a(t - j + 1).depth + b(j).depth);
  }
  return p;
}

}  // namespace chessideal
