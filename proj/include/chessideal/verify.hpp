#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chessboard.hpp"
#include "homology.hpp"
#include "invariants.hpp"
#include "ring.hpp"
#include "simplicial.hpp"

namespace chessideal::verify {

enum class Status { pass, fail, skipped_long };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::skipped_long: return "SKIPPED-LONG";
  }
  return "?";
}

// Where an expected value comes from: a published closed form, an
// independent computation in this catalog, or a by-hand value.
enum class Basis { published, oracle, hand };

inline const char* to_string(Basis b) {
  switch (b) {
    case Basis::published: return "published";
    case Basis::oracle: return "oracle";
    case Basis::hand: return "hand";
  }
  return "?";
}

struct Expected {
  std::string name;
  long value = 0;
  Basis basis = Basis::published;
};

struct Computed {
  std::string name;
  long value = 0;
};

struct VerifyCase {
  std::string group;
  std::string id;
  std::string description;
  std::vector<Expected> expected;
  std::vector<Computed> computed;
  Status status = Status::fail;
  std::int64_t runtime_ms = 0;
  bool long_case = false;
  std::string note;
};

struct VerifyOptions {
  unsigned threads = 0;
  bool run_long = false;
  FieldSpec field{};
  FieldSpec cross_field = FieldSpec::gf2();
};

struct QuotientValues {
  long reg = 0;
  long pd = 0;
  long depth = 0;
};

// Handed to each case body: records computed values and runs every Betti
// table over both fields.
class CaseContext {
 public:
  explicit CaseContext(const VerifyOptions& opts) : opts_(opts) {}

  void record(const std::string& name, long value) { computed_.push_back({name, value}); }
  void flag(const std::string& name, bool value) { record(name, value ? 1 : 0); }
  void note(const std::string& text) {
    if (!note_.empty()) note_ += "; ";
    note_ += text;
  }

  ComputeOptions compute_options() const { return ComputeOptions{opts_.field, opts_.threads}; }

  // Betti table of I over the primary field, cross-checked over the second field.
  BettiTable table(const MonomialIdeal& ideal) {
    auto primary = betti_table(ideal, compute_options());
    if (!(opts_.cross_field == opts_.field)) {
      ComputeOptions other{opts_.cross_field, opts_.threads};
      auto second = betti_table(ideal, other);
      if (!primary.same_numbers(second)) {
        torsion_ = true;
        note("torsion: Betti tables over GF(" + std::to_string(opts_.field.characteristic()) + ") and GF(" +
             std::to_string(opts_.cross_field.characteristic()) + ") differ");
      }
    }
    return primary;
  }

  // reg, pd and depth of S/I with `ambient` variables.
  QuotientValues quotient(const MonomialIdeal& ideal, std::size_t ambient) {
    if (ideal.is_zero()) return {0, 0, static_cast<long>(ambient)};
    auto t = table(ideal);
    QuotientValues q{t.reg() - 1, t.pd() + 1, 0};
    q.depth = static_cast<long>(ambient) - q.pd;
    return q;
  }

  const VerifyOptions& options() const { return opts_; }
  std::vector<Computed>& computed() { return computed_; }
  const std::string& note_text() const { return note_; }
  bool torsion() const { return torsion_; }

 private:
  const VerifyOptions& opts_;
  std::vector<Computed> computed_;
  std::string note_;
  bool torsion_ = false;
};

struct CaseSpec {
  std::string group;
  std::string id;
  std::string description;
  std::vector<Expected> expected;
  bool long_case = false;
  std::function<void(CaseContext&)> body;
};

inline VerifyCase run_case(const CaseSpec& spec, const VerifyOptions& opts) {
  VerifyCase out{spec.group, spec.id, spec.description, spec.expected, {}, Status::fail, 0, spec.long_case, {}};
  if (spec.long_case && !opts.run_long) {
    out.status = Status::skipped_long;
    out.note = "long case; run the long suite to execute";
    return out;
  }
  CaseContext ctx(opts);
  const auto start = std::chrono::steady_clock::now();
  bool threw = false;
  try {
    spec.body(ctx);
  } catch (const std::exception& e) {
    threw = true;
    ctx.note(std::string("exception: ") + e.what());
  }
  out.runtime_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  out.computed = std::move(ctx.computed());
  out.note = ctx.note_text();
  bool ok = !threw && !ctx.torsion();
  for (const auto& e : out.expected) {
    auto it = std::find_if(out.computed.begin(), out.computed.end(), [&](const Computed& c) { return c.name == e.name; });
    if (it == out.computed.end() || it->value != e.value) ok = false;
  }
  out.status = ok ? Status::pass : Status::fail;
  return out;
}

inline std::vector<VerifyCase> run_cases(const std::vector<CaseSpec>& specs, const VerifyOptions& opts) {
  std::vector<VerifyCase> out;
  out.reserve(specs.size());
  for (const auto& s : specs) out.push_back(run_case(s, opts));
  return out;
}

namespace detail {

inline long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::string board_name(std::size_t m, std::size_t n) {
  return std::to_string(m) + "x" + std::to_string(n);
}

inline MonomialIdeal board_power(std::size_t m, std::size_t n, int t) { return power(facet_ideal(Board(m, n)), t); }

// Places I (over its own variables) into a ring of `target` variables starting at `offset`.
inline MonomialIdeal embed(const MonomialIdeal& ideal, std::size_t offset, const VariableSetPtr& target) {
  std::vector<std::size_t> perm(ideal.nvars());
  std::iota(perm.begin(), perm.end(), offset);
  return relabel(ideal, perm, target);
}

inline Monomial embed(const Monomial& m, std::size_t nvars) {
  std::vector<Monomial::exponent_type> e(nvars, 0);
  for (std::size_t v = 0; v < m.nvars(); ++v) e[v] = m.exponent(v);
  return Monomial(std::move(e));
}

inline Monomial random_monomial(std::mt19937& rng, std::size_t nvars, int max_exp) {
  std::uniform_int_distribution<int> ex(0, max_exp);
  while (true) {
    std::vector<Monomial::exponent_type> e(nvars);
    for (auto& x : e) x = ex(rng);
    Monomial m(std::move(e));
    if (!m.is_unit()) return m;
  }
}

// Nonzero proper ideal with 1..max_gens generators.
inline MonomialIdeal random_ideal(std::mt19937& rng, std::size_t nvars, int max_gens, int max_exp) {
  std::uniform_int_distribution<int> count(1, max_gens);
  auto vars = VariableSet::indexed(nvars);
  std::vector<Monomial> gens;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) gens.push_back(random_monomial(rng, nvars, max_exp));
  return MonomialIdeal::from_generators(std::move(gens), vars);
}

// beta_{i,sigma}(S/I) = b~_{|sigma|-i-1}(delta(I)|_sigma), sigma = {} included.
// Used only to cross-check the ideal/quotient shift from an independent route.
inline BettiTable hochster_quotient_table(const MonomialIdeal& ideal, const FieldSpec& field) {
  const auto supp = support(ideal);
  const auto gens = chessideal::detail::generator_supports(ideal);
  BettiTable::Entries e;
  for_each_subset(supp, [&](VertexSet sigma) {
    auto faces = FaceTable::from_predicate(sigma, [&](VertexSet tau) {
      return std::none_of(gens.begin(), gens.end(), [&](VertexSet g) { return g.subset_of(tau); });
    });
    auto rb = reduced_betti(faces, field);
    const int size = static_cast<int>(sigma.size());
    for (int d = -1; d <= faces.top_dimension(); ++d) {
      if (auto v = rb.at(d); v != 0) e[{size - d - 1, size}] += v;
    }
  });
  return BettiTable(BettiSubject::quotient, ideal.nvars(), field, std::move(e));
}

// Tracks a property family: number of instances checked and the first failure.
struct Tally {
  long checked = 0;
  long failures = 0;
  std::string first;

  void check(bool ok, const std::string& what) {
    ++checked;
    if (!ok) {
      ++failures;
      if (first.empty()) first = what;
    }
  }
  void finish(CaseContext& ctx) const {
    ctx.record("failures", failures);
    ctx.record("checked", checked);
    if (!first.empty()) ctx.note("first failure: " + first);
  }
};

inline std::vector<Expected> no_failures() { return {{"failures", 0, Basis::oracle}}; }

struct BoardIndex {
  std::size_t m, n;
};

inline std::vector<BoardIndex> boards(std::size_t max_m, std::size_t max_n) {
  std::vector<BoardIndex> out;
  for (std::size_t m = 1; m <= max_m; ++m) {
    for (std::size_t n = m; n <= max_n; ++n) out.push_back({m, n});
  }
  return out;
}

}  // namespace detail

// Published closed forms and values for chessboard facet ideals.
inline std::vector<CaseSpec> published_catalog() {
  using detail::board_name;
  std::vector<CaseSpec> specs;

  auto decomposition_boards = detail::boards(3, 5);
  decomposition_boards.push_back({4, 4});
  for (auto [m, n] : decomposition_boards) {
    long count = 0;
    for (long s = 0; s < static_cast<long>(m); ++s) {
      count += detail::binomial(static_cast<long>(m), s) * detail::binomial(static_cast<long>(n), static_cast<long>(m) - 1 - s);
    }
    specs.push_back({"decomposition", "primes-" + board_name(m, n),
                     "closed-form minimal primes equal the minimal vertex covers",
                     {{"formula_equals_covers", 1, Basis::oracle}, {"prime_count", count, Basis::published}},
                     false, [m = m, n = n](CaseContext& ctx) {
                       Board b(m, n);
                       auto formula = minimal_primes_formula(b);
                       auto covers = minimal_vertex_covers(chessboard_complex(b));
                       ctx.flag("formula_equals_covers", formula == covers);
                       ctx.record("prime_count", static_cast<long>(covers.size()));
                     }});

    const auto closed = prime_profile(Board(m, n));
    specs.push_back({"profile", "profile-" + board_name(m, n), "height, dim and bight from the enumerated primes",
                     {{"height", static_cast<long>(closed.height), Basis::published},
                      {"dim", static_cast<long>(closed.dim), Basis::published},
                      {"bight", static_cast<long>(closed.bight), Basis::published}},
                     false, [m = m, n = n](CaseContext& ctx) {
                       Board b(m, n);
                       auto p = prime_profile_of(minimal_vertex_covers(chessboard_complex(b)), b.cell_count());
                       ctx.record("height", static_cast<long>(p.height));
                       ctx.record("dim", static_cast<long>(p.dim));
                       ctx.record("bight", static_cast<long>(p.bight));
                     }});
  }

  for (std::size_t n = 1; n <= 4; ++n) {
    for (int t = 1; t <= 3; ++t) {
      specs.push_back({"one-row-powers", "row-1x" + std::to_string(n) + "-t" + std::to_string(t),
                       "one-row board powers are zero-dimensional",
                       {{"reg", t - 1, Basis::published}, {"depth", 0, Basis::published}}, false,
                       [n, t](CaseContext& ctx) {
                         auto q = ctx.quotient(detail::board_power(1, n, t), n);
                         ctx.record("reg", q.reg);
                         ctx.record("depth", q.depth);
                       }});
    }
  }

  struct PowerCase {
    std::size_t n;
    int t;
    long depth;
    bool long_case;
  };
  const std::vector<PowerCase> two_row = {{2, 1, 2, false}, {2, 2, 2, false}, {2, 3, 2, false}, {3, 1, 2, false},
                                          {3, 2, 2, false}, {3, 3, 2, false}, {4, 1, 2, false}, {4, 2, 2, false},
                                          {3, 4, 1, true},  {4, 3, 1, true}};
  for (auto c : two_row) {
    specs.push_back({"two-row-powers", "row-2x" + std::to_string(c.n) + "-t" + std::to_string(c.t),
                     "two-row board powers: reg 2t and the depth drop",
                     {{"reg", 2L * c.t, Basis::published}, {"depth", c.depth, Basis::published}}, c.long_case,
                     [c](CaseContext& ctx) {
                       auto q = ctx.quotient(detail::board_power(2, c.n, c.t), 2 * c.n);
                       ctx.record("reg", q.reg);
                       ctx.record("depth", q.depth);
                     }});
  }

  for (std::size_t n : {3, 4}) {
    specs.push_back({"three-row", "row-3x" + std::to_string(n), "three-row boards have reg 4 and depth 4",
                     {{"reg", 4, Basis::published}, {"depth", 4, Basis::published}}, false, [n](CaseContext& ctx) {
                       auto q = ctx.quotient(detail::board_power(3, n, 1), 3 * n);
                       ctx.record("reg", q.reg);
                       ctx.record("depth", q.depth);
                     }});
  }

  auto fixture_case = [&](const std::string& id, Fixture f, std::size_t n, long reg) {
    specs.push_back({"fixtures", id, "regularity of the ideal", {{"reg_ideal", reg, Basis::published}}, false,
                     [f, n](CaseContext& ctx) {
                       ctx.record("reg_ideal", ctx.table(fixture_ideal(f, n)).reg());
                     }});
  };
  fixture_case("six-quadrics", Fixture::six_quadrics, 0, 3);
  for (std::size_t n : {3, 4, 5}) {
    fixture_case("two-n-minus-3-n" + std::to_string(n), Fixture::two_n_minus_3, n, 2 * static_cast<long>(n) - 3);
  }
  for (std::size_t n : {4, 5}) {
    fixture_case("two-n-minus-5-n" + std::to_string(n), Fixture::two_n_minus_5, n, 2 * static_cast<long>(n) - 5);
  }

  for (std::size_t m : {2, 3}) {
    for (std::size_t n = m; n <= 4; ++n) {
      specs.push_back({"matching", "matching-" + board_name(m, n),
                       "an induced matching reaches 2(m-1) and the regularity is at least that",
                       {{"bound_reached", 1, Basis::published}, {"witness_induced", 1, Basis::oracle},
                        {"reg_at_least_bound", 1, Basis::published}},
                       false, [m, n](CaseContext& ctx) {
                         Board b(m, n);
                         auto delta = chessboard_complex(b);
                         auto best = induced_matching_bound(delta, 3);
                         auto q = ctx.quotient(facet_ideal(b), b.cell_count());
                         const long target = 2 * (static_cast<long>(m) - 1);
                         ctx.record("matching_value", best.value);
                         ctx.record("matching_size", static_cast<long>(best.witness.size()));
                         ctx.record("reg", q.reg);
                         ctx.flag("bound_reached", best.value >= target);
                         ctx.flag("witness_induced", !best.witness.empty() && is_induced_matching(delta, best.witness));
                         ctx.flag("reg_at_least_bound", q.reg >= best.value);
                       }});
    }
  }

  for (auto [m, n] : detail::boards(3, 4)) {
    specs.push_back({"a-invariant", "a-" + board_name(m, n), "a-invariant of the facet quotient",
                     {{"a_invariant", 0, Basis::published}}, false, [m = m, n = n](CaseContext& ctx) {
                       Board b(m, n);
                       ctx.record("a_invariant", hilbert_series(facet_ideal(b), b.cell_count()).a_invariant());
                     }});
  }

  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const long v = std::min<long>({static_cast<long>(m), static_cast<long>(n), static_cast<long>((m + n + 1) / 3)});
      specs.push_back({"sr-depth", "sr-depth-" + board_name(m, n),
                       "depth of the Stanley-Reisner ring of the chessboard complex",
                       {{"depth", v, Basis::published}}, false, [m, n](CaseContext& ctx) {
                         // m x n and n x m boards give the same complex up to relabelling.
                         Board b(std::min(m, n), std::max(m, n));
                         ctx.record("depth", ctx.quotient(stanley_reisner_ideal(b), b.cell_count()).depth);
                       }});
    }
  }

  specs.push_back({"four-by-four", "row-4x4", "the 4x4 board has reg 6 and depth 6",
                   {{"reg", 6, Basis::published}, {"depth", 6, Basis::published}}, true, [](CaseContext& ctx) {
                     auto q = ctx.quotient(detail::board_power(4, 4, 1), 16);
                     ctx.record("reg", q.reg);
                     ctx.record("depth", q.depth);
                   }});
  return specs;
}

// Structural laws checked over small corpora and seeded random instances.
inline std::vector<CaseSpec> properties_catalog() {
  using detail::Tally;
  std::vector<CaseSpec> specs;

  auto squarefree_corpus = [] {
    std::vector<std::pair<std::string, MonomialIdeal>> out;
    for (auto [m, n] : detail::boards(3, 4)) out.emplace_back("F" + detail::board_name(m, n), facet_ideal(Board(m, n)));
    out.emplace_back("six-quadrics", fixture_ideal(Fixture::six_quadrics));
    for (std::size_t n : {3, 4, 5}) out.emplace_back("2n-3/" + std::to_string(n), fixture_ideal(Fixture::two_n_minus_3, n));
    for (std::size_t n : {4, 5}) out.emplace_back("2n-5/" + std::to_string(n), fixture_ideal(Fixture::two_n_minus_5, n));
    for (auto [m, n] : detail::boards(3, 3)) {
      auto sr = stanley_reisner_ideal(Board(m, n));
      if (!sr.is_zero()) out.emplace_back("SR" + detail::board_name(m, n), sr);
    }
    return out;
  };

  specs.push_back({"properties", "hochster-equals-koszul", "Hochster and upper-Koszul Betti tables agree",
                   detail::no_failures(), false, [squarefree_corpus](CaseContext& ctx) {
                     Tally tally;
                     for (const auto& [name, ideal] : squarefree_corpus()) {
                       auto k = betti_table_koszul(ideal, ctx.compute_options());
                       auto h = betti_table_hochster(ideal, ctx.compute_options());
                       tally.check(k.same_numbers(h), name);
                     }
                     tally.finish(ctx);
                   }});

  specs.push_back({"properties", "dual-involution", "Alexander duality is an involution", detail::no_failures(), false,
                   [](CaseContext& ctx) {
                     Tally tally;
                     for (auto [m, n] : detail::boards(3, 4)) {
                       auto f = facet_ideal(Board(m, n));
                       tally.check(alexander_dual(alexander_dual(f)) == f, detail::board_name(m, n));
                     }
                     tally.finish(ctx);
                   }});

  specs.push_back({"properties", "terai", "pd(S/I) equals reg of the Alexander dual", detail::no_failures(), false,
                   [](CaseContext& ctx) {
                     Tally tally;
                     for (auto [m, n] : detail::boards(3, 4)) {
                       auto c = terai_check(facet_ideal(Board(m, n)), ctx.compute_options());
                       tally.check(c.holds, detail::board_name(m, n) + " pd=" + std::to_string(c.pd_quotient) +
                                                " reg_dual=" + std::to_string(c.reg_dual));
                     }
                     tally.finish(ctx);
                   }});

  specs.push_back({"properties", "quotient-shift", "reg(S/I) = reg(I) - 1 and pd(S/I) = pd(I) + 1",
                   detail::no_failures(), false, [squarefree_corpus](CaseContext& ctx) {
                     Tally tally;
                     for (const auto& [name, ideal] : squarefree_corpus()) {
                       auto ideal_table = betti_table_koszul(ideal, ctx.compute_options());
                       auto quotient_table = detail::hochster_quotient_table(ideal, ctx.options().field);
                       tally.check(quotient_table.reg() == ideal_table.reg() - 1 &&
                                       quotient_table.pd() == ideal_table.pd() + 1 &&
                                       quotient_table.same_numbers(ideal_table.to_quotient()),
                                   name);
                     }
                     tally.finish(ctx);
                   }});

  specs.push_back({"properties", "disjoint-sum-product", "reg adds over sums and products in disjoint variables",
                   detail::no_failures(), false, [](CaseContext& ctx) {
                     Tally tally;
                     std::mt19937 rng(20240611);
                     std::uniform_int_distribution<int> size(2, 3);
                     for (int trial = 0; trial < 50; ++trial) {
                       const auto k = static_cast<std::size_t>(size(rng)), l = static_cast<std::size_t>(size(rng));
                       auto i1 = detail::random_ideal(rng, k, 3, 2);
                       auto j1 = detail::random_ideal(rng, l, 3, 2);
                       auto both = VariableSet::indexed(k + l);
                       auto i2 = detail::embed(i1, 0, both), j2 = detail::embed(j1, k, both);
                       const long ri = ctx.table(i1).reg(), rj = ctx.table(j1).reg();
                       const long sum_q = ctx.table(sum(i2, j2)).reg() - 1;
                       const long prod = ctx.table(product(i2, j2)).reg();
                       tally.check(sum_q == (ri - 1) + (rj - 1), "sum trial " + std::to_string(trial));
                       tally.check(prod == ri + rj, "product trial " + std::to_string(trial));
                     }
                     tally.finish(ctx);
                   }});

  specs.push_back({"properties", "mmvv", "reg(S/(I,f)) <= reg(S/I) + deg f - 1", detail::no_failures(), false,
                   [](CaseContext& ctx) {
                     Tally tally;
                     std::mt19937 rng(7177);
                     for (int trial = 0; trial < 50; ++trial) {
                       auto ideal = detail::random_ideal(rng, 4, 4, 2);
                       auto f = detail::random_monomial(rng, 4, 2);
                       const long lhs = ctx.table(adjoin(ideal, f)).reg() - 1;
                       const long rhs = ctx.table(ideal).reg() - 1 + f.degree() - 1;
                       tally.check(lhs <= rhs, "trial " + std::to_string(trial));
                     }
                     tally.finish(ctx);
                   }});

  specs.push_back({"properties", "sum-formula-2x2", "power formula for sums matches direct computation on the 2x2 board",
                   detail::no_failures(), false, [](CaseContext& ctx) {
                     Tally tally;
                     // F(2x2) = (x[1,1]x[2,2]) + (x[1,2]x[2,1]) in disjoint variables.
                     auto s1 = VariableSet::indexed(2);
                     auto principal = MonomialIdeal::from_generators({Monomial({1, 1})}, s1);
                     std::vector<QuotientInvariants> comp;
                     for (int k = 1; k <= 3; ++k) {
                       auto q = ctx.quotient(power(principal, k), 2);
                       comp.push_back({q.reg, q.depth});
                     }
                     for (int t = 1; t <= 3; ++t) {
                       auto pred = sum_formula_predict(comp, comp, t);
                       auto direct = ctx.quotient(detail::board_power(2, 2, t), 4);
                       tally.check(pred.reg == direct.reg && pred.depth == direct.depth, "t=" + std::to_string(t));
                     }
                     tally.finish(ctx);
                   }});

  specs.push_back({"properties", "colon-identities", "bottom-row colon identities for the A and B subcomplexes",
                   detail::no_failures(), false, [](CaseContext& ctx) {
                     Tally tally;
                     for (auto [m, n] : detail::boards(3, 4)) {
                       if (m < 2) continue;
                       Board b(m, n);
                       const auto nv = b.cell_count();
                       auto prev = facet_ideal(b);
                       auto g_sum = MonomialIdeal::zero(b.vars());
                       for (std::size_t i = 1; i <= n; ++i) {
                         auto fi = facet_ideal(subcomplex_A(b, i));
                         auto gi = facet_ideal(subcomplex_B(b, i));
                         auto x = Monomial::from_indices(nv, {b.index(m, i)});
                         const auto where = detail::board_name(m, n) + " i=" + std::to_string(i);
                         tally.check(colon(prev, x) == sum(fi, gi), where + " colon");
                         tally.check(adjoin(prev, x) == adjoin(fi, x), where + " adjoin");
                         g_sum = sum(g_sum, gi);
                         prev = fi;
                       }
                       tally.check(prev.is_zero(), detail::board_name(m, n) + " last A");
                       tally.check(g_sum == facet_ideal(row_reduced_complex(b)), detail::board_name(m, n) + " sum of B");
                     }
                     tally.finish(ctx);
                   }});

  specs.push_back({"properties", "bottom-row-depth-bound", "depth(S/F) >= min over W of depth(S/F_W) on the 3x3 board",
                   detail::no_failures(), false, [](CaseContext& ctx) {
                     Tally tally;
                     Board b(3, 3);
                     const auto nv = b.cell_count();
                     auto f0 = facet_ideal(b);
                     long best = std::numeric_limits<long>::max();
                     for_each_subset(b.row(3), [&](VertexSet w) {
                       Monomial u = Monomial::from_support(nv, w);
                       auto rest = prime_ideal(b.row(3) - w, b.vars());
                       auto fw = sum(colon(f0, u), rest);
                       auto via_b = rest;
                       for (auto v : w.elements()) via_b = sum(via_b, facet_ideal(subcomplex_B(b, b.cell(v).second)));
                       tally.check(fw == via_b, "W=" + std::to_string(w.bits()) + " decomposition");
                       best = std::min(best, ctx.quotient(fw, nv).depth);
                     });
                     const long depth0 = ctx.quotient(f0, nv).depth;
                     ctx.record("depth", depth0);
                     ctx.record("min_depth_fw", best);
                     tally.check(depth0 >= best, "inequality");
                     tally.finish(ctx);
                   }});

  for (std::size_t n : {3, 4}) {
    specs.push_back({"properties", "colon-replay-3x" + std::to_string(n),
                     "adjoining the two-row quadrics bounds reg(F) by 5 with every colon reg at most 3",
                     {{"bound_at_most_5", 1, Basis::published}, {"steps_at_most_3", 1, Basis::published},
                      {"bound_dominates_reg", 1, Basis::oracle}},
                     false, [n](CaseContext& ctx) {
                       Board b3(3, n);
                       auto f = facet_ideal(b3);
                       std::vector<Monomial> order;
                       const auto two_row = facet_ideal(Board(2, n));
                       for (const auto& g : two_row.gens()) order.push_back(detail::embed(g, b3.cell_count()));
                       auto res = colon_sequence_reg_bound(f, order, ColonMode::add_generators, ctx.compute_options());
                       long worst = std::numeric_limits<long>::min();
                       for (const auto& s : res.trace) {
                         if (s.colon_reg) worst = std::max(worst, *s.colon_reg);
                       }
                       const long reg = ctx.table(f).reg();
                       ctx.record("bound", res.bound);
                       ctx.record("max_step_reg", worst);
                       ctx.record("reg_ideal", reg);
                       ctx.flag("bound_at_most_5", res.bound <= 5);
                       ctx.flag("steps_at_most_3", worst <= 3);
                       ctx.flag("bound_dominates_reg", res.bound >= reg);
                     }});
  }

  specs.push_back({"properties", "path-ideals", "path and cycle ideal regularities", detail::no_failures(), false,
                   [](CaseContext& ctx) {
                     Tally tally;
                     for (auto kind : {PathKind::path, PathKind::cycle}) {
                       const std::size_t first = kind == PathKind::path ? 2 : 3;
                       for (std::size_t n = first; n <= 7; ++n) {
                         const auto tag = std::string(kind == PathKind::path ? "path" : "cycle") + std::to_string(n);
                         tally.check(ctx.table(path_ideal(kind, n, 2)).reg() == static_cast<long>((n + 1) / 3) + 1,
                                     tag + " P2");
                         tally.check(ctx.table(path_ideal(kind, n, n - 1)).reg() == static_cast<long>(n) - 1,
                                     tag + " P(n-1)");
                       }
                     }
                     tally.finish(ctx);
                   }});

  specs.push_back({"properties", "permutation-invariance", "Betti tables are unchanged by relabelling variables",
                   detail::no_failures(), false, [](CaseContext& ctx) {
                     Tally tally;
                     std::mt19937 rng(424242);
                     std::vector<MonomialIdeal> pool = {facet_ideal(Board(2, 3)), facet_ideal(Board(3, 3)),
                                                        fixture_ideal(Fixture::six_quadrics),
                                                        fixture_ideal(Fixture::two_n_minus_3, 4),
                                                        detail::board_power(2, 2, 2)};
                     for (int k = 0; k < 3; ++k) pool.push_back(detail::random_ideal(rng, 5, 4, 2));
                     for (int trial = 0; trial < 20; ++trial) {
                       const auto& ideal = pool[static_cast<std::size_t>(trial) % pool.size()];
                       std::vector<std::size_t> perm(ideal.nvars());
                       std::iota(perm.begin(), perm.end(), std::size_t{0});
                       std::shuffle(perm.begin(), perm.end(), rng);
                       auto moved = relabel(ideal, perm, VariableSet::indexed(ideal.nvars(), "y"));
                       tally.check(ctx.table(ideal).same_numbers(ctx.table(moved)), "trial " + std::to_string(trial));
                     }
                     tally.finish(ctx);
                   }});

  specs.push_back({"properties", "cone-and-chain", "cones are acyclic and boundary maps compose to zero",
                   detail::no_failures(), false, [](CaseContext& ctx) {
                     Tally tally;
                     std::vector<SimplicialComplex> complexes;
                     for (auto [m, n] : detail::boards(3, 4)) {
                       complexes.push_back(chessboard_complex(Board(m, n)));
                       complexes.push_back(sr_complex_of_ideal(facet_ideal(Board(m, n))));
                     }
                     for (const auto& delta : complexes) {
                       const auto nv = delta.vertex_count();
                       std::vector<std::string> labels = delta.vertices().labels();
                       labels.push_back("apex");
                       auto coned_vars = std::make_shared<const VariableSet>(std::move(labels));
                       std::vector<VertexSet> coned;
                       for (auto f : delta.facets()) {
                         f.insert(nv);
                         coned.push_back(f);
                       }
                       auto cone = SimplicialComplex::from_facets(coned_vars, coned);
                       for (const auto& field : {ctx.options().field, ctx.options().cross_field}) {
                         tally.check(reduced_betti(cone, field).is_zero(), "cone");
                         tally.check(boundary_squares_to_zero(FaceTable::of(delta), field), "chain");
                       }
                     }
                     tally.finish(ctx);
                   }});

  return specs;
}

enum class Suite { published, properties, long_cases };

// published: every catalog case, long ones reported as skipped; long: only the
// long cases, executed; properties: the property catalog.
inline std::vector<VerifyCase> run_suite(Suite suite, VerifyOptions opts) {
  if (suite == Suite::properties) return run_cases(properties_catalog(), opts);
  auto specs = published_catalog();
  if (suite == Suite::long_cases) {
    std::erase_if(specs, [](const CaseSpec& s) { return !s.long_case; });
    opts.run_long = true;
  } else {
    opts.run_long = false;
  }
  return run_cases(specs, opts);
}

inline bool all_passed(const std::vector<VerifyCase>& cases) {
  return std::none_of(cases.begin(), cases.end(), [](const VerifyCase& c) { return c.status == Status::fail; });
}

}  // namespace chessideal::verify
