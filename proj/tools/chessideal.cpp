#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "chessideal/chessideal.hpp"

namespace ci = chessideal;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerify = 2;
constexpr int kExitGuard = 3;

constexpr std::uint64_t kGuardThreshold = std::uint64_t{1} << 20;
constexpr std::size_t kMaxSide = 6;
constexpr int kMaxPower = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GuardTripped : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BoardArgs {
  std::size_t m = 0;
  std::size_t n = 0;
  int power = 1;
  std::string kind = "facet";
  std::string fixture;
};

void add_board_options(CLI::App* cmd, BoardArgs& a, bool with_kind) {
  cmd->add_option("--m", a.m, "board rows");
  cmd->add_option("--n", a.n, "board columns");
  cmd->add_option("--power", a.power, "power t of the ideal")->capture_default_str();
  if (with_kind) {
    cmd->add_option("--kind", a.kind, "facet or stanley-reisner")
        ->check(CLI::IsMember({"facet", "stanley-reisner"}))
        ->capture_default_str();
    cmd->add_option("--fixture", a.fixture, "six-quadrics, two-n-minus-3 or two-n-minus-5 (uses --n)")
        ->check(CLI::IsMember({"six-quadrics", "two-n-minus-3", "two-n-minus-5"}));
  }
}

void check_board_bounds(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw UsageError("--m and --n are required and must be at least 1");
  if (m > n) {
    throw UsageError("need m <= n (got m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                     "); the transposed board gives the same complex");
  }
  if (n > kMaxSide) throw UsageError("boards are limited to n <= " + std::to_string(kMaxSide));
}

void check_power(int t) {
  if (t < 1 || t > kMaxPower) throw UsageError("--power must be between 1 and " + std::to_string(kMaxPower));
}

ci::MonomialIdeal build_ideal(const BoardArgs& a) {
  check_power(a.power);
  ci::MonomialIdeal base = ci::MonomialIdeal::zero(ci::VariableSet::indexed(1));
  if (!a.fixture.empty()) {
    if (a.fixture == "six-quadrics") {
      base = ci::fixture_ideal(ci::Fixture::six_quadrics);
    } else {
      const auto which = a.fixture == "two-n-minus-3" ? ci::Fixture::two_n_minus_3 : ci::Fixture::two_n_minus_5;
      const std::size_t lo = which == ci::Fixture::two_n_minus_3 ? 3 : 4;
      if (a.n < lo || a.n > kMaxSide) {
        throw UsageError("fixture " + a.fixture + " needs " + std::to_string(lo) + " <= n <= " + std::to_string(kMaxSide));
      }
      base = ci::fixture_ideal(which, a.n);
    }
  } else {
    check_board_bounds(a.m, a.n);
    ci::Board b(a.m, a.n);
    base = a.kind == "facet" ? ci::facet_ideal(b) : ci::stanley_reisner_ideal(b);
  }
  return a.power == 1 || base.is_zero() ? base : ci::power(base, a.power);
}

ci::FieldSpec field_of(std::uint32_t p) {
  try {
    return ci::FieldSpec(p);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void guard(const ci::MonomialIdeal& ideal, bool allow_long) {
  if (ideal.is_zero() || ideal.is_unit()) return;
  const auto predicted = ci::predicted_sweep_size(ideal);
  if (predicted > kGuardThreshold && !allow_long) {
    throw GuardTripped("predicted sweep size " + std::to_string(predicted) + " exceeds " +
                       std::to_string(kGuardThreshold) + "; pass --allow-long to run anyway");
  }
}

ci::MonomialIdeal read_ideal_file(const std::string& path) {
  if (path == "-") return ci::read_ideal(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return ci::read_ideal(in);
}

int cmd_ideal(const BoardArgs& a) {
  ci::write_ideal(std::cout, build_ideal(a));
  return kExitOk;
}

int cmd_primes(const BoardArgs& a, const std::string& method) {
  check_board_bounds(a.m, a.n);
  ci::Board b(a.m, a.n);
  std::vector<ci::VertexSet> primes;
  if (method == "formula") {
    primes = ci::minimal_primes_formula(b);
  } else {
    primes = ci::minimal_vertex_covers(ci::chessboard_complex(b));
    if (method == "both" && primes != ci::minimal_primes_formula(b)) {
      std::cerr << "error: closed-form primes differ from the enumerated vertex covers\n";
      return kExitVerify;
    }
  }
  for (auto p : primes) std::cout << ci::labels_of(*b.vars(), p) << '\n';
  const auto profile = ci::prime_profile_of(primes, b.cell_count());
  std::cerr << "count " << primes.size() << "  height " << profile.height << "  bight " << profile.bight << '\n';
  return kExitOk;
}

struct InvariantArgs {
  std::uint32_t characteristic = ci::FieldSpec::kDefaultCharacteristic;
  std::uint32_t cross_characteristic = 2;
  std::optional<std::size_t> ambient;
  bool allow_long = false;
  unsigned threads = 0;
  std::string file;
};

int cmd_invariants(const BoardArgs& a, const InvariantArgs& o) {
  auto ideal = o.file.empty() ? build_ideal(a) : read_ideal_file(o.file);
  if (ideal.is_unit()) throw UsageError("the unit ideal has no quotient invariants");
  guard(ideal, o.allow_long);
  ci::ComputeOptions opts{field_of(o.characteristic), o.threads};
  std::optional<ci::FieldSpec> cross;
  if (o.cross_characteristic != 0) cross = field_of(o.cross_characteristic);
  const auto ambient = o.ambient.value_or(ideal.nvars());
  if (ambient < ci::support(ideal).size()) throw UsageError("--ambient is smaller than the support of the ideal");
  auto report = ci::invariant_report(ideal, ambient, opts, cross);
  auto j = ci::report_to_json(report);
  if (o.file.empty()) {
    j["input"] = a.fixture.empty() ? nlohmann::json{{"m", a.m}, {"n", a.n}, {"power", a.power}, {"kind", a.kind}}
                                   : nlohmann::json{{"fixture", a.fixture}, {"n", a.n}, {"power", a.power}};
  } else {
    j["input"] = {{"file", o.file}};
  }
  std::cout << j.dump(2) << '\n';
  if (report.torsion_warning) std::cerr << "warning: Betti numbers depend on the characteristic\n";
  return kExitOk;
}

int cmd_betti(const std::string& path, std::uint32_t characteristic, bool json, bool allow_long, unsigned threads) {
  auto ideal = read_ideal_file(path);
  if (ideal.is_zero() || ideal.is_unit()) throw UsageError("Betti tables need a nonzero proper ideal");
  guard(ideal, allow_long);
  ci::ComputeOptions opts{field_of(characteristic), threads};
  auto table = ci::betti_table_koszul(ideal, opts);
  std::optional<bool> hochster_agrees;
  if (ci::is_squarefree(ideal)) hochster_agrees = ci::betti_table_hochster(ideal, opts).same_numbers(table);
  if (json) {
    auto j = ci::betti_to_json(table);
    j["hochster_check"] = hochster_agrees ? nlohmann::json(*hochster_agrees) : nlohmann::json(nullptr);
    std::cout << j.dump(2) << '\n';
  } else {
    ci::write_betti_text(std::cout, table);
    std::cout << "reg " << table.reg() << "  pd " << table.pd() << "  (ideal, GF(" << characteristic << "))\n";
    if (hochster_agrees) std::cout << "hochster check " << (*hochster_agrees ? "agrees" : "DISAGREES") << '\n';
  }
  if (hochster_agrees && !*hochster_agrees) return kExitVerify;
  return kExitOk;
}

int cmd_matching(const BoardArgs& a, std::size_t k_max) {
  check_board_bounds(a.m, a.n);
  if (k_max < 1) throw UsageError("--k-max must be at least 1");
  ci::Board b(a.m, a.n);
  auto best = ci::induced_matching_bound(ci::chessboard_complex(b), k_max);
  std::cout << "value " << best.value << '\n';
  for (auto f : best.witness) std::cout << ci::labels_of(*b.vars(), f) << '\n';
  return kExitOk;
}

int cmd_verify(const std::string& suite_name, bool json, unsigned threads) {
  const auto suite = suite_name == "paper"        ? ci::verify::Suite::published
                     : suite_name == "properties" ? ci::verify::Suite::properties
                                                  : ci::verify::Suite::long_cases;
  ci::verify::VerifyOptions opts;
  opts.threads = threads;
  auto cases = ci::verify::run_suite(suite, opts);
  if (json) {
    auto arr = nlohmann::json::array();
    for (const auto& c : cases) {
      nlohmann::json e = nlohmann::json::object(), got = nlohmann::json::object();
      for (const auto& x : c.expected) e[x.name] = {{"value", x.value}, {"basis", ci::verify::to_string(x.basis)}};
      for (const auto& x : c.computed) got[x.name] = x.value;
      arr.push_back({{"group", c.group}, {"id", c.id}, {"description", c.description}, {"expected", e},
                     {"computed", got}, {"status", ci::verify::to_string(c.status)}, {"runtime_ms", c.runtime_ms},
                     {"note", c.note}});
    }
    std::cout << arr.dump(2) << '\n';
  } else {
    std::size_t width = 4;
    for (const auto& c : cases) width = std::max(width, c.id.size());
    for (const auto& c : cases) {
      std::cout << std::left << std::setw(12) << ci::verify::to_string(c.status) << std::setw(static_cast<int>(width) + 2)
                << c.id << std::right << std::setw(8) << c.runtime_ms << " ms ";
      for (const auto& x : c.computed) std::cout << ' ' << x.name << '=' << x.value;
      if (!c.note.empty()) std::cout << "  [" << c.note << ']';
      std::cout << '\n';
    }
    std::size_t pass = 0, fail = 0, skipped = 0;
    for (const auto& c : cases) {
      if (c.status == ci::verify::Status::pass) ++pass;
      else if (c.status == ci::verify::Status::fail) ++fail;
      else ++skipped;
    }
    std::cout << pass << " passed, " << fail << " failed, " << skipped << " skipped\n";
  }
  return ci::verify::all_passed(cases) ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of chessboard facet ideals"};
  app.require_subcommand(1);

  BoardArgs ideal_args;
  auto* ideal_cmd = app.add_subcommand("ideal", "print an ideal in the text format");
  add_board_options(ideal_cmd, ideal_args, true);

  BoardArgs primes_args;
  std::string method = "formula";
  auto* primes_cmd = app.add_subcommand("primes", "minimal primes of the facet ideal");
  add_board_options(primes_cmd, primes_args, false);
  primes_cmd->add_option("--method", method, "formula, brute or both")
      ->check(CLI::IsMember({"formula", "brute", "both"}))
      ->capture_default_str();

  BoardArgs inv_args;
  InvariantArgs inv_opts;
  auto* inv_cmd = app.add_subcommand("invariants", "reg, pd, depth, dim, height, bight and a-invariant as JSON");
  add_board_options(inv_cmd, inv_args, true);
  inv_cmd->add_option("--file", inv_opts.file, "read the ideal from a file ('-' for stdin) instead of a board");
  inv_cmd->add_option("--char", inv_opts.characteristic, "field characteristic")->capture_default_str();
  inv_cmd->add_option("--cross-char", inv_opts.cross_characteristic, "second characteristic for the torsion check, 0 to skip")
      ->capture_default_str();
  inv_cmd->add_option("--ambient", inv_opts.ambient, "number of ambient variables (default: all)");
  inv_cmd->add_flag("--allow-long", inv_opts.allow_long, "run past the resource guard");
  inv_cmd->add_option("--threads", inv_opts.threads, "worker threads, 0 = all cores")->capture_default_str();

  std::string betti_file;
  std::uint32_t betti_char = ci::FieldSpec::kDefaultCharacteristic;
  bool betti_json = false, betti_long = false;
  unsigned betti_threads = 0;
  auto* betti_cmd = app.add_subcommand("betti", "graded Betti table of an ideal file");
  betti_cmd->add_option("file", betti_file, "ideal file, '-' for stdin")->required();
  betti_cmd->add_option("--char", betti_char, "field characteristic")->capture_default_str();
  betti_cmd->add_flag("--json", betti_json, "JSON output");
  betti_cmd->add_flag("--allow-long", betti_long, "run past the resource guard");
  betti_cmd->add_option("--threads", betti_threads, "worker threads, 0 = all cores")->capture_default_str();

  BoardArgs match_args;
  std::size_t k_max = 3;
  auto* match_cmd = app.add_subcommand("matching", "best induced-matching lower bound for reg");
  add_board_options(match_cmd, match_args, false);
  match_cmd->add_option("--k-max", k_max, "largest matching size searched")->capture_default_str();

  std::string suite = "paper";
  bool verify_json = false;
  unsigned verify_threads = 0;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", suite, "paper, properties or long")
      ->check(CLI::IsMember({"paper", "properties", "long"}))
      ->capture_default_str();
  verify_cmd->add_flag("--json", verify_json, "JSON output");
  verify_cmd->add_option("--threads", verify_threads, "worker threads, 0 = all cores")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*ideal_cmd) return cmd_ideal(ideal_args);
    if (*primes_cmd) return cmd_primes(primes_args, method);
    if (*inv_cmd) return cmd_invariants(inv_args, inv_opts);
    if (*betti_cmd) return cmd_betti(betti_file, betti_char, betti_json, betti_long, betti_threads);
    if (*match_cmd) return cmd_matching(match_args, k_max);
    if (*verify_cmd) return cmd_verify(suite, verify_json, verify_threads);
  } catch (const GuardTripped& e) {
    std::cerr << "resource guard: " << e.what() << '\n';
    return kExitGuard;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ci::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
