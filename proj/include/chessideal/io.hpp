#pragma once

#include <algorithm>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "invariants.hpp"
#include "ring.hpp"
#include "simplicial.hpp"

namespace chessideal {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Ideal text format:
//   vars <count>
//   labels <name> ... <name>      (optional)
//   <e_1> ... <e_count>           (one generator per line)
inline void write_ideal(std::ostream& os, const MonomialIdeal& ideal) {
  os << "vars " << ideal.nvars() << '\n';
  os << "labels";
  for (const auto& l : ideal.ambient().labels()) os << ' ' << l;
  os << '\n';
  for (const auto& g : ideal.gens()) {
    for (std::size_t v = 0; v < g.nvars(); ++v) os << (v == 0 ? "" : " ") << g.exponent(v);
    os << '\n';
  }
}

inline std::string ideal_to_string(const MonomialIdeal& ideal) {
  std::ostringstream os;
  write_ideal(os, ideal);
  return os.str();
}

namespace detail {

inline std::vector<std::string> split_words(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

inline long parse_integer(const std::string& word, std::size_t line) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(word, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + word + "'");
  }
  if (used != word.size()) throw ParseError(line, "expected an integer, got '" + word + "'");
  return v;
}

}  // namespace detail

// Blank lines are ignored. Generators may come in any order; the result is canonical.
inline MonomialIdeal read_ideal(std::istream& is) {
  std::string raw;
  std::size_t lineno = 0;
  std::size_t nvars = 0;
  bool have_header = false;
  VariableSetPtr vars;
  std::vector<Monomial> gens;
  while (std::getline(is, raw)) {
    ++lineno;
    auto words = detail::split_words(raw);
    if (words.empty()) continue;
    if (!have_header) {
      if (words.size() != 2 || words[0] != "vars") throw ParseError(lineno, "expected 'vars <count>'");
      long n = detail::parse_integer(words[1], lineno);
      if (n < 1) throw ParseError(lineno, "variable count must be positive");
      if (static_cast<std::size_t>(n) > kMaxVertices) {
        throw ParseError(lineno, "at most " + std::to_string(kMaxVertices) + " variables are supported");
      }
      nvars = static_cast<std::size_t>(n);
      have_header = true;
      continue;
    }
    if (words[0] == "labels") {
      if (vars) throw ParseError(lineno, "labels given twice");
      if (!gens.empty()) throw ParseError(lineno, "labels must precede the generators");
      if (words.size() != nvars + 1) {
        throw ParseError(lineno, "expected " + std::to_string(nvars) + " labels, got " + std::to_string(words.size() - 1));
      }
      try {
        vars = std::make_shared<const VariableSet>(std::vector<std::string>(words.begin() + 1, words.end()));
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
      }
      continue;
    }
    if (words.size() != nvars) {
      throw ParseError(lineno,
                       "expected " + std::to_string(nvars) + " exponents, got " + std::to_string(words.size()));
    }
    std::vector<Monomial::exponent_type> e(nvars);
    for (std::size_t v = 0; v < nvars; ++v) {
      long x = detail::parse_integer(words[v], lineno);
      if (x < 0) throw ParseError(lineno, "negative exponent");
      if (x > 1'000'000) throw ParseError(lineno, "exponent too large");
      e[v] = static_cast<Monomial::exponent_type>(x);
    }
    gens.emplace_back(std::move(e));
  }
  if (!have_header) throw ParseError(lineno + 1, "missing 'vars <count>' header");
  if (!vars) vars = VariableSet::indexed(nvars);
  return MonomialIdeal::from_generators(std::move(gens), vars);
}

inline MonomialIdeal ideal_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_ideal(is);
}

// One facet per line, vertices by label; the irrelevant complex prints "{}".
inline void write_complex(std::ostream& os, const SimplicialComplex& delta) {
  for (auto f : delta.facets()) {
    if (f.empty()) {
      os << "{}\n";
      continue;
    }
    bool first = true;
    for (auto v : f.elements()) {
      os << (first ? "" : " ") << delta.vertices().label(v);
      first = false;
    }
    os << '\n';
  }
}

inline std::string labels_of(const VariableSet& vars, VertexSet s) {
  std::string out;
  for (auto v : s.elements()) {
    if (!out.empty()) out += ' ';
    out += vars.label(v);
  }
  return out;
}

inline nlohmann::json betti_to_json(const BettiTable& table) {
  nlohmann::json j;
  j["subject"] = to_string(table.subject());
  j["field"] = table.field().characteristic();
  j["nvars"] = table.nvars();
  auto entries = nlohmann::json::array();
  for (const auto& [ij, v] : table.entries()) entries.push_back({ij.first, ij.second, v});
  j["entries"] = entries;
  if (table.entries().empty()) {
    j["reg"] = nullptr;
    j["pd"] = nullptr;
    j["depth"] = nullptr;
  } else {
    j["reg"] = table.reg();
    j["pd"] = table.pd();
    j["depth"] = table.depth();
  }
  return j;
}

// Rows are j - i, columns are i; zeros print as '.'.
inline void write_betti_text(std::ostream& os, const BettiTable& table) {
  if (table.entries().empty()) {
    os << "(empty)\n";
    return;
  }
  int max_i = 0, min_row = std::numeric_limits<int>::max(), max_row = std::numeric_limits<int>::min();
  for (const auto& [ij, v] : table.entries()) {
    max_i = std::max(max_i, ij.first);
    min_row = std::min(min_row, ij.second - ij.first);
    max_row = std::max(max_row, ij.second - ij.first);
  }
  std::vector<std::uint64_t> totals(static_cast<std::size_t>(max_i + 1), 0);
  for (const auto& [ij, v] : table.entries()) totals[static_cast<std::size_t>(ij.first)] += v;
  std::size_t width = 1;
  for (auto t : totals) width = std::max(width, std::to_string(t).size());
  const std::size_t label_width = std::max<std::size_t>(6, std::to_string(max_row).size() + 1);

  os << std::string(label_width + 1, ' ');
  for (int i = 0; i <= max_i; ++i) os << ' ' << std::setw(static_cast<int>(width)) << i;
  os << '\n' << std::setw(static_cast<int>(label_width)) << "total" << ':';
  for (auto t : totals) os << ' ' << std::setw(static_cast<int>(width)) << t;
  os << '\n';
  for (int r = min_row; r <= max_row; ++r) {
    os << std::setw(static_cast<int>(label_width)) << r << ':';
    for (int i = 0; i <= max_i; ++i) {
      auto v = table(i, i + r);
      os << ' ' << std::setw(static_cast<int>(width)) << (v == 0 ? std::string(".") : std::to_string(v));
    }
    os << '\n';
  }
}

inline std::string betti_to_text(const BettiTable& table) {
  std::ostringstream os;
  write_betti_text(os, table);
  return os.str();
}

inline nlohmann::json report_to_json(const InvariantReport& r) {
  nlohmann::json j;
  j["ambient"] = r.ambient;
  j["generators"] = r.generators;
  j["reg"] = r.reg;
  j["pd"] = r.pd;
  j["depth"] = r.depth;
  j["dim"] = r.dim;
  j["height"] = r.height;
  j["bight"] = r.bight;
  j["a_invariant"] = r.a_invariant ? nlohmann::json(*r.a_invariant) : nlohmann::json(nullptr);
  j["field"] = r.field.characteristic();
  j["cross_field"] = r.cross_field ? nlohmann::json(*r.cross_field) : nlohmann::json(nullptr);
  j["torsion_warning"] = r.torsion_warning;
  j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

}  // namespace chessideal
