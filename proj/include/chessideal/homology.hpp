#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "simplicial.hpp"
#include "vertex_set.hpp"

namespace chessideal {

// A prime field GF(p). 32003 is the default stand-in for characteristic zero.
class FieldSpec {
 public:
  static constexpr std::uint32_t kDefaultCharacteristic = 32003;

  constexpr FieldSpec() = default;
  explicit FieldSpec(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
    if (p >= (1U << 31)) throw std::invalid_argument("field characteristic must be below 2^31");
  }
  static FieldSpec gf2() { return FieldSpec(2); }

  constexpr std::uint32_t characteristic() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e > 0) {
      if (e & 1U) result = result * base % p_;
      base = base * base % p_;
      e >>= 1U;
    }
    return static_cast<std::uint32_t>(result);
  }
  // (-1)^k as a field element
  std::uint32_t sign(std::size_t k) const { return (k % 2 == 0 || p_ == 2) ? 1 : p_ - 1; }

  bool operator==(const FieldSpec&) const = default;

  static constexpr bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d) {
      if (p % d == 0) return false;
    }
    return true;
  }

 private:
  std::uint32_t p_ = kDefaultCharacteristic;
};

struct MatrixEntry {
  std::uint32_t row;
  std::uint32_t col;
  std::uint32_t value;
  bool operator==(const MatrixEntry&) const = default;
};

// Coordinate-format matrix over a prime field; no duplicates, no stored zeros.
class SparseMatrix {
 public:
  SparseMatrix(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries, const FieldSpec& field)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    for (auto& e : entries_) {
      if (e.row >= rows_ || e.col >= cols_) throw std::out_of_range("matrix entry outside the matrix");
      e.value %= field.characteristic();
    }
    std::erase_if(entries_, [](const MatrixEntry& e) { return e.value == 0; });
    std::sort(entries_.begin(), entries_.end(),
              [](const MatrixEntry& a, const MatrixEntry& b) { return std::pair(a.col, a.row) < std::pair(b.col, b.row); });
    for (std::size_t k = 1; k < entries_.size(); ++k) {
      if (entries_[k].row == entries_[k - 1].row && entries_[k].col == entries_[k - 1].col) {
        throw std::invalid_argument("duplicate matrix entry");
      }
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  // Sorted by (col, row).
  const std::vector<MatrixEntry>& entries() const { return entries_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<MatrixEntry> entries_;
};

namespace detail {

using SparseColumn = std::vector<std::pair<std::uint32_t, std::uint32_t>>;  // (row, value), rows ascending

// Bit-packed Gaussian elimination over GF(2); columns given as sparse lists.
inline std::size_t dense_rank_gf2(std::size_t rows, const std::vector<SparseColumn>& columns) {
  // Store the transpose: one bit-row per column, indexed by original row.
  const std::size_t words = (rows + 63) / 64;
  std::vector<std::uint64_t> bits(columns.size() * words, 0);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (auto [r, v] : columns[c]) {
      if (v & 1U) bits[c * words + r / 64] ^= std::uint64_t{1} << (r % 64);
    }
  }
  std::size_t rank = 0;
  const std::size_t n = columns.size();
  for (std::size_t w = 0; w < words && rank < n; ++w) {
    for (std::size_t b = 0; b < 64 && rank < n; ++b) {
      const std::uint64_t mask = std::uint64_t{1} << b;
      std::size_t pivot = rank;
      while (pivot < n && !(bits[pivot * words + w] & mask)) ++pivot;
      if (pivot == n) continue;
      if (pivot != rank) {
        std::swap_ranges(bits.begin() + static_cast<std::ptrdiff_t>(pivot * words),
                         bits.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * words),
                         bits.begin() + static_cast<std::ptrdiff_t>(rank * words));
      }
      const std::uint64_t* prow = &bits[rank * words];
      for (std::size_t r = rank + 1; r < n; ++r) {
        std::uint64_t* row = &bits[r * words];
        if (row[w] & mask) {
          for (std::size_t k = w; k < words; ++k) row[k] ^= prow[k];
        }
      }
      ++rank;
    }
  }
  return rank;
}

// Dense Gaussian elimination over GF(p).
inline std::size_t dense_rank_modp(std::size_t rows, const std::vector<SparseColumn>& columns, const FieldSpec& f) {
  const std::size_t n = columns.size();
  std::vector<std::uint32_t> a(n * rows, 0);
  for (std::size_t c = 0; c < n; ++c) {
    for (auto [r, v] : columns[c]) a[c * rows + r] = v;
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < rows && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && a[pivot * rows + col] == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != rank) {
      for (std::size_t k = col; k < rows; ++k) std::swap(a[pivot * rows + k], a[rank * rows + k]);
    }
    const std::uint32_t inv = f.inv(a[rank * rows + col]);
    for (std::size_t r = rank + 1; r < n; ++r) {
      std::uint32_t lead = a[r * rows + col];
      if (lead == 0) continue;
      std::uint32_t factor = f.mul(lead, inv);
      for (std::size_t k = col; k < rows; ++k) {
        std::uint32_t pv = a[rank * rows + k];
        if (pv != 0) a[r * rows + k] = f.sub(a[r * rows + k], f.mul(factor, pv));
      }
    }
    ++rank;
  }
  return rank;
}

struct ColumnReduction {
  std::size_t rank = 0;
  std::vector<std::uint32_t> pivot_rows;  // lowest nonzero row of each surviving column
};

// Standard column reduction (pivot = lowest nonzero row). Columns flagged in
// `skip` are known to reduce to zero and are not processed.
inline ColumnReduction sparse_column_reduction(std::size_t rows, std::vector<SparseColumn> columns,
                                               const FieldSpec& f, const std::vector<bool>* skip = nullptr) {
  ColumnReduction out;
  std::vector<std::int64_t> pivot_of_row(rows, -1);
  std::vector<SparseColumn> reduced(columns.size());
  SparseColumn scratch;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (skip != nullptr && (*skip)[j]) continue;
    SparseColumn col = std::move(columns[j]);
    while (!col.empty()) {
      auto [low, lowval] = col.back();
      auto k = pivot_of_row[low];
      if (k < 0) {
        // Normalize so the pivot coefficient is 1.
        std::uint32_t inv = f.inv(lowval);
        if (inv != 1) {
          for (auto& e : col) e.second = f.mul(e.second, inv);
        }
        pivot_of_row[low] = static_cast<std::int64_t>(j);
        reduced[j] = std::move(col);
        ++out.rank;
        out.pivot_rows.push_back(low);
        break;
      }
      const SparseColumn& piv = reduced[static_cast<std::size_t>(k)];
      const std::uint32_t factor = lowval;  // pivot's low coefficient is 1
      scratch.clear();
      std::size_t a = 0, b = 0;
      while (a < col.size() || b < piv.size()) {
        if (b == piv.size() || (a < col.size() && col[a].first < piv[b].first)) {
          scratch.push_back(col[a++]);
        } else if (a == col.size() || piv[b].first < col[a].first) {
          scratch.emplace_back(piv[b].first, f.neg(f.mul(factor, piv[b].second)));
          ++b;
        } else {
          std::uint32_t v = f.sub(col[a].second, f.mul(factor, piv[b].second));
          if (v != 0) scratch.emplace_back(col[a].first, v);
          ++a;
          ++b;
        }
      }
      std::swap(col, scratch);
    }
  }
  return out;
}

// Matrices at most this many entries use the dense kernels.
inline constexpr std::size_t kDenseEntryLimit = std::size_t{1} << 16;

inline std::size_t rank_of_columns(std::size_t rows, std::vector<SparseColumn> columns, const FieldSpec& f) {
  if (rows == 0 || columns.empty()) return 0;
  if (rows * columns.size() <= kDenseEntryLimit) {
    return f.characteristic() == 2 ? dense_rank_gf2(rows, columns) : dense_rank_modp(rows, columns, f);
  }
  return sparse_column_reduction(rows, std::move(columns), f).rank;
}

}  // namespace detail

inline std::size_t rank(const SparseMatrix& mx, const FieldSpec& field) {
  std::vector<detail::SparseColumn> columns(mx.cols());
  for (const auto& e : mx.entries()) columns[e.col].emplace_back(e.row, e.value % field.characteristic());
  for (auto& c : columns) {
    std::erase_if(c, [](const auto& e) { return e.second == 0; });
  }
  return detail::rank_of_columns(mx.rows(), std::move(columns), field);
}

// All faces of a complex grouped by dimension; faces of one dimension are
// sorted by their packed word. Built once and reused for every boundary map.
class FaceTable {
 public:
  FaceTable() = default;

  static FaceTable of(const SimplicialComplex& delta) {
    FaceTable t;
    if (delta.is_void()) return t;
    std::vector<VertexSet::word_type> all;
    for (auto f : delta.facets()) {
      for_each_subset(f, [&](VertexSet s) { all.push_back(s.bits()); });
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (auto w : all) t.add(VertexSet(w));
    return t;
  }

  // Faces are the subsets of `ground` accepted by `is_face`, which must be
  // closed under taking subsets.
  template <typename Pred>
  static FaceTable from_predicate(VertexSet ground, Pred&& is_face) {
    FaceTable t;
    for_each_subset(ground, [&](VertexSet s) {
      if (is_face(s)) t.add(s);
    });
    return t;
  }

  bool is_void() const { return by_dim_.empty(); }
  // Highest d with a d-face; -1 for the irrelevant complex.
  int top_dimension() const { return static_cast<int>(by_dim_.size()) - 2; }

  const std::vector<VertexSet::word_type>& faces(int d) const {
    static const std::vector<VertexSet::word_type> none;
    auto idx = static_cast<std::size_t>(d + 1);
    if (d < -1 || idx >= by_dim_.size()) return none;
    return by_dim_[idx];
  }
  std::size_t count(int d) const { return faces(d).size(); }

 private:
  void add(VertexSet s) {
    auto idx = s.size();
    if (by_dim_.size() <= idx) by_dim_.resize(idx + 1);
    by_dim_[idx].push_back(s.bits());
  }

  std::vector<std::vector<VertexSet::word_type>> by_dim_;  // index = d + 1
};

namespace detail {

inline std::vector<SparseColumn> boundary_columns(const FaceTable& t, int d, const FieldSpec& f) {
  const auto& cols = t.faces(d);
  const auto& rows = t.faces(d - 1);
  std::vector<SparseColumn> out(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto face = cols[j];
    std::size_t pos = 0;
    for (auto b = face; b != 0; b &= b - 1, ++pos) {
      auto drop = face & ~(b & (~b + 1));
      auto it = std::lower_bound(rows.begin(), rows.end(), drop);
      if (it == rows.end() || *it != drop) throw std::logic_error("face table is not closed under subsets");
      out[j].emplace_back(static_cast<std::uint32_t>(it - rows.begin()), f.sign(pos));
    }
    std::sort(out[j].begin(), out[j].end());
  }
  return out;
}

}  // namespace detail

inline std::vector<VertexSet> faces_of_dim(const SimplicialComplex& delta, int d) {
  auto t = FaceTable::of(delta);
  std::vector<VertexSet> out;
  for (auto w : t.faces(d)) out.emplace_back(w);
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

// The reduced boundary map C_d -> C_{d-1}; rows and columns follow the
// FaceTable order. For d = 0 the single row is the empty face.
inline SparseMatrix boundary_matrix(const FaceTable& t, int d, const FieldSpec& field) {
  if (d < 0) throw std::invalid_argument("boundary_matrix: d must be non-negative");
  std::vector<MatrixEntry> entries;
  auto cols = detail::boundary_columns(t, d, field);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (auto [r, v] : cols[j]) entries.push_back({r, static_cast<std::uint32_t>(j), v});
  }
  return SparseMatrix(t.count(d - 1), t.count(d), std::move(entries), field);
}

inline SparseMatrix boundary_matrix(const SimplicialComplex& delta, int d, const FieldSpec& field) {
  return boundary_matrix(FaceTable::of(delta), d, field);
}

// True when every composite d_{d-1} o d_d vanishes.
inline bool boundary_squares_to_zero(const FaceTable& t, const FieldSpec& field) {
  for (int d = 1; d <= t.top_dimension(); ++d) {
    auto upper = detail::boundary_columns(t, d, field);
    auto lower = detail::boundary_columns(t, d - 1, field);
    for (const auto& col : upper) {
      std::vector<std::uint32_t> acc(t.count(d - 2), 0);
      for (auto [mid, a] : col) {
        for (auto [row, b] : lower[mid]) acc[row] = field.add(acc[row], field.mul(a, b));
      }
      if (std::any_of(acc.begin(), acc.end(), [](auto v) { return v != 0; })) return false;
    }
  }
  return true;
}

// Reduced Betti numbers b~_{-1}, b~_0, ..., b~_top.
class ReducedBetti {
 public:
  ReducedBetti() = default;
  explicit ReducedBetti(std::vector<std::size_t> values) : values_(std::move(values)) {}

  std::size_t at(int d) const {
    auto idx = static_cast<std::size_t>(d + 1);
    return (d < -1 || idx >= values_.size()) ? 0 : values_[idx];
  }
  const std::vector<std::size_t>& values() const { return values_; }
  bool is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](auto v) { return v == 0; });
  }
  bool operator==(const ReducedBetti&) const = default;

 private:
  std::vector<std::size_t> values_;
};

// b~_d = f_d - rank d_d - rank d_{d+1}. Ranks are taken top-down so each
// sparse reduction clears the columns of the next map that must vanish.
// Every call checks non-negativity and the reduced Euler characteristic.
inline ReducedBetti reduced_betti(const FaceTable& t, const FieldSpec& field) {
  if (t.is_void()) return ReducedBetti({0});
  const int top = t.top_dimension();
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);  // ranks[d] for d = 0..top, ranks[top+1] = 0
  std::vector<std::uint32_t> cleared;
  bool have_cleared = false;
  for (int d = top; d >= 0; --d) {
    auto columns = detail::boundary_columns(t, d, field);
    const std::size_t rows = t.count(d - 1);
    std::size_t r = 0;
    if (rows * columns.size() <= detail::kDenseEntryLimit) {
      r = detail::rank_of_columns(rows, std::move(columns), field);
      have_cleared = false;
    } else {
      std::vector<bool> skip;
      if (have_cleared) {
        skip.assign(columns.size(), false);
        for (auto c : cleared) skip[c] = true;
      }
      auto red = detail::sparse_column_reduction(rows, std::move(columns), field, have_cleared ? &skip : nullptr);
      r = red.rank;
      cleared = std::move(red.pivot_rows);
      have_cleared = true;
    }
    ranks[static_cast<std::size_t>(d)] = r;
  }

  std::vector<std::size_t> betti(static_cast<std::size_t>(top + 2), 0);
  long long euler_faces = 0, euler_betti = 0;
  for (int d = -1; d <= top; ++d) {
    const auto fd = static_cast<long long>(t.count(d));
    const auto out_rank = d >= 0 ? static_cast<long long>(ranks[static_cast<std::size_t>(d)]) : 0LL;
    const auto in_rank = static_cast<long long>(ranks[static_cast<std::size_t>(d + 1)]);
    const long long b = fd - out_rank - in_rank;
    if (b < 0) throw std::logic_error("negative reduced Betti number: rank computation is inconsistent");
    betti[static_cast<std::size_t>(d + 1)] = static_cast<std::size_t>(b);
    const long long sgn = (d % 2 == 0) ? 1 : -1;
    euler_faces += sgn * fd;
    euler_betti += sgn * b;
  }
  if (euler_faces != euler_betti) throw std::logic_error("reduced Euler characteristic mismatch");
  return ReducedBetti(std::move(betti));
}

inline ReducedBetti reduced_betti(const SimplicialComplex& delta, const FieldSpec& field) {
  return reduced_betti(FaceTable::of(delta), field);
}

}  // namespace chessideal
