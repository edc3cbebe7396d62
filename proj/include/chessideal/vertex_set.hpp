#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace chessideal {

// Upper bound on the number of variables any squarefree/simplicial routine
// accepts; subsets are packed into one machine word.
inline constexpr std::size_t kMaxVertices = 64;

inline void require_vertex_capacity(std::size_t n) {
  if (n > kMaxVertices) {
    throw std::length_error("at most " + std::to_string(kMaxVertices) +
                            " vertices are supported, got " + std::to_string(n));
  }
}

// A subset of {0, ..., 63}.
class VertexSet {
 public:
  using word_type = std::uint64_t;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(word_type bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<std::size_t> vs) {
    VertexSet s;
    for (auto v : vs) s.insert(v);
    return s;
  }
  static VertexSet of(const std::vector<std::size_t>& vs) {
    VertexSet s;
    for (auto v : vs) s.insert(v);
    return s;
  }
  // {0, ..., n-1}
  static constexpr VertexSet prefix(std::size_t n) {
    return VertexSet(n >= 64 ? ~word_type{0} : ((word_type{1} << n) - 1));
  }

  constexpr word_type bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t v) const { return (bits_ >> v) & 1U; }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr std::size_t min() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  void insert(std::size_t v) {
    if (v >= kMaxVertices) throw std::out_of_range("vertex index out of range");
    bits_ |= word_type{1} << v;
  }
  constexpr void erase(std::size_t v) { bits_ &= ~(word_type{1} << v); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (word_type b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    }
    return out;
  }

  constexpr bool operator==(const VertexSet&) const = default;

 private:
  word_type bits_ = 0;
};

// Lexicographic comparison of the sorted element lists; {1,2} < {1,3} < {2}.
struct LexLess {
  bool operator()(VertexSet a, VertexSet b) const {
    auto x = a.bits(), y = b.bits();
    while (x != 0 && y != 0) {
      auto lx = std::countr_zero(x), ly = std::countr_zero(y);
      if (lx != ly) return lx < ly;
      x &= x - 1;
      y &= y - 1;
    }
    return x == 0 && y != 0;
  }
};

// Iterate every subset of `s` (including empty and s itself), in increasing
// numeric order of the packed word.
template <typename F>
void for_each_subset(VertexSet s, F&& f) {
  const auto full = s.bits();
  VertexSet::word_type sub = 0;
  while (true) {
    f(VertexSet(sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

// Scatter the low bits of `packed` onto the positions of `positions`.
inline VertexSet deposit(VertexSet::word_type packed, const std::vector<std::size_t>& positions) {
  VertexSet::word_type out = 0;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if ((packed >> k) & 1U) out |= VertexSet::word_type{1} << positions[k];
  }
  return VertexSet(out);
}

}  // namespace chessideal
