// reg, depth and the prime profile of S/F(Delta_{m,n}) for small boards,
// next to the depth of the chessboard complex's own Stanley-Reisner ring.

#include <cstdio>

#include "chessideal/chessideal.hpp"

using namespace chessideal;

int main() {
  std::printf("%-5s %4s %6s %6s %6s %6s %9s\n", "board", "reg", "depth", "height", "bight", "a", "sr-depth");
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = m; n <= 4; ++n) {
      Board b(m, n);
      auto r = invariant_report(facet_ideal(b));
      auto sr = invariant_report(stanley_reisner_ideal(b));
      std::printf("%zux%-3zu %4ld %6ld %6zu %6zu %6ld %9ld\n", m, n, r.reg, r.depth, r.height, r.bight,
                  r.a_invariant.value_or(0), sr.depth);
    }
  }
}
