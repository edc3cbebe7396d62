// Regularity and depth of powers of the 2 x n facet ideal.
// Usage: two_row_powers [max_n] [max_t]   (defaults 4 and 3)

#include <cstdio>
#include <cstdlib>

#include "chessideal/chessideal.hpp"

using namespace chessideal;

int main(int argc, char** argv) {
  const std::size_t max_n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 4;
  const int max_t = argc > 2 ? std::atoi(argv[2]) : 3;
  for (std::size_t n = 2; n <= max_n; ++n) {
    auto f = facet_ideal(Board(2, n));
    for (int t = 1; t <= max_t; ++t) {
      auto ft = power(f, t);
      // keep the sample snappy; the CLI has --allow-long for the big ones
      if (predicted_sweep_size(ft) > (std::uint64_t{1} << 20)) {
        std::printf("2x%zu  t=%d  skipped (large)\n", n, t);
        continue;
      }
      auto r = invariant_report(ft);
      std::printf("2x%zu  t=%d  gens=%zu  reg=%ld  depth=%ld\n", n, t, r.generators, r.reg, r.depth);
    }
  }
}
