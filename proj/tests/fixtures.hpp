#pragma once

// Small designs written out by hand, independent of the construction code.

#include <vector>

#include "sts/design.hpp"
#include "sts/rng.hpp"

namespace sts::testing {

inline CandidateDesign fano_candidate() {
  return {7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}}};
}

inline Design fano() { return Design::from_candidate(fano_candidate()); }

// AG(2,3): points (x, y) in Z_3^2 labeled 3x + y; lines are the 12 cosets
// of the four 1-dimensional subspaces.
inline Design ag23() {
  std::vector<Block> blocks;
  const int dirs[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, 2}};
  for (const auto& dir : dirs) {
    std::vector<std::vector<int>> seen(9);
    for (int x = 0; x < 3; ++x) {
      for (int y = 0; y < 3; ++y) {
        Block b{};
        for (int k = 0; k < 3; ++k) {
          const int px = (x + k * dir[0]) % 3;
          const int py = (y + k * dir[1]) % 3;
          b[k] = static_cast<Point>(3 * px + py);
        }
        std::sort(b.begin(), b.end());
        if (std::find(blocks.begin(), blocks.end(), b) == blocks.end()) blocks.push_back(b);
      }
    }
  }
  return Design::from_blocks(9, blocks);
}

inline Design single_block() { return Design::from_blocks(3, {{0, 1, 2}}); }

// Uniformly random subset of 0..v-1.
inline std::vector<Point> random_subset(std::uint32_t v, Rng& rng) {
  std::vector<Point> out;
  for (Point p = 0; p < v; ++p) {
    if (rng.below(2) == 1) out.push_back(p);
  }
  return out;
}

}  // namespace sts::testing
