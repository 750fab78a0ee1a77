#include <bit>

#include "sts/search.hpp"

namespace sts {

std::size_t brute_force_max_nonincident(const Design& d) {
  const std::uint32_t v = d.order();
  if (v > 15) throw InputError("brute-force oracle is limited to v <= 15, got v=" + std::to_string(v));
  std::vector<std::uint32_t> block_bits;
  for (const Block& b : d.blocks()) block_bits.push_back((1U << b[0]) | (1U << b[1]) | (1U << b[2]));

  std::size_t best = 0;
  for (std::uint32_t y = 0; y < (1U << v); ++y) {
    std::size_t t = 0;
    for (std::uint32_t bits : block_bits) t += (bits & y) == 0 ? 1 : 0;
    best = std::max(best, std::min(static_cast<std::size_t>(std::popcount(y)), t));
  }
  return best;
}

}  // namespace sts
