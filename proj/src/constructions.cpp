#include "sts/constructions.hpp"

#include <numeric>

namespace sts {

Design bose(std::uint32_t v) {
  if (v % 6 != 3) throw InputError("Bose construction needs v = 3 mod 6, got " + std::to_string(v));
  const std::uint32_t n = v / 3;
  const std::uint32_t half = (n + 1) / 2;  // inverse of 2 mod n
  auto label = [n](std::uint32_t x, std::uint32_t level) { return static_cast<Point>(x + n * level); };
  auto op = [n, half](std::uint32_t x, std::uint32_t y) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(x + y) * half) % n);
  };

  std::vector<Block> blocks;
  blocks.reserve(static_cast<std::size_t>(v) * (v - 1) / 6);
  for (std::uint32_t x = 0; x < n; ++x) blocks.push_back({label(x, 0), label(x, 1), label(x, 2)});
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = x + 1; y < n; ++y) {
      for (std::uint32_t i = 0; i < 3; ++i) {
        blocks.push_back({label(x, i), label(y, i), label(op(x, y), (i + 1) % 3)});
      }
    }
  }
  return Design::from_blocks(v, std::move(blocks));
}

DoubledDesign doubling(const Design& sub) {
  const std::uint32_t w = sub.order();
  const std::uint32_t v = 2 * w + 1;
  const OneFactorization f = one_factorization(w + 1);

  std::vector<Block> blocks(sub.blocks().begin(), sub.blocks().end());
  blocks.reserve(static_cast<std::size_t>(v) * (v - 1) / 6);
  for (Point x = 0; x < w; ++x) {
    for (const auto& [a, b] : f.factors[x]) blocks.push_back({x, w + a, w + b});
  }
  DoubledDesign out{Design::from_blocks(v, std::move(blocks)), {}};
  out.arc.resize(w + 1);
  std::iota(out.arc.begin(), out.arc.end(), w);
  return out;
}

NonincidenceCertificate subsystem_complement_certificate(const EmbeddedDesign& e) {
  const std::uint32_t v = e.design.order();
  const auto w = static_cast<std::uint32_t>(e.sub_points.size());
  std::vector<Point> y;
  y.reserve(v - w);
  for (Point p = 0; p < v; ++p) {
    if (!std::binary_search(e.sub_points.begin(), e.sub_points.end(), p)) y.push_back(p);
  }
  std::vector<BlockIndex> c = e.sub_blocks;
  if (c.size() > y.size()) c.resize(y.size());
  nlohmann::json meta{{"construction", "embed_subsystem"}, {"w", w}, {"seed", e.seed}};
  return make_certificate(e.design, std::move(y), std::move(c), std::move(meta));
}

Design construct_design(std::uint32_t v, std::uint64_t seed, EmbedLimits limits) {
  if (!is_admissible_order(v)) throw InputError("inadmissible order " + std::to_string(v) + " (need v = 1 or 3 mod 6)");
  if (v % 6 == 3) return bose(v);
  if (v == 1) return Design::from_blocks(1, {});
  return embed_subsystem(3, v, seed, limits).design;
}

}  // namespace sts
