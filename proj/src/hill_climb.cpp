#include <numeric>

#include "sts/constructions.hpp"
#include "sts/rng.hpp"

namespace sts {

namespace {

constexpr std::uint32_t kMaxEmbedOrder = 2047;
constexpr std::int32_t kNone = -1;

// Partial triple system on v points in which every pair is either covered
// by exactly one triple or "live". Triples are stored implicitly through
// the third-point table. Live pairs are kept in per-point lists with O(1)
// insertion, removal and uniform sampling.
class PartialTripleSystem {
 public:
  explicit PartialTripleSystem(std::uint32_t v)
      : v_(v),
        third_(static_cast<std::size_t>(v) * v, kNone),
        live_(v),
        live_pos_(static_cast<std::size_t>(v) * v, 0),
        live_point_pos_(v, 0) {
    for (Point x = 0; x < v; ++x) live_[x].reserve(v);
    for (Point x = 0; x < v; ++x) {
      for (Point y = 0; y < v; ++y) {
        if (x != y) push_live(x, y);
      }
    }
  }

  std::uint32_t order() const { return v_; }
  bool complete() const { return live_points_.empty(); }
  std::size_t live_point_count() const { return live_points_.size(); }
  Point live_point(std::size_t i) const { return live_points_[i]; }
  const std::vector<Point>& live_partners(Point x) const { return live_[x]; }
  std::int32_t third(Point x, Point y) const { return third_[idx(x, y)]; }

  void add(Point a, Point b, Point c) {
    link(a, b, c);
    link(a, c, b);
    link(b, c, a);
  }

  void remove(Point a, Point b, Point c) {
    unlink(a, b);
    unlink(a, c);
    unlink(b, c);
  }

  std::vector<Block> triples() const {
    std::vector<Block> out;
    for (Point x = 0; x < v_; ++x) {
      for (Point y = x + 1; y < v_; ++y) {
        const std::int32_t z = third_[idx(x, y)];
        if (z > static_cast<std::int32_t>(y)) out.push_back({x, y, static_cast<Point>(z)});
      }
    }
    return out;
  }

 private:
  std::size_t idx(Point x, Point y) const { return static_cast<std::size_t>(x) * v_ + y; }

  void link(Point x, Point y, Point z) {
    third_[idx(x, y)] = static_cast<std::int32_t>(z);
    third_[idx(y, x)] = static_cast<std::int32_t>(z);
    pop_live(x, y);
    pop_live(y, x);
  }

  void unlink(Point x, Point y) {
    third_[idx(x, y)] = kNone;
    third_[idx(y, x)] = kNone;
    push_live(x, y);
    push_live(y, x);
  }

  void push_live(Point x, Point y) {
    auto& list = live_[x];
    if (list.empty()) {
      live_point_pos_[x] = live_points_.size();
      live_points_.push_back(x);
    }
    live_pos_[idx(x, y)] = list.size();
    list.push_back(y);
  }

  void pop_live(Point x, Point y) {
    auto& list = live_[x];
    const std::size_t i = live_pos_[idx(x, y)];
    const Point last = list.back();
    list[i] = last;
    live_pos_[idx(x, last)] = i;
    list.pop_back();
    if (list.empty()) {
      const std::size_t j = live_point_pos_[x];
      const Point moved = live_points_.back();
      live_points_[j] = moved;
      live_point_pos_[moved] = j;
      live_points_.pop_back();
    }
  }

  std::uint32_t v_;
  std::vector<std::int32_t> third_;
  std::vector<std::vector<Point>> live_;
  std::vector<std::size_t> live_pos_;
  std::vector<Point> live_points_;
  std::vector<std::size_t> live_point_pos_;
};

void check_embedding_parameters(std::uint32_t w, std::uint32_t v) {
  if (!is_admissible_order(w) || !is_admissible_order(v)) {
    throw InputError("embedding needs v, w = 1 or 3 mod 6 (got v=" + std::to_string(v) + ", w=" + std::to_string(w) + ")");
  }
  if (v < 2 * w + 1) {
    throw InputError("a sub-STS(" + std::to_string(w) + ") needs v >= 2w+1 = " + std::to_string(2 * w + 1) + ", got v=" + std::to_string(v));
  }
  if (v > kMaxEmbedOrder) throw InputError("order " + std::to_string(v) + " exceeds the supported maximum");
}

// A rejected draw falls back to the switch with probability 1/kSwitchOdds.
constexpr std::uint64_t kSwitchOdds = 16;

Design sub_design(std::uint32_t w, Rng& rng, EmbedLimits limits) {
  if (w == 1) return Design::from_blocks(1, {});
  if (w % 6 == 3) return bose(w);
  return embed_subsystem(3, w, rng.next(), limits).design;
}

}  // namespace

EmbeddedDesign embed_subsystem(std::uint32_t w, std::uint32_t v, std::uint64_t seed, EmbedLimits limits) {
  check_embedding_parameters(w, v);
  Rng rng(seed);
  const Design sub = sub_design(w, rng, limits);

  PartialTripleSystem pts(v);
  for (const Block& b : sub.blocks()) pts.add(b[0], b[1], b[2]);
  auto fixed_pair = [w](Point a, Point b) { return a < w && b < w; };

  // Pick a live point x and two live partners y, z. If {y, z} is covered
  // by a non-fixed triple, drop it; then add {x, y, z}.
  //
  // When y and z both lie in the sub-design, {y, z} is fixed. Then sometimes switch
  // on the live pair {x, y} instead: take a random outside point u != x,
  // drop the triples through {x, u} and {y, u} (neither can be fixed) and
  // add {x, y, u}. Without this switch the walk can be trapped in a cycle
  // of live pairs alternating between sub-design and outside points.
  const std::uint32_t outside = v - w;
  std::uint64_t moves = 0;
  while (!pts.complete()) {
    if (moves >= limits.max_moves) {
      throw BudgetExhausted("hill-climbing for STS(" + std::to_string(v) + ") around sub-STS(" + std::to_string(w) +
                            ") exhausted " + std::to_string(limits.max_moves) + " moves (seed " + std::to_string(seed) + ")");
    }
    ++moves;
    const Point x = pts.live_point(rng.below(pts.live_point_count()));
    const auto& partners = pts.live_partners(x);
    const std::size_t n = partners.size();
    const std::size_t i = rng.below(n);
    std::size_t j = rng.below(n - 1);
    if (j >= i) ++j;
    const Point y = partners[i];
    const Point z = partners[j];
    if (fixed_pair(y, z)) {
      if (rng.below(kSwitchOdds) != 0) continue;
      Point u = w + static_cast<Point>(rng.below(outside - 1));
      if (u >= x) ++u;  // x is outside the sub-design here
      for (Point a : {x, y}) {
        const std::int32_t c = pts.third(a, u);
        if (c != kNone) pts.remove(a, u, static_cast<Point>(c));
      }
      pts.add(x, y, u);
      continue;
    }
    const std::int32_t u = pts.third(y, z);
    if (u != kNone) pts.remove(y, z, static_cast<Point>(u));
    pts.add(x, y, z);
  }

  EmbeddedDesign out{Design::from_blocks(v, pts.triples()), {}, {}, seed, moves};
  out.sub_points.resize(w);
  std::iota(out.sub_points.begin(), out.sub_points.end(), Point{0});
  SubsystemCheck check = is_subsystem(out.design, out.sub_points);
  if (!check.is_subsystem || check.interior_blocks.size() != sub.block_count()) {
    throw InternalInvariantError("embedded sub-design was not preserved");
  }
  out.sub_blocks = std::move(check.interior_blocks);
  return out;
}

}  // namespace sts
