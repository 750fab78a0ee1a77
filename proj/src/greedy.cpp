#include <algorithm>
#include <limits>
#include <numeric>

#include "search_internal.hpp"
#include "sts/rng.hpp"

namespace sts {

namespace {

constexpr std::size_t kMaxComplementStarts = 256;

struct Best {
  std::size_t value = 0;
  std::vector<Point> points;
  BitVector disjoint;
};

void grow_points(const Design& d, std::vector<Point> y, Best& best, std::uint64_t& steps) {
  BitVector in_y = point_set(d, y);
  BitVector disjoint = disjoint_blocks(d, in_y);
  std::size_t t = disjoint.count();
  while (true) {
    ++steps;
    const std::size_t value = std::min(y.size(), t);
    if (value > best.value) best = {value, y, disjoint};
    if (t <= best.value || y.size() >= t || y.size() == d.order()) return;

    Point pick = 0;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    for (Point p = 0; p < d.order(); ++p) {
      if (in_y.test(p)) continue;
      const std::size_t kills = detail::kill_count(d, p, disjoint);
      if (kills < fewest) {
        fewest = kills;
        pick = p;
      }
    }
    in_y.set(pick);
    y.push_back(pick);
    disjoint.and_not(d.point_incidence(pick));
    t -= fewest;
  }
}

// Grows Z = X \ Y from a block, adding the outside point that completes the
// most new blocks inside Z; priority breaks ties.
void grow_complement(const Design& d, const Block& start, const std::vector<std::uint32_t>& priority, Best& best,
                     std::uint64_t& steps) {
  const std::uint32_t v = d.order();
  std::vector<char> in_z(v, 0);
  std::vector<Point> z(start.begin(), start.end());
  for (Point p : z) in_z[p] = 1;
  std::vector<std::uint32_t> gain(v, 0);
  std::size_t inside = 1;

  while (true) {
    ++steps;
    const std::size_t outside = v - z.size();
    if (outside <= best.value) return;
    const std::size_t value = std::min(outside, inside);
    if (value > best.value) {
      std::vector<Point> y;
      for (Point p = 0; p < v; ++p) {
        if (!in_z[p]) y.push_back(p);
      }
      BitVector disjoint = disjoint_blocks(d, point_set(d, y));
      best = {value, std::move(y), std::move(disjoint)};
    }

    Point pick = 0;
    bool found = false;
    for (Point q = 0; q < v; ++q) {
      if (in_z[q]) continue;
      if (!found || gain[q] > gain[pick] || (gain[q] == gain[pick] && priority[q] < priority[pick])) {
        pick = q;
        found = true;
      }
    }
    inside += gain[pick];
    for (Point a : z) {
      const Point x = d.third_point(pick, a);
      if (!in_z[x]) ++gain[x];
    }
    in_z[pick] = 1;
    z.push_back(pick);
  }
}

std::vector<std::uint32_t> random_priority(std::uint32_t v, Rng& rng) {
  std::vector<std::uint32_t> perm(v);
  std::iota(perm.begin(), perm.end(), 0U);
  for (std::uint32_t i = v; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  return perm;
}

}  // namespace

SearchReport greedy_max_nonincident(const Design& d, std::uint64_t seed, std::span<const Point> initial) {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(seed);
  Best best;
  std::uint64_t steps = 0;

  std::vector<Point> y0 = points_of(point_set(d, initial));
  if (y0.empty() && d.order() > 0) y0.push_back(static_cast<Point>(rng.below(d.order())));
  grow_points(d, std::move(y0), best, steps);

  if (d.block_count() > 0) {
    std::vector<BlockIndex> starts(d.block_count());
    std::iota(starts.begin(), starts.end(), BlockIndex{0});
    if (starts.size() > kMaxComplementStarts) {
      for (std::size_t i = 0; i < kMaxComplementStarts; ++i) {
        std::swap(starts[i], starts[i + rng.below(starts.size() - i)]);
      }
      starts.resize(kMaxComplementStarts);
    }
    for (BlockIndex b : starts) grow_complement(d, d.block(b), random_priority(d.order(), rng), best, steps);
  }

  SearchReport report;
  report.method = "greedy";
  report.best_s = best.value;
  report.exact = false;
  report.nodes_visited = steps;
  if (best.value > 0) {
    report.certificate = detail::square_certificate(d, best.points, best.disjoint, best.value, "greedy");
  }
  detail::finish_report(d, report, start);
  return report;
}

}  // namespace sts
