#include "sts/design.hpp"

#include <algorithm>
#include <sstream>

#include "sts/digest.hpp"

namespace sts {

namespace {

// Bounds the v*v pair tables.
constexpr std::int64_t kMaxDesignOrder = 2047;

std::string format_pairs(const std::vector<std::pair<Point, Point>>& pairs, std::size_t limit = 8) {
  std::ostringstream os;
  for (std::size_t i = 0; i < pairs.size() && i < limit; ++i)
    os << (i ? " " : "") << "{" << pairs[i].first << "," << pairs[i].second << "}";
  if (pairs.size() > limit) os << " ...";
  return os.str();
}

std::string build_canonical(std::uint32_t v, const std::vector<Block>& blocks) {
  std::string out = "{\"blocks\":[";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += ',';
    out += '[';
    out += std::to_string(blocks[i][0]);
    out += ',';
    out += std::to_string(blocks[i][1]);
    out += ',';
    out += std::to_string(blocks[i][2]);
    out += ']';
  }
  out += "],\"v\":";
  out += std::to_string(v);
  out += '}';
  return out;
}

}  // namespace

bool is_admissible_order(std::int64_t v) { return v > 0 && (v % 6 == 1 || v % 6 == 3); }

std::vector<std::string> ValidityReport::failures() const {
  std::vector<std::string> out;
  if (!admissible_order) {
    std::ostringstream os;
    os << "inadmissible order v=" << v << " (need v = 1 or 3 mod 6)";
    out.push_back(os.str());
  }
  if (!blocks_well_formed) {
    std::ostringstream os;
    os << malformed_blocks.size() << " malformed blocks (points must be 3 distinct labels in [0, v))";
    out.push_back(os.str());
  }
  if (!block_count_ok) {
    std::ostringstream os;
    os << "block count " << actual_blocks << ", expected v(v-1)/6 = " << expected_blocks;
    out.push_back(os.str());
  }
  if (!replication_ok) {
    std::ostringstream os;
    os << wrong_replication.size() << " points not on (v-1)/2 blocks";
    out.push_back(os.str());
  }
  if (!pair_coverage_ok) {
    if (!uncovered_pairs.empty()) {
      out.push_back(std::to_string(uncovered_pairs.size()) +
                    " pairs uncovered: " + format_pairs(uncovered_pairs));
    }
    if (!repeated_pairs.empty()) {
      out.push_back(std::to_string(repeated_pairs.size()) +
                    " pairs covered more than once: " + format_pairs(repeated_pairs));
    }
  }
  return out;
}

ValidityReport validate_design(const CandidateDesign& candidate) {
  ValidityReport rep;
  const std::int64_t v = candidate.v;
  rep.v = v;
  rep.admissible_order = is_admissible_order(v);
  rep.actual_blocks = candidate.blocks.size();
  rep.expected_blocks = v > 0 ? static_cast<std::size_t>(v * (v - 1) / 6) : 0;
  rep.block_count_ok = v > 0 && (v * (v - 1)) % 6 == 0 && rep.actual_blocks == rep.expected_blocks;

  if (v <= 0 || v > kMaxDesignOrder) {
    // Nothing meaningful can be said about pairs or points.
    for (std::size_t i = 0; i < candidate.blocks.size(); ++i) rep.malformed_blocks.push_back(i);
    rep.blocks_well_formed = false;
    return rep;
  }

  const auto n = static_cast<std::size_t>(v);
  std::vector<std::uint32_t> pair_count(n * n, 0);
  std::vector<std::uint32_t> point_count(n, 0);
  for (std::size_t i = 0; i < candidate.blocks.size(); ++i) {
    const auto& b = candidate.blocks[i];
    const bool in_range = std::all_of(b.begin(), b.end(), [&](std::int64_t p) { return p >= 0 && p < v; });
    if (!in_range || b[0] == b[1] || b[0] == b[2] || b[1] == b[2]) {
      rep.malformed_blocks.push_back(i);
      continue;
    }
    for (int a = 0; a < 3; ++a) {
      ++point_count[static_cast<std::size_t>(b[a])];
      for (int c = a + 1; c < 3; ++c) {
        const auto x = static_cast<std::size_t>(std::min(b[a], b[c]));
        const auto y = static_cast<std::size_t>(std::max(b[a], b[c]));
        ++pair_count[x * n + y];
      }
    }
  }
  rep.blocks_well_formed = rep.malformed_blocks.empty();

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      const auto c = pair_count[x * n + y];
      if (c == 0) rep.uncovered_pairs.emplace_back(x, y);
      if (c > 1) rep.repeated_pairs.emplace_back(x, y);
    }
  }
  rep.pair_coverage_ok = rep.uncovered_pairs.empty() && rep.repeated_pairs.empty();

  for (std::size_t p = 0; p < n; ++p) {
    if (2 * static_cast<std::int64_t>(point_count[p]) != v - 1) rep.wrong_replication.push_back(static_cast<Point>(p));
  }
  rep.replication_ok = rep.wrong_replication.empty();
  return rep;
}

namespace {
std::string summarize(const ValidityReport& report) {
  std::string msg = "not a Steiner triple system";
  for (const auto& f : report.failures()) msg += "; " + f;
  return msg;
}
}  // namespace

InvalidDesign::InvalidDesign(ValidityReport report)
    : InputError(summarize(report)), report_(std::move(report)) {}

Design Design::from_candidate(const CandidateDesign& candidate) {
  ValidityReport report = validate_design(candidate);
  if (!report.ok()) throw InvalidDesign(std::move(report));

  Design d;
  d.v_ = static_cast<std::uint32_t>(candidate.v);
  d.blocks_.reserve(candidate.blocks.size());
  for (const auto& raw : candidate.blocks) {
    Block b{static_cast<Point>(raw[0]), static_cast<Point>(raw[1]), static_cast<Point>(raw[2])};
    std::sort(b.begin(), b.end());
    d.blocks_.push_back(b);
  }
  std::sort(d.blocks_.begin(), d.blocks_.end());

  const std::uint32_t v = d.v_;
  const std::size_t nb = d.blocks_.size();
  d.point_incidence_.assign(v, BitVector(nb));
  d.block_masks_.assign(nb, BitVector(v));
  d.pair_block_.assign(static_cast<std::size_t>(v) * v, 0);
  for (std::size_t i = 0; i < nb; ++i) {
    const Block& b = d.blocks_[i];
    for (int a = 0; a < 3; ++a) {
      d.point_incidence_[b[a]].set(i);
      d.block_masks_[i].set(b[a]);
      for (int c = 0; c < 3; ++c) {
        if (a != c) d.pair_block_[static_cast<std::size_t>(b[a]) * v + b[c]] = static_cast<BlockIndex>(i);
      }
    }
  }
  d.canonical_ = build_canonical(v, d.blocks_);
  d.digest_ = sha256_hex(d.canonical_);
  return d;
}

Design Design::from_blocks(std::uint32_t v, std::vector<Block> blocks) {
  CandidateDesign c;
  c.v = v;
  c.blocks.reserve(blocks.size());
  for (const Block& b : blocks) c.blocks.push_back({b[0], b[1], b[2]});
  return from_candidate(c);
}

Point Design::third_point(Point x, Point y) const {
  const Block& b = blocks_[block_of_pair(x, y)];
  return b[0] ^ b[1] ^ b[2] ^ x ^ y;
}

ValidityReport validate_design(const Design& d) { return validate_design(to_candidate(d)); }

CandidateDesign to_candidate(const Design& d) {
  CandidateDesign c;
  c.v = d.order();
  for (const Block& b : d.blocks()) c.blocks.push_back({b[0], b[1], b[2]});
  return c;
}

BitVector point_set(const Design& d, std::span<const Point> points) {
  BitVector mask(d.order());
  for (Point p : points) {
    if (p >= d.order()) {
      throw InputError("point " + std::to_string(p) + " out of range for v=" + std::to_string(d.order()));
    }
    mask.set(p);
  }
  return mask;
}

std::vector<Point> points_of(const BitVector& mask) {
  std::vector<Point> out;
  mask.for_each_set([&](std::size_t i) { out.push_back(static_cast<Point>(i)); });
  return out;
}

BitVector disjoint_blocks(const Design& d, const BitVector& y) {
  BitVector out = d.all_blocks();
  y.for_each_set([&](std::size_t p) { out.and_not(d.point_incidence(static_cast<Point>(p))); });
  return out;
}

std::size_t disjoint_block_count(const Design& d, const BitVector& y) { return disjoint_blocks(d, y).count(); }

std::size_t disjoint_block_count(const Design& d, std::span<const Point> y) {
  return disjoint_block_count(d, point_set(d, y));
}

CoverageProfile coverage_profile(const Design& d, const BitVector& y) {
  CoverageProfile prof;
  prof.s = y.count();
  for (std::size_t b = 0; b < d.block_count(); ++b) {
    const std::size_t m = d.block_mask(static_cast<BlockIndex>(b)).and_count(y);
    if (m == 0) continue;
    ++prof.c;
    prof.sum_sizes += m;
    prof.sum_pairs += m * (m - 1) / 2;
    prof.sum_squares += m * m;
  }
  return prof;
}

CoverageProfile coverage_profile(const Design& d, std::span<const Point> y) {
  return coverage_profile(d, point_set(d, y));
}

SubsystemCheck is_subsystem(const Design& d, std::span<const Point> z) {
  const BitVector mask = point_set(d, z);
  const auto w = static_cast<std::int64_t>(mask.count());
  SubsystemCheck out;
  bool closed = true;
  for (std::size_t b = 0; b < d.block_count(); ++b) {
    const std::size_t m = d.block_mask(static_cast<BlockIndex>(b)).and_count(mask);
    if (m == 3) out.interior_blocks.push_back(static_cast<BlockIndex>(b));
    if (m == 2) closed = false;
  }
  out.is_subsystem = closed && is_admissible_order(w);
  return out;
}

bool is_maximal_arc(const Design& d, std::span<const Point> y) {
  const BitVector mask = point_set(d, y);
  if (2 * mask.count() != static_cast<std::size_t>(d.order()) + 1) return false;
  for (std::size_t b = 0; b < d.block_count(); ++b) {
    const std::size_t m = d.block_mask(static_cast<BlockIndex>(b)).and_count(mask);
    if (m != 0 && m != 2) return false;
  }
  return true;
}

}  // namespace sts
