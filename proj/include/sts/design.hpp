#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sts/bitvector.hpp"
#include "sts/errors.hpp"

namespace sts {

using Point = std::uint32_t;
using BlockIndex = std::uint32_t;
using Block = std::array<Point, 3>;

// Unchecked block list as read from a file or produced by a builder.
// Entries are signed so that negative labels survive long enough to be
// reported by validate_design.
struct CandidateDesign {
  std::int64_t v = 0;
  std::vector<std::array<std::int64_t, 3>> blocks;
};

bool is_admissible_order(std::int64_t v);

struct ValidityReport {
  std::int64_t v = 0;
  bool admissible_order = false;
  bool blocks_well_formed = false;
  bool block_count_ok = false;
  bool replication_ok = false;
  bool pair_coverage_ok = false;

  std::size_t expected_blocks = 0;
  std::size_t actual_blocks = 0;
  std::vector<std::size_t> malformed_blocks;  // indices into the candidate list
  std::vector<std::pair<Point, Point>> uncovered_pairs;
  std::vector<std::pair<Point, Point>> repeated_pairs;
  std::vector<Point> wrong_replication;  // points not on exactly (v-1)/2 blocks

  bool ok() const {
    return admissible_order && blocks_well_formed && block_count_ok && replication_ok &&
           pair_coverage_ok;
  }
  // One line per failed invariant; empty when ok().
  std::vector<std::string> failures() const;
};

// Checks every STS invariant and reports all violations.
ValidityReport validate_design(const CandidateDesign& candidate);

class InvalidDesign : public InputError {
 public:
  explicit InvalidDesign(ValidityReport report);
  const ValidityReport& report() const { return report_; }

 private:
  ValidityReport report_;
};

// An immutable Steiner triple system on points 0..v-1. Blocks are sorted
// triples, and the block list is sorted lexicographically, so block indices
// are canonical for a given labeled design.
class Design {
 public:
  // Throws InvalidDesign when the candidate is not an STS(v).
  static Design from_candidate(const CandidateDesign& candidate);
  static Design from_blocks(std::uint32_t v, std::vector<Block> blocks);

  std::uint32_t order() const { return v_; }
  std::size_t block_count() const { return blocks_.size(); }
  std::uint32_t replication() const { return (v_ - 1) / 2; }

  std::span<const Block> blocks() const { return blocks_; }
  const Block& block(BlockIndex b) const { return blocks_[b]; }

  // Bits over block indices: the blocks through p.
  const BitVector& point_incidence(Point p) const { return point_incidence_[p]; }
  // Bits over points: the three points of block b.
  const BitVector& block_mask(BlockIndex b) const { return block_masks_[b]; }

  // Index of the unique block containing the pair {x, y}, x != y.
  BlockIndex block_of_pair(Point x, Point y) const { return pair_block_[x * v_ + y]; }
  // Third point of the block through {x, y}.
  Point third_point(Point x, Point y) const;

  // {"blocks":[[a,b,c],...],"v":v} with no whitespace.
  const std::string& canonical_serialization() const { return canonical_; }
  // Hex SHA-256 of the canonical serialization.
  const std::string& digest() const { return digest_; }

  BitVector all_blocks() const { return BitVector(blocks_.size(), true); }

 private:
  Design() = default;

  std::uint32_t v_ = 0;
  std::vector<Block> blocks_;
  std::vector<BitVector> point_incidence_;
  std::vector<BitVector> block_masks_;
  std::vector<BlockIndex> pair_block_;
  std::string canonical_;
  std::string digest_;
};

ValidityReport validate_design(const Design& d);
CandidateDesign to_candidate(const Design& d);

// Mask over points. Throws InputError on an out-of-range label.
BitVector point_set(const Design& d, std::span<const Point> points);
std::vector<Point> points_of(const BitVector& mask);

// Bits over blocks: the blocks with no point in y.
BitVector disjoint_blocks(const Design& d, const BitVector& y);
std::size_t disjoint_block_count(const Design& d, const BitVector& y);
std::size_t disjoint_block_count(const Design& d, std::span<const Point> y);

// Counting profile of the blocks meeting y. For a valid STS the identities
// sum_sizes = r s, sum_pairs = s(s-1)/2 and sum_squares = s(s+r-1) hold.
struct CoverageProfile {
  std::size_t s = 0;
  std::size_t c = 0;
  std::size_t sum_sizes = 0;
  std::size_t sum_pairs = 0;
  std::size_t sum_squares = 0;

  friend bool operator==(const CoverageProfile&, const CoverageProfile&) = default;
};

CoverageProfile coverage_profile(const Design& d, const BitVector& y);
CoverageProfile coverage_profile(const Design& d, std::span<const Point> y);

struct SubsystemCheck {
  bool is_subsystem = false;
  std::vector<BlockIndex> interior_blocks;
};

// Whether the blocks lying inside z form an STS(|z|) on z.
SubsystemCheck is_subsystem(const Design& d, std::span<const Point> z);

// Whether y has (v+1)/2 points and every block meets it in 0 or 2 points.
bool is_maximal_arc(const Design& d, std::span<const Point> y);

}  // namespace sts
