#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sts/certificate.hpp"
#include "sts/design.hpp"

namespace sts {

// A partition of the edges of K_n (n even) into n-1 perfect matchings.
struct OneFactorization {
  std::uint32_t n = 0;
  std::vector<std::vector<std::pair<Point, Point>>> factors;
};

// Round-robin (circle method) factorization. Throws InputError for odd or
// zero n.
OneFactorization one_factorization(std::uint32_t n);

// Bose construction on Z_n x {0,1,2}, n = v/3. Requires v = 3 mod 6.
Design bose(std::uint32_t v);

struct DoubledDesign {
  Design design;
  std::vector<Point> arc;  // the w+1 new points, a maximal arc
};

// STS(2w+1) from STS(w): keeps the old blocks on 0..w-1 and joins each old
// point x to the edges of one factor F_x of a one-factorization of the new
// points w..2w.
DoubledDesign doubling(const Design& sub);

struct EmbedLimits {
  std::uint64_t max_moves = 10'000'000;
};

struct EmbeddedDesign {
  Design design;
  std::vector<Point> sub_points;       // 0..w-1
  std::vector<BlockIndex> sub_blocks;  // blocks inside sub_points
  std::uint64_t seed = 0;
  std::uint64_t moves = 0;  // hill-climbing moves spent on the outer completion
};

// STS(v) containing a sub-STS(w) on points 0..w-1. The sub-design is fixed
// (Bose for w = 3 mod 6, a recursive embedding around a triple for w = 1 mod
// 6) and the remaining pairs are completed by hill-climbing that never
// touches a sub-design block. Requires v, w admissible and v >= 2w+1.
// Throws BudgetExhausted when the move budget runs out.
EmbeddedDesign embed_subsystem(std::uint32_t w, std::uint32_t v, std::uint64_t seed, EmbedLimits limits = {});

// Y = points outside the sub-design, C = the sub-design's blocks, trimmed to
// |Y| blocks when there are more of them.
NonincidenceCertificate subsystem_complement_certificate(const EmbeddedDesign& e);

// Any STS(v): Bose for v = 3 mod 6, hill-climbing around a fixed triple for
// v = 1 mod 6 (v >= 7), the empty design for v = 1.
Design construct_design(std::uint32_t v, std::uint64_t seed, EmbedLimits limits = {});

}  // namespace sts
