#pragma once

#include <vector>

#include "sts/search.hpp"

namespace sts::detail {

// Ceiling from the bounds module, as a machine integer.
std::size_t nonincidence_ceiling(const Design& d);

// Square certificate from a point set y (|y| >= s) and a mask of blocks
// disjoint from y (at least s of them): the first s of each.
NonincidenceCertificate square_certificate(const Design& d, std::vector<Point> y, const BitVector& disjoint,
                                           std::size_t s, const std::string& method);

// Sets the certificate, the ceiling and the timing, and enforces the report
// invariants.
void finish_report(const Design& d, SearchReport& report, std::chrono::steady_clock::time_point start);

// Number of still-disjoint blocks that adding p would remove.
inline std::size_t kill_count(const Design& d, Point p, const BitVector& disjoint) {
  return d.point_incidence(p).and_count(disjoint);
}

// Orders candidates by ascending kill count, ties to the lower index.
void order_by_kill_count(const Design& d, const BitVector& disjoint, std::vector<Point>& candidates);

// Branch ordering is recomputed only down to this depth.
inline constexpr std::size_t kReorderDepth = 4;

}  // namespace sts::detail
