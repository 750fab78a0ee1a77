#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sts/certificate.hpp"
#include "sts/design.hpp"

namespace sts {

// Per-design answer to "largest s such that some s points avoid some s
// blocks". This is the value for one labeled design, not the maximum over
// all STS(v).
struct SearchReport {
  std::size_t best_s = 0;
  std::optional<NonincidenceCertificate> certificate;  // absent when best_s == 0
  bool exact = false;
  std::uint64_t nodes_visited = 0;
  std::chrono::nanoseconds elapsed{0};
  std::size_t bound_used = 0;  // max_nonincident_bound(v)
  std::string method;
};

struct SearchOptions {
  std::uint64_t node_budget = 100'000'000;
  unsigned threads = 1;
};

// Branch and bound over point sets Y, using
//   f_d = max{ s : some |Y| = s has at least s blocks disjoint from it }.
// threads == 1 runs the serial kernel and is byte-reproducible; more threads
// split the tree across OpenMP workers and return the same best_s.
SearchReport exact_max_nonincident(const Design& d, SearchOptions options = {});

// Reference kernel: plain recursive depth-first search.
SearchReport exact_max_nonincident_serial(const Design& d, std::uint64_t node_budget);

// OpenMP kernel: the tree is expanded serially to a fixed depth and the
// frontier is searched in parallel with a shared incumbent.
SearchReport exact_max_nonincident_parallel(const Design& d, std::uint64_t node_budget, unsigned threads);

// Greedy lower bound. Grows Y from `initial` (or a seed-chosen point) by
// repeatedly adding the point that kills the fewest still-disjoint blocks,
// ties to the lower index, and keeps the best prefix. A second pass grows
// the complement instead: starting from each block (a seed-dependent sample
// when there are many) it adds the outside point closing the most pairs
// into new blocks. Both passes are deterministic for a fixed seed.
SearchReport greedy_max_nonincident(const Design& d, std::uint64_t seed, std::span<const Point> initial = {});

// Exhaustive max over all 2^v point sets of min(|Y|, t(Y)). Independent of
// the search kernels; for tests. Throws InputError when v > 15.
std::size_t brute_force_max_nonincident(const Design& d);

}  // namespace sts
