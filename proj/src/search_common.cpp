#include <algorithm>

#include "search_internal.hpp"
#include "sts/bounds.hpp"

namespace sts::detail {

std::size_t nonincidence_ceiling(const Design& d) {
  return max_nonincident_bound(BigInt(d.order())).convert_to<std::size_t>();
}

NonincidenceCertificate square_certificate(const Design& d, std::vector<Point> y, const BitVector& disjoint,
                                           std::size_t s, const std::string& method) {
  y.resize(s);
  std::vector<BlockIndex> c;
  c.reserve(s);
  disjoint.for_each_set([&](std::size_t b) {
    if (c.size() < s) c.push_back(static_cast<BlockIndex>(b));
  });
  return make_certificate(d, std::move(y), std::move(c), nlohmann::json{{"construction", method}});
}

void finish_report(const Design& d, SearchReport& report, std::chrono::steady_clock::time_point start) {
  report.bound_used = nonincidence_ceiling(d);
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  if (report.best_s > report.bound_used) {
    throw InternalInvariantError("search reported s=" + std::to_string(report.best_s) + " above the ceiling " +
                                 std::to_string(report.bound_used));
  }
  if (report.best_s > 0) {
    if (!report.certificate || report.certificate->claimed_size() != report.best_s ||
        !verify_certificate(d, *report.certificate, true)) {
      throw InternalInvariantError("search produced a certificate that does not verify");
    }
  } else {
    report.certificate.reset();
  }
}

void order_by_kill_count(const Design& d, const BitVector& disjoint, std::vector<Point>& candidates) {
  std::vector<std::pair<std::size_t, Point>> keyed;
  keyed.reserve(candidates.size());
  for (Point p : candidates) keyed.emplace_back(kill_count(d, p, disjoint), p);
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 0; i < keyed.size(); ++i) candidates[i] = keyed[i].second;
}

}  // namespace sts::detail
