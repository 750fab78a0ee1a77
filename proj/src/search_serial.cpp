#include <numeric>

#include "search_internal.hpp"

namespace sts {

namespace {

class SerialSearch {
 public:
  SerialSearch(const Design& d, std::uint64_t budget)
      : d_(d),
        budget_(budget),
        ceiling_(detail::nonincidence_ceiling(d)),
        candidates_(d.order() + 1),
        masks_(d.order() + 1) {}

  void run() {
    std::vector<Point>& root = candidates_[0];
    root.resize(d_.order());
    std::iota(root.begin(), root.end(), Point{0});
    masks_[0] = d_.all_blocks();
    visit(masks_[0].count());
  }

  std::size_t best() const { return best_; }
  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<Point>& best_points() const { return best_points_; }
  const BitVector& best_disjoint() const { return best_disjoint_; }

 private:
  // Node at depth y_.size(); its candidates are candidates_[k] and its
  // disjoint-block mask is masks_[k]. Returns false to unwind the search.
  bool visit(std::size_t t) {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    const std::size_t k = y_.size();
    const BitVector& disjoint = masks_[k];
    const std::size_t value = std::min(k, t);
    if (value > best_) {
      best_ = value;
      best_points_ = y_;
      best_disjoint_ = disjoint;
      if (best_ >= ceiling_) return false;
    }
    // t never grows as Y grows, and min(|Y|, t) cannot exceed t.
    if (t <= best_ || k >= t || k + candidates_[k].size() <= best_) return true;

    std::vector<Point>& cand = candidates_[k];
    if (k <= detail::kReorderDepth) detail::order_by_kill_count(d_, disjoint, cand);
    for (std::size_t i = 0; i < cand.size(); ++i) {
      const std::size_t remaining = cand.size() - i - 1;
      if (k + 1 + remaining <= best_) break;
      const Point p = cand[i];
      BitVector& child = masks_[k + 1];
      child = disjoint;
      child.and_not(d_.point_incidence(p));
      const std::size_t child_t = child.count();
      if (child_t <= best_) continue;
      candidates_[k + 1].assign(cand.begin() + static_cast<std::ptrdiff_t>(i) + 1, cand.end());
      y_.push_back(p);
      const bool go_on = visit(child_t);
      y_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  const Design& d_;
  std::uint64_t budget_;
  std::size_t ceiling_;
  std::vector<std::vector<Point>> candidates_;
  std::vector<BitVector> masks_;
  std::vector<Point> y_;

  std::size_t best_ = 0;
  std::vector<Point> best_points_;
  BitVector best_disjoint_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

SearchReport exact_max_nonincident_serial(const Design& d, std::uint64_t node_budget) {
  const auto start = std::chrono::steady_clock::now();
  SerialSearch search(d, node_budget);
  search.run();

  SearchReport report;
  report.method = "exact";
  report.best_s = search.best();
  report.exact = !search.aborted();
  report.nodes_visited = std::min(search.nodes(), node_budget);
  if (report.best_s > 0) {
    report.certificate =
        detail::square_certificate(d, search.best_points(), search.best_disjoint(), report.best_s, "exact");
  }
  detail::finish_report(d, report, start);
  return report;
}

SearchReport exact_max_nonincident(const Design& d, SearchOptions options) {
  if (options.threads <= 1) return exact_max_nonincident_serial(d, options.node_budget);
  return exact_max_nonincident_parallel(d, options.node_budget, options.threads);
}

}  // namespace sts
