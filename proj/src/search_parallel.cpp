#include <omp.h>

#include <atomic>
#include <mutex>
#include <numeric>

#include "search_internal.hpp"

namespace sts {

namespace {

constexpr std::size_t kSplitDepth = 2;
constexpr std::uint64_t kNodeFlush = 1024;

struct Task {
  std::vector<Point> y;
  std::vector<Point> candidates;
  BitVector disjoint;
  std::size_t t = 0;
};

// State shared by all workers.
class Incumbent {
 public:
  Incumbent(std::uint64_t budget, std::size_t ceiling) : budget_(budget), ceiling_(ceiling) {}

  std::size_t best() const { return best_.load(std::memory_order_relaxed); }
  bool stopped() const { return stop_.load(std::memory_order_relaxed); }
  bool aborted() const { return aborted_.load(); }
  std::uint64_t nodes() const { return nodes_.load(); }

  void offer(std::size_t value, const std::vector<Point>& y, const BitVector& disjoint) {
    if (value <= best()) return;
    std::lock_guard lock(mutex_);
    if (value <= best_.load()) return;
    best_points_ = y;
    best_disjoint_ = disjoint;
    best_.store(value);
    if (value >= ceiling_) stop_.store(true);
  }

  void add_nodes(std::uint64_t n) { nodes_.fetch_add(n); }

  // Adds locally counted nodes; returns false once the budget is spent.
  bool charge(std::uint64_t n) {
    const std::uint64_t total = nodes_.fetch_add(n) + n;
    if (total > budget_) {
      aborted_.store(true);
      stop_.store(true);
      return false;
    }
    return true;
  }

  const std::vector<Point>& best_points() const { return best_points_; }
  const BitVector& best_disjoint() const { return best_disjoint_; }

 private:
  std::uint64_t budget_;
  std::size_t ceiling_;
  std::atomic<std::size_t> best_{0};
  std::atomic<bool> stop_{false};
  std::atomic<bool> aborted_{false};
  std::atomic<std::uint64_t> nodes_{0};
  std::mutex mutex_;
  std::vector<Point> best_points_;
  BitVector best_disjoint_;
};

class Worker {
 public:
  Worker(const Design& d, Incumbent& inc) : d_(d), inc_(inc), candidates_(d.order() + 1), masks_(d.order() + 1) {}

  void run(const Task& task) {
    y_ = task.y;
    const std::size_t k = y_.size();
    candidates_[k] = task.candidates;
    masks_[k] = task.disjoint;
    visit(task.t);
  }

  void flush() {
    inc_.add_nodes(pending_);
    pending_ = 0;
  }

 private:
  bool visit(std::size_t t) {
    if (++pending_ >= kNodeFlush) {
      const bool ok = inc_.charge(pending_);
      pending_ = 0;
      if (!ok) return false;
    }
    if (inc_.stopped()) return false;
    const std::size_t k = y_.size();
    const BitVector& disjoint = masks_[k];
    inc_.offer(std::min(k, t), y_, disjoint);
    std::size_t best = inc_.best();
    if (t <= best || k >= t || k + candidates_[k].size() <= best) return true;

    std::vector<Point>& cand = candidates_[k];
    if (k <= detail::kReorderDepth) detail::order_by_kill_count(d_, disjoint, cand);
    for (std::size_t i = 0; i < cand.size(); ++i) {
      best = inc_.best();
      const std::size_t remaining = cand.size() - i - 1;
      if (k + 1 + remaining <= best) break;
      BitVector& child = masks_[k + 1];
      child = disjoint;
      child.and_not(d_.point_incidence(cand[i]));
      const std::size_t child_t = child.count();
      if (child_t <= best) continue;
      candidates_[k + 1].assign(cand.begin() + static_cast<std::ptrdiff_t>(i) + 1, cand.end());
      y_.push_back(cand[i]);
      const bool go_on = visit(child_t);
      y_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  const Design& d_;
  Incumbent& inc_;
  std::vector<std::vector<Point>> candidates_;
  std::vector<BitVector> masks_;
  std::vector<Point> y_;
  std::uint64_t pending_ = 0;
};

// Serial expansion of the top of the tree with the same ordering and
// pruning rules as the workers; nodes shallower than kSplitDepth are
// evaluated here, nodes at that depth become tasks.
void expand(const Design& d, Incumbent& inc, Task node, std::vector<Task>& tasks) {
  const std::size_t k = node.y.size();
  if (!inc.charge(1)) return;
  inc.offer(std::min(k, node.t), node.y, node.disjoint);
  const std::size_t best = inc.best();
  if (inc.stopped() || node.t <= best || k >= node.t || k + node.candidates.size() <= best) return;
  detail::order_by_kill_count(d, node.disjoint, node.candidates);
  for (std::size_t i = 0; i < node.candidates.size(); ++i) {
    const std::size_t remaining = node.candidates.size() - i - 1;
    if (k + 1 + remaining <= inc.best()) break;
    Task child;
    child.y = node.y;
    child.y.push_back(node.candidates[i]);
    child.candidates.assign(node.candidates.begin() + static_cast<std::ptrdiff_t>(i) + 1, node.candidates.end());
    child.disjoint = node.disjoint;
    child.disjoint.and_not(d.point_incidence(node.candidates[i]));
    child.t = child.disjoint.count();
    if (child.t <= inc.best()) continue;
    if (k + 1 >= kSplitDepth) {
      tasks.push_back(std::move(child));
    } else {
      expand(d, inc, std::move(child), tasks);
    }
  }
}

}  // namespace

SearchReport exact_max_nonincident_parallel(const Design& d, std::uint64_t node_budget, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  Incumbent inc(node_budget, detail::nonincidence_ceiling(d));

  Task root;
  root.candidates.resize(d.order());
  std::iota(root.candidates.begin(), root.candidates.end(), Point{0});
  root.disjoint = d.all_blocks();
  root.t = root.disjoint.count();
  std::vector<Task> tasks;
  expand(d, inc, std::move(root), tasks);

  const auto n_tasks = static_cast<std::ptrdiff_t>(tasks.size());
#pragma omp parallel num_threads(static_cast<int>(threads))
  {
    Worker worker(d, inc);
#pragma omp for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n_tasks; ++i) {
      if (!inc.stopped()) worker.run(tasks[static_cast<std::size_t>(i)]);
    }
    worker.flush();
  }

  SearchReport report;
  report.method = "exact";
  report.best_s = inc.best();
  report.exact = !inc.aborted();
  report.nodes_visited = std::min(inc.nodes(), node_budget);
  if (report.best_s > 0) {
    report.certificate = detail::square_certificate(d, inc.best_points(), inc.best_disjoint(), report.best_s, "exact");
  }
  detail::finish_report(d, report, start);
  return report;
}

}  // namespace sts
