#include "ocdc/exact_cover.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include "ocdc/error.hpp"

namespace ocdc {

namespace {

using Clock = std::chrono::steady_clock;

class SearchState {
 public:
  SearchState(const ExactCoverProblem& p, const std::vector<std::vector<int>>& column_rows, std::optional<int> max_rows,
              std::uint64_t node_limit, std::optional<Clock::time_point> deadline)
      : p_(p),
        column_rows_(column_rows),
        max_rows_(max_rows),
        node_limit_(node_limit),
        deadline_(deadline),
        need_(p.need),
        avail_(static_cast<std::size_t>(p.columns), 0),
        blocked_(p.rows.size(), 0) {
    std::size_t longest = 0;
    for (const auto& r : p.rows) longest = std::max(longest, r.size());
    hist_.assign(longest + 1, 0);
    for (const auto& r : p.rows) {
      ++hist_[r.size()];
      for (int c : r) ++avail_[static_cast<std::size_t>(c)];
    }
    for (int v : need_) units_ += v;
  }

  // Budget accounting; returns false once the search must stop.
  bool tick() {
    ++nodes_;
    if (nodes_ > node_limit_) {
      stopped_ = true;
      return false;
    }
    if (deadline_ && (nodes_ & 1023) == 0 && Clock::now() > *deadline_) {
      stopped_ = true;
      timed_out_ = true;
      return false;
    }
    return true;
  }

  bool done() const { return units_ == 0; }

  // Column to branch on, or -1 when the node is dead.
  int choose_column(int focus) const {
    int best = -1;
    int best_avail = std::numeric_limits<int>::max();
    for (int c = 0; c < p_.columns; ++c) {
      const int need = need_[static_cast<std::size_t>(c)];
      if (need == 0) continue;
      const int av = avail_[static_cast<std::size_t>(c)];
      if (av == 0 || (!p_.allow_repeat && av < need)) return -1;
      if (av < best_avail) {
        best_avail = av;
        best = c;
      }
    }
    if (focus >= 0 && need_[static_cast<std::size_t>(focus)] > 0) return focus;
    return best;
  }

  bool bound_allows() const {
    if (!max_rows_) return true;
    const long slots = *max_rows_ - static_cast<long>(chosen_.size());
    if (slots <= 0) return false;
    long reach = 0;
    long left = slots;
    for (std::size_t len = hist_.size(); len-- > 1 && left > 0;) {
      if (hist_[len] == 0) continue;
      if (p_.allow_repeat) {
        reach = left * static_cast<long>(len);
        break;
      }
      const long take = std::min<long>(left, hist_[len]);
      reach += take * static_cast<long>(len);
      left -= take;
    }
    return reach >= units_;
  }

  void select(int r) {
    const auto& row = p_.rows[static_cast<std::size_t>(r)];
    if (!p_.allow_repeat) block(r);
    for (int c : row) {
      --units_;
      if (--need_[static_cast<std::size_t>(c)] == 0)
        for (int other : column_rows_[static_cast<std::size_t>(c)]) block(other);
    }
    chosen_.push_back(r);
  }

  void unselect(int r) {
    chosen_.pop_back();
    const auto& row = p_.rows[static_cast<std::size_t>(r)];
    for (auto it = row.rbegin(); it != row.rend(); ++it) {
      const int c = *it;
      if (need_[static_cast<std::size_t>(c)]++ == 0)
        for (int other : column_rows_[static_cast<std::size_t>(c)]) unblock(other);
      ++units_;
    }
    if (!p_.allow_repeat) unblock(r);
  }

  bool available(int r) const { return blocked_[static_cast<std::size_t>(r)] == 0; }

  // Depth-first search below the current state. The visitor returns false to
  // stop. Returns false when the search stopped (visitor or budget).
  template <typename Visit>
  bool dfs(int focus, int lower, Visit& visit) {
    if (!tick()) return false;
    if (done()) return visit(chosen_);
    if (!bound_allows()) return true;
    const int c = choose_column(focus);
    if (c < 0) return true;
    const int lb = (c == focus) ? lower : 0;
    const auto& candidates = column_rows_[static_cast<std::size_t>(c)];
    for (auto it = std::lower_bound(candidates.begin(), candidates.end(), lb); it != candidates.end(); ++it) {
      const int r = *it;
      if (!available(r)) continue;
      select(r);
      const bool go_on = dfs(need_[static_cast<std::size_t>(c)] > 0 ? c : -1, p_.allow_repeat ? r : r + 1, visit);
      unselect(r);
      if (!go_on) return false;
    }
    return true;
  }

  // Root-level view used by the parallel driver.
  std::vector<int> root_candidates(int& column) const {
    std::vector<int> out;
    column = choose_column(-1);
    if (column < 0) return out;
    for (int r : column_rows_[static_cast<std::size_t>(column)])
      if (available(r)) out.push_back(r);
    return out;
  }

  std::uint64_t nodes() const { return nodes_; }
  void add_nodes(std::uint64_t n) { nodes_ += n; }
  bool stopped() const { return stopped_; }
  bool timed_out() const { return timed_out_; }
  const std::vector<int>& chosen() const { return chosen_; }
  int need(int c) const { return need_[static_cast<std::size_t>(c)]; }

 private:
  void block(int r) {
    if (blocked_[static_cast<std::size_t>(r)]++ == 0) {
      const auto& row = p_.rows[static_cast<std::size_t>(r)];
      --hist_[row.size()];
      for (int c : row) --avail_[static_cast<std::size_t>(c)];
    }
  }

  void unblock(int r) {
    if (--blocked_[static_cast<std::size_t>(r)] == 0) {
      const auto& row = p_.rows[static_cast<std::size_t>(r)];
      ++hist_[row.size()];
      for (int c : row) ++avail_[static_cast<std::size_t>(c)];
    }
  }

  const ExactCoverProblem& p_;
  const std::vector<std::vector<int>>& column_rows_;
  std::optional<int> max_rows_;
  std::uint64_t node_limit_;
  std::optional<Clock::time_point> deadline_;

  std::vector<int> need_;
  std::vector<int> avail_;
  std::vector<int> blocked_;
  std::vector<long> hist_;
  long units_ = 0;
  std::vector<int> chosen_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
  bool timed_out_ = false;
};

std::optional<Clock::time_point> deadline_for(const SearchBudget& b) {
  if (b.time_limit.count() <= 0) return std::nullopt;
  return Clock::now() + b.time_limit;
}

}  // namespace

ExactCoverSolver::ExactCoverSolver(const ExactCoverProblem& problem) : problem_(problem) {
  if (static_cast<int>(problem.need.size()) != problem.columns) throw ValidationError("need[] does not match column count");
  column_rows_.assign(static_cast<std::size_t>(problem.columns), {});
  for (std::size_t r = 0; r < problem.rows.size(); ++r) {
    const auto& row = problem.rows[r];
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] < 0 || row[i] >= problem.columns) throw ValidationError("row refers to a missing column");
      if (i > 0 && row[i] <= row[i - 1]) throw ValidationError("row columns must be strictly increasing");
      column_rows_[static_cast<std::size_t>(row[i])].push_back(static_cast<int>(r));
    }
  }
}

ExactCoverResult ExactCoverSolver::for_each(std::optional<int> max_rows, const SearchBudget& budget,
                                            const std::function<bool(const std::vector<int>&)>& visit) const {
  SearchState state(problem_, column_rows_, max_rows, budget.node_limit, deadline_for(budget));
  bool visitor_stopped = false;
  std::vector<int> last;
  auto wrapped = [&](const std::vector<int>& rows) {
    if (visit(rows)) return true;
    visitor_stopped = true;
    last = rows;
    return false;
  };
  state.dfs(-1, 0, wrapped);
  ExactCoverResult out;
  out.nodes = std::min(state.nodes(), budget.node_limit);
  out.timed_out = state.timed_out();
  if (visitor_stopped) {
    out.status = SearchStatus::Found;
    out.rows = std::move(last);
  } else {
    out.status = state.stopped() ? SearchStatus::Unresolved : SearchStatus::NoneExists;
  }
  return out;
}

ExactCoverResult ExactCoverSolver::solve_first(std::optional<int> max_rows, const SearchBudget& budget) const {
  if (budget.threads <= 1) return for_each(max_rows, budget, [](const std::vector<int>&) { return false; });

  // Root node handled here, subtrees in parallel.
  const auto deadline = deadline_for(budget);
  SearchState root(problem_, column_rows_, max_rows, budget.node_limit, deadline);
  ExactCoverResult out;
  if (!root.tick()) {
    out.status = SearchStatus::Unresolved;
    out.nodes = budget.node_limit;
    return out;
  }
  if (root.done()) {
    out.status = SearchStatus::Found;
    out.nodes = 1;
    return out;
  }
  int column = -1;
  const std::vector<int> candidates = root.bound_allows() ? root.root_candidates(column) : std::vector<int>{};
  if (candidates.empty()) {
    out.status = SearchStatus::NoneExists;
    out.nodes = 1;
    return out;
  }

  struct Branch {
    bool ran = false;
    bool found = false;
    bool incomplete = false;
    bool timed_out = false;
    std::uint64_t nodes = 0;
    std::vector<int> rows;
  };
  std::vector<Branch> branches(candidates.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_found{candidates.size()};

  auto worker = [&] {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= candidates.size() || k > first_found.load()) return;
      SearchState st(problem_, column_rows_, max_rows, budget.node_limit, deadline);
      const int r = candidates[k];
      st.select(r);
      Branch& b = branches[k];
      auto stop_at_first = [&](const std::vector<int>& rows) {
        b.rows = rows;
        b.found = true;
        return false;
      };
      st.dfs(st.need(column) > 0 ? column : -1, problem_.allow_repeat ? r : r + 1, stop_at_first);
      b.ran = true;
      b.nodes = st.nodes();
      b.incomplete = st.stopped() && !b.found;
      b.timed_out = st.timed_out();
      if (b.found) {
        std::size_t cur = first_found.load();
        while (k < cur && !first_found.compare_exchange_weak(cur, k)) {
        }
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < budget.threads; ++t) pool.emplace_back(worker);
  }

  // Replay in sequential order.
  std::uint64_t total = 1;
  for (const Branch& b : branches) {
    if (!b.ran || b.incomplete || total + b.nodes > budget.node_limit) {
      out.status = SearchStatus::Unresolved;
      out.nodes = budget.node_limit;
      out.timed_out = b.timed_out;
      return out;
    }
    total += b.nodes;
    if (b.found) {
      out.status = SearchStatus::Found;
      out.rows = b.rows;
      out.nodes = total;
      return out;
    }
  }
  out.status = SearchStatus::NoneExists;
  out.nodes = total;
  return out;
}

}  // namespace ocdc
