#ifndef OCDC_EXACT_COVER_HPP
#define OCDC_EXACT_COVER_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace ocdc {

/// Rows (subsets of columns) and a required multiplicity per column. A
/// solution is a multiset of rows covering column c exactly need[c] times.
struct ExactCoverProblem {
  int columns = 0;
  std::vector<int> need;               // per column, >= 1
  std::vector<std::vector<int>> rows;  // strictly increasing column ids
  bool allow_repeat = false;           // may a row be chosen more than once
};

struct SearchBudget {
  std::uint64_t node_limit = 100'000'000;
  std::chrono::milliseconds time_limit{0};  // 0 = unbounded
  int threads = 1;
};

enum class SearchStatus { Found, NoneExists, Unresolved };

struct ExactCoverResult {
  SearchStatus status = SearchStatus::Unresolved;
  std::vector<int> rows;  // chosen row ids in selection order
  std::uint64_t nodes = 0;
  bool timed_out = false;
};

/// Backtracking exact cover (Algorithm X with counters instead of links).
///
/// Column choice is minimum-remaining-values, ties to the lowest id; a column
/// with need > 1 stays focused until satisfied and picks rows in increasing
/// order, so each multiset solution is visited once. With max_rows set, a
/// branch is dropped when the largest remaining rows cannot cover what is
/// left. The order of exploration (and so the first solution) depends only on
/// the problem and max_rows, never on the thread count: with threads > 1 the
/// root branches are farmed out and the reported node count is what the
/// sequential search would have spent.
class ExactCoverSolver {
 public:
  explicit ExactCoverSolver(const ExactCoverProblem& problem);

  ExactCoverResult solve_first(std::optional<int> max_rows, const SearchBudget& budget) const;

  /// Visit solutions in search order until the callback returns false.
  /// Single-threaded. Status is Found if the callback stopped the search,
  /// NoneExists after exhausting the tree.
  ExactCoverResult for_each(std::optional<int> max_rows, const SearchBudget& budget,
                            const std::function<bool(const std::vector<int>&)>& visit) const;

 private:
  const ExactCoverProblem& problem_;
  std::vector<std::vector<int>> column_rows_;
};

}  // namespace ocdc

#endif  // OCDC_EXACT_COVER_HPP
