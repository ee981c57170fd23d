#include "ocdc/search.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "ocdc/compose.hpp"
#include "ocdc/error.hpp"
#include "ocdc/families.hpp"
#include "ocdc/structure.hpp"

namespace ocdc {

namespace {

using Clock = std::chrono::steady_clock;

bool shorter_then_lex(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Budget accounting for row enumeration: every enumerated element costs one
// node, and the clock is polled every 1024 of them.
class Guard {
 public:
  Guard() = default;
  explicit Guard(const SearchBudget& b) : limit_(b.node_limit) {
    if (b.time_limit.count() > 0) deadline_ = Clock::now() + b.time_limit;
  }
  bool tick() {
    if (stopped_) return false;
    if (++count_ > limit_) return stopped_ = true, false;
    if (deadline_ && (count_ & 1023) == 0 && Clock::now() > *deadline_) return stopped_ = timed_out_ = true, false;
    return true;
  }
  bool stopped() const { return stopped_; }
  bool timed_out() const { return timed_out_; }
  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t limit_ = ~std::uint64_t{0};
  std::uint64_t count_ = 0;
  std::optional<Clock::time_point> deadline_;
  bool stopped_ = false;
  bool timed_out_ = false;
};

// Cycles through their smallest vertex s, other vertices > s.
void cycles_from(const Graph& g, Vertex s, int cap, std::vector<Vertex>& stack, std::vector<char>& on,
                 std::vector<std::vector<Vertex>>& out, Guard& guard) {
  const Vertex v = stack.back();
  for (Vertex w : g.neighbors(v)) {
    if (!guard.tick()) return;
    if (w == s && stack.size() >= 3) out.push_back(stack);
    if (w <= s || on[static_cast<std::size_t>(w)] || static_cast<int>(stack.size()) >= cap) continue;
    on[static_cast<std::size_t>(w)] = 1;
    stack.push_back(w);
    cycles_from(g, s, cap, stack, on, out, guard);
    stack.pop_back();
    on[static_cast<std::size_t>(w)] = 0;
  }
}

std::vector<std::vector<Vertex>> raw_cycles(const Graph& g, std::optional<int> max_len, Guard& guard) {
  const int cap = max_len.value_or(g.order());
  std::vector<std::vector<Vertex>> out;
  std::vector<char> on(static_cast<std::size_t>(g.order()), 0);
  for (Vertex s = 0; s < g.order() && !guard.stopped(); ++s) {
    std::vector<Vertex> stack{s};
    on[static_cast<std::size_t>(s)] = 1;
    cycles_from(g, s, cap, stack, on, out, guard);
    on[static_cast<std::size_t>(s)] = 0;
  }
  std::sort(out.begin(), out.end(), shorter_then_lex);
  return out;
}

// Paths with at least `min_arcs` arcs (shorter ones are walked, not kept).
void paths_from(const Graph& g, int cap, int min_arcs, std::vector<Vertex>& stack, std::vector<char>& on,
                std::vector<std::vector<Vertex>>& out, Guard& guard) {
  for (Vertex w : g.neighbors(stack.back())) {
    if (on[static_cast<std::size_t>(w)]) continue;
    if (!guard.tick()) return;
    stack.push_back(w);
    if (static_cast<int>(stack.size()) - 1 >= min_arcs) out.push_back(stack);
    if (static_cast<int>(stack.size()) - 1 < cap) {
      on[static_cast<std::size_t>(w)] = 1;
      paths_from(g, cap, min_arcs, stack, on, out, guard);
      on[static_cast<std::size_t>(w)] = 0;
    }
    stack.pop_back();
  }
}

std::vector<std::vector<Vertex>> raw_paths(const Graph& g, int cap, int min_arcs, Guard& guard) {
  std::vector<std::vector<Vertex>> raw;
  std::vector<char> on(static_cast<std::size_t>(g.order()), 0);
  if (cap >= 1)
    for (Vertex s = 0; s < g.order() && !guard.stopped(); ++s) {
      std::vector<Vertex> stack{s};
      on[static_cast<std::size_t>(s)] = 1;
      paths_from(g, cap, min_arcs, stack, on, raw, guard);
      on[static_cast<std::size_t>(s)] = 0;
    }
  std::sort(raw.begin(), raw.end(), shorter_then_lex);
  return raw;
}

std::vector<int> arc_row(const Graph& g, const std::vector<Arc>& arcs) {
  std::vector<int> row;
  row.reserve(arcs.size());
  for (const Arc& a : arcs) row.push_back(g.arc_index(a));
  std::sort(row.begin(), row.end());
  return row;
}

std::vector<int> edge_row(const Graph& g, const DirectedCycle& c) {
  std::vector<int> row;
  for (const Arc& a : c.arcs()) row.push_back(g.edge_index(a.tail, a.head));
  std::sort(row.begin(), row.end());
  return row;
}

// Row order used by the optimizing searches: longest first, then the
// enumeration order; an optional seed permutes it reproducibly.
template <typename T>
std::vector<std::size_t> search_order(const std::vector<T>& items, const std::optional<std::uint64_t>& seed,
                                      const std::function<std::size_t(const T&)>& weight) {
  std::vector<std::size_t> idx(items.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::shuffle(idx.begin(), idx.end(), rng);
  }
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return weight(items[a]) > weight(items[b]); });
  return idx;
}

SearchBudget remaining(const SearchBudget& b, std::uint64_t used, Clock::time_point start) {
  SearchBudget r = b;
  r.node_limit = used >= b.node_limit ? 0 : b.node_limit - used;
  if (b.time_limit.count() > 0) {
    const auto spent = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    r.time_limit = std::max(std::chrono::milliseconds(1), b.time_limit - spent);
  }
  return r;
}

CoverKind cycle_kind(const Graph& g, std::size_t count) {
  return static_cast<int>(count) <= g.order() - 1 ? CoverKind::SOCDC : CoverKind::OCDC;
}

int ceil_div(int a, int b) { return b == 0 ? 0 : (a + b - 1) / b; }

// One bounded exact-cover run over directed cycles.
struct CycleSearch {
  const Graph& g;
  std::vector<DirectedCycle> cycles;
  int longest = 0;

  Guard guard;

  CycleSearch(const Graph& graph, std::optional<int> max_len, const SearchBudget& budget) : g(graph), guard(budget) {
    for (auto& c : raw_cycles(graph, max_len, guard)) cycles.emplace_back(std::move(c));
    for (const auto& c : cycles) longest = std::max(longest, c.length());
  }
  bool incomplete(SearchOutcome& out) const {
    if (!guard.stopped()) return false;
    out.status = SearchStatus::Unresolved;
    out.nodes_expanded = guard.count();
    out.timed_out = guard.timed_out();
    return true;
  }

  ExactCoverResult run(std::optional<int> max_rows, const SearchOptions& opt, const SearchBudget& budget,
                       std::vector<DirectedCycle>& picked) const {
    const int units = g.arc_count();
    int min_len = 0;
    if (max_rows) min_len = units - (*max_rows - 1) * longest;
    std::vector<DirectedCycle> kept;
    for (const auto& c : cycles)
      if (c.length() >= min_len) kept.push_back(c);
    const auto order =
        search_order<DirectedCycle>(kept, opt.seed, [](const DirectedCycle& c) { return static_cast<std::size_t>(c.length()); });
    ExactCoverProblem p;
    p.columns = units;
    p.need.assign(static_cast<std::size_t>(units), 1);
    std::vector<const DirectedCycle*> row_cycle;
    for (std::size_t i : order) {
      p.rows.push_back(arc_row(g, kept[i].arcs()));
      row_cycle.push_back(&kept[i]);
    }
    ExactCoverSolver solver(p);
    ExactCoverResult r = solver.solve_first(max_rows, budget);
    picked.clear();
    for (int row : r.rows) picked.push_back(*row_cycle[static_cast<std::size_t>(row)]);
    canonicalize(picked);
    return r;
  }
};

void require_bridgeless(const Graph& g, const char* what) {
  if (!is_bridgeless(g)) throw DomainError(std::string(what) + ": graph has a bridge, so no cycle cover exists");
}

}  // namespace

std::vector<DirectedCycle> enumerate_directed_cycles(const Graph& g, std::optional<int> max_len) {
  std::vector<DirectedCycle> out;
  Guard unlimited;
  for (auto& c : raw_cycles(g, max_len, unlimited)) out.emplace_back(std::move(c));
  return out;
}

std::vector<DirectedCycle> enumerate_undirected_cycles(const Graph& g, std::optional<int> max_len) {
  std::vector<DirectedCycle> out;
  Guard unlimited;
  for (auto& c : raw_cycles(g, max_len, unlimited))
    if (c[1] < c.back()) out.emplace_back(std::move(c));
  return out;
}

std::vector<DirectedPath> enumerate_directed_paths(const Graph& g, std::optional<int> max_arcs) {
  Guard unlimited;
  std::vector<DirectedPath> out;
  for (auto& p : raw_paths(g, max_arcs.value_or(g.order() - 1), 1, unlimited)) out.emplace_back(std::move(p));
  return out;
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "Found";
    case SearchStatus::NoneExists: return "NoneExists";
    case SearchStatus::Unresolved: return "Unresolved";
  }
  return "?";
}

SearchOutcome min_ocdc(const Graph& g, int max_count, const SearchOptions& opt) {
  require_bridgeless(g, "min_ocdc");
  SearchOutcome out;
  out.budget = opt.budget;
  if (g.size() == 0) {
    out.status = SearchStatus::Found;
    out.certificate = make_cycle_certificate(g, cycle_kind(g, 0), {}, "min_ocdc");
    return out;
  }
  const auto start = Clock::now();
  const CycleSearch cs(g, opt.max_len, opt.budget);
  if (cs.incomplete(out)) return out;
  out.nodes_expanded = cs.guard.count();
  out.lower_bound = ceil_div(g.arc_count(), cs.longest);
  for (int k = out.lower_bound; k <= max_count; ++k) {
    std::vector<DirectedCycle> picked;
    const ExactCoverResult r = cs.run(k, opt, remaining(opt.budget, out.nodes_expanded, start), picked);
    out.nodes_expanded += r.nodes;
    out.timed_out = r.timed_out;
    if (r.status == SearchStatus::Unresolved) {
      out.status = SearchStatus::Unresolved;
      return out;
    }
    if (r.status == SearchStatus::Found) {
      out.status = SearchStatus::Found;
      out.lower_bound = static_cast<int>(picked.size());
      const std::size_t size = picked.size();
      out.certificate = make_cycle_certificate(g, cycle_kind(g, size), std::move(picked), "min_ocdc");
      require_valid(*out.certificate);
      return out;
    }
    out.lower_bound = k + 1;
  }
  out.status = SearchStatus::NoneExists;
  return out;
}

SearchOutcome find_ocdc(const Graph& g, std::optional<int> max_count, const SearchOptions& opt) {
  require_bridgeless(g, "find_ocdc");
  SearchOutcome out;
  out.budget = opt.budget;
  if (g.size() == 0) {
    out.status = SearchStatus::Found;
    out.certificate = make_cycle_certificate(g, cycle_kind(g, 0), {}, "find_ocdc");
    return out;
  }
  const auto start = Clock::now();
  const CycleSearch cs(g, opt.max_len, opt.budget);
  if (cs.incomplete(out)) return out;
  out.nodes_expanded = cs.guard.count();
  out.lower_bound = ceil_div(g.arc_count(), cs.longest);
  if (max_count && *max_count < out.lower_bound) {
    out.status = SearchStatus::NoneExists;
    return out;
  }
  std::vector<DirectedCycle> picked;
  const ExactCoverResult r = cs.run(max_count, opt, remaining(opt.budget, out.nodes_expanded, start), picked);
  out.nodes_expanded += r.nodes;
  out.timed_out = r.timed_out;
  out.status = r.status;
  if (r.status == SearchStatus::NoneExists && max_count) out.lower_bound = *max_count + 1;
  if (r.status == SearchStatus::Found) {
    const std::size_t size = picked.size();
    out.certificate = make_cycle_certificate(g, cycle_kind(g, size), std::move(picked), max_count ? "find_socdc" : "find_ocdc");
    require_valid(*out.certificate);
  }
  return out;
}

SearchOutcome find_socdc(const Graph& g, const SearchOptions& opt) {
  SearchOutcome out = find_ocdc(g, std::max(0, g.order() - 1), opt);
  if (out.certificate) {
    out.certificate->kind = CoverKind::SOCDC;
    require_valid(*out.certificate);
  }
  return out;
}

SearchOutcome find_oppdc(const Graph& g, const SearchOptions& opt) {
  if (!is_connected(g)) throw DomainError("find_oppdc: graph must be connected");
  SearchOutcome out;
  out.budget = opt.budget;
  const int n = g.order();
  if (n <= 1) {
    std::vector<DirectedPath> paths;
    if (n == 1) paths.emplace_back(std::vector<Vertex>{0});
    out.status = SearchStatus::Found;
    out.lower_bound = n;
    out.certificate = make_path_certificate(g, CoverKind::OPPDC, std::move(paths), "find_oppdc");
    return out;
  }
  out.lower_bound = n;
  const int arcs = g.arc_count();
  const int units = arcs + 2 * n;
  // A path with k arcs fills k + 2 columns and the longest has n - 1 arcs.
  const int min_arcs = std::max(1, units - (n - 1) * (n + 1) - 2);
  const auto start = Clock::now();
  Guard guard(opt.budget);
  std::vector<DirectedPath> kept;
  for (auto& p : raw_paths(g, opt.max_len ? *opt.max_len - 1 : n - 1, min_arcs, guard)) kept.emplace_back(std::move(p));
  out.nodes_expanded = guard.count();
  if (guard.stopped()) {
    out.status = SearchStatus::Unresolved;
    out.timed_out = guard.timed_out();
    return out;
  }
  const auto order =
      search_order<DirectedPath>(kept, opt.seed, [](const DirectedPath& p) { return static_cast<std::size_t>(p.arc_length()); });

  ExactCoverProblem prob;
  prob.columns = units;
  prob.need.assign(static_cast<std::size_t>(units), 1);
  std::vector<const DirectedPath*> row_path;
  for (std::size_t i : order) {
    std::vector<int> row = arc_row(g, kept[i].arcs());
    row.push_back(arcs + kept[i].start());
    row.push_back(arcs + n + kept[i].end());
    prob.rows.push_back(std::move(row));
    row_path.push_back(&kept[i]);
  }
  ExactCoverSolver solver(prob);
  const ExactCoverResult r = solver.solve_first(n, remaining(opt.budget, out.nodes_expanded, start));
  out.nodes_expanded += r.nodes;
  out.timed_out = r.timed_out;
  out.status = r.status;
  if (r.status == SearchStatus::Found) {
    std::vector<DirectedPath> paths;
    for (int row : r.rows) paths.push_back(*row_path[static_cast<std::size_t>(row)]);
    canonicalize(paths);
    out.certificate = make_path_certificate(g, CoverKind::OPPDC, std::move(paths), "find_oppdc");
    require_valid(*out.certificate);
  }
  return out;
}

namespace {

class SequentialPaths {
 public:
  SequentialPaths(const Graph& g, const SearchOptions& opt)
      : g_(g),
        n_(g.order()),
        limit_(opt.budget.node_limit),
        used_(static_cast<std::size_t>(g.arc_count()), 0),
        on_(static_cast<std::size_t>(n_), 0),
        end_used_(static_cast<std::size_t>(n_), 0),
        left_(g.arc_count()) {
    if (opt.budget.time_limit.count() > 0) deadline_ = Clock::now() + opt.budget.time_limit;
    if (opt.seed) rng_.emplace(*opt.seed);
  }

  SearchStatus run() {
    if (start_path(0)) return SearchStatus::Found;
    return stopped_ ? SearchStatus::Unresolved : SearchStatus::NoneExists;
  }

  std::uint64_t nodes() const { return std::min(nodes_, limit_); }
  bool timed_out() const { return timed_out_; }
  const std::vector<std::vector<Vertex>>& paths() const { return paths_; }

 private:
  bool tick() {
    if (++nodes_ > limit_) return stopped_ = true, false;
    if (deadline_ && (nodes_ & 1023) == 0 && Clock::now() > *deadline_) return stopped_ = timed_out_ = true, false;
    return true;
  }

  bool start_path(Vertex k) {
    if (k == n_) return left_ == 0;
    cur_.assign(1, k);
    on_[static_cast<std::size_t>(k)] = 1;
    const bool ok = extend(k);
    on_[static_cast<std::size_t>(k)] = 0;
    return ok;
  }

  bool extend(Vertex k) {
    if (!tick()) return false;
    const Vertex v = cur_.back();
    std::vector<Vertex> next;
    for (Vertex w : g_.neighbors(v))
      if (!on_[static_cast<std::size_t>(w)] && !used_[static_cast<std::size_t>(g_.arc_index({v, w}))]) next.push_back(w);
    if (rng_) std::shuffle(next.begin(), next.end(), *rng_);
    for (Vertex w : next) {
      const auto a = static_cast<std::size_t>(g_.arc_index({v, w}));
      used_[a] = 1;
      on_[static_cast<std::size_t>(w)] = 1;
      cur_.push_back(w);
      --left_;
      const bool ok = extend(k);
      if (ok) return true;
      ++left_;
      cur_.pop_back();
      on_[static_cast<std::size_t>(w)] = 0;
      used_[a] = 0;
      if (stopped_) return false;
    }
    // end the path here when what is left still fits in the later paths
    const long later = static_cast<long>(n_ - k - 1) * (n_ - 1);
    if (cur_.size() < 2 || end_used_[static_cast<std::size_t>(v)] || left_ > later) return false;
    end_used_[static_cast<std::size_t>(v)] = 1;
    paths_.push_back(cur_);
    const std::vector<Vertex> saved = cur_;
    for (Vertex x : saved) on_[static_cast<std::size_t>(x)] = 0;
    const bool ok = start_path(k + 1);
    if (ok) return true;
    cur_ = saved;
    for (Vertex x : saved) on_[static_cast<std::size_t>(x)] = 1;
    paths_.pop_back();
    end_used_[static_cast<std::size_t>(v)] = 0;
    return false;
  }

  const Graph& g_;
  int n_;
  std::uint64_t limit_;
  std::optional<Clock::time_point> deadline_;
  std::optional<std::mt19937_64> rng_;
  std::vector<char> used_, on_, end_used_;
  int left_;
  std::vector<Vertex> cur_;
  std::vector<std::vector<Vertex>> paths_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
  bool timed_out_ = false;
};

}  // namespace

SearchOutcome find_oppdc_sequential(const Graph& g, const SearchOptions& opt) {
  if (g.order() <= 1) return find_oppdc(g, opt);
  if (!is_connected(g)) throw DomainError("find_oppdc_sequential: graph must be connected");
  SearchOutcome out;
  out.budget = opt.budget;
  out.lower_bound = g.order();
  SequentialPaths s(g, opt);
  out.status = s.run();
  out.nodes_expanded = s.nodes();
  out.timed_out = s.timed_out();
  if (out.status == SearchStatus::Found) {
    std::vector<DirectedPath> paths;
    for (const auto& p : s.paths()) paths.emplace_back(p);
    canonicalize(paths);
    out.certificate = make_path_certificate(g, CoverKind::OPPDC, std::move(paths), "find_oppdc_sequential");
    require_valid(*out.certificate);
  }
  return out;
}

SearchOutcome find_oppdc_via_apex(const Graph& g, const SearchOptions& opt) {
  if (!is_connected(g)) throw DomainError("find_oppdc_via_apex: graph must be connected");
  if (g.order() < 2) throw DomainError("find_oppdc_via_apex: K1 v K1 = K2 has a bridge");
  SearchOutcome out = find_socdc(join_graphs(g, complete_graph(1)), opt);
  if (out.certificate) {
    CoverCertificate stripped = strip_apex(*out.certificate, g.order());
    stripped.provenance = "find_oppdc_via_apex";
    out.certificate = std::move(stripped);
  }
  out.lower_bound = g.order();
  return out;
}

ExactCoverResult for_each_cdc(const Graph& g, const SearchOptions& opt,
                              const std::function<bool(const std::vector<DirectedCycle>&)>& visit) {
  require_bridgeless(g, "for_each_cdc");
  const auto start = Clock::now();
  Guard guard(opt.budget);
  std::vector<DirectedCycle> cycles;
  for (auto& c : raw_cycles(g, opt.max_len, guard))
    if (c[1] < c.back()) cycles.emplace_back(std::move(c));
  if (guard.stopped()) {
    ExactCoverResult r;
    r.nodes = guard.count();
    r.timed_out = guard.timed_out();
    return r;
  }
  const auto order = search_order<DirectedCycle>(cycles, opt.seed, [](const DirectedCycle&) { return std::size_t{0}; });
  ExactCoverProblem p;
  p.columns = g.size();
  p.need.assign(static_cast<std::size_t>(g.size()), 2);
  p.allow_repeat = true;
  std::vector<const DirectedCycle*> row_cycle;
  for (std::size_t i : order) {
    p.rows.push_back(edge_row(g, cycles[i]));
    row_cycle.push_back(&cycles[i]);
  }
  ExactCoverSolver solver(p);
  std::vector<DirectedCycle> cdc;
  ExactCoverResult r = solver.for_each(std::nullopt, remaining(opt.budget, guard.count(), start), [&](const std::vector<int>& rows) {
    cdc.clear();
    for (int r : rows) cdc.push_back(*row_cycle[static_cast<std::size_t>(r)]);
    return visit(cdc);
  });
  r.nodes += guard.count();
  return r;
}

UnorientableOutcome find_unorientable_cdc(const Graph& g, const SearchOptions& opt) {
  UnorientableOutcome out;
  const ExactCoverResult r = for_each_cdc(g, opt, [&](const std::vector<DirectedCycle>& cdc) {
    ++out.cdcs_examined;
    OrientOutcome o = orient_cdc(g, cdc);
    if (o.feasible) return true;
    out.cdc = cdc;
    out.witness = std::move(o.witness);
    return false;
  });
  out.status = r.status;
  out.nodes_expanded = r.nodes;
  return out;
}

std::vector<FilterViolation> counterexample_filter(const Graph& g) {
  std::vector<FilterViolation> out;
  const int n = g.order();
  if (g.is_complete() && (n == 4 || n == 6))
    out.push_back({"conjecture_exception", "K" + std::to_string(n) + " is a listed exception with no SOCDC"});
  const bool connected = n > 0 && is_connected(g);
  if (!connected || !is_k_connected(g, 2)) {
    out.push_back({"not_2_connected", connected ? "has a cut vertex" : "disconnected"});
  }
  if (n > 0 && g.min_degree() < 3) out.push_back({"min_degree_below_3", "minimum degree " + std::to_string(g.min_degree())});
  if (connected) {
    if (!is_k_connected(g, 3)) {
      const auto cut = vertex_connectivity_at_most(g, 2);
      std::string detail = "vertex cut";
      if (cut)
        for (Vertex v : *cut) detail += " " + std::to_string(v);
      out.push_back({"not_3_connected", detail});
    }
    if (!is_k_edge_connected(g, 3)) out.push_back({"not_3_edge_connected", "an edge cut of size at most 2 exists"});
    const auto cuts = nontrivial_3_edge_cuts(g);
    if (!cuts.empty()) {
      std::string detail;
      for (const Edge& e : cuts.front().edges) detail += (detail.empty() ? "" : " ") + to_string(e);
      out.push_back({"nontrivial_3_edge_cut", std::to_string(cuts.size()) + " cut(s), first: " + detail});
    }
  }
  return out;
}

}  // namespace ocdc
