#include "ocdc/families.hpp"

#include <cctype>
#include <charconv>
#include <map>

#include "ocdc/error.hpp"
#include "ocdc/graph6.hpp"

namespace ocdc {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

Graph complete_graph(int n) {
  require(n >= 1, "complete(n) needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph complete_bipartite_graph(int n, int m) {
  require(n >= 1 && m >= 1, "complete_bipartite(n,m) needs n, m >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) edges.emplace_back(i, n + j);
  return Graph(n + m, edges);
}

Graph path_graph(int n) {
  require(n >= 1, "path(n) needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle(n) needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph hypercube_graph(int d) {
  require(d >= 1 && d <= 16, "hypercube(d) needs 1 <= d <= 16");
  const int n = 1 << d;
  std::vector<Edge> edges;
  for (int x = 0; x < n; ++x)
    for (int b = 0; b < d; ++b)
      if (int y = x ^ (1 << b); x < y) edges.emplace_back(x, y);
  return Graph(n, edges);
}

Graph generalized_petersen_graph(int n, int k) {
  require(n >= 3 && k >= 1 && 2 * k < n, "generalized_petersen(n,k) needs n >= 3 and 1 <= k < n/2");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(n + i, n + (i + k) % n);
    edges.emplace_back(i, n + i);
  }
  return Graph(2 * n, edges);
}

Graph petersen_graph() { return generalized_petersen_graph(5, 2); }
Graph mobius_kantor_graph() { return generalized_petersen_graph(8, 3); }

Graph k4_chain_graph(int r) {
  require(r >= 1, "k4_chain(r) needs r >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < r; ++i) {
    const int b = 3 * i;
    for (int u = b; u < b + 4; ++u)
      for (int v = u + 1; v < b + 4; ++v) edges.emplace_back(u, v);
  }
  return Graph(3 * r + 1, edges);
}

Graph join_graphs(const Graph& g, const Graph& h) {
  const int off = g.order();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (const Edge& e : h.edges()) edges.emplace_back(e.u + off, e.v + off);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) edges.emplace_back(u, v + off);
  return Graph(g.order() + h.order(), edges);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int nh = h.order();
  std::vector<Edge> edges;
  for (int u = 0; u < g.order(); ++u)
    for (const Edge& e : h.edges()) edges.emplace_back(u * nh + e.u, u * nh + e.v);
  for (const Edge& e : g.edges())
    for (int v = 0; v < nh; ++v) edges.emplace_back(e.u * nh + v, e.v * nh + v);
  return Graph(g.order() * nh, edges);
}

Graph wheel_graph(int n) {
  require(n >= 3, "wheel(n) needs n >= 3 rim vertices");
  return join_graphs(cycle_graph(n), complete_graph(1));
}

Graph prism_graph(int n) { return cartesian_product(cycle_graph(n), path_graph(2)); }

namespace {

struct Arity {
  int ints;
  int families;
};

const std::map<std::string, Arity, std::less<>>& arities() {
  static const std::map<std::string, Arity, std::less<>> table = {
      {"complete", {1, 0}},  {"complete_bipartite", {2, 0}}, {"bipartite", {2, 0}},
      {"path", {1, 0}},      {"cycle", {1, 0}},              {"hypercube", {1, 0}},
      {"petersen", {0, 0}},  {"mobius_kantor", {0, 0}},      {"generalized_petersen", {2, 0}},
      {"k4_chain", {1, 0}},  {"join", {0, 2}},               {"cartesian", {0, 2}},
      {"wheel", {1, 0}},     {"prism", {1, 0}},
  };
  return table;
}

class FamilyParser {
 public:
  explicit FamilyParser(std::string_view text) : text_(text) {}

  FamilySpec parse_all() {
    FamilySpec spec = parse_one();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("family spec \"" + std::string(text_) + "\": " + what, pos_);
  }

  bool eat(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a family name");
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer() {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc()) fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  FamilySpec parse_one() {
    FamilySpec spec;
    spec.name = name();
    if (spec.name == "g6") {
      if (!eat(':')) fail("g6 needs a graph6 literal");
      const std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != ',') ++pos_;
      spec.literal = std::string(text_.substr(start, pos_ - start));
      return spec;
    }
    auto it = arities().find(spec.name);
    if (it == arities().end()) fail("unknown family '" + spec.name + "'");
    const Arity arity = it->second;
    const int total = arity.ints + arity.families;
    if (total == 0) return spec;
    if (!eat(':')) fail("family '" + spec.name + "' needs arguments");
    for (int i = 0; i < total; ++i) {
      if (i > 0 && !eat(',')) fail("expected ','");
      if (i < arity.ints)
        spec.args.emplace_back(integer());
      else
        spec.args.emplace_back(parse_one());
    }
    return spec;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FamilySpec parse_family(std::string_view text) { return FamilyParser(text).parse_all(); }

std::string to_string(const FamilySpec& spec) {
  if (spec.name == "g6") return "g6:" + spec.literal;
  std::string out = spec.name;
  for (std::size_t i = 0; i < spec.args.size(); ++i) {
    out += (i == 0) ? ":" : ",";
    if (const int* v = std::get_if<int>(&spec.args[i]))
      out += std::to_string(*v);
    else
      out += to_string(std::get<FamilySpec>(spec.args[i]));
  }
  return out;
}

Graph generate(const FamilySpec& spec) {
  auto num = [&](std::size_t i) { return std::get<int>(spec.args.at(i)); };
  auto sub = [&](std::size_t i) { return generate(std::get<FamilySpec>(spec.args.at(i))); };
  const std::string& f = spec.name;
  if (f == "g6") return parse_graph6(spec.literal);
  if (f == "complete") return complete_graph(num(0));
  if (f == "complete_bipartite" || f == "bipartite") return complete_bipartite_graph(num(0), num(1));
  if (f == "path") return path_graph(num(0));
  if (f == "cycle") return cycle_graph(num(0));
  if (f == "hypercube") return hypercube_graph(num(0));
  if (f == "petersen") return petersen_graph();
  if (f == "mobius_kantor") return mobius_kantor_graph();
  if (f == "generalized_petersen") return generalized_petersen_graph(num(0), num(1));
  if (f == "k4_chain") return k4_chain_graph(num(0));
  if (f == "join") return join_graphs(sub(0), sub(1));
  if (f == "cartesian") return cartesian_product(sub(0), sub(1));
  if (f == "wheel") return wheel_graph(num(0));
  if (f == "prism") return prism_graph(num(0));
  throw DomainError("unknown family '" + f + "'");
}

Graph generate(std::string_view text) { return generate(parse_family(text)); }

}  // namespace ocdc
