#include "ocdc/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ocdc/certificate_io.hpp"
#include "ocdc/compose.hpp"
#include "ocdc/constructors.hpp"
#include "ocdc/embedding.hpp"
#include "ocdc/error.hpp"
#include "ocdc/families.hpp"
#include "ocdc/graph6.hpp"
#include "ocdc/products.hpp"
#include "ocdc/search.hpp"
#include "ocdc/structure.hpp"

namespace ocdc::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::string out_path;

  std::string read(const std::string& path) const {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    return std::string(std::istreambuf_iterator<char>(f), {});
  }

  void write(const std::string& text) const {
    if (out_path.empty()) {
      out << text << '\n';
      return;
    }
    std::ofstream f(out_path);
    if (!f || !(f << text << '\n')) throw UsageError("cannot write " + out_path);
  }
};

struct GraphSource {
  std::string graph6;
  std::string family;

  void add(CLI::App* app) {
    app->add_option("--graph", graph6, "graph6 string");
    app->add_option("--family", family, "family spec such as complete:6 or cartesian:petersen,path:3");
  }
  bool given() const { return !graph6.empty() || !family.empty(); }
  Graph get() const {
    if (!graph6.empty()) return parse_graph6(graph6);
    if (!family.empty()) return generate(family);
    throw UsageError("give --graph or --family");
  }
};

struct BudgetFlags {
  std::uint64_t nodes = SearchBudget{}.node_limit;
  long time_ms = 0;
  int threads = 1;
  std::optional<std::uint64_t> seed;
  std::optional<int> max_len;

  void add(CLI::App* app) {
    app->add_option("--node-budget", nodes, "search node limit")->check(CLI::PositiveNumber);
    app->add_option("--time-budget", time_ms, "wall-clock limit in milliseconds (0 = none)")->check(CLI::NonNegativeNumber);
    app->add_option("--threads", threads, "search workers")->check(CLI::PositiveNumber);
    app->add_option("--seed", seed, "shuffle candidate order reproducibly");
    app->add_option("--max-len", max_len, "cycle length cap")->check(CLI::PositiveNumber);
  }
  SearchOptions options() const {
    SearchOptions o;
    o.budget.node_limit = nodes;
    o.budget.time_limit = std::chrono::milliseconds(time_ms);
    o.budget.threads = threads;
    o.seed = seed;
    o.max_len = max_len;
    return o;
  }
};

std::vector<int> int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string("bad integer list for ") + what + ": " + text);
    }
  }
  return out;
}

// A certificate file, or a search result that carries one.
CoverCertificate load_certificate(const Io& io, const std::string& path) {
  const std::string text = io.read(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what(), e.byte);
  }
  if (j.is_object() && j.contains("certificate")) {
    if (j["certificate"].is_null()) throw UsageError(path + " holds a search result without a certificate");
    return certificate_from_json(j["certificate"]);
  }
  return certificate_from_json(j);
}

json budget_json(const SearchBudget& b) {
  return {{"node_limit", b.node_limit}, {"time_limit_ms", b.time_limit.count()}, {"threads", b.threads}};
}

json outcome_json(const std::string& command, const Graph& g, const SearchOutcome& o) {
  return {{"command", command},
          {"graph", emit_graph6(g)},
          {"status", to_string(o.status)},
          {"lower_bound", o.lower_bound},
          {"nodes_expanded", o.nodes_expanded},
          {"timed_out", o.timed_out},
          {"budget", budget_json(o.budget)},
          {"certificate", o.certificate ? certificate_to_json(*o.certificate) : json(nullptr)}};
}

int status_exit(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return kOk;
    case SearchStatus::NoneExists: return kNegative;
    case SearchStatus::Unresolved: return kUnresolved;
  }
  return kUsage;
}

// ---- gen -------------------------------------------------------------------

int cmd_gen(const Io& io, const std::string& family, const std::string& format) {
  const Graph g = generate(family);
  if (format == "g6") {
    io.write(emit_graph6(g));
  } else {
    std::ostringstream s;
    s << g.order() << ' ' << g.size() << '\n';
    for (const Edge& e : g.edges()) s << e.u << ' ' << e.v << '\n';
    std::string text = s.str();
    text.pop_back();
    io.write(text);
  }
  return kOk;
}

// ---- build -----------------------------------------------------------------

std::optional<std::string> planar_name(const FamilySpec& f) {
  auto arg = [&](std::size_t i) -> std::optional<int> {
    if (f.args.size() <= i || !std::holds_alternative<int>(f.args[i])) return std::nullopt;
    return std::get<int>(f.args[i]);
  };
  if (f.name == "hypercube" && arg(0) == 3) return "cube";
  if (f.name == "complete" && arg(0) == 4) return "k4";
  if ((f.name == "cycle" || f.name == "wheel" || f.name == "prism") && arg(0)) return f.name + ":" + std::to_string(*arg(0));
  return std::nullopt;
}

int cmd_build(const Io& io, std::ostream& err, const std::string& family, const std::string& method, const SearchOptions& opt) {
  const FamilySpec spec = parse_family(family);
  auto ints = [&] {
    std::vector<int> v;
    for (const auto& a : spec.args)
      if (std::holds_alternative<int>(a)) v.push_back(std::get<int>(a));
    return v;
  };
  std::optional<CoverCertificate> cert;
  auto planar = [&](const std::string& name) {
    const PlanarFixture fx = planar_fixture(name);
    PlanarCover pc = socdc_planar(fx.graph, fx.rotation);
    if (pc.bound_violation) err << "note: |E| >= 2|V| - 2, the face cover need not be small\n";
    if (pc.split) err << "note: face walks were split at repeated vertices\n";
    return std::move(pc.certificate);
  };
  if (method == "planar") {
    const auto name = planar_name(spec);
    if (!name) throw UsageError("no shipped planar embedding for " + family);
    cert = planar(*name);
  } else if (method == "cubic") {
    cert = ocdc_cubic_class1(generate(spec), std::nullopt, opt).certificate;
  } else if (spec.name == "complete") {
    const int n = ints().at(0);
    if (n == 4) cert = ocdc_k4();
    else if (n == 6) cert = ocdc_k6();
    else if (n % 2 == 1) cert = socdc_complete_odd(n);
    else cert = socdc_complete_even(n, opt);
  } else if (spec.name == "complete_bipartite" || spec.name == "bipartite") {
    const auto v = ints();
    cert = socdc_complete_bipartite(v.at(0), v.at(1));
  } else if (auto name = planar_name(spec)) {
    cert = planar(*name);
  } else {
    const Graph g = generate(spec);
    if (!g.is_regular(3)) throw UsageError("no constructor for " + family + "; use search");
    cert = ocdc_cubic_class1(g, std::nullopt, opt).certificate;
  }
  io.write(certificate_to_json(*cert).dump(2));
  return kOk;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const Io& io, const std::string& path, const GraphSource& src, const std::string& kind) {
  CoverCertificate c = load_certificate(io, path);
  if (src.given()) c.host = src.get();
  if (!kind.empty()) c.kind = cover_kind_from_string(kind);
  const VerifyReport r = verify(c);
  json j = report_to_json(r);
  j["kind"] = to_string(c.kind);
  j["graph"] = emit_graph6(c.host);
  if (uses_cycles(c.kind)) j["size_flag"] = r.small ? "small" : "not small";
  io.write(j.dump(2));
  return r.ok ? kOk : kNegative;
}

// ---- compose ---------------------------------------------------------------

struct ComposeArgs {
  std::vector<std::string> certs;
  std::string map1, map2, labels, u, v, edge;
  Vertex v1 = -1, v2 = -1, apex = -1;
  int n = 0;
  std::string mode = "shared_edge", table, pattern = "distinct", factor;
};

int cmd_compose(const Io& io, std::ostream& err, const std::string& op, const ComposeArgs& a, const SearchOptions& opt) {
  std::vector<CoverCertificate> c;
  for (const auto& p : a.certs) c.push_back(load_certificate(io, p));
  auto need_certs = [&](std::size_t k) {
    if (c.size() != k) throw UsageError("compose " + op + " needs " + std::to_string(k) + " --cert");
  };
  auto spec = [&] { return MergeSpec{int_list(a.map1, "--map1"), int_list(a.map2, "--map2")}; };
  std::optional<CoverCertificate> result;
  if (op == "cutvertex") {
    need_certs(2);
    result = merge_at_cutvertex(c[0], c[1], spec());
  } else if (op == "subdivide") {
    need_certs(1);
    const auto e = int_list(a.edge, "--edge");
    if (e.size() != 2) throw UsageError("--edge takes u,v");
    result = subdivide(c[0], Edge(e[0], e[1]));
  } else if (op == "twocut") {
    need_certs(2);
    if (a.mode != "shared_edge" && a.mode != "no_edge") throw UsageError("--mode is shared_edge or no_edge");
    result = merge_2cut(c[0], c[1], spec(), a.v1, a.v2, a.mode == "shared_edge" ? TwoCutMode::SharedEdge : TwoCutMode::NoEdge);
  } else if (op == "special") {
    static const std::map<std::string, SpecialTwoCut> tables = {{"K4K4", SpecialTwoCut::K4K4},
                                                                {"K4K6", SpecialTwoCut::K4K6},
                                                                {"K6K6", SpecialTwoCut::K6K6},
                                                                {"K4Edge", SpecialTwoCut::K4Edge},
                                                                {"K6Edge", SpecialTwoCut::K6Edge}};
    const auto it = tables.find(a.table);
    if (it == tables.end()) throw UsageError("--table is one of K4K4, K4K6, K6K6, K4Edge, K6Edge");
    const auto labels = int_list(a.labels, "--labels");
    if (c.empty()) {
      result = merge_2cut_special(it->second, labels);
    } else {
      need_certs(1);
      const auto map = int_list(a.map2, "--map2");
      result = merge_2cut_special(it->second, labels, &c[0], &map);
    }
  } else if (op == "threecut") {
    need_certs(2);
    static const std::map<std::string, ThreeCutPattern> patterns = {{"distinct", ThreeCutPattern::DistinctEndpoints},
                                                                    {"shared_tail", ThreeCutPattern::SharedTail},
                                                                    {"shared_both", ThreeCutPattern::SharedBoth}};
    const auto it = patterns.find(a.pattern);
    if (it == patterns.end()) throw UsageError("--pattern is distinct, shared_tail or shared_both");
    result = merge_3edgecut(c[0], c[1], spec(), it->second, int_list(a.u, "--u"), int_list(a.v, "--v"));
  } else if (op == "join") {
    need_certs(1);
    result = join_apex(c[0]);
  } else if (op == "strip") {
    need_certs(1);
    result = strip_apex(c[0], a.apex);
  } else if (op == "prism") {
    need_certs(1);
    result = prism_p2(c[0]);
  } else if (op == "product") {
    need_certs(1);
    FlaggedCover f = product_cycle_large(c[0], a.n);
    if (f.bound_violation) err << "note: n < 2|V(G)| + 1, the cover carries no size guarantee\n";
    result = std::move(f.certificate);
  } else if (op == "lift") {
    if (c.empty() || c.size() > 2) throw UsageError("compose lift takes one or two --cert (OPPDC and/or SOCDC)");
    if (a.factor.empty()) throw UsageError("compose lift needs --factor");
    LiftInputs in;
    for (auto& x : c) (uses_cycles(x.kind) ? in.socdc : in.oppdc) = x;
    const Graph factor = generate(a.factor);
    const SearchOutcome o = product_lift(in, factor, opt);
    io.write(outcome_json("compose lift", cartesian_product(c[0].host, factor), o).dump(2));
    return status_exit(o.status);
  } else {
    throw UsageError("unknown compose operation " + op);
  }
  io.write(certificate_to_json(*result).dump(2));
  return kOk;
}

// ---- search ----------------------------------------------------------------

int cmd_search(const Io& io, std::ostream& err, bool verbose, const std::string& what, const Graph& g, std::optional<int> max_count,
               const SearchOptions& opt) {
  const std::string command = "search " + what;
  if (what == "filter") {
    const auto v = counterexample_filter(g);
    json list = json::array();
    for (const auto& x : v) list.push_back({{"condition", x.condition}, {"detail", x.detail}});
    io.write(json{{"command", command}, {"graph", emit_graph6(g)}, {"candidate", v.empty()}, {"violations", list}}.dump(2));
    return kOk;
  }
  if (what == "unorientable-cdc") {
    const UnorientableOutcome u = find_unorientable_cdc(g, opt);
    json cdc = json::array(), witness = json::array();
    for (const auto& c : u.cdc) cdc.push_back(c.vertices());
    for (const auto& s : u.witness) witness.push_back({{"cycle", s.cycle}, {"edge", {s.edge.u, s.edge.v}}, {"parity", s.parity}});
    io.write(json{{"command", command},
                  {"graph", emit_graph6(g)},
                  {"status", to_string(u.status)},
                  {"cdc", cdc},
                  {"witness", witness},
                  {"cdcs_examined", u.cdcs_examined},
                  {"nodes_expanded", u.nodes_expanded}}
                 .dump(2));
    return status_exit(u.status);
  }
  SearchOutcome o;
  if (what == "socdc") o = find_socdc(g, opt);
  else if (what == "ocdc-min") o = min_ocdc(g, max_count.value_or(g.arc_count()), opt);
  else if (what == "ocdc") o = find_ocdc(g, max_count, opt);
  else if (what == "oppdc") o = find_oppdc(g, opt);
  else if (what == "oppdc-apex") o = find_oppdc_via_apex(g, opt);
  else if (what == "oppdc-seq") o = find_oppdc_sequential(g, opt);
  else throw UsageError("unknown search " + what);
  if (verbose)
    err << command << ": " << to_string(o.status) << " after " << o.nodes_expanded << " nodes, lower bound " << o.lower_bound
        << (o.timed_out ? ", timed out" : "") << '\n';
  io.write(outcome_json(command, g, o).dump(2));
  return status_exit(o.status);
}

// ---- analyze ---------------------------------------------------------------

std::string yes(bool b) { return b ? "yes" : "no"; }

int cmd_analyze(const Io& io, const Graph& g) {
  std::ostringstream s;
  s << "graph: " << emit_graph6(g) << " (n=" << g.order() << ", m=" << g.size() << ")\n";
  const bool connected = g.order() > 0 && is_connected(g);
  s << "bridgeless: " << yes(is_bridgeless(g)) << '\n';
  s << "connected: " << yes(connected);
  if (connected)
    s << ", 2-connected: " << yes(is_k_connected(g, 2)) << ", 3-connected: " << yes(is_k_connected(g, 3))
      << ", 3-edge-connected: " << yes(is_k_edge_connected(g, 3));
  s << '\n';
  if (connected) {
    const auto cuts = cut_vertices(g);
    s << "cut vertices:";
    if (cuts.empty()) s << " none";
    for (Vertex v : cuts) s << ' ' << v;
    s << '\n';
    const auto bd = blocks(g);
    s << "blocks: " << bd.blocks.size() << '\n';
    const auto three = nontrivial_3_edge_cuts(g);
    s << "nontrivial 3-edge cuts: " << three.size();
    for (const auto& c : three) {
      s << "\n  {";
      for (std::size_t i = 0; i < c.edges.size(); ++i) s << (i ? ", " : "") << to_string(c.edges[i]);
      s << '}';
    }
    s << '\n';
  }
  const GirthAndDegree gd = girth_and_average_degree(g);
  s << "girth: " << (gd.girth ? std::to_string(*gd.girth) : "infinite") << ", average degree: " << to_string(gd.average_degree)
    << '\n';
  if (gd.girth && Rational(*gd.girth, 1) > gd.average_degree) s << "girth > average degree: any OCDC is small\n";
  if (g.order() > 0 && g.is_regular(3)) s << "cubic: every CDC has at most n/2 + 2 = " << g.order() / 2 + 2 << " cycles\n";
  if (g.is_complete() && (g.order() == 4 || g.order() == 6)) s << "conjecture exception: K" << g.order() << " has no SOCDC\n";
  const auto v = counterexample_filter(g);
  if (v.empty()) {
    s << "counterexample filter: candidate (passes every condition)";
  } else {
    s << "counterexample filter: fails";
    for (const auto& x : v) s << "\n  " << x.condition << ": " << x.detail;
  }
  io.write(s.str());
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Build, compose, search and verify oriented cycle double covers.", "ocdc"};
  app.require_subcommand(1);
  app.fallthrough();
  Io io{in, out, {}};
  app.add_option("--out", io.out_path, "write the result to a file");
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "search statistics on stderr");

  BudgetFlags budget;
  GraphSource src;
  std::optional<int> max_count;

  auto* gen = app.add_subcommand("gen", "print a generated graph");
  std::string family, format = "g6";
  gen->add_option("family", family, "family spec")->required();
  gen->add_option("--format", format, "g6 or edges")->check(CLI::IsMember({"g6", "edges"}));

  auto* build = app.add_subcommand("build", "closed-form covers");
  std::string method = "auto";
  build->add_option("family", family, "family spec")->required();
  build->add_option("--method", method, "auto, planar or cubic")->check(CLI::IsMember({"auto", "planar", "cubic"}));
  budget.add(build);

  auto* ver = app.add_subcommand("verify", "check a certificate");
  std::string cert_path = "-", kind;
  ver->add_option("cert,--cert", cert_path, "certificate file, - for stdin (default)");
  ver->add_option("--kind", kind, "override the certificate kind");
  src.add(ver);

  auto* comp = app.add_subcommand("compose", "surgeries on certificates");
  std::string op;
  ComposeArgs ca;
  comp->add_option("op", op, "cutvertex|subdivide|twocut|special|threecut|join|strip|prism|product|lift")->required();
  comp->add_option("--cert", ca.certs, "input certificate (repeatable)");
  comp->add_option("--map1", ca.map1, "piece 1 vertex map, comma separated (-1 = contracted)");
  comp->add_option("--map2", ca.map2, "piece 2 vertex map");
  comp->add_option("--v1", ca.v1, "2-cut vertex");
  comp->add_option("--v2", ca.v2, "2-cut vertex");
  comp->add_option("--mode", ca.mode, "shared_edge or no_edge");
  comp->add_option("--table", ca.table, "K4K4, K4K6, K6K6, K4Edge or K6Edge");
  comp->add_option("--labels", ca.labels, "whole-graph ids of v1, v2, ...");
  comp->add_option("--pattern", ca.pattern, "distinct, shared_tail or shared_both");
  comp->add_option("--u", ca.u, "side-1 cut endpoints");
  comp->add_option("--v", ca.v, "side-2 cut endpoints");
  comp->add_option("--edge", ca.edge, "u,v");
  comp->add_option("--apex", ca.apex, "apex vertex");
  comp->add_option("--n", ca.n, "cycle length");
  comp->add_option("--factor", ca.factor, "family spec of the product factor");
  budget.add(comp);

  auto* srch = app.add_subcommand("search", "exact-cover searches");
  std::string what;
  srch->add_option("what", what, "socdc|ocdc-min|ocdc|oppdc|oppdc-apex|oppdc-seq|unorientable-cdc|filter")
      ->required()
      ->check(CLI::IsMember({"socdc", "ocdc-min", "ocdc", "oppdc", "oppdc-apex", "oppdc-seq", "unorientable-cdc", "filter"}));
  srch->add_option("--max-count", max_count, "cycle count bound")->check(CLI::NonNegativeNumber);
  src.add(srch);
  budget.add(srch);

  auto* ana = app.add_subcommand("analyze", "structural report");
  src.add(ana);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return kUsage;
  }

  try {
    if (*gen) return cmd_gen(io, family, format);
    if (*build) return cmd_build(io, err, family, method, budget.options());
    if (*ver) return cmd_verify(io, cert_path, src, kind);
    if (*comp) return cmd_compose(io, err, op, ca, budget.options());
    if (*srch) return cmd_search(io, err, verbose, what, src.get(), max_count, budget.options());
    if (*ana) return cmd_analyze(io, src.get());
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NoSocdcExists& e) {
    err << "no SOCDC: " << e.what() << '\n';
    return kNegative;
  } catch (const CertificateInconsistency& e) {
    err << "inconsistent certificate: " << e.what() << '\n';
    return kNegative;
  } catch (const Unresolved& e) {
    err << "unresolved: " << e.what() << '\n';
    return kUnresolved;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace ocdc::cli
