#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ikg/canon.hpp"
#include "ikg/comparability.hpp"
#include "ikg/constructions.hpp"
#include "ikg/fixtures.hpp"
#include "ikg/graph6.hpp"
#include "ikg/harness.hpp"
#include "ikg/recognition.hpp"
#include "ikg/render.hpp"

namespace fs = std::filesystem;
using namespace ikg;

namespace {

struct Common {
  std::string input;  // empty or "-" = stdin
  std::string format = "graph6";
  int n = 6;
  int k = kAnyK;
  std::string svg_dir;
  int jobs = 1;
  bool deterministic = false;
  std::size_t limit = kDefaultOrientationLimit;
  std::string jsonl;
};

// Runs `body` on the input stream named by opts.input.
template <typename F>
auto with_input(const Common& opts, F body) {
  if (opts.input.empty() || opts.input == "-") return body(std::cin);
  std::ifstream file(opts.input);
  if (!file) throw Error("cannot open " + opts.input);
  return body(file);
}

std::vector<Graph> read_graphs(const Common& opts) {
  return with_input(opts, [](std::istream& in) { return read_graph6_stream(in); });
}

Poset read_poset(const Common& opts) {
  return with_input(opts, [](std::istream& in) { return parse_poset(in); });
}

void write_file(const std::string& dir, const std::string& name, const std::string& text) {
  if (dir.empty()) return;
  fs::create_directories(dir);
  std::ofstream(fs::path(dir) / name) << text;
}

void emit_jsonl(const Common& opts, const SweepReport& report) {
  if (opts.jsonl.empty()) return;
  if (opts.jsonl == "-") {
    std::cout << report.to_jsonl();
    return;
  }
  std::ofstream(opts.jsonl) << report.to_jsonl();
}

std::string labeling_text(const Poset& p, const Labeling& lab) {
  std::string s;
  for (int v : lab) s += (s.empty() ? "" : " ") + p.name(v);
  return s;
}

std::string cover_text(const Poset& p, const ChainCover& cover) {
  std::string s;
  for (const auto& chain : cover.chains) {
    s += s.empty() ? "{" : " {";
    for (std::size_t i = 0; i < chain.size(); ++i) s += (i ? "," : "") + p.name(chain[i]);
    s += "}";
  }
  return s;
}

std::string rational_list(const std::vector<Rational>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : " ") + to_string(x);
  return s;
}

// --- recognize -------------------------------------------------------------

RecognitionVerdict recognize_one(const Graph& g, const std::string& cls, const Common& opts) {
  if (cls == "interval-graph") return is_interval_graph(g);
  if (cls == "ikg") return is_interval_k_graph(g, opts.k);
  if (cls == "proper-ikg") return is_proper_interval_k_graph(g, opts.k);
  if (cls == "thm43") return thm43_recognize(g, opts.limit);
  if (cls == "cocomp") {
    if (opts.k == kAnyK) return is_cocomparability_interval_k(g);
    auto poset = is_cocomparability(g);
    if (!poset) return is_cocomparability_interval_k(g);
    auto v = is_interval_k_graph(g, opts.k);
    if (v.is_member) v.order = std::move(poset);
    return v;
  }
  auto v = class_proper_verdict(g, opts.limit);
  if (v.is_member && opts.k != kAnyK && v.witness->k > opts.k) {
    // The pipeline uses a minimum chain cover, so its class count is least possible.
    RecognitionVerdict no;
    no.certificate = "needs " + std::to_string(v.witness->k) + " classes";
    return no;
  }
  return v;
}

int cmd_recognize(const Common& opts, const std::string& cls, const std::string& witness_dir) {
  int status = 0;
  int index = 0;
  for (const auto& g : read_graphs(opts)) {
    const std::string g6 = write_graph6(g);
    std::cout << g6 << ' ' << cls;
    try {
      const auto v = recognize_one(g, cls, opts);
      if (v.incomplete) {
        status = std::max(status, 3);
        std::cout << " incomplete";
      } else {
        std::cout << (v.is_member ? " yes" : " no");
      }
      if (v.witness) std::cout << " k=" << v.witness->k;
      if (v.certificate) std::cout << " # " << *v.certificate;
      std::cout << '\n';
      const std::string stem = std::to_string(index);
      if (v.witness) {
        write_file(witness_dir, stem + ".rep", write_interval_rep(*v.witness));
        write_file(opts.svg_dir, stem + ".svg", render_intervals(*v.witness, RenderFormat::svg));
      }
      if (v.order) write_file(witness_dir, stem + ".poset", write_poset(*v.order));
    } catch (const TheoremViolation& e) {
      std::cout << " violation # " << e.what() << '\n';
      status = std::max(status, 2);
    } catch (const Error& e) {
      std::cout << " error # " << e.what() << '\n';
      status = std::max(status, 1);
    }
    ++index;
  }
  return status;
}

// --- construct -------------------------------------------------------------

std::optional<Statement5Ordering> any_statement5_ordering(const Graph& g) {
  for (const auto& partition : independent_partitions(g, 2, false))
    if (auto ord = find_statement5_ordering(g, partition)) return ord;
  return std::nullopt;
}

void print_ordering(const Graph& g, const Statement5Ordering& ord) {
  std::cout << "ordering";
  for (int v : ord.order) std::cout << ' ' << g.name(v) << '/' << ord.partite.class_of(v);
  std::cout << '\n';
}

int construct_graph(const Common& opts, const Graph& g, const std::string& kind, const std::string& stem) {
  if (kind == "class-proper" || kind == "function") {
    const auto build = build_class_proper_rep(g, opts.limit);
    if (build.status == ClassProperBuild::Status::truncated) {
      std::cout << "incomplete after " << build.orientations_tried << " orientations\n";
      return 3;
    }
    if (!build.found()) {
      std::cout << "none\n";
      return 1;
    }
    std::cout << "labeling " << labeling_text(build.poset, build.labeling) << '\n'
              << "cover " << cover_text(build.poset, build.cover) << '\n';
    if (kind == "class-proper") {
      std::cout << write_interval_rep(build.rep);
      write_file(opts.svg_dir, stem + ".svg", render_intervals(build.rep, RenderFormat::svg));
      return 0;
    }
    auto rep = build.rep;
    rep.k = std::max(rep.k, 3);  // the curve construction needs three classes, empty ones are allowed
    const auto curves = function_rep_from_class_proper(rep);
    for (int v = 0; v < curves.size(); ++v) std::cout << g.name(v) << ": " << rational_list(curves.abscissae[v]) << '\n';
    write_file(opts.svg_dir, stem + ".svg", render_curves(curves));
    return function_realizes(curves, g) ? 0 : 2;
  }
  if (!is_bipartite(g)) {
    std::cout << "none # not bipartite\n";
    return 1;
  }
  const auto ord = any_statement5_ordering(g);
  if (!ord) {
    std::cout << "none # no ordering for any bipartition\n";
    return 1;
  }
  print_ordering(g, *ord);
  if (kind == "ordering") {
    if (is_connected(g)) {
      const auto pair = dominating_pair(g, *ord);
      std::cout << "dominating pair " << g.name(pair.first) << ' ' << g.name(pair.last) << " path";
      for (int v : pair.path) std::cout << ' ' << g.name(v);
      std::cout << '\n';
    }
    return 0;
  }
  const auto unit = unit_bigraph_from_ordering(g, *ord);
  if (kind == "unit") {
    std::cout << write_interval_rep(unit);
    write_file(opts.svg_dir, stem + ".svg", render_intervals(unit, RenderFormat::svg));
    return 0;
  }
  const auto perm = permutation_from_class_proper_2(unit);
  std::cout << "top " << rational_list(perm.top) << '\n' << "bottom " << rational_list(perm.bottom) << '\n';
  return permutation_realizes(perm, g) ? 0 : 2;
}

int construct_poset(const Common& opts) {
  const Poset p = read_poset(opts);
  const auto lab = cor41_labeling(p);
  if (!lab) {
    std::cout << "none # no labeling\n";
    return 1;
  }
  const auto cover = minimum_chain_cover(p).cover;
  const auto repaired = repair_chain_cover(p, *lab, cover);
  const auto rep = intervals_from_labeled_poset(p, *lab, repaired);
  std::cout << "labeling " << labeling_text(p, *lab) << '\n'
            << "cover " << cover_text(p, cover) << '\n'
            << "repaired " << cover_text(p, repaired) << '\n'
            << write_interval_rep(rep);
  write_file(opts.svg_dir, "poset.svg", render_intervals(rep, RenderFormat::svg));
  return realizes(rep, incomparability_graph(p)).ok && is_class_proper(rep) ? 0 : 2;
}

int cmd_construct(const Common& opts, const std::string& kind) {
  if (opts.format == "poset") return construct_poset(opts);
  int status = 0;
  int index = 0;
  for (const auto& g : read_graphs(opts)) {
    std::cout << "graph " << write_graph6(g) << '\n';
    try {
      status = std::max(status, construct_graph(opts, g, kind, std::to_string(index++)));
    } catch (const TheoremViolation& e) {
      std::cout << "violation # " << e.what() << '\n';
      status = std::max(status, 2);
    }
  }
  return status;
}

// --- orient ----------------------------------------------------------------

int cmd_orient(const Common& opts, bool of_complement) {
  std::vector<Graph> graphs;
  if (opts.format == "poset") {
    graphs.push_back(comparability_graph(read_poset(opts)));
  } else {
    graphs = read_graphs(opts);
  }
  int status = 0;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const Graph host = of_complement ? complement(graphs[gi]) : graphs[gi];
    std::size_t count = 0;
    std::ostringstream lines;
    const auto result = visit_transitive_orientations(host, opts.limit, [&](const Orientation& o) {
      lines << "  ";
      for (auto [u, v] : o.arcs()) lines << ' ' << host.name(u) << '>' << host.name(v);
      lines << '\n';
      write_file(opts.svg_dir, std::to_string(gi) + "_" + std::to_string(count) + ".svg",
                 render_hasse(poset_from_orientation(o)));
      ++count;
      return true;
    });
    std::cout << write_graph6(graphs[gi]) << " orientations=" << result.visited
              << (result.truncated ? " truncated" : "") << '\n'
              << lines.str();
    if (result.truncated) status = 3;
  }
  return status;
}

// --- asteroid --------------------------------------------------------------

int cmd_asteroid(const Common& opts, int max_len) {
  for (const auto& g : read_graphs(opts)) {
    std::cout << write_graph6(g) << '\n';
    const auto cert = find_odd_asteroid(g, max_len > 0 ? max_len : g.order());
    if (cert) {
      std::cout << asteroid_to_text(g, *cert);
    } else {
      std::cout << "none\n";
    }
  }
  return 0;
}

// --- enumerate -------------------------------------------------------------

int cmd_enumerate(const Common& opts, bool check) {
  const auto graphs = enumerate_graphs(opts.n);
  for (const auto& g : graphs) std::cout << write_graph6(g) << '\n';
  if (!check) return 0;
  const auto orbits = count_graphs_by_orbits(opts.n);
  std::cerr << "enumerated " << graphs.size() << " orbit count " << orbits << '\n';
  return orbits == graphs.size() ? 0 : 2;
}

// --- sweeps ----------------------------------------------------------------

template <typename F>
SweepReport timed(const Common& opts, F run) {
  const auto start = std::chrono::steady_clock::now();
  auto report = run();
  if (!opts.deterministic) {
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    std::cerr << report.name << " n=" << report.n << " took " << took.count() << "s\n";
  }
  return report;
}

int cmd_suite(const Common& opts, bool no_poset_sweep) {
  SuiteOptions options;
  options.orientation_limit = opts.limit;
  options.poset_sweep = !no_poset_sweep;
  const auto report = timed(opts, [&] { return theorem_suite(opts.n, opts.jobs, options); });
  if (opts.jsonl != "-") std::cout << report.to_text();
  emit_jsonl(opts, report);
  return report.exit_code();
}

int cmd_conjecture(const Common& opts, bool from_input) {
  const auto graphs = from_input ? read_graphs(opts) : enumerate_graphs(opts.n);
  const int n = from_input ? -1 : opts.n;
  const auto report = timed(opts, [&] { return conjecture_check(graphs, n, opts.jobs); });
  if (opts.jsonl != "-") std::cout << report.to_text();
  emit_jsonl(opts, report);
  return report.exit_code();
}

// --- render ----------------------------------------------------------------

int cmd_render(const Common& opts, bool ascii) {
  const auto format = ascii ? RenderFormat::ascii : RenderFormat::svg;
  if (opts.format == "poset") {
    const auto p = read_poset(opts);
    std::cout << (ascii ? hasse_dot(p) : render_hasse(p));
    return 0;
  }
  if (opts.format == "graph6") {
    int status = 0;
    for (const auto& g : read_graphs(opts)) {
      const auto v = is_interval_k_graph(g, opts.k);
      if (v.witness) {
        std::cout << render_intervals(*v.witness, format);
      } else {
        std::cerr << write_graph6(g) << ": no interval model\n";
        status = 1;
      }
    }
    return status;
  }
  const auto rep = with_input(opts, [](std::istream& in) { return parse_interval_rep(in); });
  std::cout << render_intervals(rep, format);
  return 0;
}

// --- fixtures --------------------------------------------------------------

int cmd_fixtures(const Common& opts) {
  for (const auto& f : fixtures()) {
    std::cout << f.name << ": " << f.description;
    if (f.graph) std::cout << " graph6=" << write_graph6(*f.graph);
    std::cout << '\n';
    if (f.poset) write_file(opts.svg_dir, f.name + "_order.svg", render_hasse(*f.poset));
    if (f.graph && !opts.svg_dir.empty()) {
      if (const auto v = is_interval_k_graph(*f.graph, kAnyK); v.witness)
        write_file(opts.svg_dir, f.name + ".svg", render_intervals(*v.witness, RenderFormat::svg));
    }
  }
  bool all = true;
  for (const auto& c : verify_fixture_claims()) {
    std::cout << (c.holds ? "PASS " : "FAIL ") << c.fixture << ": " << c.claim;
    if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
    std::cout << '\n';
    all = all && c.holds;
  }
  return all ? 0 : 2;
}

void add_common(CLI::App* sub, Common& opts, bool input, bool sweep) {
  if (input) sub->add_option("-i,--input", opts.input, "input file (default stdin)");
  sub->add_option("--n", opts.n, "number of vertices")->check(CLI::Range(1, kMaxEnumerationOrder));
  sub->add_option("--k", opts.k, "class bound, 0 = any")->check(CLI::NonNegativeNumber);
  sub->add_option("--format", opts.format, "input format")->check(CLI::IsMember({"graph6", "poset", "rep"}));
  sub->add_option("--emit-svg", opts.svg_dir, "write SVG drawings into this directory");
  sub->add_option("--jobs", opts.jobs, "OpenMP threads")->check(CLI::PositiveNumber);
  sub->add_flag("--deterministic", opts.deterministic, "suppress timing output");
  sub->add_option("--limit-orientations", opts.limit, "cap on transitive orientations per graph");
  if (sweep) sub->add_option("--jsonl", opts.jsonl, "also write line-delimited records (- = stdout only)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"interval k-graph toolkit"};
  app.require_subcommand(1);
  Common opts;
  int status = 0;

  auto* recognize = app.add_subcommand("recognize", "classify graph6 records from the input");
  std::string cls = "ikg";
  std::string witness_dir;
  add_common(recognize, opts, true, false);
  recognize->add_option("--class", cls)->check(
      CLI::IsMember({"interval-graph", "ikg", "proper-ikg", "class-proper", "cocomp", "thm43"}));
  recognize->add_option("--witness-dir", witness_dir, "write representation and order files here");
  recognize->callback([&] { status = cmd_recognize(opts, cls, witness_dir); });

  auto* construct = app.add_subcommand("construct", "build representations");
  std::string kind = "class-proper";
  add_common(construct, opts, true, false);
  construct->add_option("--kind", kind, "graph6 input only")->check(
      CLI::IsMember({"class-proper", "function", "ordering", "unit", "permutation"}));
  construct->callback([&] { status = cmd_construct(opts, kind); });

  auto* orient = app.add_subcommand("orient", "list transitive orientations");
  bool of_complement = false;
  add_common(orient, opts, true, false);
  orient->add_flag("--complement", of_complement, "orient the complement instead");
  orient->callback([&] { status = cmd_orient(opts, of_complement); });

  auto* asteroid = app.add_subcommand("asteroid", "find an odd asteroid");
  int max_len = 0;
  add_common(asteroid, opts, true, false);
  asteroid->add_option("--max-len", max_len, "longest asteroid tried (default n)");
  asteroid->callback([&] { status = cmd_asteroid(opts, max_len); });

  auto* enumerate = app.add_subcommand("enumerate", "all graphs on n vertices up to isomorphism");
  bool check = false;
  add_common(enumerate, opts, false, false);
  enumerate->add_flag("--check", check, "compare the count with orbit counting");
  enumerate->callback([&] { status = cmd_enumerate(opts, check); });

  auto* conjecture = app.add_subcommand("conjecture", "forbidden-subgraph predicate against the oracle");
  bool from_input = false;
  add_common(conjecture, opts, true, true);
  conjecture->add_flag("--from-input", from_input, "read graph6 instead of enumerating n");
  conjecture->callback([&] { status = cmd_conjecture(opts, from_input); });

  auto* suite = app.add_subcommand("suite", "every cross-check over all graphs on n vertices");
  bool no_poset_sweep = false;
  add_common(suite, opts, false, true);
  suite->add_flag("--no-poset-sweep", no_poset_sweep, "skip orders from every orientation");
  suite->callback([&] { status = cmd_suite(opts, no_poset_sweep); });

  auto* render = app.add_subcommand("render", "draw a representation file, poset or graph");
  bool ascii = false;
  add_common(render, opts, true, false);
  render->add_flag("--ascii", ascii, "text instead of SVG");
  render->callback([&] {
    if (render->count("--format") == 0) opts.format = "rep";
    status = cmd_render(opts, ascii);
  });

  auto* fixtures_cmd = app.add_subcommand("fixtures", "list figure fixtures and check their claims");
  add_common(fixtures_cmd, opts, false, false);
  fixtures_cmd->callback([&] { status = cmd_fixtures(opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const DecodeError& e) {
    std::cerr << "decode error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return status;
}
