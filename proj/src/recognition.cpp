#include "ikg/recognition.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_set>

#include "ikg/comparability.hpp"
#include "ikg/graph6.hpp"

namespace ikg {

namespace {

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  int pivot = -1;
  int best = -1;
  for (int u : p | x) {
    const int c = (p & g.neighbors(u)).size();
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  for (int v : p - g.neighbors(pivot)) {
    bron_kerbosch(g, r | VertexSet::single(v), p & g.neighbors(v), x & g.neighbors(v), out);
    p.erase(v);
    x.insert(v);
  }
}

std::vector<int> class_vector(int n, const PartiteStructure& partition) {
  std::vector<int> cls(n, -1);
  for (int v = 0; v < n; ++v) cls[v] = partition.class_of(v);
  return cls;
}

void check_witness(const IntervalKRep& rep, const Graph& g, const char* who) {
  if (!realizes(rep, g).ok) throw Error(std::string(who) + ": witness fails to realize the graph");
}

RecognitionVerdict reject(std::string why) {
  RecognitionVerdict v;
  v.certificate = std::move(why);
  return v;
}

RecognitionVerdict accept(IntervalKRep rep) {
  RecognitionVerdict v;
  v.is_member = true;
  v.witness = std::move(rep);
  return v;
}

std::string k_text(int k) { return k == kAnyK ? std::string("any number of") : "at most " + std::to_string(k); }

// Runs `solve` on each component and lays the component models side by side.
// A model of each component, translated apart, is a model of the whole graph,
// and any model restricts to its components.
template <typename Solve>
RecognitionVerdict by_components(const Graph& g, int k, const char* who, Solve solve) {
  IntervalKRep rep;
  rep.k = 1;
  rep.intervals.resize(g.order());
  rep.classes.assign(g.order(), 0);
  rep.labels = g.labels();
  VertexSet left = g.vertices();
  Rational offset(0);
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.first());
    for (VertexSet frontier = comp; !frontier.empty();) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      frontier = next - comp;
      comp |= next;
    }
    left -= comp;
    const auto sub = induced(g, comp);
    std::optional<IntervalKRep> part = solve(sub.graph);
    if (!part) {
      return reject("component {" + [&] {
        std::string s;
        for (int v : sub.original) s += (s.empty() ? "" : ",") + g.name(v);
        return s;
      }() + "} has no model with " + k_text(k) + " classes");
    }
    Rational lo = part->intervals.empty() ? Rational(0) : part->intervals[0].left;
    Rational hi = lo;
    for (const auto& iv : part->intervals) {
      lo = std::min(lo, iv.left);
      hi = std::max(hi, iv.right);
    }
    for (std::size_t i = 0; i < sub.original.size(); ++i) {
      const int v = sub.original[i];
      rep.intervals[v] = Interval{part->intervals[i].left - lo + offset, part->intervals[i].right - lo + offset};
      rep.classes[v] = part->classes[i];
      rep.k = std::max(rep.k, part->classes[i] + 1);
    }
    offset += hi - lo + 2;
  }
  if (k != kAnyK) rep.k = std::max(rep.k, k);
  check_witness(rep, g, who);
  return accept(std::move(rep));
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  if (g.order() == 0) return out;
  bron_kerbosch(g, VertexSet(), g.vertices(), VertexSet(), out);
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
  return out;
}

RecognitionVerdict is_interval_graph(const Graph& g) {
  const int n = g.order();
  if (n == 0) {
    IntervalKRep empty;
    return accept(empty);
  }
  const auto cliques = maximal_cliques(g);
  const int m = static_cast<int>(cliques.size());
  if (m > n) return reject(std::to_string(m) + " maximal cliques on " + std::to_string(n) + " vertices (chordal bound exceeded)");
  if (m > 20) return reject("too many maximal cliques for the arrangement search");

  std::vector<int> arrangement;
  std::unordered_set<std::uint64_t> dead;
  std::function<bool(std::uint32_t, VertexSet)> extend = [&](std::uint32_t used, VertexSet seen) -> bool {
    if (static_cast<int>(arrangement.size()) == m) return true;
    const std::uint64_t key = (std::uint64_t{used} << 5) | static_cast<std::uint64_t>(arrangement.back());
    if (dead.count(key)) return false;
    const VertexSet last = cliques[arrangement.back()];
    for (int c = 0; c < m; ++c) {
      if ((used >> c) & 1u) continue;
      if (!(cliques[c] & seen).subset_of(last)) continue;
      arrangement.push_back(c);
      if (extend(used | (1u << c), seen | cliques[c])) return true;
      arrangement.pop_back();
    }
    dead.insert(key);
    return false;
  };
  bool ok = false;
  for (int c = 0; c < m && !ok; ++c) {
    arrangement.assign(1, c);
    ok = extend(1u << c, cliques[c]);
  }
  if (!ok) return reject("no consecutive arrangement of the " + std::to_string(m) + " maximal cliques");

  IntervalKRep rep;
  rep.k = n;
  rep.labels = g.labels();
  rep.intervals.resize(n);
  rep.classes.resize(n);
  std::vector<int> first(n, -1), last(n, -1);
  for (int pos = 0; pos < m; ++pos) {
    for (int v : cliques[arrangement[pos]]) {
      if (first[v] < 0) first[v] = pos;
      last[v] = pos;
    }
  }
  for (int v = 0; v < n; ++v) {
    rep.intervals[v] = Interval{Rational(first[v]), Rational(last[v])};
    rep.classes[v] = v;
  }
  check_witness(rep, g, "is_interval_graph");
  return accept(std::move(rep));
}

std::vector<PartiteStructure> independent_partitions(const Graph& g, int max_classes, bool maximal_only) {
  const int n = g.order();
  std::vector<PartiteStructure> out;
  std::vector<VertexSet> classes;
  std::function<void(int)> place = [&](int v) {
    if (v == n) {
      if (maximal_only) {
        for (std::size_t a = 0; a < classes.size(); ++a) {
          VertexSet reach;
          for (int u : classes[a]) reach |= g.neighbors(u);
          for (std::size_t b = a + 1; b < classes.size(); ++b)
            if (!reach.intersects(classes[b])) return;
        }
      }
      out.push_back(PartiteStructure{classes});
      return;
    }
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (g.neighbors(v).intersects(classes[c])) continue;
      classes[c].insert(v);
      place(v + 1);
      classes[c].erase(v);
    }
    if (max_classes == kAnyK || static_cast<int>(classes.size()) < max_classes) {
      classes.push_back(VertexSet::single(v));
      place(v + 1);
      classes.pop_back();
    }
  };
  place(0);
  return out;
}

std::optional<IntervalKRep> interval_model_for_partition(const Graph& g, const PartiteStructure& partition) {
  if (!partition.valid_for(g)) throw Error("interval_model_for_partition: partition is not valid for the graph");
  const int n = g.order();
  const auto cls = class_vector(n, partition);
  std::vector<VertexSet> foes(n);  // other-class vertices that must stay disjoint
  for (int v = 0; v < n; ++v) foes[v] = g.vertices() - g.neighbors(v) - partition.classes[cls[v]];

  struct Event {
    int vertex;
    bool open;
  };
  std::vector<Event> events;
  std::unordered_set<std::uint64_t> dead;
  const VertexSet all = g.vertices();

  std::function<bool(VertexSet, VertexSet)> sweep = [&](VertexSet opened, VertexSet closed) -> bool {
    // Closing is never harmful once every neighbour has opened.
    const std::size_t mark = events.size();
    bool progress = true;
    while (progress) {
      progress = false;
      for (int v : opened - closed) {
        if (g.neighbors(v).subset_of(opened)) {
          closed.insert(v);
          events.push_back({v, false});
          progress = true;
        }
      }
    }
    if (closed == all) return true;
    const std::uint64_t key = (opened.bits() << 32) | closed.bits();
    if (!dead.count(key)) {
      const VertexSet live = opened - closed;
      for (int v : all - opened) {
        if (g.neighbors(v).intersects(closed) || foes[v].intersects(live)) continue;
        events.push_back({v, true});
        if (sweep(opened | VertexSet::single(v), closed)) return true;
        events.pop_back();
      }
      dead.insert(key);
    }
    events.resize(mark);
    return false;
  };
  if (n > 32) throw Error("interval_model_for_partition: at most 32 vertices");
  if (!sweep(VertexSet(), VertexSet())) return std::nullopt;

  IntervalKRep rep;
  rep.k = std::max<int>(1, static_cast<int>(partition.classes.size()));
  rep.labels = g.labels();
  rep.intervals.resize(n);
  rep.classes = cls;
  for (std::size_t pos = 0; pos < events.size(); ++pos) {
    auto& iv = rep.intervals[events[pos].vertex];
    (events[pos].open ? iv.left : iv.right) = Rational(static_cast<std::int64_t>(pos));
  }
  return rep;
}

namespace {

RecognitionVerdict interval_k_over(const Graph& g, int k, bool maximal_only) {
  if (k < 0) throw Error("is_interval_k_graph: k must be positive or kAnyK");
  if (g.order() == 0) return accept(IntervalKRep{});
  const auto partitions = independent_partitions(g, k, maximal_only);
  for (const auto& p : partitions) {
    if (auto rep = interval_model_for_partition(g, p)) {
      if (k != kAnyK) rep->k = k;
      check_witness(*rep, g, "is_interval_k_graph");
      return accept(std::move(*rep));
    }
  }
  return reject("none of " + std::to_string(partitions.size()) + (maximal_only ? " non-mergeable" : "") +
                " partitions into " + k_text(k) + " independent classes has an interval model");
}

}  // namespace

RecognitionVerdict is_interval_k_graph(const Graph& g, int k) { return interval_k_over(g, k, true); }

RecognitionVerdict is_interval_k_graph_all_partitions(const Graph& g, int k) { return interval_k_over(g, k, false); }

RecognitionVerdict is_interval_k_graph_by_fill_in(const Graph& g, int k) {
  if (g.order() == 0) return accept(IntervalKRep{});
  const auto partitions = independent_partitions(g, k, false);
  for (const auto& p : partitions) {
    std::vector<std::pair<int, int>> optional_pairs;
    for (const auto& c : p.classes)
      for (int u : c)
        for (int v : c)
          if (u < v) optional_pairs.emplace_back(u, v);
    if (optional_pairs.size() > 24) throw Error("is_interval_k_graph_by_fill_in: too many same-class pairs");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << optional_pairs.size()); ++mask) {
      Graph h = g;
      for (std::size_t b = 0; b < optional_pairs.size(); ++b)
        if ((mask >> b) & 1u) h.add_edge(optional_pairs[b].first, optional_pairs[b].second);
      auto verdict = is_interval_graph(h);
      if (!verdict.is_member) continue;
      IntervalKRep rep = *verdict.witness;
      rep.classes = class_vector(g.order(), p);
      rep.k = k == kAnyK ? static_cast<int>(p.classes.size()) : k;
      rep.labels = g.labels();
      check_witness(rep, g, "is_interval_k_graph_by_fill_in");
      return accept(std::move(rep));
    }
  }
  return reject("no same-class fill-in of any of " + std::to_string(partitions.size()) +
                " partitions is an interval graph");
}

namespace {

std::optional<IntervalKRep> proper_for_partition(const Graph& g, const PartiteStructure& partition) {
  const int n = g.order();
  const auto cls = class_vector(n, partition);
  auto cross_non_edge = [&](int u, int v) { return cls[u] != cls[v] && !g.adjacent(u, v); };

  std::vector<int> order;
  std::unordered_set<std::string> dead;
  // `tail` starts at the first placed vertex that still has an unplaced
  // neighbour: every vertex from there on will meet the next one placed.
  std::function<bool(VertexSet, std::size_t)> extend = [&](VertexSet placed, std::size_t tail) -> bool {
    if (static_cast<int>(order.size()) == n) return true;
    std::string key(reinterpret_cast<const char*>(&placed), sizeof placed);
    for (std::size_t q = tail; q < order.size(); ++q) key.push_back(static_cast<char>(order[q]));
    if (dead.count(key)) return false;
    for (int v : g.vertices() - placed) {
      bool ok = true;
      for (std::size_t q = tail; q < order.size() && ok; ++q) ok = !cross_non_edge(order[q], v);
      if (!ok) continue;
      const VertexSet now = placed | VertexSet::single(v);
      order.push_back(v);
      std::size_t next_tail = tail;
      while (next_tail < order.size() && (g.neighbors(order[next_tail]) - now).empty()) ++next_tail;
      if (extend(now, next_tail)) return true;
      order.pop_back();
    }
    dead.insert(std::move(key));
    return false;
  };
  if (!extend(VertexSet(), 0)) return std::nullopt;

  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  IntervalKRep rep;
  rep.k = std::max<int>(1, static_cast<int>(partition.classes.size()));
  rep.labels = g.labels();
  rep.intervals.resize(n);
  rep.classes = cls;
  int t = 0;
  for (int i = 0; i < n; ++i) {
    int far = i;
    for (int u : g.neighbors(order[i])) far = std::max(far, pos[u]);
    t = std::max(t, far);
    rep.intervals[order[i]] = Interval{Rational(i), Rational(t) + Rational(i, 2 * n)};
  }
  return rep;
}

// Left endpoints L along `order` must satisfy a difference system:
// nondecreasing, |L_u - L_v| <= 1 for edges, > 1 for other-class non-edges.
// The strict bound uses a fixed eps = 1/(2n+2); every simple cycle has at
// most n arcs, so this agrees with an infinitesimal eps.
std::optional<std::vector<Rational>> unit_positions(const Graph& g, const std::vector<int>& cls,
                                                    const std::vector<int>& order) {
  const int m = static_cast<int>(order.size());
  const Rational eps(1, 2 * g.order() + 2);
  struct Arc {
    int from, to;
    Rational w;  // x_to - x_from <= w
  };
  std::vector<Arc> arcs;
  for (int j = 1; j < m; ++j) arcs.push_back({j, j - 1, Rational(0)});
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const int u = order[i], v = order[j];
      if (g.adjacent(u, v)) arcs.push_back({i, j, Rational(1)});
      else if (cls[u] != cls[v]) arcs.push_back({j, i, Rational(-1) - eps});
    }
  }
  std::vector<Rational> dist(m, Rational(0));
  for (int round = 0; round <= m; ++round) {
    bool changed = false;
    for (const auto& a : arcs) {
      if (dist[a.from] + a.w < dist[a.to]) {
        dist[a.to] = dist[a.from] + a.w;
        changed = true;
      }
    }
    if (!changed) return dist;
  }
  return std::nullopt;
}

std::optional<IntervalKRep> unit_for_partition(const Graph& g, const PartiteStructure& partition) {
  const int n = g.order();
  const auto cls = class_vector(n, partition);
  std::vector<int> order;
  std::function<bool(VertexSet)> extend = [&](VertexSet placed) -> bool {
    if (static_cast<int>(order.size()) == n) return true;
    for (int v : g.vertices() - placed) {
      order.push_back(v);
      if (unit_positions(g, cls, order) && extend(placed | VertexSet::single(v))) return true;
      order.pop_back();
    }
    return false;
  };
  if (!extend(VertexSet())) return std::nullopt;
  const auto dist = *unit_positions(g, cls, order);
  const Rational base = dist[0];
  IntervalKRep rep;
  rep.k = std::max<int>(1, static_cast<int>(partition.classes.size()));
  rep.labels = g.labels();
  rep.intervals.resize(n);
  rep.classes = cls;
  for (int i = 0; i < n; ++i) rep.intervals[order[i]] = Interval{dist[i] - base, dist[i] - base + 1};
  return rep;
}

template <typename PerPartition>
std::optional<IntervalKRep> first_partition(const Graph& g, int k, PerPartition per) {
  for (const auto& p : independent_partitions(g, k, true))
    if (auto rep = per(g, p)) return rep;
  return std::nullopt;
}

}  // namespace

RecognitionVerdict is_proper_interval_k_graph(const Graph& g, int k) {
  auto v = by_components(g, k, "is_proper_interval_k_graph",
                         [&](const Graph& c) { return first_partition(c, k, proper_for_partition); });
  if (v.is_member && !is_proper(*v.witness)) throw Error("is_proper_interval_k_graph: witness is not proper");
  return v;
}

RecognitionVerdict is_unit_interval_k_graph(const Graph& g, int k) {
  auto v = by_components(g, k, "is_unit_interval_k_graph",
                         [&](const Graph& c) { return first_partition(c, k, unit_for_partition); });
  if (v.is_member && !is_unit(*v.witness)) throw Error("is_unit_interval_k_graph: witness is not unit");
  return v;
}

RecognitionVerdict class_proper_verdict(const Graph& g, std::size_t orientation_limit) {
  auto build = build_class_proper_rep(g, orientation_limit);
  RecognitionVerdict v;
  switch (build.status) {
    case ClassProperBuild::Status::found:
      v.is_member = true;
      v.witness = std::move(build.rep);
      v.order = std::move(build.poset);
      break;
    case ClassProperBuild::Status::none:
      v.certificate = "none of the " + std::to_string(build.orientations_tried) +
                      " transitive orientations of the complement admits a labeling";
      break;
    case ClassProperBuild::Status::truncated:
      v.incomplete = true;
      v.certificate = "orientation limit reached after " + std::to_string(build.orientations_tried);
      break;
  }
  return v;
}

Graph c6bar_pattern() {
  return make_graph(6, {{0, 2}, {2, 4}, {0, 4}, {1, 3}, {3, 5}, {1, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph p3bar2_pattern() {
  // a b c = 0 1 2, d e f = 3 4 5; complement of a-b-c plus d-e-f.
  std::vector<std::pair<int, int>> edges = {{0, 2}, {3, 5}};
  for (int x = 0; x < 3; ++x)
    for (int y = 3; y < 6; ++y) edges.emplace_back(x, y);
  return make_graph(6, edges);
}

std::optional<std::vector<int>> find_c6bar(const Graph& g) { return find_induced(g, c6bar_pattern()); }
std::optional<std::vector<int>> find_2p3bar(const Graph& g) { return find_induced(g, p3bar2_pattern()); }

RecognitionVerdict thm43_recognize(const Graph& g, std::size_t orientation_limit) {
  const int chi = chromatic_number(g);
  if (chi != 3) throw Error("thm43_recognize: chromatic number is " + std::to_string(chi) + ", not 3");
  if (!is_cocomparability(g)) throw Error("thm43_recognize: graph is not a cocomparability graph");
  if (auto hit = find_c6bar(g)) {
    std::string s;
    for (int v : *hit) s += (s.empty() ? "" : ",") + g.name(v);
    return reject("induced complement of C6 on " + s);
  }
  auto build = build_class_proper_rep(g, orientation_limit);
  RecognitionVerdict v;
  if (build.status == ClassProperBuild::Status::truncated) {
    v.incomplete = true;
    v.certificate = "orientation limit reached";
    return v;
  }
  if (!build.found()) {
    throw TheoremViolation("thm43_recognize: C6-complement-free 3-chromatic cocomparability graph " +
                           write_graph6(g) + " has no class-proper construction");
  }
  v.is_member = true;
  v.witness = std::move(build.rep);
  v.order = std::move(build.poset);
  return v;
}

RecognitionVerdict is_cocomparability_interval_k(const Graph& g) {
  auto poset = is_cocomparability(g);
  if (!poset) {
    if (auto ast = find_odd_asteroid(g, g.order())) return reject("odd asteroid " + asteroid_to_text(g, *ast));
    return reject("complement has no transitive orientation");
  }
  auto v = is_interval_k_graph(g, kAnyK);
  if (v.is_member) v.order = std::move(poset);
  return v;
}

}  // namespace ikg
