#include "ikg/constructions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>
#include <unordered_set>

namespace ikg {

namespace {

std::string triple_text(const Graph& g, const std::vector<int>& order, const OrderingViolation& v) {
  return "(" + g.name(order[v.i]) + ", " + g.name(order[v.j]) + ", " + g.name(order[v.k]) + ")";
}

// Triples (i, j, k) with k fixed at the last position of the prefix.
bool last_position_ok(const Graph& g, const std::vector<int>& order, const std::vector<int>& cls,
                      OrderingViolation* where) {
  const int k = static_cast<int>(order.size()) - 1;
  const int vk = order[k];
  for (int i = 0; i + 1 < k; ++i) {
    const int vi = order[i];
    if (!g.adjacent(vi, vk)) continue;
    for (int j = i + 1; j < k; ++j) {
      const int vj = order[j];
      if ((cls[vj] != cls[vi] && !g.adjacent(vj, vi)) || (cls[vj] != cls[vk] && !g.adjacent(vj, vk))) {
        if (where) *where = {i, j, k};
        return false;
      }
    }
  }
  return true;
}

std::vector<int> class_vector(const Graph& g, const PartiteStructure& partite) {
  std::vector<int> cls(g.order(), -1);
  for (int v = 0; v < g.order(); ++v) cls[v] = partite.class_of(v);
  return cls;
}

}  // namespace

std::optional<OrderingViolation> ordering_violation(const Graph& g, const std::vector<int>& order,
                                                    const PartiteStructure& partite) {
  const auto cls = class_vector(g, partite);
  std::vector<int> prefix;
  for (int v : order) {
    prefix.push_back(v);
    OrderingViolation where;
    if (!last_position_ok(g, prefix, cls, &where)) return where;
  }
  return std::nullopt;
}

std::optional<Statement5Ordering> find_statement5_ordering(const Graph& g, const PartiteStructure& partition) {
  if (!partition.valid_for(g)) throw Error("find_statement5_ordering: partition is not valid for the graph");
  const auto cls = class_vector(g, partition);
  std::vector<int> order;
  std::function<bool(VertexSet)> extend = [&](VertexSet rest) -> bool {
    if (rest.empty()) return true;
    for (int v : rest) {
      order.push_back(v);
      if (last_position_ok(g, order, cls, nullptr) && extend(rest - VertexSet::single(v))) return true;
      order.pop_back();
    }
    return false;
  };
  if (!extend(g.vertices())) return std::nullopt;
  return Statement5Ordering{order, partition};
}

IntervalKRep with_distinct_endpoints(const IntervalKRep& rep) {
  struct Event {
    Rational value;
    int side;  // 0 = left endpoint, 1 = right endpoint
    int vertex;
  };
  std::vector<Event> events;
  for (int v = 0; v < rep.size(); ++v) {
    events.push_back({rep.intervals[v].left, 0, v});
    events.push_back({rep.intervals[v].right, 1, v});
  }
  // Among equal values: lefts first (touching survives); lefts of longer
  // intervals first and rights of shorter-from-the-left ones first, so a
  // containment with a shared endpoint stays a containment.
  const auto& ivs = rep.intervals;
  std::sort(events.begin(), events.end(), [&](const Event& a, const Event& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.side != b.side) return a.side < b.side;
    const Interval& x = ivs[a.vertex];
    const Interval& y = ivs[b.vertex];
    if (a.side == 0 && x.right != y.right) return x.right > y.right;
    if (a.side == 1 && x.left != y.left) return x.left > y.left;
    return a.vertex < b.vertex;
  });
  if (std::adjacent_find(events.begin(), events.end(),
                         [](const Event& a, const Event& b) { return a.value == b.value; }) == events.end()) {
    return rep;
  }
  IntervalKRep out = rep;
  for (std::size_t rank = 0; rank < events.size(); ++rank) {
    auto& iv = out.intervals[events[rank].vertex];
    (events[rank].side == 0 ? iv.left : iv.right) = Rational(static_cast<std::int64_t>(rank));
  }
  return out;
}

namespace {

// Left endpoints strictly increasing along `order`, |L_u - L_v| <= 1 on edges
// and > 1 on other-class non-edges. Strict bounds use eps = 1/(2n+2): a
// simple cycle has at most n arcs, so that matches an infinitesimal eps.
std::optional<std::vector<Rational>> ordered_unit_positions(const Graph& g, const std::vector<int>& cls,
                                                            const std::vector<int>& order) {
  const int m = static_cast<int>(order.size());
  const Rational eps(1, 2 * g.order() + 2);
  struct Arc {
    int from, to;
    Rational w;  // x_to - x_from <= w
  };
  std::vector<Arc> arcs;
  for (int j = 1; j < m; ++j) arcs.push_back({j, j - 1, -eps});
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

}  // namespace

IntervalKRep unit_bigraph_from_ordering(const Graph& g, const Statement5Ordering& ord) {
  if (!is_bipartite(g)) throw Error("unit_bigraph_from_ordering: graph is not bipartite");
  if (!ord.partite.valid_for(g) || ord.partite.classes.size() > 2) {
    throw Error("unit_bigraph_from_ordering: ordering carries no bipartition of the graph");
  }
  if (auto bad = ordering_violation(g, ord.order, ord.partite)) {
    throw Error("unit_bigraph_from_ordering: ordering violates the betweenness condition at " +
                triple_text(g, ord.order, *bad));
  }
  const auto cls = class_vector(g, ord.partite);
  const int n = g.order();

  // A valid ordering need not be a left-endpoint order of any unit model: the
  // path a-b-c-d listed as b, a, d, c puts a and d within one unit of b while
  // they must be disjoint. The order inside each class does survive, so when
  // the given interleaving fails, the class sequences are merged in the first
  // order that works.
  std::vector<int> order = ord.order;
  auto positions = ordered_unit_positions(g, cls, order);
  if (!positions && n > 0) {
    std::vector<int> first, second;
    for (int v : ord.order) (cls[v] == cls[ord.order[0]] ? first : second).push_back(v);
    std::vector<int> pick(n, 0);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(second.size()), pick.end(), 1);
    do {
      std::size_t a = 0, b = 0;
      for (int i = 0; i < n; ++i) order[i] = pick[i] ? second[b++] : first[a++];
      positions = ordered_unit_positions(g, cls, order);
    } while (!positions && std::next_permutation(pick.begin(), pick.end()));
  }
  if (!positions) {
    throw TheoremViolation("unit_bigraph_from_ordering: no unit model keeps the class orders of a valid ordering");
  }

  IntervalKRep rep;
  rep.k = 2;
  rep.intervals.resize(n);
  rep.classes.resize(n);
  for (int v = 0; v < n; ++v) rep.classes[v] = cls[v];
  rep.labels = g.labels();
  const Rational base = n > 0 ? (*positions)[0] : Rational(0);
  for (int i = 0; i < n; ++i) {
    const Rational left = (*positions)[i] - base;
    rep.intervals[order[i]] = Interval{left, left + 1};
  }
  if (!realizes(rep, g).ok) throw TheoremViolation("unit_bigraph_from_ordering: output does not realize the graph");
  return rep;
}

PermutationRep permutation_from_class_proper_2(const IntervalKRep& rep) {
  if (rep.k != 2) throw Error("permutation_from_class_proper_2: needs exactly k = 2");
  if (!is_class_proper(rep)) throw Error("permutation_from_class_proper_2: representation is not class-proper");
  const IntervalKRep d = with_distinct_endpoints(rep);
  PermutationRep out;
  for (int v = 0; v < d.size(); ++v) {
    const auto& iv = d.intervals[v];
    if (d.classes[v] == 0) {
      out.top.push_back(iv.left);
      out.bottom.push_back(iv.right);
    } else {
      out.top.push_back(iv.right);
      out.bottom.push_back(iv.left);
    }
  }
  return out;
}

Statement5Ordering ordering_from_permutation(const PermutationRep& rep, const PartiteStructure& partition) {
  const int n = rep.size();
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (segments_cross(rep, u, v)) g.add_edge(u, v);
  Statement5Ordering out;
  out.partite = partition;
  out.order.resize(n);
  std::iota(out.order.begin(), out.order.end(), 0);
  std::sort(out.order.begin(), out.order.end(), [&](int a, int b) { return rep.top[a] < rep.top[b]; });
  if (auto bad = ordering_violation(g, out.order, partition)) {
    throw TheoremViolation("ordering_from_permutation: channel order violates betweenness at " +
                           triple_text(g, out.order, *bad));
  }
  return out;
}

Statement5Ordering ordering_from_proper_rep(const IntervalKRep& rep) {
  if (!is_proper(rep)) throw Error("ordering_from_proper_rep: representation is not proper");
  const IntervalKRep d = with_distinct_endpoints(rep);
  const Graph g = represented_graph(rep);
  std::vector<int> cls(d.classes);
  Statement5Ordering out;
  out.partite.classes.resize(rep.k);
  for (int v = 0; v < d.size(); ++v) out.partite.classes[cls[v]].insert(v);
  out.order.resize(d.size());
  std::iota(out.order.begin(), out.order.end(), 0);
  std::sort(out.order.begin(), out.order.end(),
            [&](int a, int b) { return d.intervals[a].left < d.intervals[b].left; });
  if (auto bad = ordering_violation(g, out.order, out.partite)) {
    throw TheoremViolation("ordering_from_proper_rep: left-endpoint order violates betweenness at " +
                           triple_text(g, out.order, *bad));
  }
  return out;
}

bool dominates(const Graph& g, const std::vector<int>& path) {
  VertexSet covered;
  for (int v : path) covered |= g.closed_neighborhood(v);
  return covered == g.vertices();
}

DominatingPair dominating_pair(const Graph& g, const Statement5Ordering& ord) {
  if (g.order() == 0) throw Error("dominating_pair: empty graph");
  if (!is_connected(g)) throw Error("dominating_pair: graph is disconnected");
  if (auto bad = ordering_violation(g, ord.order, ord.partite)) {
    throw Error("dominating_pair: ordering violates betweenness at " + triple_text(g, ord.order, *bad));
  }
  DominatingPair out;
  out.first = ord.order.front();
  out.last = ord.order.back();
  out.path = shortest_path(g, out.first, out.last, g.vertices());
  if (!dominates(g, out.path)) {
    throw TheoremViolation("dominating_pair: path between first and last vertex leaves a vertex undominated");
  }
  return out;
}

Orientation orientation_from_class_proper(const IntervalKRep& rep, const Graph& g) {
  if (auto r = realizes(rep, g); !r.ok) throw Error("orientation_from_class_proper: representation does not realize the graph");
  if (!is_class_proper(rep)) throw Error("orientation_from_class_proper: representation is not class-proper");
  const IntervalKRep d = with_distinct_endpoints(rep);
  const Graph host = complement(g);
  Orientation o(g.order());
  for (auto [u, v] : host.edges()) {
    const auto& a = d.intervals[u];
    const auto& b = d.intervals[v];
    bool forward = false;
    if (a.right < b.left) forward = true;
    else if (b.right < a.left) forward = false;
    else if (d.classes[u] == d.classes[v]) forward = a.right < b.right;
    else throw TheoremViolation("orientation_from_class_proper: intersecting cross-class pair is a non-edge");
    forward ? o.set_arc(u, v) : o.set_arc(v, u);
  }
  if (!is_transitive_orientation(host, o)) {
    throw TheoremViolation("orientation_from_class_proper: right-endpoint orientation is not transitive");
  }
  return o;
}

FunctionRep function_rep_from_class_proper(const IntervalKRep& rep) {
  if (rep.k < 3) throw Error("function_rep_from_class_proper: needs k >= 3");
  if (!is_class_proper(rep)) throw Error("function_rep_from_class_proper: representation is not class-proper");
  const IntervalKRep d = with_distinct_endpoints(rep);
  const int k = rep.k;
  FunctionRep out;
  out.k = k;
  for (int v = 0; v < d.size(); ++v) {
    const Rational l = d.intervals[v].left;
    const Rational r = d.intervals[v].right;
    std::vector<Rational> x(k + 1, l);
    const int cls = d.classes[v] + 1;  // classes numbered 1..k here
    if (cls <= k - 2) {
      x[cls + 1] = r;
    } else if (cls == k - 1) {
      x[0] = r;
      x[k] = r;
    } else {
      x[1] = r;
    }
    out.abscissae.push_back(std::move(x));
  }
  return out;
}

namespace {

bool multipartite_neighbourhood(const Graph& g, int v, VertexSet remaining) {
  const VertexSet closed = g.closed_neighborhood(v) & remaining;
  return is_complete_multipartite(induced(g, closed).graph).has_value();
}

}  // namespace

bool is_elimination_ordering(const Graph& g, const std::vector<int>& order) {
  VertexSet remaining = g.vertices();
  if (static_cast<int>(order.size()) != g.order()) return false;
  for (int v : order) {
    if (v < 0 || v >= g.order() || !remaining.contains(v)) return false;
    if (!multipartite_neighbourhood(g, v, remaining)) return false;
    remaining.erase(v);
  }
  return true;
}

std::optional<std::vector<int>> elimination_ordering(const Graph& g) {
  std::unordered_set<std::uint64_t> dead;
  std::vector<int> order;
  std::function<bool(VertexSet)> extend = [&](VertexSet remaining) -> bool {
    if (remaining.empty()) return true;
    if (dead.count(remaining.bits())) return false;
    for (int v : remaining) {
      if (!multipartite_neighbourhood(g, v, remaining)) continue;
      order.push_back(v);
      if (extend(remaining - VertexSet::single(v))) return true;
      order.pop_back();
    }
    dead.insert(remaining.bits());
    return false;
  };
  if (!extend(g.vertices())) return std::nullopt;
  return order;
}

namespace {

bool cor41_step_ok(const Poset& p, int v, VertexSet remaining) {
  return is_minimal_within(p, v, remaining) &&
         decompose_into_chains(p, incomparables_within(p, v, remaining)).has_value();
}

}  // namespace

bool is_cor41_labeling(const Poset& p, const Labeling& lab) {
  if (static_cast<int>(lab.size()) != p.size()) return false;
  VertexSet remaining = p.elements();
  for (int v : lab) {
    if (v < 0 || v >= p.size() || !remaining.contains(v)) return false;
    if (!cor41_step_ok(p, v, remaining)) return false;
    remaining.erase(v);
  }
  return true;
}

std::optional<Labeling> cor41_labeling(const Poset& p) {
  std::unordered_set<std::uint64_t> dead;
  Labeling lab;
  std::function<bool(VertexSet)> extend = [&](VertexSet remaining) -> bool {
    if (remaining.empty()) return true;
    if (dead.count(remaining.bits())) return false;
    for (int v : remaining) {
      if (!cor41_step_ok(p, v, remaining)) continue;
      lab.push_back(v);
      if (extend(remaining - VertexSet::single(v))) return true;
      lab.pop_back();
    }
    dead.insert(remaining.bits());
    return false;
  };
  if (!extend(p.elements())) return std::nullopt;
  return lab;
}

std::optional<ComplianceViolation> cover_compliance(const Poset& p, const Labeling& lab, const ChainCover& cover) {
  VertexSet remaining = p.elements();
  for (int pos = 0; pos < static_cast<int>(lab.size()); ++pos) {
    const int v = lab[pos];
    auto chains = decompose_into_chains(p, incomparables_within(p, v, remaining));
    if (!chains) throw Error("cover_compliance: labeling does not decompose at position " + std::to_string(pos));
    for (const Chain& c : *chains) {
      const int home = cover.chain_of(c.front());
      for (int w : c) {
        if (cover.chain_of(w) != home) return ComplianceViolation{pos, c};
      }
    }
    remaining.erase(v);
  }
  return std::nullopt;
}

ChainCover repair_chain_cover(const Poset& p, const Labeling& lab, const ChainCover& cover) {
  if (!is_cor41_labeling(p, lab)) throw Error("repair_chain_cover: labeling fails the minimal/decomposition conditions");
  if (!is_chain_cover(p, cover)) throw Error("repair_chain_cover: not a chain cover");
  ChainCover current = cover;
  const int n = p.size();
  for (int round = 0; round <= n * n * n + 1; ++round) {
    auto viol = cover_compliance(p, lab, current);
    if (!viol) return current;
    // First split inside the offending chain; everything before x shares x's class.
    const Chain& d = viol->chain;
    std::size_t s = 0;
    while (current.chain_of(d[s]) == current.chain_of(d[s + 1])) ++s;
    const int x = d[s];
    const int y = d[s + 1];
    const int xi = current.chain_of(x);
    const int yi = current.chain_of(y);
    const Chain big_x = current.chains[xi];
    const Chain big_y = current.chains[yi];
    const auto j = static_cast<std::size_t>(std::find(big_x.begin(), big_x.end(), x) - big_x.begin());
    const auto l = static_cast<std::size_t>(std::find(big_y.begin(), big_y.end(), y) - big_y.begin());

    Chain new_x(big_x.begin(), big_x.begin() + j + 1);
    new_x.insert(new_x.end(), big_y.begin() + l, big_y.end());
    Chain new_y(big_y.begin(), big_y.begin() + l);
    new_y.insert(new_y.end(), big_x.begin() + j + 1, big_x.end());
    if (l > 0 && j + 1 < big_x.size() && !p.less(big_y[l - 1], big_x[j + 1])) {
      throw TheoremViolation("repair_chain_cover: y_{l-1} = " + p.name(big_y[l - 1]) + " is not below x_{j+1} = " +
                             p.name(big_x[j + 1]) + " at position " + std::to_string(viol->position));
    }
    ChainCover next = current;
    next.chains[xi] = new_x;
    next.chains[yi] = new_y;
    if (new_y.empty()) next.chains.erase(next.chains.begin() + yi);

    // Positions before the one repaired must stay compliant.
    if (auto again = cover_compliance(p, lab, next); again && again->position < viol->position) {
      const Chain& broken = again->chain;
      auto has_pair = [&](int a, int b) {
        for (std::size_t t = 0; t + 1 < broken.size(); ++t)
          if (broken[t] == a && broken[t + 1] == b) return true;
        return false;
      };
      std::string which = "unclassified";
      if (j + 1 < big_x.size() && has_pair(x, big_x[j + 1])) which = "Case 1 (x_j < x_{j+1})";
      else if (l > 0 && has_pair(big_y[l - 1], y)) which = "Case 2 (y_{l-1} < y_l)";
      throw TheoremViolation("repair_chain_cover: swap at position " + std::to_string(viol->position) +
                             " broke position " + std::to_string(again->position) + ", " + which);
    }
    current = std::move(next);
  }
  throw TheoremViolation("repair_chain_cover: no compliant cover after the round limit");
}

IntervalKRep intervals_from_labeled_poset(const Poset& p, const Labeling& lab, const ChainCover& cover) {
  if (!is_cor41_labeling(p, lab)) throw Error("intervals_from_labeled_poset: labeling fails its conditions");
  if (!is_chain_cover(p, cover)) throw Error("intervals_from_labeled_poset: not a chain cover");
  if (auto viol = cover_compliance(p, lab, cover)) {
    throw Error("intervals_from_labeled_poset: cover is not compliant at position " +
                std::to_string(viol->position) + "; repair it first");
  }
  const int n = p.size();
  IntervalKRep rep;
  rep.k = std::max(cover.size(), 1);
  rep.intervals.resize(n);
  rep.classes.resize(n);
  rep.labels = p.labels();
  for (int i = 1; i <= n; ++i) {
    const int v = lab[i - 1];
    int mu = i;
    for (int j = 1; j < i; ++j) {
      if (p.incomparable(v, lab[j - 1])) {
        mu = j;
        break;
      }
    }
    rep.intervals[v] = Interval{Rational(mu) - (Rational(1) - Rational(i, n)), Rational(i)};
    rep.classes[v] = cover.chain_of(v);
  }
  return rep;
}

ClassProperBuild build_class_proper_rep(const Graph& g, std::size_t orientation_limit) {
  ClassProperBuild out;
  const Graph host = complement(g);
  auto visit = visit_transitive_orientations(host, orientation_limit, [&](const Orientation& o) {
    Poset p = poset_from_orientation(o);
    p.set_labels(g.labels());
    auto lab = cor41_labeling(p);
    if (!lab) return true;
    ChainCover cover = repair_chain_cover(p, *lab, minimum_chain_cover(p).cover);
    IntervalKRep rep = intervals_from_labeled_poset(p, *lab, cover);
    if (!realizes(rep, g).ok || !is_class_proper(rep)) {
      throw TheoremViolation("build_class_proper_rep: labeled-order intervals fail validation for " +
                             std::to_string(g.order()) + "-vertex input");
    }
    out.status = ClassProperBuild::Status::found;
    out.rep = std::move(rep);
    out.poset = std::move(p);
    out.labeling = std::move(*lab);
    out.cover = std::move(cover);
    return false;
  });
  out.orientations_tried = visit.visited;
  if (!out.found()) out.status = visit.truncated ? ClassProperBuild::Status::truncated : ClassProperBuild::Status::none;
  return out;
}

}  // namespace ikg
