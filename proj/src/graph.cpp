#include "ikg/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ikg {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw Error("graph order " + std::to_string(n) + " outside [0, 64]");
  }
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw Error("vertex " + std::to_string(v) + " out of range");
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error("loop at vertex " + std::to_string(u));
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~(std::uint64_t{1} << v);
  adj_[v] &= ~(std::uint64_t{1} << u);
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_) {
    throw Error("label count does not match graph order");
  }
  labels_ = std::move(labels);
}

std::string Graph::name(int v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::optional<int> Graph::find_label(const std::string& label) const {
  for (int v = 0; v < static_cast<int>(labels_.size()); ++v) {
    if (labels_[v] == label) return v;
  }
  return std::nullopt;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::operator==(const Graph& other) const {
  if (n_ != other.n_) return false;
  for (int v = 0; v < n_; ++v) {
    if (adj_[v] != other.adj_[v]) return false;
  }
  return true;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

int PartiteStructure::class_of(int v) const {
  for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
    if (classes[c].contains(v)) return c;
  }
  return -1;
}

bool PartiteStructure::valid_for(const Graph& g) const {
  VertexSet seen;
  for (VertexSet c : classes) {
    if (c.intersects(seen) || !c.subset_of(g.vertices())) return false;
    for (int v : c) {
      if (g.neighbors(v).intersects(c)) return false;
    }
    seen |= c;
  }
  return seen == g.vertices();
}

PartiteStructure partition_from_labels(const std::vector<int>& class_of_vertex) {
  PartiteStructure p;
  for (int v = 0; v < static_cast<int>(class_of_vertex.size()); ++v) {
    int c = class_of_vertex[v];
    if (c < 0) throw Error("negative class index");
    if (c >= static_cast<int>(p.classes.size())) p.classes.resize(c + 1);
    p.classes[c].insert(v);
  }
  return p;
}

Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  h.set_labels(g.labels());
  return h;
}

InducedSubgraph induced(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw Error("induced: vertex set has bits outside the graph");
  InducedSubgraph out;
  for (int v : s) out.original.push_back(v);
  const int m = static_cast<int>(out.original.size());
  out.graph = Graph(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.adjacent(out.original[i], out.original[j])) out.graph.add_edge(i, j);
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    for (int v : out.original) labels.push_back(g.labels()[v]);
    out.graph.set_labels(std::move(labels));
  }
  return out;
}

namespace {

VertexSet component_of(const Graph& g, int start, VertexSet allowed) {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next = (next & allowed) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return component_of(g, 0, g.vertices()) == g.vertices();
}

std::optional<PartiteStructure> bipartition(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int v = queue[h];
      for (int w : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  PartiteStructure p;
  p.classes.resize(2);
  for (int v = 0; v < g.order(); ++v) p.classes[side[v]].insert(v);
  if (p.classes[1].empty()) p.classes.pop_back();
  if (!p.classes.empty() && p.classes[0].empty()) p.classes.erase(p.classes.begin());
  return p;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

namespace {

bool colour_with(const Graph& g, int k, const std::vector<int>& order, std::vector<int>& colour,
                 std::size_t pos) {
  if (pos == order.size()) return true;
  int v = order[pos];
  std::uint64_t used = 0;
  for (int w : g.neighbors(v))
    if (colour[w] >= 0) used |= std::uint64_t{1} << colour[w];
  // Symmetry break: never open more than one fresh colour at a time.
  int max_used = -1;
  for (std::size_t i = 0; i < pos; ++i) max_used = std::max(max_used, colour[order[i]]);
  for (int c = 0; c < k && c <= max_used + 1; ++c) {
    if ((used >> c) & 1u) continue;
    colour[v] = c;
    if (colour_with(g, k, order, colour, pos + 1)) return true;
  }
  colour[v] = -1;
  return false;
}

}  // namespace

std::vector<int> optimal_colouring(const Graph& g) {
  const int n = g.order();
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  for (int k = 1; k <= std::max(n, 1); ++k) {
    std::vector<int> colour(n, -1);
    if (colour_with(g, k, order, colour, 0)) return colour;
  }
  return {};
}

int chromatic_number(const Graph& g) {
  if (g.order() == 0) return 0;
  auto c = optimal_colouring(g);
  return *std::max_element(c.begin(), c.end()) + 1;
}

std::optional<PartiteStructure> is_complete_multipartite(const Graph& g) {
  PartiteStructure p;
  VertexSet assigned;
  for (int v = 0; v < g.order(); ++v) {
    if (assigned.contains(v)) continue;
    VertexSet cls = g.vertices() - g.neighbors(v);
    for (int w : cls) {
      if (g.vertices() - g.neighbors(w) != cls) return std::nullopt;
    }
    p.classes.push_back(cls);
    assigned |= cls;
  }
  return p;
}

namespace {

bool extend_embedding(const Graph& g, const Graph& pattern, std::vector<int>& map, VertexSet used) {
  const int i = static_cast<int>(map.size());
  if (i == pattern.order()) return true;
  for (int cand : g.vertices() - used) {
    bool ok = true;
    for (int j = 0; j < i && ok; ++j) {
      ok = pattern.adjacent(i, j) == g.adjacent(cand, map[j]);
    }
    if (!ok) continue;
    map.push_back(cand);
    if (extend_embedding(g, pattern, map, used | VertexSet::single(cand))) return true;
    map.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& pattern) {
  if (pattern.order() > g.order()) return std::nullopt;
  std::vector<int> map;
  if (extend_embedding(g, pattern, map, VertexSet{})) return map;
  return std::nullopt;
}

std::optional<std::vector<int>> find_long_induced_cycle(const Graph& g, int min_length) {
  const int n = g.order();
  std::vector<int> path;
  std::vector<int> found;
  // path[0] is the least vertex of the cycle; interior vertices avoid it.
  std::function<bool(VertexSet)> grow = [&](VertexSet interior_nbrs) -> bool {
    const int s = path.front();
    const int last = path.back();
    VertexSet on_path;
    for (int v : path) on_path.insert(v);
    for (int w : g.neighbors(last)) {
      if (w <= s || on_path.contains(w)) continue;
      // interior_nbrs: neighbours of path[1 .. k-1]
      if (interior_nbrs.contains(w)) continue;
      if (g.adjacent(w, s)) {
        if (static_cast<int>(path.size()) + 1 >= min_length && path.size() >= 2) {
          found = path;
          found.push_back(w);
          return true;
        }
        continue;
      }
      VertexSet next_interior = interior_nbrs;
      if (path.size() >= 2) next_interior |= g.neighbors(last);
      path.push_back(w);
      if (grow(next_interior)) return true;
      path.pop_back();
    }
    return false;
  };
  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    for (int p1 : g.neighbors(s)) {
      if (p1 <= s) continue;
      path.push_back(p1);
      if (grow(VertexSet{})) return found;
      path.pop_back();
    }
  }
  return std::nullopt;
}

WeakChordalityResult is_weakly_chordal(const Graph& g) {
  WeakChordalityResult r;
  if (auto c = find_long_induced_cycle(g, 5)) {
    r.weakly_chordal = false;
    r.cycle = *c;
    return r;
  }
  if (auto c = find_long_induced_cycle(complement(g), 5)) {
    r.weakly_chordal = false;
    r.cycle = *c;
    r.in_complement = true;
  }
  return r;
}

std::vector<int> shortest_path(const Graph& g, int u, int v, VertexSet allowed) {
  if (!allowed.contains(u) || !allowed.contains(v)) return {};
  std::vector<int> parent(g.order(), -1);
  std::vector<int> queue{u};
  VertexSet seen = VertexSet::single(u);
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int x = queue[h];
    if (x == v) break;
    for (int y : (g.neighbors(x) & allowed) - seen) {
      seen.insert(y);
      parent[y] = x;
      queue.push_back(y);
    }
  }
  if (!seen.contains(v)) return {};
  std::vector<int> path;
  for (int x = v; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) os << "  " << v << " [label=\"" << g.name(v) << "\"];\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace ikg
