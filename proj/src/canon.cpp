#include "ikg/canon.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>

#include "ikg/graph6.hpp"

namespace ikg {

namespace {

using Cells = std::vector<int>;  // vertex -> ordered cell index

int count_cells(const Cells& cells) {
  return cells.empty() ? 0 : *std::max_element(cells.begin(), cells.end()) + 1;
}

// Equitable refinement; cell order is decided only by isomorphism-invariant data.
void refine(const Graph& g, Cells& cells) {
  const int n = g.order();
  int k = count_cells(cells);
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].assign(k + 1, 0);
      sig[v][0] = cells[v];
      for (int w : g.neighbors(v)) ++sig[v][cells[w] + 1];
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    Cells next(n);
    int id = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++id;
      next[order[i]] = id;
    }
    const int k2 = n == 0 ? 0 : id + 1;
    cells = std::move(next);
    if (k2 == k) return;
    k = k2;
  }
}

std::uint64_t code_of(const Graph& g, const Cells& position) {
  const int n = g.order();
  std::vector<int> at(n);
  for (int v = 0; v < n; ++v) at[position[v]] = v;
  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(at[i], at[j]) ? 1u : 0u);
  return code;
}

bool twins(const Graph& g, int u, int v) {
  VertexSet nu = g.neighbors(u) - VertexSet::single(v);
  VertexSet nv = g.neighbors(v) - VertexSet::single(u);
  return nu == nv;
}

void search(const Graph& g, Cells cells, std::optional<std::uint64_t>& best, Cells& best_cells) {
  refine(g, cells);
  const int n = g.order();
  if (count_cells(cells) == n) {
    std::uint64_t c = code_of(g, cells);
    if (!best || c < *best) {
      best = c;
      best_cells = cells;
    }
    return;
  }
  // First non-singleton cell.
  std::vector<int> size(n, 0);
  for (int v = 0; v < n; ++v) ++size[cells[v]];
  int target = 0;
  while (size[target] == 1) ++target;
  std::vector<int> tried;
  for (int v = 0; v < n; ++v) {
    if (cells[v] != target) continue;
    bool redundant = std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(g, u, v); });
    if (redundant) continue;
    tried.push_back(v);
    Cells child = cells;
    for (int w = 0; w < n; ++w) {
      if (w != v && cells[w] >= target) ++child[w];
    }
    search(g, std::move(child), best, best_cells);
  }
}

void require_canonical_order(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw Error("canonical form supports at most " + std::to_string(kMaxCanonicalOrder) +
                " vertices, got " + std::to_string(g.order()));
  }
}

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  require_canonical_order(g);
  const int n = g.order();
  Cells cells(n);
  for (int v = 0; v < n; ++v) cells[v] = g.degree(v);
  // Compress degrees to ranks.
  std::vector<int> degs(cells);
  std::sort(degs.begin(), degs.end());
  degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
  for (int& c : cells) c = static_cast<int>(std::lower_bound(degs.begin(), degs.end(), c) - degs.begin());
  std::optional<std::uint64_t> best;
  Cells best_cells;
  search(g, cells, best, best_cells);
  return best_cells;
}

std::uint64_t canonical_code(const Graph& g) {
  if (g.order() <= 1) return 0;
  return code_of(g, canonical_labeling(g));
}

Graph graph_from_code(int n, std::uint64_t code) {
  Graph g(n);
  int bit = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((code >> --bit) & 1u) g.add_edge(i, j);
  return g;
}

std::string canonical_form(const Graph& g) {
  require_canonical_order(g);
  return write_graph6(graph_from_code(g.order(), canonical_code(g)));
}

namespace {

std::vector<std::uint64_t> extend_level(int n, const std::vector<std::uint64_t>& prev) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t code : prev) {
    Graph base = graph_from_code(n - 1, code);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
      Graph g(n);
      for (auto [u, v] : base.edges()) g.add_edge(u, v);
      for (int v : VertexSet(mask)) g.add_edge(v, n - 1);
      seen.insert(canonical_code(g));
    }
  }
  return {seen.begin(), seen.end()};
}

const std::vector<std::uint64_t>& codes_for(int n) {
  static std::mutex mu;
  static std::vector<std::vector<std::uint64_t>> levels;
  std::lock_guard lock(mu);
  if (levels.empty()) levels.push_back({0});  // n = 1
  while (static_cast<int>(levels.size()) < n) {
    int next = static_cast<int>(levels.size()) + 1;
    levels.push_back(extend_level(next, levels.back()));
  }
  return levels[n - 1];
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, const std::function<bool(const Graph&)>& filter) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw Error("enumerate_graphs supports 1 <= n <= " + std::to_string(kMaxEnumerationOrder));
  }
  std::vector<Graph> out;
  for (std::uint64_t code : codes_for(n)) {
    Graph g = graph_from_code(n, code);
    if (!filter || filter(g)) out.push_back(std::move(g));
  }
  return out;
}

std::uint64_t count_graphs_by_orbits(int n) {
  if (n < 1 || n > 9) throw Error("orbit count supports 1 <= n <= 9");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  auto pair_index = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    // Index of (a, b) in the row-major upper triangle.
    return a * n - a * (a + 1) / 2 + (b - a - 1);
  };
  unsigned __int128 total = 0;
  std::uint64_t perms = 0;
  do {
    std::vector<char> visited(pairs.size(), 0);
    int cycles = 0;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (visited[p]) continue;
      ++cycles;
      std::size_t q = p;
      while (!visited[q]) {
        visited[q] = 1;
        q = pair_index(perm[pairs[q].first], perm[pairs[q].second]);
      }
    }
    total += static_cast<unsigned __int128>(1) << cycles;
    ++perms;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<std::uint64_t>(total / perms);
}

}  // namespace ikg
