#include "ikg/poset.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ikg {

Poset::Poset(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw Error("poset size outside [0, 64]");
}

Poset Poset::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  Poset p(n);
  for (auto [i, j] : pairs) {
    if (i < 0 || j < 0 || i >= n || j >= n) throw Error("poset pair out of range");
    if (i == j) throw CycleError("relation is not irreflexive at " + std::to_string(i), {i});
    p.succ_[i] |= std::uint64_t{1} << j;
  }
  // Warshall closure on rows.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (p.less(i, k)) p.succ_[i] |= p.succ_[k];
  for (int i = 0; i < n; ++i) {
    if (!p.less(i, i)) continue;
    // Witness: shortest cycle through i in the input pairs.
    std::vector<int> parent(n, -1);
    std::vector<int> queue{i};
    VertexSet seen;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int x = queue[h];
      for (auto [a, b] : pairs) {
        if (a != x) continue;
        if (b == i) {
          std::vector<int> cycle{i};
          std::vector<int> back;
          for (int y = x; y != i; y = parent[y]) back.push_back(y);
          cycle.insert(cycle.end(), back.rbegin(), back.rend());
          cycle.push_back(i);
          std::string text;
          for (int v : cycle) text += (text.empty() ? "" : " < ") + std::to_string(v);
          throw CycleError("relation has a cycle: " + text, cycle);
        }
        if (!seen.contains(b)) {
          seen.insert(b);
          parent[b] = x;
          queue.push_back(b);
        }
      }
    }
  }
  return p;
}

Poset Poset::from_successors(int n, const std::vector<VertexSet>& succ) {
  Poset p(n);
  for (int i = 0; i < n; ++i) p.succ_[i] = succ[i].bits();
  for (int i = 0; i < n; ++i) {
    if (p.less(i, i)) throw Error("relation is not irreflexive");
    for (int j : p.successors(i))
      if (!p.successors(j).subset_of(p.successors(i))) throw Error("relation is not transitive");
  }
  return p;
}

VertexSet Poset::predecessors(int i) const {
  VertexSet out;
  for (int j = 0; j < n_; ++j)
    if (less(j, i)) out.insert(j);
  return out;
}

void Poset::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_) {
    throw Error("label count does not match poset size");
  }
  labels_ = std::move(labels);
}

std::string Poset::name(int i) const { return labels_.empty() ? std::to_string(i) : labels_[i]; }

std::vector<std::pair<int, int>> Poset::relations() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j : successors(i)) out.emplace_back(i, j);
  return out;
}

bool Poset::operator==(const Poset& other) const {
  if (n_ != other.n_) return false;
  for (int i = 0; i < n_; ++i)
    if (succ_[i] != other.succ_[i]) return false;
  return true;
}

Graph incomparability_graph(const Poset& p) {
  Graph g(p.size());
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j)
      if (!p.comparable(i, j)) g.add_edge(i, j);
  g.set_labels(p.labels());
  return g;
}

Graph comparability_graph(const Poset& p) {
  Graph g(p.size());
  for (auto [i, j] : p.relations()) g.add_edge(i, j);
  g.set_labels(p.labels());
  return g;
}

VertexSet incomparables(const Poset& p, int x) { return incomparables_within(p, x, p.elements()); }

VertexSet incomparables_within(const Poset& p, int x, VertexSet within) {
  return within - p.successors(x) - p.predecessors(x) - VertexSet::single(x);
}

bool is_minimal_within(const Poset& p, int x, VertexSet within) {
  return !p.predecessors(x).intersects(within);
}

RestrictedPoset restrict_to(const Poset& p, VertexSet kept) {
  RestrictedPoset out;
  for (int v : kept) out.original.push_back(v);
  const int m = static_cast<int>(out.original.size());
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (p.less(out.original[a], out.original[b])) pairs.emplace_back(a, b);
  out.poset = Poset::from_pairs(m, pairs);
  if (!p.labels().empty()) {
    std::vector<std::string> labels;
    for (int v : out.original) labels.push_back(p.labels()[v]);
    out.poset.set_labels(std::move(labels));
  }
  return out;
}

RestrictedPoset restrict_poset(const Poset& p, const std::vector<int>& removed) {
  VertexSet gone;
  for (int v : removed) {
    if (v < 0 || v >= p.size()) throw Error("restrict: element " + std::to_string(v) + " out of range");
    if (gone.contains(v)) throw Error("restrict: element " + std::to_string(v) + " listed twice");
    gone.insert(v);
  }
  return restrict_to(p, p.elements() - gone);
}

namespace {

void sort_chain(const Poset& p, Chain& c) {
  std::sort(c.begin(), c.end(), [&](int a, int b) { return p.less(a, b); });
}

}  // namespace

std::optional<std::vector<Chain>> decompose_into_chains(const Poset& p, VertexSet s) {
  std::vector<Chain> chains;
  VertexSet assigned;
  for (int v : s) {
    if (assigned.contains(v)) continue;
    // The chain of v is everything in s comparable to v.
    VertexSet block = (p.successors(v) | p.predecessors(v) | VertexSet::single(v)) & s;
    for (int w : block) {
      VertexSet other = (p.successors(w) | p.predecessors(w) | VertexSet::single(w)) & s;
      if (other != block) return std::nullopt;
    }
    Chain c(block.begin(), block.end());
    sort_chain(p, c);
    chains.push_back(std::move(c));
    assigned |= block;
  }
  return chains;
}

int ChainCover::chain_of(int v) const {
  for (int c = 0; c < size(); ++c)
    if (std::find(chains[c].begin(), chains[c].end(), v) != chains[c].end()) return c;
  return -1;
}

bool is_chain_cover(const Poset& p, const ChainCover& cover) {
  VertexSet seen;
  for (const Chain& c : cover.chains) {
    if (c.empty()) return false;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 0 || c[i] >= p.size() || seen.contains(c[i])) return false;
      seen.insert(c[i]);
      if (i > 0 && !p.less(c[i - 1], c[i])) return false;
    }
  }
  return seen == p.elements();
}

MinimumChainCover minimum_chain_cover(const Poset& p, bool reverse) {
  const int n = p.size();
  std::vector<int> match_right(n, -1);  // right copy j matched with left i (i < j)
  std::vector<int> match_left(n, -1);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = reverse ? n - 1 - i : i;

  std::function<bool(int, VertexSet&)> augment = [&](int i, VertexSet& visited) -> bool {
    for (int j : order) {
      if (!p.less(i, j) || visited.contains(j)) continue;
      visited.insert(j);
      if (match_right[j] == -1 || augment(match_right[j], visited)) {
        match_right[j] = i;
        match_left[i] = j;
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (int i : order) {
    VertexSet visited;
    if (augment(i, visited)) ++matched;
  }
  MinimumChainCover out;
  out.width = n - matched;
  for (int i = 0; i < n; ++i) {
    if (match_right[i] != -1) continue;  // not a chain head
    Chain c;
    for (int v = i; v != -1; v = match_left[v]) c.push_back(v);
    out.cover.chains.push_back(std::move(c));
  }
  return out;
}

std::vector<std::pair<int, int>> hasse_edges(const Poset& p) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < p.size(); ++i) {
    for (int j : p.successors(i)) {
      bool covered = true;
      for (int z : p.successors(i)) {
        if (p.less(z, j)) {
          covered = false;
          break;
        }
      }
      if (covered) out.emplace_back(i, j);
    }
  }
  return out;
}

Poset parse_poset(std::istream& in) {
  std::string line;
  std::size_t offset = 0;
  int n = -1;
  std::vector<std::pair<int, int>> pairs;
  while (std::getline(in, line)) {
    const std::size_t here = offset;
    offset += line.size() + 1;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n) || n < 0 || n > kMaxVertices) throw DecodeError("poset: bad element count", here);
      continue;
    }
    int i = 0;
    int j = 0;
    char op = 0;
    if (!(ls >> i >> op >> j) || op != '<') throw DecodeError("poset: expected \"i < j\"", here);
    std::string rest;
    if (ls >> rest) throw DecodeError("poset: trailing text", here);
    if (i < 0 || j < 0 || i >= n || j >= n) throw DecodeError("poset: element out of range", here);
    pairs.emplace_back(i, j);
  }
  if (n < 0) throw DecodeError("poset: missing element count", 0);
  return Poset::from_pairs(n, pairs);
}

std::string write_poset(const Poset& p) {
  std::ostringstream os;
  os << p.size() << '\n';
  for (auto [i, j] : hasse_edges(p)) os << i << " < " << j << '\n';
  return os.str();
}

std::string hasse_dot(const Poset& p, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=BT;\n";
  for (int i = 0; i < p.size(); ++i) os << "  " << i << " [label=\"" << p.name(i) << "\"];\n";
  for (auto [i, j] : hasse_edges(p)) os << "  " << i << " -> " << j << ";\n";
  os << "}\n";
  return os.str();
}

Poset crown3() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) pairs.emplace_back(i, 3 + j);
  Poset p = Poset::from_pairs(6, pairs);
  p.set_labels({"a1", "a2", "a3", "b1", "b2", "b3"});
  return p;
}

Poset chain_poset(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Poset::from_pairs(n, pairs);
}

Poset antichain_poset(int n) { return Poset(n); }

}  // namespace ikg
