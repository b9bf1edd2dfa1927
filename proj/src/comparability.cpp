#include "ikg/comparability.hpp"

#include <algorithm>
#include <sstream>

namespace ikg {

std::vector<std::pair<int, int>> Orientation::arcs() const {
  std::vector<std::pair<int, int>> result;
  for (int u = 0; u < n_; ++u)
    for (int v : out(u)) result.emplace_back(u, v);
  return result;
}

bool Orientation::covers(const Graph& host) const {
  if (host.order() != n_) return false;
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      const bool e = u != v && host.adjacent(u, v);
      const bool oriented = arc(u, v) || arc(v, u);
      if (e != oriented) return false;
      if (arc(u, v) && arc(v, u)) return false;
    }
  }
  return true;
}

bool Orientation::operator==(const Orientation& other) const {
  if (n_ != other.n_) return false;
  for (int u = 0; u < n_; ++u)
    if (out_[u] != other.out_[u]) return false;
  return true;
}

bool Orientation::operator<(const Orientation& other) const {
  if (n_ != other.n_) return n_ < other.n_;
  for (int u = 0; u < n_; ++u)
    if (out_[u] != other.out_[u]) return out_[u] < other.out_[u];
  return false;
}

bool is_transitive_orientation(const Graph& host, const Orientation& o) {
  if (!o.covers(host)) return false;
  const int n = host.order();
  for (int u = 0; u < n; ++u)
    for (int v : o.out(u))
      for (int w : o.out(v))
        if (!o.arc(u, w)) return false;
  return true;
}

Poset poset_from_orientation(const Orientation& o) {
  std::vector<VertexSet> succ(o.order());
  for (int u = 0; u < o.order(); ++u) succ[u] = o.out(u);
  return Poset::from_successors(o.order(), succ);
}

namespace {

// Partial orientation under Gamma-forcing and transitive forcing.
struct SearchState {
  std::array<std::uint64_t, kMaxVertices> out{};
  std::array<std::uint64_t, kMaxVertices> in{};

  bool arc(int u, int v) const { return (out[u] >> v) & 1u; }
  bool oriented(int u, int v) const { return arc(u, v) || arc(v, u); }
};

bool force(const Graph& g, SearchState& s, int u0, int v0) {
  std::vector<std::pair<int, int>> queue{{u0, v0}};
  auto set = [&](int u, int v) {
    if (s.arc(v, u)) return false;
    if (s.arc(u, v)) return true;
    s.out[u] |= std::uint64_t{1} << v;
    s.in[v] |= std::uint64_t{1} << u;
    queue.emplace_back(u, v);
    return true;
  };
  if (s.arc(v0, u0)) return false;
  if (s.arc(u0, v0)) return true;
  queue.clear();
  if (!set(u0, v0)) return false;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    auto [u, v] = queue[h];
    // Gamma: edges sharing an endpoint whose far ends are non-adjacent.
    for (int w : g.neighbors(u) - g.closed_neighborhood(v))
      if (!set(u, w)) return false;
    for (int w : g.neighbors(v) - g.closed_neighborhood(u))
      if (!set(w, v)) return false;
    for (int w : VertexSet(s.out[v])) {
      if (!g.adjacent(u, w) || !set(u, w)) return false;
    }
    for (int w : VertexSet(s.in[u])) {
      if (!g.adjacent(w, v) || !set(w, v)) return false;
    }
  }
  return true;
}

Orientation to_orientation(int n, const SearchState& s) {
  Orientation o(n);
  for (int u = 0; u < n; ++u)
    for (int v : VertexSet(s.out[u])) o.set_arc(u, v);
  return o;
}

struct Enumerator {
  const Graph& g;
  std::size_t limit;
  const std::function<bool(const Orientation&)>& visit;
  VisitResult result;

  // Returns false once enumeration must stop.
  bool dfs(const SearchState& s) {
    const int n = g.order();
    for (int u = 0; u < n; ++u) {
      for (int v : g.neighbors(u)) {
        if (v < u || s.oriented(u, v)) continue;
        for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
          SearchState child = s;
          if (force(g, child, a, b) && !dfs(child)) return false;
        }
        return true;
      }
    }
    Orientation o = to_orientation(n, s);
    if (!is_transitive_orientation(g, o)) return true;
    if (result.visited == limit) {
      result.truncated = true;
      return false;
    }
    ++result.visited;
    if (!visit(o)) {
      result.stopped = true;
      return false;
    }
    return true;
  }
};

}  // namespace

VisitResult visit_transitive_orientations(const Graph& g, std::size_t limit,
                                          const std::function<bool(const Orientation&)>& visit) {
  Enumerator e{g, limit, visit, {}};
  e.dfs(SearchState{});
  return e.result;
}

OrientationEnumeration all_transitive_orientations(const Graph& g, std::size_t limit) {
  OrientationEnumeration out;
  auto r = visit_transitive_orientations(g, limit, [&](const Orientation& o) {
    out.orientations.push_back(o);
    return true;
  });
  out.truncated = r.truncated;
  return out;
}

std::optional<Orientation> find_transitive_orientation(const Graph& g) {
  std::optional<Orientation> found;
  visit_transitive_orientations(g, 1, [&](const Orientation& o) {
    found = o;
    return false;
  });
  return found;
}

std::optional<Poset> is_cocomparability(const Graph& g) {
  auto o = find_transitive_orientation(complement(g));
  if (!o) return std::nullopt;
  Poset p = poset_from_orientation(*o);
  p.set_labels(g.labels());
  return p;
}

namespace {

// comp[c][v]: component id of v in g - N[c], or -1 when v is in N[c].
using AvoidComponents = std::vector<std::vector<int>>;

AvoidComponents avoid_components(const Graph& g) {
  const int n = g.order();
  AvoidComponents comp(n, std::vector<int>(n, -1));
  for (int c = 0; c < n; ++c) {
    VertexSet allowed = g.vertices() - g.closed_neighborhood(c);
    int id = 0;
    for (int s : allowed) {
      if (comp[c][s] != -1) continue;
      std::vector<int> stack{s};
      comp[c][s] = id;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : g.neighbors(x) & allowed) {
          if (comp[c][y] == -1) {
            comp[c][y] = id;
            stack.push_back(y);
          }
        }
      }
      ++id;
    }
  }
  return comp;
}

// Path j joins v_j and v_{j+1} while avoiding N[v_{j-t}], with m = 2t + 1.
bool path_ok(const AvoidComponents& comp, const std::vector<int>& v, int m, int j) {
  const int t = (m - 1) / 2;
  const int avoid = v[((j - t) % m + m) % m];
  const int a = v[j];
  const int b = v[(j + 1) % m];
  return comp[avoid][a] != -1 && comp[avoid][a] == comp[avoid][b];
}

AsteroidCertificate certificate_for(const Graph& g, const std::vector<int>& v) {
  const int m = static_cast<int>(v.size());
  const int t = (m - 1) / 2;
  AsteroidCertificate cert;
  cert.vertices = v;
  for (int j = 0; j < m; ++j) {
    const int avoid = v[((j - t) % m + m) % m];
    cert.paths.push_back(
        shortest_path(g, v[j], v[(j + 1) % m], g.vertices() - g.closed_neighborhood(avoid)));
  }
  return cert;
}

bool search_tuple(const AvoidComponents& comp, int n, int m, std::vector<int>& v, VertexSet used) {
  const int k = static_cast<int>(v.size());
  if (k == m) {
    for (int j = 0; j < m; ++j)
      if (!path_ok(comp, v, m, j)) return false;
    return true;
  }
  const int t = (m - 1) / 2;
  for (int x = v.empty() ? 0 : v[0] + 1; x < n; ++x) {
    if (used.contains(x)) continue;
    v.push_back(x);
    // Check the constraints whose last-assigned index is k.
    bool ok = true;
    for (int j = 0; j < m && ok; ++j) {
      const int last = std::max({j, (j + 1) % m, ((j - t) % m + m) % m});
      if (last == k) ok = path_ok(comp, v, m, j);
    }
    if (ok && search_tuple(comp, n, m, v, used | VertexSet::single(x))) return true;
    v.pop_back();
  }
  return false;
}

}  // namespace

std::optional<AsteroidCertificate> find_odd_asteroid(const Graph& g, int max_len) {
  const int n = g.order();
  if (max_len > n) max_len = n;
  if (n == 0) return std::nullopt;
  const AvoidComponents comp = avoid_components(g);
  for (int m = 3; m <= max_len; m += 2) {
    std::vector<int> v;
    // v_0 is the least vertex of the tuple; every rotation of an asteroid is one.
    for (int first = 0; first < n; ++first) {
      v.assign(1, first);
      if (search_tuple(comp, n, m, v, VertexSet::single(first))) return certificate_for(g, v);
    }
  }
  return std::nullopt;
}

std::optional<AsteroidCertificate> asteroid_on(const Graph& g, const std::vector<int>& vertices) {
  const int m = static_cast<int>(vertices.size());
  if (m < 3 || m % 2 == 0) return std::nullopt;
  VertexSet seen;
  for (int v : vertices) {
    if (v < 0 || v >= g.order() || seen.contains(v)) return std::nullopt;
    seen.insert(v);
  }
  const AvoidComponents comp = avoid_components(g);
  for (int j = 0; j < m; ++j)
    if (!path_ok(comp, vertices, m, j)) return std::nullopt;
  return certificate_for(g, vertices);
}

bool verify_asteroid(const Graph& g, const AsteroidCertificate& cert) {
  const int m = cert.length();
  if (m < 3 || m % 2 == 0 || static_cast<int>(cert.paths.size()) != m) return false;
  const int t = (m - 1) / 2;
  VertexSet seen;
  for (int v : cert.vertices) {
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (int j = 0; j < m; ++j) {
    const auto& path = cert.paths[j];
    if (path.empty() || path.front() != cert.vertices[j] || path.back() != cert.vertices[(j + 1) % m]) {
      return false;
    }
    VertexSet on_path;
    for (std::size_t s = 0; s < path.size(); ++s) {
      if (path[s] < 0 || path[s] >= g.order() || on_path.contains(path[s])) return false;
      on_path.insert(path[s]);
      if (s > 0 && !g.adjacent(path[s - 1], path[s])) return false;
    }
    // N(v_i) and P_{i+t} are disjoint; v_i itself is also kept off the path.
    const int i = ((j - t) % m + m) % m;
    if (on_path.intersects(g.closed_neighborhood(cert.vertices[i]))) return false;
  }
  return true;
}

std::string asteroid_to_text(const Graph& g, const AsteroidCertificate& cert) {
  std::ostringstream os;
  os << "{\n  \"length\": " << cert.length() << ",\n  \"vertices\": [";
  for (std::size_t i = 0; i < cert.vertices.size(); ++i)
    os << (i ? ", " : "") << '"' << g.name(cert.vertices[i]) << '"';
  os << "],\n  \"paths\": [";
  for (std::size_t j = 0; j < cert.paths.size(); ++j) {
    os << (j ? ",\n            [" : "[");
    for (std::size_t s = 0; s < cert.paths[j].size(); ++s)
      os << (s ? ", " : "") << '"' << g.name(cert.paths[j][s]) << '"';
    os << ']';
  }
  os << "]\n}\n";
  return os.str();
}

}  // namespace ikg
