#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ikg/graph.hpp"
#include "ikg/poset.hpp"

namespace ikg {

// An orientation of every edge of a host graph; row u holds the heads v of arcs u -> v.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(int n) : n_(n) {}

  int order() const { return n_; }
  bool arc(int u, int v) const { return (out_[u] >> v) & 1u; }
  VertexSet out(int u) const { return VertexSet(out_[u]); }
  void set_arc(int u, int v) { out_[u] |= std::uint64_t{1} << v; }

  std::vector<std::pair<int, int>> arcs() const;
  // Every host edge is oriented exactly once and nothing else is.
  bool covers(const Graph& host) const;

  bool operator==(const Orientation& other) const;
  bool operator<(const Orientation& other) const;

 private:
  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> out_{};
};

// Triple scan: u->v, v->w forces uw to be a host edge oriented u->w.
bool is_transitive_orientation(const Graph& host, const Orientation& o);

Poset poset_from_orientation(const Orientation& o);

std::optional<Orientation> find_transitive_orientation(const Graph& g);

struct OrientationEnumeration {
  std::vector<Orientation> orientations;
  bool truncated = false;
};

// Every transitive orientation, in lexicographic branching order, up to `limit`.
OrientationEnumeration all_transitive_orientations(const Graph& g, std::size_t limit);

// Calls visit on each transitive orientation until it returns false or the
// limit is reached. Returns {visited count, truncated}.
struct VisitResult {
  std::size_t visited = 0;
  bool truncated = false;
  bool stopped = false;
};
VisitResult visit_transitive_orientations(const Graph& g, std::size_t limit,
                                          const std::function<bool(const Orientation&)>& visit);

// A poset whose incomparability graph is g.
std::optional<Poset> is_cocomparability(const Graph& g);

struct AsteroidCertificate {
  std::vector<int> vertices;            // v_0 .. v_{2t}
  std::vector<std::vector<int>> paths;  // paths[i] runs v_i .. v_{i+1}

  int length() const { return static_cast<int>(vertices.size()); }
};

// Smallest odd length first, then lexicographically least vertex tuple.
std::optional<AsteroidCertificate> find_odd_asteroid(const Graph& g, int max_len);

// Shortest-path certificate for a prescribed vertex sequence, if that
// sequence carries an odd asteroid.
std::optional<AsteroidCertificate> asteroid_on(const Graph& g, const std::vector<int>& vertices);

bool verify_asteroid(const Graph& g, const AsteroidCertificate& cert);

std::string asteroid_to_text(const Graph& g, const AsteroidCertificate& cert);

}  // namespace ikg
