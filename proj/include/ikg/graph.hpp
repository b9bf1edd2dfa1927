#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ikg/error.hpp"
#include "ikg/vertex_set.hpp"

namespace ikg {

// Finite simple graph on vertices 0..n-1, adjacency stored as one word per row.
// Labels are display names only and never take part in comparisons.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  VertexSet closed_neighborhood(int v) const { return neighbors(v) | VertexSet::single(v); }
  int degree(int v) const { return neighbors(v).size(); }
  int edge_count() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  // Display name: the label if one was set, otherwise the index.
  std::string name(int v) const;
  std::optional<int> find_label(const std::string& label) const;

  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& other) const;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
  std::vector<std::string> labels_;
};

// Graph from an explicit edge list; convenience for fixtures and tests.
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

// A family of disjoint vertex sets, typically the interval classes.
struct PartiteStructure {
  std::vector<VertexSet> classes;

  // Index of the class holding v, or -1.
  int class_of(int v) const;
  // Classes are pairwise disjoint independent sets covering all of g.
  bool valid_for(const Graph& g) const;
};

PartiteStructure partition_from_labels(const std::vector<int>& class_of_vertex);

Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> original;  // new index -> original vertex
};

InducedSubgraph induced(const Graph& g, VertexSet s);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
// 2-colouring by BFS from the lowest vertex of each component; nullopt if odd cycle.
std::optional<PartiteStructure> bipartition(const Graph& g);

int chromatic_number(const Graph& g);
// A proper colouring with chromatic_number(g) colours.
std::vector<int> optimal_colouring(const Graph& g);

std::optional<PartiteStructure> is_complete_multipartite(const Graph& g);

// Injective map pattern-vertex -> g-vertex under which the induced subgraph of g
// equals pattern. Lexicographically least embedding is returned.
std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& pattern);

struct WeakChordalityResult {
  bool weakly_chordal = true;
  std::vector<int> cycle;        // induced cycle of length >= 5 on failure
  bool in_complement = false;    // cycle lives in complement(g)
};

// Induced cycle of length >= min_length in g (vertices in cycle order), if any.
std::optional<std::vector<int>> find_long_induced_cycle(const Graph& g, int min_length);
WeakChordalityResult is_weakly_chordal(const Graph& g);

// Vertices of a shortest u-v path inside `allowed`, or empty if none.
std::vector<int> shortest_path(const Graph& g, int u, int v, VertexSet allowed);

std::string to_dot(const Graph& g, const std::string& name = "G");

}  // namespace ikg
