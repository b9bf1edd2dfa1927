#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ikg/graph.hpp"

namespace ikg {

// Strict partial order on elements 0..n-1, stored transitively closed:
// row i holds every j with i < j.
class Poset {
 public:
  Poset() = default;
  explicit Poset(int n);

  // Transitive closure of the given pairs. Throws CycleError if the closure
  // is not irreflexive.
  static Poset from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);
  // From an already closed relation given as successor rows; validated.
  static Poset from_successors(int n, const std::vector<VertexSet>& succ);

  int size() const { return n_; }
  VertexSet elements() const { return VertexSet::range(n_); }

  bool less(int i, int j) const { return (succ_[i] >> j) & 1u; }
  bool comparable(int i, int j) const { return less(i, j) || less(j, i); }
  bool incomparable(int i, int j) const { return i != j && !comparable(i, j); }
  VertexSet successors(int i) const { return VertexSet(succ_[i]); }
  VertexSet predecessors(int i) const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  std::string name(int i) const;

  std::vector<std::pair<int, int>> relations() const;

  bool operator==(const Poset& other) const;

 private:
  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> succ_{};
  std::vector<std::string> labels_;
};

class CycleError : public Error {
 public:
  CycleError(const std::string& what, std::vector<int> cycle)
      : Error(what), cycle_(std::move(cycle)) {}
  const std::vector<int>& cycle() const { return cycle_; }

 private:
  std::vector<int> cycle_;
};

Graph incomparability_graph(const Poset& p);
Graph comparability_graph(const Poset& p);

// y != x with x || y.
VertexSet incomparables(const Poset& p, int x);
// Incomparables of x among the elements of `within`.
VertexSet incomparables_within(const Poset& p, int x, VertexSet within);

bool is_minimal_within(const Poset& p, int x, VertexSet within);

struct RestrictedPoset {
  Poset poset;
  std::vector<int> original;  // new index -> original element
};

RestrictedPoset restrict_poset(const Poset& p, const std::vector<int>& removed);
RestrictedPoset restrict_to(const Poset& p, VertexSet kept);

using Chain = std::vector<int>;  // strictly increasing under the order

// Partition of s into chains with no comparabilities between different
// chains, if one exists. Chains are listed by least element index.
std::optional<std::vector<Chain>> decompose_into_chains(const Poset& p, VertexSet s);

struct ChainCover {
  std::vector<Chain> chains;

  int size() const { return static_cast<int>(chains.size()); }
  // Index of the chain holding element v, or -1.
  int chain_of(int v) const;
  bool operator==(const ChainCover&) const = default;
};

bool is_chain_cover(const Poset& p, const ChainCover& cover);

struct MinimumChainCover {
  ChainCover cover;
  int width = 0;
};

// Dilworth via maximum bipartite matching on the closed relation; augmenting
// paths are tried in increasing index order, or decreasing when `reverse`.
MinimumChainCover minimum_chain_cover(const Poset& p, bool reverse = false);

// Transitive reduction.
std::vector<std::pair<int, int>> hasse_edges(const Poset& p);

// Text format: first line n, then one "i < j" per line.
Poset parse_poset(std::istream& in);
std::string write_poset(const Poset& p);

std::string hasse_dot(const Poset& p, const std::string& name = "P");

// The 3-crown: minima a1 a2 a3 (0..2), maxima b1 b2 b3 (3..5), ai < bj iff i != j.
Poset crown3();
Poset chain_poset(int n);
Poset antichain_poset(int n);

}  // namespace ikg
