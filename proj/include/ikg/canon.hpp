#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ikg/graph.hpp"

namespace ikg {

inline constexpr int kMaxCanonicalOrder = 11;
inline constexpr int kMaxEnumerationOrder = 8;

// Lexicographically least upper-triangle adjacency string (graph6 bit order)
// over all relabelings, packed MSB-first. Requires n <= 11.
std::uint64_t canonical_code(const Graph& g);

// The relabeling of g achieving canonical_code (vertex v -> position).
std::vector<int> canonical_labeling(const Graph& g);

// graph6 text of the canonically relabeled graph. Equal iff isomorphic.
std::string canonical_form(const Graph& g);

Graph graph_from_code(int n, std::uint64_t code);

// One representative per isomorphism class on n vertices, sorted by
// canonical code, built by one-vertex extension with canonical dedup.
std::vector<Graph> enumerate_graphs(int n,
                                    const std::function<bool(const Graph&)>& filter = {});

// Number of isomorphism classes of n-vertex graphs by orbit counting over
// every vertex permutation; independent of canonical_code.
std::uint64_t count_graphs_by_orbits(int n);

}  // namespace ikg
