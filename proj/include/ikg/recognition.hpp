#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ikg/constructions.hpp"
#include "ikg/graph.hpp"
#include "ikg/poset.hpp"
#include "ikg/representations.hpp"

namespace ikg {

// Exactly one of witness / certificate is set. `incomplete` marks a search
// that hit its budget; such a verdict is neither a pass nor a failure.
struct RecognitionVerdict {
  bool is_member = false;
  std::optional<IntervalKRep> witness;
  std::optional<Poset> order;  // set by the cocomparability-based recognizers
  std::optional<std::string> certificate;
  bool incomplete = false;
};

inline constexpr int kAnyK = 0;

// Bron-Kerbosch with pivoting; sorted by bitmask.
std::vector<VertexSet> maximal_cliques(const Graph& g);

// Consecutive arrangement of maximal cliques. Witness: one class per vertex,
// v -> [first clique, last clique].
RecognitionVerdict is_interval_graph(const Graph& g);

// Partitions of V into independent sets, at most max_classes of them
// (kAnyK = unbounded), in restricted-growth order. With maximal_only, drops
// partitions in which two classes could be merged.
std::vector<PartiteStructure> independent_partitions(const Graph& g, int max_classes, bool maximal_only);

// Interval model for a fixed class assignment: endpoint sweep over
// (opened, closed) states. Endpoints are distinct integers.
std::optional<IntervalKRep> interval_model_for_partition(const Graph& g, const PartiteStructure& partition);

// Interval k-graph with at most k classes (kAnyK = any number). Only
// non-mergeable partitions are tried; merging two classes drops constraints.
RecognitionVerdict is_interval_k_graph(const Graph& g, int k);
// Same question over every independent partition, not only the maximal ones.
RecognitionVerdict is_interval_k_graph_all_partitions(const Graph& g, int k);
// Literal method: every supergraph adding same-class pairs, tested with
// is_interval_graph. Exponential in the same-class non-edges; small n only.
RecognitionVerdict is_interval_k_graph_by_fill_in(const Graph& g, int k);

// Vertex orderings with intersection runs; witness l = i, r = t_i + i/(2n).
RecognitionVerdict is_proper_interval_k_graph(const Graph& g, int k);
// Vertex orderings with exact difference constraints on left endpoints.
RecognitionVerdict is_unit_interval_k_graph(const Graph& g, int k);

// Class-proper membership through the labeled-order pipeline.
RecognitionVerdict class_proper_verdict(const Graph& g, std::size_t orientation_limit = kDefaultOrientationLimit);

Graph c6bar_pattern();
Graph p3bar2_pattern();
std::optional<std::vector<int>> find_c6bar(const Graph& g);
std::optional<std::vector<int>> find_2p3bar(const Graph& g);

// Requires a 3-chromatic cocomparability graph; throws Error otherwise.
RecognitionVerdict thm43_recognize(const Graph& g, std::size_t orientation_limit = kDefaultOrientationLimit);

RecognitionVerdict is_cocomparability_interval_k(const Graph& g);

}  // namespace ikg
