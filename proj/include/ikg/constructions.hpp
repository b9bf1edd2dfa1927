#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ikg/comparability.hpp"
#include "ikg/graph.hpp"
#include "ikg/poset.hpp"
#include "ikg/representations.hpp"

namespace ikg {

// Vertex order in which, whenever v_i v_k is an edge and i < j < k, v_j is
// adjacent to each of v_i, v_k lying in a different partite class than v_j.
struct Statement5Ordering {
  std::vector<int> order;
  PartiteStructure partite;
};

struct OrderingViolation {
  int i = 0;  // positions in the order, i < j < k
  int j = 0;
  int k = 0;
};

std::optional<OrderingViolation> ordering_violation(const Graph& g, const std::vector<int>& order,
                                                    const PartiteStructure& partite);

// Backtracking over prefixes. Throws if the partition is not valid for g.
std::optional<Statement5Ordering> find_statement5_ordering(const Graph& g, const PartiteStructure& partition);

// Respaces endpoints onto distinct integers when any two coincide (returns
// rep unchanged otherwise). Intersections, disjointness and proper
// containments all survive; equal intervals end up crossing.
IntervalKRep with_distinct_endpoints(const IntervalKRep& rep);

// Unit intervals [L, L + 1] from the difference system on left endpoints.
// L increases along the ordering when some unit model allows it; otherwise
// along the first re-interleaving of the two classes that does, so L always
// increases along the ordering within each class.
IntervalKRep unit_bigraph_from_ordering(const Graph& g, const Statement5Ordering& ord);

// Class 0 joins l on the first channel to r on the second; class 1 joins r to l.
PermutationRep permutation_from_class_proper_2(const IntervalKRep& rep);

// Vertices by position on the first channel.
Statement5Ordering ordering_from_permutation(const PermutationRep& rep, const PartiteStructure& partition);

// Vertices by left endpoint of a proper representation.
Statement5Ordering ordering_from_proper_rep(const IntervalKRep& rep);

struct DominatingPair {
  int first = 0;
  int last = 0;
  std::vector<int> path;
};

bool dominates(const Graph& g, const std::vector<int>& path);
DominatingPair dominating_pair(const Graph& g, const Statement5Ordering& ord);

// Orients each non-edge uv as u -> v when r(u) < l(v), or when u, v share a
// class and r(u) < r(v). Verified transitive before returning.
Orientation orientation_from_class_proper(const IntervalKRep& rep, const Graph& g);

// Curves over k+1 levels; requires k >= 3.
FunctionRep function_rep_from_class_proper(const IntervalKRep& rep);

bool is_elimination_ordering(const Graph& g, const std::vector<int>& order);
// Order where each closed neighbourhood is complete multipartite in the
// graph that remains; least vertex first at every step.
std::optional<std::vector<int>> elimination_ordering(const Graph& g);

using Labeling = std::vector<int>;  // position -> element

bool is_cor41_labeling(const Poset& p, const Labeling& lab);
// Each element, in turn, minimal in what remains with its incomparables there
// decomposing into chains.
std::optional<Labeling> cor41_labeling(const Poset& p);

struct ComplianceViolation {
  int position = 0;      // index into the labeling
  Chain chain;           // chain of the decomposition split across cover chains
};

std::optional<ComplianceViolation> cover_compliance(const Poset& p, const Labeling& lab, const ChainCover& cover);

ChainCover repair_chain_cover(const Poset& p, const Labeling& lab, const ChainCover& cover);

// I(v_i) = [mu(i) - (1 - i/n), i] with 1-based positions and mu(i) the least
// position incomparable-or-equal to v_i; class = index of the cover chain.
IntervalKRep intervals_from_labeled_poset(const Poset& p, const Labeling& lab, const ChainCover& cover);

struct ClassProperBuild {
  enum class Status { found, none, truncated };

  Status status = Status::none;
  IntervalKRep rep;
  Poset poset;
  Labeling labeling;
  ChainCover cover;
  std::size_t orientations_tried = 0;

  bool found() const { return status == Status::found; }
};

inline constexpr std::size_t kDefaultOrientationLimit = 1'000'000;

ClassProperBuild build_class_proper_rep(const Graph& g, std::size_t orientation_limit = kDefaultOrientationLimit);

}  // namespace ikg
