#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "ikg/graph.hpp"
#include "ikg/poset.hpp"

namespace ikg {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);
// "a/b" or "a".
Rational parse_rational(const std::string& text);

struct Interval {
  Rational left;
  Rational right;

  bool intersects(const Interval& o) const { return left <= o.right && o.left <= right; }
  // o is a subset of *this and not equal to it.
  bool properly_contains(const Interval& o) const {
    return left <= o.left && o.right <= right && (left != o.left || right != o.right);
  }
  Rational length() const { return right - left; }
  bool operator==(const Interval&) const = default;
};

// Closed interval per vertex plus its interval class in [0, k).
struct IntervalKRep {
  int k = 1;
  std::vector<Interval> intervals;
  std::vector<int> classes;
  std::vector<std::string> labels;

  int size() const { return static_cast<int>(intervals.size()); }
  void add(Interval iv, int cls) {
    intervals.push_back(iv);
    classes.push_back(cls);
  }
  std::string name(int v) const { return labels.empty() ? std::to_string(v) : labels[v]; }
  // Throws on l > r or a class index outside [0, k).
  void validate() const;
};

// The graph an interval k-representation realizes.
Graph represented_graph(const IntervalKRep& rep);

struct Discrepancy {
  int u = 0;
  int v = 0;
  bool edge_in_graph = false;  // the rep says the opposite
};

struct Realization {
  bool ok = true;
  std::optional<Discrepancy> first_mismatch;
};

Realization realizes(const IntervalKRep& rep, const Graph& g);

struct Containment {
  int outer = 0;
  int inner = 0;
};

// Same-class pair with one interval properly containing the other, if any.
std::optional<Containment> class_containment(const IntervalKRep& rep);
bool is_class_proper(const IntervalKRep& rep);
bool is_proper(const IntervalKRep& rep);
bool is_unit(const IntervalKRep& rep);

// Segment between two parallel channels; vertex v runs from top[v] to bottom[v].
struct PermutationRep {
  std::vector<Rational> top;
  std::vector<Rational> bottom;

  int size() const { return static_cast<int>(top.size()); }
};

bool segments_cross(const PermutationRep& rep, int u, int v);
// Throws Error if a channel carries a repeated position.
bool permutation_realizes(const PermutationRep& rep, const Graph& g);

// Piecewise-linear curve per vertex through k+1 levels at heights 0..k.
struct FunctionRep {
  int k = 0;
  std::vector<std::vector<Rational>> abscissae;  // [vertex][level]

  int size() const { return static_cast<int>(abscissae.size()); }
};

bool curves_intersect(const FunctionRep& rep, int u, int v);
// f_u < f_v at every height.
bool curve_left_of(const FunctionRep& rep, int u, int v);
bool function_realizes(const FunctionRep& rep, const Graph& g);

// Text format: header "k n", then per vertex "label class l_num/l_den r_num/r_den".
IntervalKRep parse_interval_rep(std::istream& in);
std::string write_interval_rep(const IntervalKRep& rep);

}  // namespace ikg
