#include "ikg/representations.hpp"

#include <set>
#include <sstream>

namespace ikg {

std::string to_string(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

Rational parse_rational(const std::string& text) {
  std::size_t slash = text.find('/');
  try {
    std::size_t used = 0;
    std::int64_t num = std::stoll(text.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? text.size() : slash)) throw Error("bad rational");
    std::int64_t den = 1;
    if (slash != std::string::npos) {
      std::string d = text.substr(slash + 1);
      den = std::stoll(d, &used);
      if (used != d.size()) throw Error("bad rational");
    }
    if (den == 0) throw Error("zero denominator");
    return Rational(num, den);
  } catch (const std::logic_error&) {
    throw Error("not a rational: \"" + text + "\"");
  }
}

void IntervalKRep::validate() const {
  if (k < 1) throw Error("representation needs k >= 1");
  if (classes.size() != intervals.size()) throw Error("class list and interval list differ in length");
  if (!labels.empty() && labels.size() != intervals.size()) throw Error("label count mismatch");
  for (int v = 0; v < size(); ++v) {
    if (intervals[v].left > intervals[v].right) throw Error("interval of " + name(v) + " has l > r");
    if (classes[v] < 0 || classes[v] >= k) throw Error("class of " + name(v) + " outside [0, k)");
  }
}

Graph represented_graph(const IntervalKRep& rep) {
  Graph g(rep.size());
  for (int u = 0; u < rep.size(); ++u)
    for (int v = u + 1; v < rep.size(); ++v)
      if (rep.classes[u] != rep.classes[v] && rep.intervals[u].intersects(rep.intervals[v]))
        g.add_edge(u, v);
  g.set_labels(rep.labels);
  return g;
}

Realization realizes(const IntervalKRep& rep, const Graph& g) {
  if (rep.size() != g.order()) throw Error("realizes: vertex counts differ");
  rep.validate();
  Realization r;
  for (int u = 0; u < rep.size(); ++u) {
    for (int v = u + 1; v < rep.size(); ++v) {
      const bool in_rep = rep.classes[u] != rep.classes[v] && rep.intervals[u].intersects(rep.intervals[v]);
      if (in_rep != g.adjacent(u, v)) {
        r.ok = false;
        r.first_mismatch = Discrepancy{u, v, g.adjacent(u, v)};
        return r;
      }
    }
  }
  return r;
}

std::optional<Containment> class_containment(const IntervalKRep& rep) {
  for (int u = 0; u < rep.size(); ++u)
    for (int v = 0; v < rep.size(); ++v)
      if (u != v && rep.classes[u] == rep.classes[v] && rep.intervals[u].properly_contains(rep.intervals[v]))
        return Containment{u, v};
  return std::nullopt;
}

bool is_class_proper(const IntervalKRep& rep) { return !class_containment(rep).has_value(); }

bool is_proper(const IntervalKRep& rep) {
  for (int u = 0; u < rep.size(); ++u)
    for (int v = 0; v < rep.size(); ++v)
      if (u != v && rep.intervals[u].properly_contains(rep.intervals[v])) return false;
  return true;
}

bool is_unit(const IntervalKRep& rep) {
  for (int v = 1; v < rep.size(); ++v)
    if (rep.intervals[v].length() != rep.intervals[0].length()) return false;
  return true;
}

bool segments_cross(const PermutationRep& rep, int u, int v) {
  return (rep.top[u] - rep.top[v]) * (rep.bottom[u] - rep.bottom[v]) < 0;
}

bool permutation_realizes(const PermutationRep& rep, const Graph& g) {
  if (rep.size() != g.order() || rep.bottom.size() != rep.top.size()) {
    throw Error("permutation_realizes: vertex counts differ");
  }
  std::set<Rational> top(rep.top.begin(), rep.top.end());
  std::set<Rational> bottom(rep.bottom.begin(), rep.bottom.end());
  if (static_cast<int>(top.size()) != rep.size() || static_cast<int>(bottom.size()) != rep.size()) {
    throw Error("permutation representation repeats a channel position");
  }
  for (int u = 0; u < rep.size(); ++u)
    for (int v = u + 1; v < rep.size(); ++v)
      if (segments_cross(rep, u, v) != g.adjacent(u, v)) return false;
  return true;
}

bool curves_intersect(const FunctionRep& rep, int u, int v) {
  // The difference is linear between levels, so the curves are disjoint
  // exactly when it keeps one strict sign at every level.
  bool all_neg = true;
  bool all_pos = true;
  for (int h = 0; h <= rep.k; ++h) {
    Rational d = rep.abscissae[u][h] - rep.abscissae[v][h];
    all_neg = all_neg && d < 0;
    all_pos = all_pos && d > 0;
  }
  return !all_neg && !all_pos;
}

bool curve_left_of(const FunctionRep& rep, int u, int v) {
  for (int h = 0; h <= rep.k; ++h)
    if (!(rep.abscissae[u][h] < rep.abscissae[v][h])) return false;
  return true;
}

bool function_realizes(const FunctionRep& rep, const Graph& g) {
  if (rep.size() != g.order()) throw Error("function_realizes: vertex counts differ");
  for (const auto& c : rep.abscissae)
    if (static_cast<int>(c.size()) != rep.k + 1) throw Error("curve does not have k+1 breakpoints");
  for (int u = 0; u < rep.size(); ++u)
    for (int v = u + 1; v < rep.size(); ++v)
      if (curves_intersect(rep, u, v) != g.adjacent(u, v)) return false;
  return true;
}

IntervalKRep parse_interval_rep(std::istream& in) {
  IntervalKRep rep;
  std::string line;
  std::size_t offset = 0;
  int n = -1;
  while (std::getline(in, line)) {
    const std::size_t here = offset;
    offset += line.size() + 1;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> rep.k >> n) || rep.k < 1 || n < 0 || n > kMaxVertices) {
        throw DecodeError("representation: bad \"k n\" header", here);
      }
      continue;
    }
    std::string label, l, r;
    int cls = 0;
    if (!(ls >> label >> cls >> l >> r)) throw DecodeError("representation: expected 4 fields", here);
    try {
      rep.add(Interval{parse_rational(l), parse_rational(r)}, cls);
    } catch (const Error& e) {
      throw DecodeError(std::string("representation: ") + e.what(), here);
    }
    rep.labels.push_back(label);
  }
  if (n < 0) throw DecodeError("representation: missing header", 0);
  if (rep.size() != n) throw DecodeError("representation: header promises " + std::to_string(n) + " vertices", offset);
  try {
    rep.validate();
  } catch (const Error& e) {
    throw DecodeError(std::string("representation: ") + e.what(), offset);
  }
  return rep;
}

std::string write_interval_rep(const IntervalKRep& rep) {
  std::ostringstream os;
  os << rep.k << ' ' << rep.size() << '\n';
  for (int v = 0; v < rep.size(); ++v) {
    const auto& iv = rep.intervals[v];
    os << rep.name(v) << ' ' << rep.classes[v] << ' ' << iv.left.numerator() << '/'
       << iv.left.denominator() << ' ' << iv.right.numerator() << '/' << iv.right.denominator() << '\n';
  }
  return os.str();
}

}  // namespace ikg
