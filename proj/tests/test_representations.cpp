#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "ikg/constructions.hpp"
#include "ikg/render.hpp"
#include "ikg/representations.hpp"

using namespace ikg;

namespace {

Rational q(std::int64_t a, std::int64_t b = 1) { return Rational(a, b); }

IntervalKRep k13_rep() {
  IntervalKRep rep;
  rep.k = 2;
  rep.add({q(0), q(3)}, 0);
  rep.add({q(0), q(1)}, 1);
  rep.add({q(6, 5), q(2)}, 1);
  rep.add({q(11, 5), q(3)}, 1);
  return rep;
}

IntervalKRep p3_rep() {
  IntervalKRep rep;
  rep.k = 2;
  rep.add({q(0), q(1)}, 0);        // x
  rep.add({q(1, 2), q(5, 2)}, 1);  // y
  rep.add({q(2), q(3)}, 0);        // z
  return rep;
}

// Pair-by-pair oracle for the represented graph.
bool pairwise_realizes(const IntervalKRep& rep, const Graph& g) {
  for (int u = 0; u < rep.size(); ++u)
    for (int v = u + 1; v < rep.size(); ++v) {
      const auto& a = rep.intervals[u];
      const auto& b = rep.intervals[v];
      const bool meet = std::max(a.left, b.left) <= std::min(a.right, b.right);
      if (g.adjacent(u, v) != (meet && rep.classes[u] != rep.classes[v])) return false;
    }
  return true;
}

IntervalKRep random_rep(std::mt19937& rng, int n, int k) {
  std::uniform_int_distribution<int> pos(0, 12), len(0, 5), cls(0, k - 1);
  IntervalKRep rep;
  rep.k = k;
  for (int v = 0; v < n; ++v) {
    const int l = pos(rng);
    rep.add({q(l, 2), q(l + len(rng), 2)}, cls(rng));
  }
  return rep;
}

}  // namespace

TEST_CASE("realizes") {
  const Graph k13 = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(pairwise_realizes(k13_rep(), k13));
  CHECK(realizes(k13_rep(), k13).ok);
  auto one_class = k13_rep();
  for (auto& c : one_class.classes) c = 0;
  const auto r = realizes(one_class, k13);
  CHECK_FALSE(r.ok);
  REQUIRE(r.first_mismatch);
  CHECK(r.first_mismatch->edge_in_graph);
  CHECK(realizes(one_class, Graph(4)).ok);
  CHECK(realizes(p3_rep(), path_graph(3)).ok);
  CHECK_THROWS(realizes(p3_rep(), path_graph(4)));
}

TEST_CASE("class-proper, proper, unit") {
  IntervalKRep singles;
  singles.k = 3;
  singles.add({q(0), q(10)}, 0);
  singles.add({q(2), q(3)}, 1);
  singles.add({q(1), q(4)}, 2);
  CHECK(is_class_proper(singles));
  CHECK_FALSE(is_proper(singles));

  IntervalKRep nested;
  nested.k = 1;
  nested.add({q(0), q(10)}, 0);
  nested.add({q(2), q(3)}, 0);
  const auto c = class_containment(nested);
  REQUIRE(c);
  CHECK(c->outer == 0);
  CHECK(c->inner == 1);

  CHECK(is_class_proper(p3_rep()));

  IntervalKRep unit;
  unit.k = 2;
  unit.add({q(0), q(1)}, 0);
  unit.add({q(1, 2), q(3, 2)}, 1);
  CHECK(is_proper(unit));
  CHECK(is_unit(unit));

  IntervalKRep shared;  // [0,1] inside [0,2] counts as proper containment
  shared.k = 1;
  shared.add({q(0), q(1)}, 0);
  shared.add({q(0), q(2)}, 0);
  CHECK_FALSE(is_class_proper(shared));
  shared.classes[1] = 0;
  shared.intervals[1] = {q(0), q(1)};
  CHECK(is_class_proper(shared));  // equal intervals do not contain each other properly
}

TEST_CASE("random representations: invariances and implications") {
  std::mt19937 rng(11);
  for (int t = 0; t < 300; ++t) {
    const auto rep = random_rep(rng, 6, 3);
    const Graph g = represented_graph(rep);
    CHECK(pairwise_realizes(rep, g));
    CHECK(realizes(rep, g).ok);
    auto moved = rep;
    for (auto& iv : moved.intervals) iv = {iv.left * q(3, 7) + q(5, 3), iv.right * q(3, 7) + q(5, 3)};
    CHECK(realizes(moved, g).ok);
    auto swapped = rep;
    for (auto& c : swapped.classes) c = (c + 1) % 3;
    CHECK(realizes(swapped, g).ok);
    if (is_unit(rep)) CHECK(is_proper(rep));
    if (is_proper(rep)) CHECK(is_class_proper(rep));
  }
}

TEST_CASE("validate") {
  IntervalKRep bad;
  bad.k = 1;
  bad.add({q(2), q(1)}, 0);
  CHECK_THROWS_AS(bad.validate(), Error);
  IntervalKRep bad_class;
  bad_class.k = 1;
  bad_class.add({q(0), q(1)}, 1);
  CHECK_THROWS_AS(bad_class.validate(), Error);
}

TEST_CASE("permutation representations") {
  PermutationRep same{{q(0), q(1)}, {q(0), q(1)}};
  CHECK(permutation_realizes(same, Graph(2)));
  PermutationRep crossing{{q(0), q(3, 2)}, {q(1), q(1, 2)}};
  CHECK(segments_cross(crossing, 0, 1));
  CHECK(permutation_realizes(crossing, complete_graph(2)));
  PermutationRep single{{q(0)}, {q(0)}};
  CHECK(permutation_realizes(single, Graph(1)));
  PermutationRep dup{{q(0), q(0)}, {q(0), q(1)}};
  CHECK_THROWS_AS(permutation_realizes(dup, Graph(2)), Error);
}

TEST_CASE("function representations") {
  FunctionRep parallel{2, {{q(0), q(0), q(0)}, {q(1), q(1), q(1)}}};
  CHECK_FALSE(curves_intersect(parallel, 0, 1));
  CHECK(curve_left_of(parallel, 0, 1));
  CHECK(function_realizes(parallel, Graph(2)));
  FunctionRep swap{2, {{q(0), q(2), q(2)}, {q(1), q(1), q(1)}}};
  CHECK(curves_intersect(swap, 0, 1));
  FunctionRep touch{1, {{q(0), q(1)}, {q(1), q(2)}}};
  CHECK_FALSE(curves_intersect(touch, 0, 1));
  FunctionRep meet{1, {{q(0), q(1)}, {q(1), q(1)}}};
  CHECK(curves_intersect(meet, 0, 1));

  auto rep = p3_rep();
  rep.k = 3;
  const auto curves = function_rep_from_class_proper(rep);
  CHECK(function_realizes(curves, path_graph(3)));
}

TEST_CASE("text format round trip") {
  auto rep = p3_rep();
  rep.labels = {"x", "y", "z"};
  const std::string text = write_interval_rep(rep);
  std::istringstream in(text);
  const auto back = parse_interval_rep(in);
  CHECK(back.intervals == rep.intervals);
  CHECK(back.classes == rep.classes);
  CHECK(back.labels == rep.labels);
  CHECK(write_interval_rep(back) == text);
  CHECK(parse_rational("7/14") == q(1, 2));
  CHECK(to_string(q(-3, 6)) == "-1/2");
  std::istringstream broken("2 1\nx 5 0/1 1/1\n");
  CHECK_THROWS(parse_interval_rep(broken));
}

TEST_CASE("rendering") {
  IntervalKRep empty;
  const auto doc = render_intervals(empty, RenderFormat::svg);
  CHECK(doc.rfind("<svg", 0) == 0);
  CHECK(doc.find("</svg>") != std::string::npos);
  const auto svg = render_intervals(p3_rep(), RenderFormat::svg);
  CHECK(svg == render_intervals(p3_rep(), RenderFormat::svg));
  std::size_t lines = 0;
  for (std::size_t at = svg.find("<line"); at != std::string::npos; at = svg.find("<line", at + 1)) ++lines;
  CHECK(lines == 3);
  const auto ascii = render_intervals(p3_rep(), RenderFormat::ascii);
  CHECK(ascii.find("class 0 |") != std::string::npos);
  CHECK(ascii.find("class 1 |") != std::string::npos);
  CHECK(render_hasse(chain_poset(3)).find("</svg>") != std::string::npos);
  FunctionRep parallel{2, {{q(0), q(0), q(0)}, {q(1), q(1), q(1)}}};
  CHECK(render_curves(parallel).find("<polyline") != std::string::npos);
}
