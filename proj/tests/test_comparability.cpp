#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "ikg/canon.hpp"
#include "ikg/comparability.hpp"
#include "ikg/fixtures.hpp"

using namespace ikg;

namespace {

// Oracle: try every orientation of every edge and triple-scan each one.
std::size_t brute_transitive_count(const Graph& g) {
  const auto edges = g.edges();
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    Orientation o(g.order());
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [u, v] = edges[e];
      if ((mask >> e) & 1u) std::swap(u, v);
      o.set_arc(u, v);
    }
    bool ok = true;
    for (int u = 0; u < g.order() && ok; ++u)
      for (int v : o.out(u))
        for (int w : o.out(v))
          if (!o.arc(u, w)) ok = false;
    count += ok;
  }
  return count;
}

AsteroidCertificate c5_certificate() {
  AsteroidCertificate cert;
  for (int j = 0; j < 5; ++j) {
    cert.vertices.push_back(j);
    cert.paths.push_back({j, (j + 1) % 5});
  }
  return cert;
}

}  // namespace

TEST_CASE("transitive orientation examples") {
  const auto k3 = find_transitive_orientation(complete_graph(3));
  REQUIRE(k3);
  CHECK(is_transitive_orientation(complete_graph(3), *k3));
  CHECK_FALSE(find_transitive_orientation(cycle_graph(5)));
  CHECK(brute_transitive_count(cycle_graph(5)) == 0);
  // complement of the path a-b-c-d is {ac, ad, bd}
  enum { a, b, c, d };
  const Graph p4bar = complement(path_graph(4));
  CHECK(p4bar == make_graph(4, {{a, c}, {a, d}, {b, d}}));
  Orientation o(4);
  o.set_arc(a, c);
  o.set_arc(a, d);
  o.set_arc(b, d);
  CHECK(is_transitive_orientation(p4bar, o));
  const auto found = find_transitive_orientation(p4bar);
  REQUIRE(found);
  CHECK(is_transitive_orientation(p4bar, *found));
}

TEST_CASE("orientation counts") {
  CHECK(all_transitive_orientations(Graph(4), 100).orientations.size() == 1);
  CHECK(all_transitive_orientations(complete_graph(2), 100).orientations.size() == 2);
  CHECK(all_transitive_orientations(path_graph(3), 100).orientations.size() == 2);
  CHECK(brute_transitive_count(path_graph(3)) == 2);
  const auto capped = all_transitive_orientations(complete_graph(4), 5);
  CHECK(capped.truncated);
  CHECK(capped.orientations.size() == 5);
  CHECK_FALSE(all_transitive_orientations(complete_graph(4), 24).truncated);
}

TEST_CASE("orientation enumeration matches brute force on 5 vertices") {
  for (const auto& g : enumerate_graphs(5)) {
    const auto all = all_transitive_orientations(g, 1000);
    CHECK_FALSE(all.truncated);
    CHECK(all.orientations.size() == brute_transitive_count(g));
    std::set<std::vector<std::pair<int, int>>> distinct;
    for (const auto& o : all.orientations) {
      CHECK(o.covers(g));
      CHECK(is_transitive_orientation(g, o));
      distinct.insert(o.arcs());
    }
    CHECK(distinct.size() == all.orientations.size());
  }
}

TEST_CASE("cocomparability") {
  const Graph c6bar = complement(cycle_graph(6));
  const auto p = is_cocomparability(c6bar);
  REQUIRE(p);
  CHECK(incomparability_graph(*p) == c6bar);
  // isomorphic to the crown: compare the comparability graphs with height data
  CHECK(canonical_form(comparability_graph(*p)) == canonical_form(comparability_graph(crown3())));
  CHECK(hasse_edges(*p).size() == 6);
  CHECK_FALSE(is_cocomparability(cycle_graph(5)));
  const auto chain = is_cocomparability(Graph(4));
  REQUIRE(chain);
  CHECK(minimum_chain_cover(*chain).width == 1);
}

TEST_CASE("odd asteroids") {
  const Graph c5 = cycle_graph(5);
  CHECK(verify_asteroid(c5, c5_certificate()));
  const auto found = find_odd_asteroid(c5, 5);
  REQUIRE(found);
  CHECK(found->length() == 5);
  CHECK(verify_asteroid(c5, *found));
  CHECK_FALSE(find_odd_asteroid(c5, 3));

  auto rerouted = c5_certificate();
  rerouted.paths[0] = {0, 4, 3, 2, 1};  // P_0 meets N(v_3) and N(v_2)
  CHECK_FALSE(verify_asteroid(c5, rerouted));
  auto repeated = c5_certificate();
  repeated.vertices[1] = 0;
  CHECK_FALSE(verify_asteroid(c5, repeated));

  CHECK_FALSE(find_odd_asteroid(complement(cycle_graph(6)), 3));
  CHECK_FALSE(find_odd_asteroid(complement(cycle_graph(6)), 5));
  CHECK_FALSE(find_odd_asteroid(complete_graph(4), 3));
}

TEST_CASE("asteroidal triple of the subdivided claw") {
  const Graph t = fixture_t2();
  const auto cert = asteroid_on(t, {*t.find_label("a"), *t.find_label("b"), *t.find_label("c")});
  REQUIRE(cert);
  CHECK(verify_asteroid(t, *cert));
  CHECK(asteroid_to_text(t, *cert).find("\"length\": 3") != std::string::npos);
}

TEST_CASE("Gallai on all graphs with at most 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      const bool orientable = find_transitive_orientation(complement(g)).has_value();
      const auto ast = find_odd_asteroid(g, n % 2 ? n : n - 1);
      CHECK(orientable == !ast.has_value());
      if (ast) CHECK(verify_asteroid(g, *ast));
      if (const auto p = is_cocomparability(g)) CHECK(incomparability_graph(*p) == g);
    }
  }
}
