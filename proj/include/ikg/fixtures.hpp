#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ikg/graph.hpp"
#include "ikg/poset.hpp"

namespace ikg {

// Small named examples, rebuilt from the properties claimed for them;
// each claim is re-checked by verify_fixture_claims().

// Subdivided claw: o center, x y z middle, a b c leaves. AT on a, b, c.
Graph fixture_t2();
// Interval 3-graph with a 5-asteroid on (q, x, a, c, b) and no asteroidal triple.
Graph fixture_five_asteroid();
// M on (a, x, p, y, b, q); positions are the elimination order.
Graph fixture_m();
Poset fixture_m_poset();
// F on vertices 1..8 (indices 0..7), identity order valid for its classes,
// 2 and 5 a dominating pair.
Graph fixture_f();
PartiteStructure fixture_f_classes();
// Order on v1..v5 with exactly three minimum chain covers.
Poset fixture_order_m9();
ChainCover fixture_order_m9_bad_cover();
Graph fixture_c6bar();
Graph fixture_2p3bar();

struct Fixture {
  std::string name;
  std::string description;
  std::optional<Graph> graph;
  std::optional<Poset> poset;
};

std::vector<Fixture> fixtures();

struct FixtureClaim {
  std::string fixture;
  std::string claim;
  bool holds = false;
  std::string detail;
};

std::vector<FixtureClaim> verify_fixture_claims();

}  // namespace ikg
