#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ikg/canon.hpp"
#include "ikg/comparability.hpp"
#include "ikg/constructions.hpp"
#include "ikg/fixtures.hpp"
#include "ikg/recognition.hpp"

using namespace ikg;

namespace {

PartiteStructure singletons(int n) {
  std::vector<int> label(n);
  for (int v = 0; v < n; ++v) label[v] = v;
  return partition_from_labels(label);
}

PartiteStructure partite_of(const IntervalKRep& rep) { return partition_from_labels(rep.classes); }

bool valid_witness(const RecognitionVerdict& v, const Graph& g) {
  return v.witness && realizes(*v.witness, g).ok;
}

}  // namespace

TEST_CASE("interval graphs") {
  CHECK(is_interval_graph(path_graph(4)).is_member);
  CHECK(valid_witness(is_interval_graph(path_graph(4)), path_graph(4)));
  const auto c4 = is_interval_graph(cycle_graph(4));
  CHECK_FALSE(c4.is_member);
  CHECK(c4.certificate);
  CHECK_FALSE(is_interval_graph(fixture_t2()).is_member);
  CHECK(maximal_cliques(cycle_graph(4)).size() == 4);
}

TEST_CASE("interval graphs against the endpoint sweep with singleton classes") {
  // Unlabeled interval graph counts for n = 1..6 are 1, 2, 4, 10, 27, 92.
  const std::size_t expected[] = {0, 1, 2, 4, 10, 27, 92};
  for (int n = 1; n <= 6; ++n) {
    std::size_t count = 0;
    for (const auto& g : enumerate_graphs(n)) {
      const auto v = is_interval_graph(g);
      const auto sweep = interval_model_for_partition(g, singletons(n));
      CHECK(v.is_member == sweep.has_value());
      if (v.is_member) CHECK(valid_witness(v, g));
      count += v.is_member;
    }
    CHECK(count == expected[n]);
  }
}

TEST_CASE("interval k-graph examples") {
  const Graph c6bar = complement(cycle_graph(6));
  for (int k : {kAnyK, 2, 3, 4, 6}) CHECK_FALSE(is_interval_k_graph(c6bar, k).is_member);
  CHECK_FALSE(is_interval_k_graph(cycle_graph(6), kAnyK).is_member);
  const Graph k13 = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto star = is_interval_k_graph(k13, 2);
  CHECK(star.is_member);
  CHECK(valid_witness(star, k13));
  CHECK(star.witness->k <= 2);
  const auto k6 = is_interval_k_graph(complete_graph(6), kAnyK);
  CHECK(k6.is_member);
  CHECK_FALSE(is_interval_k_graph(complete_graph(6), 5).is_member);
  CHECK(is_interval_k_graph(fixture_t2(), 2).is_member);
  CHECK_FALSE(is_interval_k_graph(fixture_five_asteroid(), 2).is_member);
  CHECK(is_interval_k_graph(fixture_five_asteroid(), 3).is_member);
}

TEST_CASE("interval k-graph oracles agree on all graphs with at most 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      for (int k : {kAnyK, 2, 3}) {
        const auto sweep = is_interval_k_graph(g, k);
        const auto all = is_interval_k_graph_all_partitions(g, k);
        const auto fill = is_interval_k_graph_by_fill_in(g, k);
        CHECK(sweep.is_member == all.is_member);
        CHECK(sweep.is_member == fill.is_member);
        CHECK_FALSE(fill.incomplete);
        if (sweep.is_member) {
          CHECK(valid_witness(sweep, g));
          CHECK(valid_witness(fill, g));
          if (k != kAnyK) CHECK(sweep.witness->k <= k);
        } else {
          CHECK(sweep.certificate);
        }
        if (sweep.is_member) CHECK(is_weakly_chordal(g).weakly_chordal);
      }
    }
  }
}

TEST_CASE("independent partitions") {
  // P3: {0,2},{1} is the only maximal one; all partitions add {0},{1},{2}
  CHECK(independent_partitions(path_graph(3), kAnyK, true).size() == 1);
  CHECK(independent_partitions(path_graph(3), kAnyK, false).size() == 2);
  CHECK(independent_partitions(path_graph(3), 2, false).size() == 1);
  CHECK(independent_partitions(Graph(3), kAnyK, false).size() == 5);  // Bell(3)
}

TEST_CASE("proper and unit interval k-graphs") {
  const auto f = is_proper_interval_k_graph(fixture_f(), kAnyK);
  CHECK_FALSE(f.is_member);
  CHECK_FALSE(is_unit_interval_k_graph(fixture_f(), kAnyK).is_member);
  const auto p4 = is_proper_interval_k_graph(path_graph(4), 2);
  REQUIRE(p4.is_member);
  CHECK(is_proper(*p4.witness));
  CHECK(valid_witness(p4, path_graph(4)));
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      const auto proper = is_proper_interval_k_graph(g, kAnyK);
      const auto unit = is_unit_interval_k_graph(g, kAnyK);
      CHECK(proper.is_member == unit.is_member);
      if (!proper.is_member) continue;
      CHECK(is_proper(*proper.witness));
      CHECK(is_unit(*unit.witness));
      CHECK(valid_witness(proper, g));
      CHECK(valid_witness(unit, g));
      CHECK(is_interval_k_graph(g, kAnyK).is_member);
      CHECK(find_statement5_ordering(g, partite_of(*proper.witness)).has_value());
    }
  }
}

TEST_CASE("forbidden patterns") {
  const Graph c6bar = c6bar_pattern();
  CHECK(c6bar == complement(cycle_graph(6)));
  CHECK(find_c6bar(c6bar).has_value());
  const Graph p3bar2 = p3bar2_pattern();
  CHECK(p3bar2 == complement(make_graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}})));
  CHECK(find_2p3bar(p3bar2).has_value());
  CHECK_FALSE(find_c6bar(complete_graph(6)));
  CHECK_FALSE(find_2p3bar(c6bar));
  CHECK_FALSE(find_c6bar(p3bar2));
}

TEST_CASE("Theorem 4.3 recognizer") {
  const auto c6bar = thm43_recognize(complement(cycle_graph(6)));
  CHECK_FALSE(c6bar.is_member);
  CHECK(c6bar.certificate);
  const auto k3 = thm43_recognize(complete_graph(3));
  REQUIRE(k3.is_member);
  CHECK(k3.witness->k == 3);
  CHECK(valid_witness(k3, complete_graph(3)));
  CHECK(is_class_proper(*k3.witness));
  CHECK_THROWS_AS(thm43_recognize(path_graph(3)), Error);   // 2-chromatic
  CHECK_THROWS_AS(thm43_recognize(cycle_graph(5)), Error);  // not cocomparability
  CHECK(thm43_recognize(fixture_m()).is_member);
}

TEST_CASE("cocomparability interval k-graphs") {
  const auto m = is_cocomparability_interval_k(fixture_m());
  CHECK(m.is_member);
  CHECK(m.order);
  CHECK_FALSE(is_cocomparability_interval_k(complement(cycle_graph(6))).is_member);
  const auto c5 = is_cocomparability_interval_k(cycle_graph(5));
  CHECK_FALSE(c5.is_member);
  REQUIRE(c5.certificate);
  CHECK(c5.certificate->find("asteroid") != std::string::npos);
  // interval k-graphs need not be cocomparability graphs, nor the converse
  CHECK(is_interval_k_graph(fixture_t2(), 2).is_member);
  CHECK_FALSE(is_cocomparability(fixture_t2()));
  CHECK(is_interval_k_graph(fixture_five_asteroid(), kAnyK).is_member);
  CHECK_FALSE(is_cocomparability(fixture_five_asteroid()));
  CHECK(is_cocomparability(complement(cycle_graph(6))));
}

TEST_CASE("class-proper verdicts") {
  const auto m = class_proper_verdict(fixture_m());
  CHECK(m.is_member);
  CHECK(is_class_proper(*m.witness));
  CHECK(is_interval_k_graph(fixture_m(), 3).is_member);
  const auto none = class_proper_verdict(complement(cycle_graph(6)));
  CHECK_FALSE(none.is_member);
  CHECK_FALSE(none.incomplete);
  const auto capped = class_proper_verdict(complement(cycle_graph(6)), 1);
  CHECK(capped.incomplete);
  CHECK_FALSE(capped.is_member);
}
