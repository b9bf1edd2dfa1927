#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ikg/canon.hpp"
#include "ikg/fixtures.hpp"
#include "ikg/graph6.hpp"
#include "ikg/harness.hpp"
#include "ikg/recognition.hpp"

using namespace ikg;

namespace {

std::uint64_t count_of(const SweepReport& r, const std::string& key) {
  const auto it = r.counts.find(key);
  return it == r.counts.end() ? 0 : it->second;
}

}  // namespace

TEST_CASE("report plumbing") {
  SweepReport r;
  r.name = "x";
  CHECK(r.passed());
  CHECK(r.exit_code() == 0);
  r.incomplete.push_back({"A_", "c", "d"});
  CHECK(r.exit_code() == 3);
  r.discrepancies.push_back({"A_", "c", "d"});
  CHECK(r.exit_code() == 2);
  CHECK(r.to_text().find("status discrepancy") != std::string::npos);
  CHECK(r.to_jsonl().find("\"record\":\"discrepancy\"") != std::string::npos);
}

TEST_CASE("theorem suite, small n") {
  const auto one = theorem_suite(1);
  CHECK(one.passed());
  CHECK(one.graphs == 1);
  const auto four = theorem_suite(4);
  CHECK(four.passed());
  CHECK(four.graphs == 11);
  CHECK(count_of(four, "enumeration.orbit_count") == 11);
}

TEST_CASE("theorem suite, n = 6") {
  const auto six = theorem_suite(6);
  CHECK(six.passed());
  CHECK(six.graphs == 156);
  for (const auto& e : six.discrepancies) MESSAGE(e.graph6 << " " << e.check << " " << e.details);
  // C6bar and 2P3bar are both among the 6-vertex graphs and both are
  // cocomparability graphs outside the interval k-graphs.
  for (const Graph& g : {c6bar_pattern(), p3bar2_pattern()}) {
    CHECK(is_cocomparability(g));
    CHECK_FALSE(is_interval_k_graph(g, kAnyK).is_member);
    CHECK_FALSE(is_interval_k_graph_by_fill_in(g, kAnyK).is_member);
  }
}

TEST_CASE("serial and parallel sweeps agree byte for byte") {
  const auto graphs = enumerate_graphs(6);
  const GraphCheck check = [](const Graph& g) { return theorem_checks(g); };
  const auto serial = sweep_serial("suite", 6, graphs, check);
  for (int jobs : {2, 3, 8}) {
    const auto parallel = sweep_parallel("suite", 6, graphs, check, jobs);
    CHECK(parallel.to_text() == serial.to_text());
    CHECK(parallel.to_jsonl() == serial.to_jsonl());
  }
}

TEST_CASE("truncation never passes") {
  SuiteOptions capped;
  capped.orientation_limit = 1;
  const auto r = theorem_suite(5, 1, capped);
  CHECK(r.discrepancies.empty());
  CHECK_FALSE(r.incomplete.empty());
  CHECK(r.exit_code() == 3);
}

TEST_CASE("conjecture checker examples") {
  const auto c6 = conjecture_check({c6bar_pattern()}, 6);
  CHECK(c6.passed());
  CHECK(count_of(c6, "cocomparability") == 1);
  CHECK(count_of(c6, "contains_c6bar") == 1);
  CHECK(count_of(c6, "interval_k") == 0);
  const auto p3 = conjecture_check({p3bar2_pattern()}, 6);
  CHECK(p3.passed());
  CHECK(count_of(p3, "contains_2p3bar") == 1);
  CHECK(count_of(p3, "interval_k") == 0);
  const auto k6 = conjecture_check({complete_graph(6)}, 6);
  CHECK(k6.passed());
  CHECK(count_of(k6, "interval_k") == 1);
  CHECK(count_of(k6, "forbidden_free") == 1);
  const auto c5 = conjecture_check({cycle_graph(5)}, 5);
  CHECK(count_of(c5, "cocomparability") == 0);
}

TEST_CASE("conjecture sweep at n = 6") {
  const auto r = conjecture_check(enumerate_graphs(6), 6, 2);
  CHECK(r.passed());
  CHECK(count_of(r, "agree") == count_of(r, "cocomparability"));
}

TEST_CASE("fixtures") {
  const auto list = fixtures();
  std::vector<std::string> names;
  for (const auto& f : list) names.push_back(f.name);
  for (const char* want : {"T2", "G5", "M", "F", "crown3", "M9", "C6bar", "2P3bar"})
    CHECK(std::find(names.begin(), names.end(), want) != names.end());
  const auto claims = verify_fixture_claims();
  CHECK(claims.size() >= 25);
  for (const auto& c : claims) {
    INFO(c.fixture << ": " << c.claim << " " << c.detail);
    CHECK(c.holds);
  }
  for (const auto& f : list)
    if (f.name == "crown3") CHECK(canonical_form(*f.graph) == canonical_form(c6bar_pattern()));
}
