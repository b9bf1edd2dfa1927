#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "ikg/canon.hpp"
#include "ikg/graph.hpp"
#include "ikg/poset.hpp"

using namespace ikg;

namespace {

// Every poset on n naturally labeled elements (pairs i<j only), as closures of pair subsets.
template <typename F>
void for_each_poset(int n, F f) {
  std::vector<std::pair<int, int>> all;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
  for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t b = 0; b < all.size(); ++b)
      if ((mask >> b) & 1u) pairs.push_back(all[b]);
    f(Poset::from_pairs(n, pairs));
  }
}

int brute_width(const Poset& p) {
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << p.size()); ++s) {
    bool antichain = true;
    for (int i = 0; i < p.size() && antichain; ++i)
      for (int j = i + 1; j < p.size() && antichain; ++j)
        if ((s >> i & 1u) && (s >> j & 1u) && p.comparable(i, j)) antichain = false;
    if (antichain) best = std::max(best, std::popcount(s));
  }
  return best;
}

enum { a1, a2, a3, b1, b2, b3 };

}  // namespace

TEST_CASE("from_pairs closes and rejects cycles") {
  const Poset chain = Poset::from_pairs(3, {{0, 1}, {1, 2}});
  CHECK(chain.less(0, 2));
  CHECK_FALSE(chain.less(2, 0));
  CHECK_THROWS_AS(Poset::from_pairs(2, {{0, 1}, {1, 0}}), CycleError);
  try {
    Poset::from_pairs(3, {{0, 1}, {1, 2}, {2, 0}});
  } catch (const CycleError& e) {
    CHECK(e.cycle().size() >= 2);
  }
}

TEST_CASE("3-crown") {
  const Poset c = crown3();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(c.less(i, 3 + j) == (i != j));
  CHECK(brute_width(c) == 3);
  CHECK(minimum_chain_cover(c).width == 3);
  CHECK(canonical_form(incomparability_graph(c)) == canonical_form(complement(cycle_graph(6))));
  const Graph g = incomparability_graph(c);
  CHECK(g.adjacent(a1, a2));
  CHECK(g.adjacent(b1, b3));
  CHECK(g.adjacent(a1, b1));
  CHECK_FALSE(g.adjacent(a1, b2));
  CHECK(incomparables(c, a1) == VertexSet((1u << a2) | (1u << a3) | (1u << b1)));
  const auto hasse = hasse_edges(c);
  CHECK(hasse.size() == 6);
  CHECK(hasse == c.relations());
}

TEST_CASE("incomparability graphs of chains and antichains") {
  CHECK(incomparability_graph(chain_poset(4)).edge_count() == 0);
  CHECK(incomparability_graph(antichain_poset(4)) == complete_graph(4));
  for (int v = 0; v < 4; ++v) CHECK(incomparables(chain_poset(4), v).empty());
  CHECK(incomparables(antichain_poset(4), 2).size() == 3);
}

TEST_CASE("restriction") {
  const Poset c = crown3();
  CHECK(restrict_poset(c, {}).poset == c);
  const auto one = restrict_poset(c, {0, 1, 2, 3, 4});
  CHECK(one.poset.size() == 1);
  CHECK(one.original == std::vector<int>{5});
  const auto minus = restrict_poset(c, {a1});
  CHECK(minus.poset.size() == 5);
  CHECK(brute_width(minus.poset) == 3);
  CHECK(minimum_chain_cover(minus.poset).width == 3);
  CHECK_THROWS(restrict_poset(c, {1, 1}));
  CHECK_THROWS(restrict_poset(c, {9}));
}

TEST_CASE("decompose into chains") {
  const Poset ch = chain_poset(4);
  const auto one = decompose_into_chains(ch, ch.elements());
  REQUIRE(one);
  CHECK(one->size() == 1);
  const auto three = decompose_into_chains(antichain_poset(3), VertexSet::range(3));
  REQUIRE(three);
  CHECK(three->size() == 3);
  VertexSet s;
  for (int v : {a1, b2, b3}) s.insert(v);
  CHECK_FALSE(decompose_into_chains(crown3(), s));
}

TEST_CASE("chain covers") {
  const auto anti = minimum_chain_cover(antichain_poset(4));
  CHECK(anti.width == 4);
  CHECK(anti.cover.size() == 4);
  CHECK(minimum_chain_cover(chain_poset(5)).cover.size() == 1);
  const auto crown = minimum_chain_cover(crown3());
  CHECK(crown.cover.size() == 3);
  CHECK(is_chain_cover(crown3(), crown.cover));
}

TEST_CASE("hasse edges") {
  CHECK(hasse_edges(chain_poset(3)) == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(hasse_edges(antichain_poset(3)).empty());
}

TEST_CASE("poset text format") {
  std::istringstream in("4\n0 < 1\n1 < 2\n0 < 3\n");
  const Poset p = parse_poset(in);
  CHECK(p.less(0, 2));
  std::istringstream again(write_poset(p));
  CHECK(parse_poset(again) == p);
  std::istringstream bad("2\n0 < 1\n1 < 0\n");
  CHECK_THROWS_AS(parse_poset(bad), CycleError);
}

TEST_CASE("exhaustive properties on small posets") {
  for (int n = 1; n <= 6; ++n) {
    for_each_poset(n, [&](const Poset& p) {
      // Dilworth against brute-force antichains
      const auto cover = minimum_chain_cover(p);
      CHECK(is_chain_cover(p, cover.cover));
      CHECK(cover.cover.size() == brute_width(p));
      CHECK(minimum_chain_cover(p, true).cover.size() == cover.width);
      CHECK(incomparability_graph(p) == complement(comparability_graph(p)));
      // chain decomposition iff complete multipartite, chains = classes
      for (std::uint32_t s = 1; s < (1u << n); s += 3) {
        const VertexSet set(s);
        const auto chains = decompose_into_chains(p, set);
        const auto sub = induced(incomparability_graph(p), set);
        const auto parts = is_complete_multipartite(sub.graph);
        REQUIRE(chains.has_value() == parts.has_value());
        if (chains) CHECK(chains->size() == parts->classes.size());
      }
      // restriction commutes with incomparability
      const auto r = restrict_poset(p, {0});
      CHECK(incomparability_graph(r.poset) == induced(incomparability_graph(p), VertexSet::range(n) - VertexSet::single(0)).graph);
    });
  }
}
