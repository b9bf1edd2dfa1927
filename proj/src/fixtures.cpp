#include "ikg/fixtures.hpp"

#include <functional>

#include "ikg/canon.hpp"
#include "ikg/comparability.hpp"
#include "ikg/constructions.hpp"
#include "ikg/recognition.hpp"

namespace ikg {

Graph fixture_t2() {
  // o x y z a b c
  Graph g = make_graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}});
  g.set_labels({"o", "x", "y", "z", "a", "b", "c"});
  return g;
}

Graph fixture_five_asteroid() {
  // q x a c b p r
  Graph g = make_graph(7, {{0, 6}, {2, 5}, {1, 5}, {1, 6}, {4, 3}, {4, 6}, {3, 5}, {5, 6}});
  g.set_labels({"q", "x", "a", "c", "b", "p", "r"});
  return g;
}

Poset fixture_m_poset() {
  // a x p y b q
  Poset p = Poset::from_pairs(6, {{0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {3, 5}});
  p.set_labels({"a", "x", "p", "y", "b", "q"});
  return p;
}

Graph fixture_m() { return incomparability_graph(fixture_m_poset()); }

Graph fixture_f() {
  // Two triangles {2,3,4} and {6,7,8} joined by 3-7, pendants 1 (at 3) and 5 (at 7).
  Graph g = make_graph(8, {{0, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 6}, {4, 6}, {5, 6}, {5, 7}, {6, 7}});
  g.set_labels({"1", "2", "3", "4", "5", "6", "7", "8"});
  return g;
}

PartiteStructure fixture_f_classes() {
  PartiteStructure p;
  p.classes = {VertexSet(0b10000011), VertexSet(0b00110100), VertexSet(0b01001000)};
  return p;
}

Poset fixture_order_m9() {
  Poset p = Poset::from_pairs(5, {{0, 3}, {0, 4}, {1, 3}, {2, 4}});
  p.set_labels({"v1", "v2", "v3", "v4", "v5"});
  return p;
}

ChainCover fixture_order_m9_bad_cover() { return ChainCover{{{0, 4}, {1, 3}, {2}}}; }

Graph fixture_c6bar() { return complement(cycle_graph(6)); }
Graph fixture_2p3bar() { return p3bar2_pattern(); }

std::vector<Fixture> fixtures() {
  return {
      {"T2", "interval 2-graph with an asteroidal triple", fixture_t2(), std::nullopt},
      {"G5", "interval 3-graph with a 5-asteroid, not cocomparability", fixture_five_asteroid(), std::nullopt},
      {"M", "cocomparability interval 3-graph", fixture_m(), fixture_m_poset()},
      {"C6bar", "complement of the 6-cycle", fixture_c6bar(), std::nullopt},
      {"F", "class-proper interval 3-graph that is not proper", fixture_f(), std::nullopt},
      {"crown3", "3-crown", incomparability_graph(crown3()), crown3()},
      {"M9", "order with three minimum chain covers", incomparability_graph(fixture_order_m9()), fixture_order_m9()},
      {"2P3bar", "complement of two disjoint 3-paths", fixture_2p3bar(), std::nullopt},
  };
}

namespace {

// Any simple s-t path whose closed neighbourhood is everything.
bool has_dominating_path(const Graph& g, int s, int t) {
  std::vector<int> path{s};
  std::function<bool(int, VertexSet)> go = [&](int v, VertexSet used) -> bool {
    if (v == t) return dominates(g, path);
    for (int w : g.neighbors(v) - used) {
      path.push_back(w);
      if (go(w, used | VertexSet::single(w))) return true;
      path.pop_back();
    }
    return false;
  };
  return go(s, VertexSet::single(s));
}

std::vector<int> by_labels(const Graph& g, std::initializer_list<const char*> names) {
  std::vector<int> out;
  for (const char* s : names) out.push_back(*g.find_label(s));
  return out;
}

}  // namespace

std::vector<FixtureClaim> verify_fixture_claims() {
  std::vector<FixtureClaim> out;
  auto claim = [&](const std::string& fixture, const std::string& what, const std::function<bool(std::string&)>& check) {
    FixtureClaim c{fixture, what, false, ""};
    try {
      c.holds = check(c.detail);
    } catch (const std::exception& e) {
      c.holds = false;
      c.detail = e.what();
    }
    out.push_back(std::move(c));
  };

  {
    const Graph g = fixture_t2();
    claim("T2", "interval 2-graph", [&](std::string&) { return is_interval_k_graph(g, 2).is_member; });
    claim("T2", "asteroidal triple on a, b, c", [&](std::string& d) {
      auto cert = asteroid_on(g, by_labels(g, {"a", "b", "c"}));
      if (cert) d = asteroid_to_text(g, *cert);
      return cert && verify_asteroid(g, *cert);
    });
    claim("T2", "not cocomparability", [&](std::string&) { return !is_cocomparability(g); });
    claim("T2", "not class-proper", [&](std::string&) { return !class_proper_verdict(g).is_member; });
  }
  {
    const Graph g = fixture_five_asteroid();
    claim("G5", "interval 3-graph", [&](std::string&) { return is_interval_k_graph(g, 3).is_member; });
    claim("G5", "5-asteroid on q, x, a, c, b", [&](std::string& d) {
      auto cert = asteroid_on(g, by_labels(g, {"q", "x", "a", "c", "b"}));
      if (cert) d = asteroid_to_text(g, *cert);
      return cert && verify_asteroid(g, *cert);
    });
    claim("G5", "not cocomparability", [&](std::string&) { return !is_cocomparability(g); });
    claim("G5", "not class-proper", [&](std::string&) { return !class_proper_verdict(g).is_member; });
  }
  {
    const Graph g = fixture_m();
    const Poset p = fixture_m_poset();
    const std::vector<int> order = {0, 1, 2, 3, 4, 5};
    claim("M", "cocomparability interval 3-graph", [&](std::string&) {
      return is_cocomparability_interval_k(g).is_member && is_interval_k_graph(g, 3).is_member;
    });
    claim("M", "poset orients the complement transitively", [&](std::string&) {
      return comparability_graph(p) == complement(g);
    });
    claim("M", "elimination order a, x, p, y, b, q", [&](std::string&) { return is_elimination_ordering(g, order); });
    claim("M", "a, x, p, y, b, q is a labeling of P", [&](std::string&) { return is_cor41_labeling(p, order); });
    claim("M", "class-proper with 3 classes", [&](std::string& d) {
      auto b = build_class_proper_rep(g);
      if (b.found()) d = write_interval_rep(b.rep);
      return b.found() && b.rep.k == 3 && is_class_proper(b.rep) && realizes(b.rep, g).ok;
    });
  }
  {
    const Graph g = fixture_c6bar();
    claim("C6bar", "not an interval k-graph", [&](std::string&) { return !is_interval_k_graph(g, kAnyK).is_member; });
    claim("C6bar", "not weakly chordal", [&](std::string&) { return !is_weakly_chordal(g).weakly_chordal; });
    claim("C6bar", "cocomparability", [&](std::string&) { return is_cocomparability(g).has_value(); });
    claim("C6bar", "no asteroidal triple", [&](std::string&) { return !find_odd_asteroid(g, 3); });
    claim("C6bar", "3-chromatic", [&](std::string&) { return chromatic_number(g) == 3; });
  }
  {
    const Graph g = fixture_f();
    claim("F", "not a proper interval k-graph", [&](std::string& d) {
      auto v = is_proper_interval_k_graph(g, kAnyK);
      if (v.certificate) d = *v.certificate;
      return !v.is_member;
    });
    claim("F", "not a unit interval k-graph", [&](std::string&) { return !is_unit_interval_k_graph(g, kAnyK).is_member; });
    claim("F", "class-proper interval 3-graph", [&](std::string& d) {
      auto b = build_class_proper_rep(g);
      if (b.found()) d = write_interval_rep(b.rep);
      return b.found() && b.rep.k <= 3;
    });
    claim("F", "cocomparability", [&](std::string&) { return is_cocomparability(g).has_value(); });
    claim("F", "labels 1..8 satisfy the betweenness ordering", [&](std::string&) {
      const PartiteStructure classes = fixture_f_classes();
      return classes.valid_for(g) && !ordering_violation(g, {0, 1, 2, 3, 4, 5, 6, 7}, classes);
    });
    claim("F", "2 and 5 are a dominating pair", [&](std::string&) { return has_dominating_path(g, 1, 4); });
  }
  {
    claim("crown3", "incomparability graph is the complement of C6", [&](std::string&) {
      return canonical_form(incomparability_graph(crown3())) == canonical_form(fixture_c6bar());
    });
    claim("crown3", "no labeling exists", [&](std::string&) { return !cor41_labeling(crown3()); });
  }
  {
    const Poset p = fixture_order_m9();
    const Labeling lab = {0, 1, 2, 3, 4};
    const ChainCover bad = fixture_order_m9_bad_cover();
    claim("M9", "v1..v5 is a labeling", [&](std::string&) { return is_cor41_labeling(p, lab); });
    claim("M9", "the singleton-v3 cover is a minimum cover", [&](std::string&) {
      return is_chain_cover(p, bad) && bad.size() == minimum_chain_cover(p).width;
    });
    claim("M9", "singleton-v3 cover puts v3 against every other interval though v3 < v5", [&](std::string&) {
      if (!cover_compliance(p, lab, bad)) return false;
      // Intervals as the formula gives them, with the faulty classes.
      IntervalKRep rep;
      rep.k = bad.size();
      for (int i = 1; i <= 5; ++i) {
        int mu = i;
        for (int j = 1; j < i; ++j)
          if (p.incomparable(i - 1, j - 1)) {
            mu = j;
            break;
          }
        rep.add(Interval{Rational(mu) - (Rational(1) - Rational(i, 5)), Rational(i)}, bad.chain_of(i - 1));
      }
      return p.less(2, 4) && represented_graph(rep).degree(2) == 4;
    });
    claim("M9", "repair yields a compliant cover realizing the order", [&](std::string& d) {
      ChainCover fixed = repair_chain_cover(p, lab, bad);
      IntervalKRep rep = intervals_from_labeled_poset(p, lab, fixed);
      d = write_interval_rep(rep);
      return !cover_compliance(p, lab, fixed) && realizes(rep, incomparability_graph(p)).ok && is_class_proper(rep);
    });
  }
  {
    const Graph g = fixture_2p3bar();
    claim("2P3bar", "cocomparability", [&](std::string&) { return is_cocomparability(g).has_value(); });
    claim("2P3bar", "not an interval k-graph", [&](std::string& d) {
      auto v = is_interval_k_graph(g, kAnyK);
      if (v.certificate) d = *v.certificate;
      return !v.is_member;
    });
  }
  return out;
}

}  // namespace ikg
