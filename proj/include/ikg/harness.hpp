#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ikg/constructions.hpp"
#include "ikg/graph.hpp"

namespace ikg {

struct ReportEntry {
  std::string graph6;
  std::string check;
  std::string details;

  bool operator<(const ReportEntry& o) const {
    return std::tie(graph6, check, details) < std::tie(o.graph6, o.check, o.details);
  }
  bool operator==(const ReportEntry&) const = default;
};

// What one graph contributes to a sweep.
struct GraphOutcome {
  std::map<std::string, std::uint64_t> counts;
  std::vector<ReportEntry> discrepancies;
  std::vector<ReportEntry> incomplete;
};

struct SweepReport {
  std::string name;
  int n = 0;
  std::uint64_t graphs = 0;
  std::map<std::string, std::uint64_t> counts;
  std::vector<ReportEntry> discrepancies;  // sorted
  std::vector<ReportEntry> incomplete;     // sorted

  bool passed() const { return discrepancies.empty() && incomplete.empty(); }
  // 0 all pass, 2 discrepancy, 3 incomplete.
  int exit_code() const;
  std::string to_text() const;
  std::string to_jsonl() const;
};

using GraphCheck = std::function<GraphOutcome(const Graph&)>;

// Reference kernel: one graph after another.
SweepReport sweep_serial(const std::string& name, int n, const std::vector<Graph>& graphs, const GraphCheck& check);
// Same result, graphs distributed over `jobs` OpenMP threads; outcomes are
// stored per index and reduced in index order.
SweepReport sweep_parallel(const std::string& name, int n, const std::vector<Graph>& graphs, const GraphCheck& check,
                           int jobs);
SweepReport run_sweep(const std::string& name, int n, const std::vector<Graph>& graphs, const GraphCheck& check,
                      int jobs);

struct SuiteOptions {
  std::size_t orientation_limit = kDefaultOrientationLimit;
  bool poset_sweep = true;  // all transitive orientations of each graph
};

// Every cross-check, on one graph.
GraphOutcome theorem_checks(const Graph& g, const SuiteOptions& options = {});

// Single sections of theorem_checks, for sweeps that target one theorem.
GraphOutcome gallai_checks(const Graph& g);
// Oracle self-checks and weak chordality of interval k-graphs.
GraphOutcome interval_k_checks(const Graph& g);
// Equivalences for bipartite graphs plus the construction chain; others pass through.
GraphOutcome bipartite_checks(const Graph& g, const SuiteOptions& options = {});
// Recognizer against the pipeline on 3-chromatic cocomparability graphs.
GraphOutcome thm43_checks(const Graph& g, const SuiteOptions& options = {});
// Round trip on every order whose comparability graph is g.
GraphOutcome poset_checks(const Graph& g, const SuiteOptions& options = {});
// Forbidden-subgraph predicate against the interval k-graph oracle.
GraphOutcome conjecture_checks(const Graph& g);

SweepReport theorem_suite(int n, int jobs = 1, const SuiteOptions& options = {});
SweepReport conjecture_check(const std::vector<Graph>& graphs, int n, int jobs = 1);

}  // namespace ikg
