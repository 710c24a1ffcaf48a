#pragma once

#include <cstdint>
#include <optional>

#include "ecg/graph.hpp"
#include "ecg/paths.hpp"

namespace ecg {

struct SearchOptions {
  /// Node-expansion limit; 0 means unlimited. Expansions, not wall time,
  /// so runs are reproducible.
  std::uint64_t budget = 0;
  /// Allow cut-vertex (block) decomposition preprocessing for large graphs
  /// with articulation points.
  bool use_blocks = true;
};

struct PathSearchResult {
  Path path;
  bool exact = true;
  std::uint64_t expansions = 0;
  int length() const { return path_length(path); }
};

struct CycleSearchResult {
  std::optional<Cycle> cycle;
  bool exact = true;
  std::uint64_t expansions = 0;
  /// -1 when no cycle was found.
  int length() const { return cycle ? cycle_length(*cycle) : -1; }
};

struct BoolSearchResult {
  bool found = false;
  bool exact = true;
  std::optional<Cycle> witness;
};

/// Exact longest properly coloured path. DFS from every start vertex with an
/// admissible reachability bound; ties between equal-length witnesses go to
/// the lexicographically smallest tuple (direct search route).
PathSearchResult longest_pc_path(const EdgeColouredGraph& g, SearchOptions opts = {});

/// Exact longest properly coloured cycle, or none.
CycleSearchResult longest_pc_cycle(const EdgeColouredGraph& g, SearchOptions opts = {});

/// Early-exit decision: does some p.c. cycle of length >= k exist?
BoolSearchResult has_pc_cycle_of_length_at_least(const EdgeColouredGraph& g, int k,
                                                 SearchOptions opts = {});

/// Direct DFS without block preprocessing; exposed for cross-validation.
PathSearchResult longest_pc_path_direct(const EdgeColouredGraph& g, SearchOptions opts = {});
CycleSearchResult longest_pc_cycle_direct(const EdgeColouredGraph& g, SearchOptions opts = {});

/// Block-decomposed exact search; requires no budget pressure to stay exact.
/// Exposed for cross-validation against the direct route.
PathSearchResult longest_pc_path_blocks(const EdgeColouredGraph& g, SearchOptions opts = {});
CycleSearchResult longest_pc_cycle_blocks(const EdgeColouredGraph& g, SearchOptions opts = {});

}  // namespace ecg
