#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "ecg/graph.hpp"
#include "ecg/paths.hpp"

namespace ecg {

// Rotation machinery on properly coloured paths. All positions are 1-based
// positions into the tuple (i_1, ..., i_l), matching the usual pencil-and-
// paper convention for rotations.

/// Pure positional permutation: reverse the first i-1 entries, keeping the
/// tail fixed: (i-1, ..., 1, i, ..., l). Requires 1 <= i <= l; ignores
/// colours entirely.
Path rotate_f_positional(const Path& path, int i);

/// Pure positional permutation: keep the first j entries, reverse the rest:
/// (1, ..., j, l, ..., j+1). Requires 1 <= j <= l.
Path rotate_g_positional(const Path& path, int j);

/// Reversed tuple; a p.c. path stays properly coloured under reflection.
Path reflect(const Path& path);

/// Validated rotation keeping the last vertex fixed. Requires the chord
/// (i_1, i_i) with c(1,i) != c(1,2) and, when i < l, c(1,i) != c(i,i+1);
/// accepted positions are 3 <= i <= l (i = l mirrors g_1 under reflection).
Path rotate_f(const EdgeColouredGraph& g, const Path& path, int i);

/// Validated rotation keeping the first vertex fixed. Requires the chord
/// (i_j, i_l) with c(j,l) != c(l-1,l) and, when j > 1, c(j,l) != c(j-1,j);
/// accepted positions are 1 <= j <= l-2.
Path rotate_g(const EdgeColouredGraph& g, const Path& path, int j);

/// Crossing: 1-based positions a < b with i_a in the eligible endpoint set
/// of the last vertex and i_b in the eligible endpoint set of the first.
/// First witness in (a, b) lexicographic order.
std::optional<std::pair<int, int>> find_crossing(const EdgeColouredGraph& g, const Path& path);
bool has_crossing(const EdgeColouredGraph& g, const Path& path);

/// True iff some vertex outside the path extends it at either end into a
/// longer properly coloured path.
bool is_extensible(const EdgeColouredGraph& g, const Path& path);

struct MaximalisationResult {
  Path path;
  /// True iff the full rotation/reflection closure of the result was
  /// enumerated within the cap and no member is extensible.
  bool certified = false;
};

/// Repeatedly extends: explores the rotation/reflection closure of the
/// current path (up to `cap` stored members) looking for an extensible
/// member, extends it, and restarts until no explored member extends.
MaximalisationResult extend_to_maximal(const EdgeColouredGraph& g, const Path& path,
                                       std::size_t cap = 100000);

struct ClosureResult {
  /// Stored members. For the reflection-closed closure each path is
  /// canonicalised as min(tuple, reversed tuple); the rotation-only closure
  /// stores raw tuples.
  std::vector<Path> paths;
  bool truncated = false;
  /// Endpoint sets over all members counting both orientations for the
  /// reflection-closed closure: first vertices and last vertices.
  std::set<Vertex> first_endpoints;
  std::set<Vertex> last_endpoints;
  /// Member count; counts both orientations of every canonical member for
  /// the reflection-closed closure.
  std::size_t size = 0;
};

/// BFS closure of `path` under valid rotations and reflection.
ClosureResult closure_R(const EdgeColouredGraph& g, const Path& path, std::size_t cap = 100000);
/// BFS closure under valid rotations only (no reflection).
ClosureResult closure_Rprime(const EdgeColouredGraph& g, const Path& path,
                             std::size_t cap = 100000);

/// Builds the cycle (1, ..., b, l, l-1, ..., a, 1) from a chord pair with
/// b < a, given the usual eligibility and colour conditions at both ends and
/// no properly coloured cycle spanning the path's vertex set (checked
/// exhaustively when the path has at most `oracle_limit` vertices).
/// Positions are 1-based. Throws on any violated hypothesis, naming the
/// failed clause.
Cycle lemma_simplecycle(const EdgeColouredGraph& g, const Path& path, int a, int b,
                        int oracle_limit = 12);

/// Endpoint structure of a non-extensible path with a crossing: the fixed
/// colour-neighbourhood position sets A (first endpoint) and B (last
/// endpoint), the threshold positions r, s, u, w and the plateau S, plus
/// booleans reporting which of the structural conclusions hold on this
/// instance.
struct EndpointAnalysis {
  std::set<int> A;  // positions of N^c(i_1;P) on the path
  std::set<int> B;  // positions of N^c(i_l;P) on the path
  int r = -1;
  int s = -1;  // -1 when no position in B satisfies the plateau equation
  std::optional<int> u;
  std::optional<int> w;
  std::set<int> S;  // [r, s] ∩ B
  bool clause_a = false;
  bool clause_b = false;
  bool clause_c = false;
  /// Clause (c) recomputed without excluding position 2.
  bool clause_c_without_exclusion = false;
  bool clause_d = false;
  bool clause_e = false;
  bool clause_f = false;
};

/// Requires: path p.c., not extensible, and a crossing with respect to the
/// deterministic colour-neighbourhood choices at both endpoints.
EndpointAnalysis analyze_endpoints(const EdgeColouredGraph& g, const Path& path);

struct CycleDecomposition {
  Cycle cycle;
  Path path;  // possibly empty
  /// 0-based index into the open part of `cycle` that the path head attaches
  /// to; -1 when the path is empty.
  int attach = -1;
};

/// Splits the vertex set of a maximal path with a crossing into a properly
/// coloured cycle C and a vertex-disjoint properly coloured path Q covering
/// the rest, with Q's head attached to C. With minimum colour degree d >= 3
/// the cycle has length >= d, and >= d+1 when the path has fewer than 2d+1
/// vertices; with d = 2 some cycle inside the path's vertex set is returned
/// and Q is empty. Structural search over the rotation closure first (up to
/// `cap` members), exhaustive search inside the path's vertex span as
/// fallback.
CycleDecomposition crossing_decompose(const EdgeColouredGraph& g, const Path& maximal_path,
                                      std::size_t cap = 100000);

}  // namespace ecg
