#pragma once

#include <cstdint>
#include <map>

#include "ecg/graph.hpp"

namespace ecg {

/// Hub vertex 0 joined to p disjoint rainbow copies of K_d, fresh colours
/// per block and per hub star. Minimum colour degree exactly d.
/// Requires p >= d >= 2.
EdgeColouredGraph gen_tilde(int d, int p);

/// Rainbow K_d on X = {0..d-1}; Y = {d..n-1} independent; x_i joined to all
/// of Y in its own fresh colour. Minimum colour degree exactly d.
/// Requires n >= ceil(3d/2) and d >= 1.
EdgeColouredGraph gen_hat(int d, int n);

/// Star-of-copies recursion: p disjoint copies of the (d-1)-instance plus a
/// hub joined to copy j entirely in fresh colour j. Base d = k-1 is
/// gen_tilde(k-1, p). Longest properly coloured path k*2^(d-k+2)-2; no
/// properly coloured cycle of length >= k. Requires d >= k-1 >= 2, p >= d.
EdgeColouredGraph gen_recursive(int d, int k, int p);

struct ProperComplete {
  EdgeColouredGraph graph;
  /// For odd n: vertex i is missing colour i. Empty for even n, where every
  /// vertex sees all n-1 colours.
  std::map<Vertex, Colour> missing;
};

/// Proper edge colouring of K_n: n-1 colours for even n (1-factorization),
/// n colours for odd n with vertex i missing colour i. Requires n >= 2.
ProperComplete gen_proper_complete(int n);

/// Replace every vertex by `delta` independent copies; copies of u and v are
/// joined with colour c(u,v) iff uv is an edge. Copy t of v is v*delta + t.
EdgeColouredGraph blow_up(const EdgeColouredGraph& g, int delta);

/// Minimum over colours present of the minimum degree, over all vertices,
/// inside that colour's subgraph. Throws on an edgeless graph.
int mono_min_degree(const EdgeColouredGraph& g);

/// k-coloured graph with monochromatic minimum degree >= delta whose longest
/// properly coloured path is at most floor(3*delta*(k+eps)/2), eps = 1 for
/// even k. X carries a proper k-colouring of a complete graph with x_i
/// missing colour i; every y in Y hangs off x_i with colour i; the whole
/// graph is then blown up by delta. Requires k >= 3, delta >= 1.
EdgeColouredGraph gen_counterexample_mono(int k, int delta);

/// K_n with pairwise distinct colours.
EdgeColouredGraph gen_rainbow_complete(int n);

/// Seeded instance with minimum colour degree >= d on a palette of
/// `colours` colours: disjoint degree-guaranteeing blocks (rainbow K_{d+1}
/// when the palette allows, properly coloured complete blocks otherwise)
/// plus random extra edges at the given density. Deterministic per seed.
EdgeColouredGraph gen_random_min_cdeg(int n, int d, int colours, std::uint64_t seed,
                                      double density = 0.25);

}  // namespace ecg
