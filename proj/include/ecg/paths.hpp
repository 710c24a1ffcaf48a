#pragma once

#include "ecg/graph.hpp"

namespace ecg {

/// True iff the tuple is a properly coloured path: distinct vertices,
/// consecutive pairs are edges, no two consecutive edges share a colour.
/// Malformed input yields false, never an error.
bool is_pc_path(const EdgeColouredGraph& g, const Path& path);

/// True iff the tuple is a properly coloured cycle: (i_1,...,i_l,i_1) with
/// l >= 3 distinct vertices, all consecutive pairs (including the closing
/// one) edges, properly coloured around the wrap.
bool is_pc_cycle(const EdgeColouredGraph& g, const Cycle& cycle);

/// True iff all edges inside G[U] have pairwise distinct colours.
bool is_rainbow(const EdgeColouredGraph& g, const std::vector<Vertex>& subset);

inline int path_length(const Path& p) { return static_cast<int>(p.size()) - 1; }
inline int cycle_length(const Cycle& c) { return static_cast<int>(c.size()) - 1; }

}  // namespace ecg
