#pragma once

#include <iosfwd>
#include <string>

#include "ecg/graph.hpp"

namespace ecg {

/// ECG v1 text format: first line "n m", then m lines "u v c" with 0-based
/// vertices and a non-negative colour. The reader rejects loops, duplicates
/// and out-of-range ids; the writer emits edges sorted lexicographically.
EdgeColouredGraph read_ecg(std::istream& in);
EdgeColouredGraph read_ecg_file(const std::string& path);
void write_ecg(std::ostream& out, const EdgeColouredGraph& g);
void write_ecg_file(const std::string& path, const EdgeColouredGraph& g);
std::string to_ecg_string(const EdgeColouredGraph& g);

/// DOT export; colour ids map onto a fixed 12-colour palette (cycling) and
/// the raw colour id is kept in the edge label.
void write_dot(std::ostream& out, const EdgeColouredGraph& g);

}  // namespace ecg
