#include "ecg/paths.hpp"

#include <set>

namespace ecg {

bool is_pc_path(const EdgeColouredGraph& g, const Path& path) {
  if (path.empty()) return false;
  std::set<Vertex> seen;
  for (Vertex v : path) {
    if (v < 0 || v >= g.n()) return false;
    if (!seen.insert(v).second) return false;
  }
  Colour prev = -1;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!g.has_edge(path[i], path[i + 1])) return false;
    Colour c = g.colour(path[i], path[i + 1]);
    if (i > 0 && c == prev) return false;
    prev = c;
  }
  return true;
}

bool is_pc_cycle(const EdgeColouredGraph& g, const Cycle& cycle) {
  if (cycle.size() < 4) return false;
  if (cycle.front() != cycle.back()) return false;
  Path open(cycle.begin(), cycle.end() - 1);
  if (!is_pc_path(g, open)) return false;
  Vertex last = open.back(), first = open.front();
  if (!g.has_edge(last, first)) return false;
  Colour close = g.colour(last, first);
  if (close == g.colour(open[open.size() - 2], last)) return false;
  if (close == g.colour(first, open[1])) return false;
  return true;
}

bool is_rainbow(const EdgeColouredGraph& g, const std::vector<Vertex>& subset) {
  std::set<Vertex> in(subset.begin(), subset.end());
  std::set<Colour> seen;
  for (Vertex u : in) {
    if (u < 0 || u >= g.n()) return false;
    for (const auto& [v, c] : g.neighbours(u)) {
      if (u < v && in.count(v)) {
        if (!seen.insert(c).second) return false;
      }
    }
  }
  return true;
}

}  // namespace ecg
