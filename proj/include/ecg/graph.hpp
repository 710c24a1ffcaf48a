#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace ecg {

using Vertex = int;
using Colour = int;

enum class Errc {
  loop,
  duplicate_edge,
  vertex_out_of_range,
  empty_graph,
  edgeless_graph,
  bad_parameters,
  invalid_path,
  position_out_of_range,
  edge_missing,
  colour_clash,
  no_crossing,
  extensible,
  not_maximal,
  hypothesis_violated,
  contract_violation,
  parse_error,
};

class error : public std::runtime_error {
 public:
  error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

/// Simple undirected graph on vertices 0..n-1 with one integer colour per
/// edge. Loops and parallel edges are rejected. Values are cheap to copy;
/// mutation beyond the construction phase goes through operations that
/// return new graphs.
class EdgeColouredGraph {
 public:
  EdgeColouredGraph() = default;
  explicit EdgeColouredGraph(int n);

  int n() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return m_; }

  void add_edge(Vertex u, Vertex v, Colour colour);
  bool has_edge(Vertex u, Vertex v) const;
  Colour colour(Vertex u, Vertex v) const;
  const std::map<Vertex, Colour>& neighbours(Vertex v) const;
  /// All edges (u, v, colour) with u < v, sorted lexicographically.
  std::vector<std::tuple<Vertex, Vertex, Colour>> edges() const;

  int degree(Vertex v) const;
  /// Number of distinct colours on edges incident to v.
  int colour_degree(Vertex v) const;
  /// Minimum of colour_degree over all vertices; throws on an empty graph.
  int min_colour_degree() const;
  std::set<Colour> colours_present() const;
  bool connected() const;

  EdgeColouredGraph remove_edge(Vertex u, Vertex v) const;
  /// Induced subgraph on `keep`, relabelled compactly to 0..|keep|-1.
  /// The returned map sends old vertex ids to new ones.
  std::pair<EdgeColouredGraph, std::map<Vertex, Vertex>> induced_subgraph(
      const std::vector<Vertex>& keep) const;
  std::pair<EdgeColouredGraph, std::map<Vertex, Vertex>> remove_vertex(Vertex v) const;

  bool operator==(const EdgeColouredGraph&) const = default;

 private:
  void check_vertex(Vertex v) const;
  std::vector<std::map<Vertex, Colour>> adj_;
  int m_ = 0;
};

/// Open vertex tuple; consecutive entries are meant to be edges.
using Path = std::vector<Vertex>;
/// Closed tuple: first vertex repeated at the end.
using Cycle = std::vector<Vertex>;

/// One representative neighbour per colour incident to `vertex`.
struct ColourNeighbourhoodChoice {
  Vertex vertex = -1;
  std::map<Colour, Vertex> representatives;
};

/// Deterministic choice: forced members first, then the smallest neighbour id
/// for every remaining colour. Throws colour_clash when two forced vertices
/// carry the same colour.
ColourNeighbourhoodChoice make_colour_neighbourhood(const EdgeColouredGraph& g, Vertex v,
                                                    const std::vector<Vertex>& forced = {});

enum class PathEnd { first, last };

/// Vertices that can appear in some valid colour neighbourhood of the chosen
/// path endpoint: the path neighbour itself plus every neighbour whose edge
/// colour differs from the path edge at that endpoint. For a single-vertex
/// path every neighbour is eligible.
std::set<Vertex> eligible_endpoint_set(const EdgeColouredGraph& g, const Path& path,
                                       PathEnd end);

}  // namespace ecg
