#include "ecg/graph.hpp"

#include <algorithm>
#include <queue>

#include "ecg/paths.hpp"

namespace ecg {

EdgeColouredGraph::EdgeColouredGraph(int n) {
  if (n < 0) throw error(Errc::bad_parameters, "negative vertex count");
  adj_.resize(n);
}

void EdgeColouredGraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n()) throw error(Errc::vertex_out_of_range, "vertex out of range");
}

void EdgeColouredGraph::add_edge(Vertex u, Vertex v, Colour colour) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw error(Errc::loop, "loop");
  if (colour < 0) throw error(Errc::bad_parameters, "negative colour");
  if (adj_[u].count(v)) throw error(Errc::duplicate_edge, "duplicate edge");
  adj_[u][v] = colour;
  adj_[v][u] = colour;
  ++m_;
}

bool EdgeColouredGraph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[u].count(v) > 0;
}

Colour EdgeColouredGraph::colour(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  auto it = adj_[u].find(v);
  if (it == adj_[u].end()) throw error(Errc::edge_missing, "edge missing");
  return it->second;
}

const std::map<Vertex, Colour>& EdgeColouredGraph::neighbours(Vertex v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<std::tuple<Vertex, Vertex, Colour>> EdgeColouredGraph::edges() const {
  std::vector<std::tuple<Vertex, Vertex, Colour>> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n(); ++u)
    for (const auto& [v, c] : adj_[u])
      if (u < v) out.emplace_back(u, v, c);
  return out;
}

int EdgeColouredGraph::degree(Vertex v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

int EdgeColouredGraph::colour_degree(Vertex v) const {
  check_vertex(v);
  std::set<Colour> cs;
  for (const auto& [w, c] : adj_[v]) cs.insert(c);
  return static_cast<int>(cs.size());
}

int EdgeColouredGraph::min_colour_degree() const {
  if (n() == 0) throw error(Errc::empty_graph, "empty graph");
  int best = colour_degree(0);
  for (Vertex v = 1; v < n(); ++v) best = std::min(best, colour_degree(v));
  return best;
}

std::set<Colour> EdgeColouredGraph::colours_present() const {
  std::set<Colour> cs;
  for (Vertex u = 0; u < n(); ++u)
    for (const auto& [v, c] : adj_[u]) cs.insert(c);
  return cs;
}

bool EdgeColouredGraph::connected() const {
  if (n() <= 1) return true;
  std::vector<char> seen(n(), 0);
  std::queue<Vertex> q;
  q.push(0);
  seen[0] = 1;
  int cnt = 1;
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (const auto& [v, c] : adj_[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++cnt;
        q.push(v);
      }
  }
  return cnt == n();
}

EdgeColouredGraph EdgeColouredGraph::remove_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (!has_edge(u, v)) throw error(Errc::edge_missing, "edge missing");
  EdgeColouredGraph g = *this;
  g.adj_[u].erase(v);
  g.adj_[v].erase(u);
  --g.m_;
  return g;
}

std::pair<EdgeColouredGraph, std::map<Vertex, Vertex>> EdgeColouredGraph::induced_subgraph(
    const std::vector<Vertex>& keep) const {
  std::map<Vertex, Vertex> relabel;
  for (Vertex v : keep) {
    check_vertex(v);
    if (relabel.count(v)) throw error(Errc::bad_parameters, "repeated vertex in subset");
    relabel[v] = 0;
  }
  Vertex next = 0;
  for (auto& [old_id, new_id] : relabel) new_id = next++;
  EdgeColouredGraph sub(static_cast<int>(relabel.size()));
  for (const auto& [u, nu] : relabel)
    for (const auto& [v, c] : adj_[u]) {
      auto it = relabel.find(v);
      if (it != relabel.end() && u < v) sub.add_edge(nu, it->second, c);
    }
  return {sub, relabel};
}

std::pair<EdgeColouredGraph, std::map<Vertex, Vertex>> EdgeColouredGraph::remove_vertex(
    Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> keep;
  keep.reserve(n() - 1);
  for (Vertex u = 0; u < n(); ++u)
    if (u != v) keep.push_back(u);
  return induced_subgraph(keep);
}

ColourNeighbourhoodChoice make_colour_neighbourhood(const EdgeColouredGraph& g, Vertex v,
                                                    const std::vector<Vertex>& forced) {
  ColourNeighbourhoodChoice choice;
  choice.vertex = v;
  for (Vertex f : forced) {
    Colour c = g.colour(v, f);
    auto [it, inserted] = choice.representatives.emplace(c, f);
    if (!inserted && it->second != f)
      throw error(Errc::colour_clash, "forced vertices share a colour");
  }
  for (const auto& [w, c] : g.neighbours(v)) choice.representatives.emplace(c, w);
  return choice;
}

std::set<Vertex> eligible_endpoint_set(const EdgeColouredGraph& g, const Path& path,
                                       PathEnd end) {
  if (!is_pc_path(g, path)) throw error(Errc::invalid_path, "not a p.c. path");
  Vertex e = (end == PathEnd::first) ? path.front() : path.back();
  std::set<Vertex> out;
  if (path.size() == 1) {
    for (const auto& [w, c] : g.neighbours(e)) out.insert(w);
    return out;
  }
  Vertex pn = (end == PathEnd::first) ? path[1] : path[path.size() - 2];
  Colour pc = g.colour(e, pn);
  for (const auto& [w, c] : g.neighbours(e))
    if (w == pn || c != pc) out.insert(w);
  return out;
}

}  // namespace ecg
