#include "ecg/yeo.hpp"

#include <algorithm>
#include <set>

namespace ecg {
namespace {

// Connected components of G - z, restricted to `subset` (which contains z).
std::vector<std::vector<Vertex>> components_without(const EdgeColouredGraph& g,
                                                    const std::vector<Vertex>& subset, Vertex z) {
  std::set<Vertex> in(subset.begin(), subset.end());
  in.erase(z);
  std::vector<std::vector<Vertex>> comps;
  std::set<Vertex> seen;
  for (Vertex s : in) {
    if (seen.count(s)) continue;
    std::vector<Vertex> comp{s};
    seen.insert(s);
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (const auto& [v, c] : g.neighbours(comp[i]))
        if (in.count(v) && !seen.count(v)) {
          seen.insert(v);
          comp.push_back(v);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

std::optional<YeoCertificate> find_yeo_vertex_in(const EdgeColouredGraph& g,
                                                 const std::vector<Vertex>& subset) {
  for (Vertex z : subset) {
    YeoCertificate cert;
    cert.z = z;
    bool ok = true;
    for (auto& comp : components_without(g, subset, z)) {
      std::set<Colour> colours;
      for (Vertex v : comp)
        if (g.has_edge(z, v)) colours.insert(g.colour(z, v));
      if (colours.size() > 1) {
        ok = false;
        break;
      }
      cert.components.emplace_back(std::move(comp), colours.empty() ? -1 : *colours.begin());
    }
    if (ok) return cert;
  }
  return std::nullopt;
}

bool subset_has_edge(const EdgeColouredGraph& g, const std::vector<Vertex>& subset) {
  std::set<Vertex> in(subset.begin(), subset.end());
  for (Vertex u : subset)
    for (const auto& [v, c] : g.neighbours(u))
      if (in.count(v)) return true;
  return false;
}

}  // namespace

std::optional<YeoCertificate> find_yeo_vertex(const EdgeColouredGraph& g) {
  if (g.n() < 1) throw error(Errc::empty_graph, "empty graph");
  std::vector<Vertex> all(g.n());
  for (Vertex v = 0; v < g.n(); ++v) all[v] = v;
  return find_yeo_vertex_in(g, all);
}

bool valid_yeo_certificate(const EdgeColouredGraph& g, const YeoCertificate& cert) {
  if (cert.z < 0 || cert.z >= g.n()) return false;
  std::vector<Vertex> all(g.n());
  for (Vertex v = 0; v < g.n(); ++v) all[v] = v;
  auto comps = components_without(g, all, cert.z);
  std::vector<std::pair<std::vector<Vertex>, Colour>> expected;
  for (auto& comp : comps) {
    std::set<Colour> colours;
    for (Vertex v : comp)
      if (g.has_edge(cert.z, v)) colours.insert(g.colour(cert.z, v));
    if (colours.size() > 1) return false;
    expected.emplace_back(std::move(comp), colours.empty() ? -1 : *colours.begin());
  }
  auto given = cert.components;
  for (auto& [comp, c] : given) std::sort(comp.begin(), comp.end());
  std::sort(given.begin(), given.end());
  std::sort(expected.begin(), expected.end());
  return given == expected;
}

AcyclicityCertificate certify_acyclic(const EdgeColouredGraph& g) {
  if (g.n() < 1) throw error(Errc::empty_graph, "empty graph");
  AcyclicityCertificate res;
  std::vector<std::vector<Vertex>> pending;
  std::vector<Vertex> all(g.n());
  for (Vertex v = 0; v < g.n(); ++v) all[v] = v;
  pending.push_back(all);
  while (!pending.empty()) {
    std::vector<Vertex> subset = pending.back();
    pending.pop_back();
    if (subset.size() < 3 || !subset_has_edge(g, subset)) continue;
    auto cert = find_yeo_vertex_in(g, subset);
    if (cert) {
      for (const auto& [comp, c] : cert->components) pending.push_back(comp);
      res.chain.push_back(std::move(*cert));
      continue;
    }
    // no qualifying vertex: a properly coloured cycle must exist here
    auto [sub, relabel] = g.induced_subgraph(subset);
    std::vector<Vertex> back(relabel.size());
    for (const auto& [old_id, new_id] : relabel) back[new_id] = old_id;
    CycleSearchResult r = longest_pc_cycle(sub);
    if (!r.cycle)
      throw error(Errc::contract_violation,
                  "no qualifying vertex and no properly coloured cycle in the same subgraph");
    Cycle translated;
    for (Vertex v : *r.cycle) translated.push_back(back[v]);
    res.acyclic = false;
    res.cycle = translated;
    res.chain.clear();
    return res;
  }
  res.acyclic = true;
  return res;
}

}  // namespace ecg
