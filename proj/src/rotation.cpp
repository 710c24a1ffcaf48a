#include "ecg/rotation.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "ecg/oracle.hpp"

namespace ecg {
namespace {

int len(const Path& p) { return static_cast<int>(p.size()); }

void require_pc(const EdgeColouredGraph& g, const Path& path) {
  if (!is_pc_path(g, path)) throw error(Errc::invalid_path, "not a properly coloured path");
}

Colour pcol(const EdgeColouredGraph& g, const Path& p, int i, int j) {
  return g.colour(p[i - 1], p[j - 1]);
}

// Valid pivot positions for the rotation keeping the last vertex fixed.
std::vector<int> valid_f_pivots(const EdgeColouredGraph& g, const Path& p) {
  std::vector<int> out;
  int l = len(p);
  for (int i = 3; i <= l; ++i) {
    if (!g.has_edge(p[0], p[i - 1])) continue;
    Colour chord = pcol(g, p, 1, i);
    if (chord == pcol(g, p, 1, 2)) continue;
    if (i < l && chord == pcol(g, p, i, i + 1)) continue;
    out.push_back(i);
  }
  return out;
}

// Valid pivot positions for the rotation keeping the first vertex fixed.
std::vector<int> valid_g_pivots(const EdgeColouredGraph& g, const Path& p) {
  std::vector<int> out;
  int l = len(p);
  for (int j = 1; j <= l - 2; ++j) {
    if (!g.has_edge(p[j - 1], p[l - 1])) continue;
    Colour chord = pcol(g, p, j, l);
    if (chord == pcol(g, p, l - 1, l)) continue;
    if (j > 1 && chord == pcol(g, p, j - 1, j)) continue;
    out.push_back(j);
  }
  return out;
}

std::vector<Path> rotation_successors(const EdgeColouredGraph& g, const Path& p) {
  std::vector<Path> out;
  for (int i : valid_f_pivots(g, p)) out.push_back(rotate_f_positional(p, i));
  for (int j : valid_g_pivots(g, p)) out.push_back(rotate_g_positional(p, j));
  return out;
}

Path canonical(const Path& p) {
  Path r(p.rbegin(), p.rend());
  return std::min(p, r);
}

// Vertices that can be appended after the last entry keeping the path p.c.
std::vector<Vertex> extension_candidates(const EdgeColouredGraph& g, const Path& p) {
  std::vector<Vertex> out;
  Vertex last = p.back();
  std::set<Vertex> in(p.begin(), p.end());
  for (const auto& [v, c] : g.neighbours(last)) {
    if (in.count(v)) continue;
    if (p.size() >= 2 && c == g.colour(p[p.size() - 2], last)) continue;
    out.push_back(v);
  }
  return out;
}

struct ClosureOptions {
  bool with_reflection = true;
};

ClosureResult run_closure(const EdgeColouredGraph& g, const Path& path, std::size_t cap,
                          ClosureOptions opts) {
  require_pc(g, path);
  ClosureResult res;
  std::set<Path> seen;
  std::deque<Path> queue;
  auto push = [&](const Path& p) {
    Path key = opts.with_reflection ? canonical(p) : p;
    if (seen.count(key)) return;
    if (seen.size() >= cap) {
      res.truncated = true;
      return;
    }
    seen.insert(key);
    queue.push_back(key);
  };
  push(path);
  while (!queue.empty()) {
    Path p = queue.front();
    queue.pop_front();
    res.paths.push_back(p);
    res.first_endpoints.insert(p.front());
    res.last_endpoints.insert(p.back());
    if (opts.with_reflection) {
      res.first_endpoints.insert(p.back());
      res.last_endpoints.insert(p.front());
    }
    for (const Path& s : rotation_successors(g, p)) push(s);
    if (opts.with_reflection) {
      Path r(p.rbegin(), p.rend());
      for (const Path& s : rotation_successors(g, r)) push(s);
    }
  }
  res.size = 0;
  for (const Path& p : res.paths) {
    if (opts.with_reflection)
      res.size += (p.size() >= 2 ? 2 : 1);
    else
      res.size += 1;
  }
  return res;
}

}  // namespace

Path rotate_f_positional(const Path& path, int i) {
  int l = len(path);
  if (i < 1 || i > l) throw error(Errc::position_out_of_range, "pivot " + std::to_string(i));
  Path out(path.rend() - (i - 1), path.rend());
  out.insert(out.end(), path.begin() + (i - 1), path.end());
  return out;
}

Path rotate_g_positional(const Path& path, int j) {
  int l = len(path);
  if (j < 1 || j > l) throw error(Errc::position_out_of_range, "pivot " + std::to_string(j));
  Path out(path.begin(), path.begin() + j);
  out.insert(out.end(), path.rbegin(), path.rend() - j);
  return out;
}

Path reflect(const Path& path) { return Path(path.rbegin(), path.rend()); }

Path rotate_f(const EdgeColouredGraph& g, const Path& path, int i) {
  require_pc(g, path);
  int l = len(path);
  if (i < 3 || i > l)
    throw error(Errc::position_out_of_range,
                "pivot " + std::to_string(i) + " outside [3, " + std::to_string(l) + "]");
  if (!g.has_edge(path[0], path[i - 1]))
    throw error(Errc::edge_missing, "no edge between positions 1 and " + std::to_string(i));
  Colour chord = pcol(g, path, 1, i);
  if (chord == pcol(g, path, 1, 2))
    throw error(Errc::colour_clash, "chord colour equals colour of the first path edge");
  if (i < l && chord == pcol(g, path, i, i + 1))
    throw error(Errc::colour_clash, "chord colour equals colour of the edge after the pivot");
  return rotate_f_positional(path, i);
}

Path rotate_g(const EdgeColouredGraph& g, const Path& path, int j) {
  require_pc(g, path);
  int l = len(path);
  if (j < 1 || j > l - 2)
    throw error(Errc::position_out_of_range,
                "pivot " + std::to_string(j) + " outside [1, " + std::to_string(l - 2) + "]");
  if (!g.has_edge(path[j - 1], path[l - 1]))
    throw error(Errc::edge_missing,
                "no edge between positions " + std::to_string(j) + " and " + std::to_string(l));
  Colour chord = pcol(g, path, j, l);
  if (chord == pcol(g, path, l - 1, l))
    throw error(Errc::colour_clash, "chord colour equals colour of the last path edge");
  if (j > 1 && chord == pcol(g, path, j - 1, j))
    throw error(Errc::colour_clash, "chord colour equals colour of the edge before the pivot");
  return rotate_g_positional(path, j);
}

std::optional<std::pair<int, int>> find_crossing(const EdgeColouredGraph& g, const Path& path) {
  require_pc(g, path);
  int l = len(path);
  std::set<Vertex> from_last = eligible_endpoint_set(g, path, PathEnd::last);
  std::set<Vertex> from_first = eligible_endpoint_set(g, path, PathEnd::first);
  for (int a = 1; a <= l; ++a) {
    if (!from_last.count(path[a - 1])) continue;
    for (int b = a + 1; b <= l; ++b)
      if (from_first.count(path[b - 1])) return std::make_pair(a, b);
  }
  return std::nullopt;
}

bool has_crossing(const EdgeColouredGraph& g, const Path& path) {
  return find_crossing(g, path).has_value();
}

bool is_extensible(const EdgeColouredGraph& g, const Path& path) {
  require_pc(g, path);
  if (!extension_candidates(g, path).empty()) return true;
  Path r = reflect(path);
  return !extension_candidates(g, r).empty();
}

MaximalisationResult extend_to_maximal(const EdgeColouredGraph& g, const Path& path,
                                       std::size_t cap) {
  require_pc(g, path);
  Path cur = path;
  while (true) {
    ClosureResult closure = closure_R(g, cur, cap);
    bool extended = false;
    for (const Path& member : closure.paths) {
      for (const Path& oriented : {member, reflect(member)}) {
        std::vector<Vertex> ext = extension_candidates(g, oriented);
        if (!ext.empty()) {
          cur = oriented;
          cur.push_back(ext.front());
          extended = true;
          break;
        }
      }
      if (extended) break;
    }
    if (!extended) return {cur, !closure.truncated};
  }
}

ClosureResult closure_R(const EdgeColouredGraph& g, const Path& path, std::size_t cap) {
  return run_closure(g, path, cap, {true});
}

ClosureResult closure_Rprime(const EdgeColouredGraph& g, const Path& path, std::size_t cap) {
  return run_closure(g, path, cap, {false});
}

Cycle lemma_simplecycle(const EdgeColouredGraph& g, const Path& path, int a, int b,
                        int oracle_limit) {
  require_pc(g, path);
  int l = len(path);
  if (a < 1 || a > l || b < 1 || b > l)
    throw error(Errc::position_out_of_range, "chord positions must lie in [1, l]");
  if (b >= a) throw error(Errc::hypothesis_violated, "requires b < a");
  if (a == 2) throw error(Errc::hypothesis_violated, "position a = 2 is excluded");
  if (b == l - 1) throw error(Errc::hypothesis_violated, "position b = l-1 is excluded");
  if (!g.has_edge(path[0], path[a - 1]))
    throw error(Errc::hypothesis_violated, "no chord from the first vertex to position a");
  if (!g.has_edge(path[b - 1], path[l - 1]))
    throw error(Errc::hypothesis_violated, "no chord from the last vertex to position b");
  if (pcol(g, path, 1, a) == pcol(g, path, 1, 2))
    throw error(Errc::hypothesis_violated, "c(1,a) = c(1,2)");
  if (pcol(g, path, b, l) == pcol(g, path, l - 1, l))
    throw error(Errc::hypothesis_violated, "c(l,b) = c(l-1,l)");
  if (a < l && pcol(g, path, 1, a) == pcol(g, path, a, a + 1))
    throw error(Errc::hypothesis_violated, "c(1,a) = c(a,a+1)");
  if (b > 1 && pcol(g, path, b, l) == pcol(g, path, b, b - 1))
    throw error(Errc::hypothesis_violated, "c(l,b) = c(b,b-1)");
  if (b == 1 && a == l)
    throw error(Errc::hypothesis_violated,
                "chords at both far ends close a spanning properly coloured cycle");
  Cycle c(path.begin(), path.begin() + b);
  for (int i = l; i >= a; --i) c.push_back(path[i - 1]);
  c.push_back(path[0]);
  if (!is_pc_cycle(g, c)) {
    // only possible in the b = 1 branch, whose validity rests on the
    // no-spanning-cycle hypothesis; diagnose it when the instance is small
    if (l <= oracle_limit) {
      auto [sub, relabel] = g.induced_subgraph(path);
      if (has_pc_cycle_of_length_at_least(sub, sub.n()).found)
        throw error(Errc::hypothesis_violated,
                    "a properly coloured cycle spans the path's vertex set");
    }
    throw error(Errc::hypothesis_violated,
                "constructed tuple is not properly coloured; an unchecked hypothesis fails");
  }
  return c;
}

EndpointAnalysis analyze_endpoints(const EdgeColouredGraph& g, const Path& path) {
  require_pc(g, path);
  if (is_extensible(g, path)) throw error(Errc::extensible, "path is extensible");
  int l = len(path);
  std::map<Vertex, int> pos;
  for (int i = 1; i <= l; ++i) pos[path[i - 1]] = i;

  EndpointAnalysis res;
  ColourNeighbourhoodChoice first_nc =
      make_colour_neighbourhood(g, path.front(), l >= 2 ? std::vector<Vertex>{path[1]}
                                                        : std::vector<Vertex>{});
  ColourNeighbourhoodChoice last_nc =
      make_colour_neighbourhood(g, path.back(), l >= 2 ? std::vector<Vertex>{path[l - 2]}
                                                       : std::vector<Vertex>{});
  for (const auto& [c, v] : first_nc.representatives) {
    auto it = pos.find(v);
    if (it == pos.end())
      throw error(Errc::extensible, "colour neighbourhood leaves the path's vertex set");
    res.A.insert(it->second);
  }
  for (const auto& [c, v] : last_nc.representatives) {
    auto it = pos.find(v);
    if (it == pos.end())
      throw error(Errc::extensible, "colour neighbourhood leaves the path's vertex set");
    res.B.insert(it->second);
  }

  bool crossing = false;
  for (int a : res.B) {
    for (int b : res.A)
      if (a < b) crossing = true;
  }
  if (!crossing)
    throw error(Errc::no_crossing,
                "no crossing with respect to the fixed colour neighbourhoods");

  res.r = *res.B.begin();
  // plateau: the longest run of positions b in B, starting at r, with
  // c(b, last) equal to the colour of the path edge leaving b forward
  res.s = -1;
  for (int b : res.B) {
    if (b + 1 > l) break;
    if (pcol(g, path, b, l) != pcol(g, path, b, b + 1)) break;
    res.s = b;
  }
  if (res.s >= 0)
    for (int b : res.B)
      if (b >= res.r && b <= res.s) res.S.insert(b);
  res.clause_a = res.s >= 0;

  // first member of B beyond the plateau must break the equation
  res.clause_b = true;
  for (int b : res.B) {
    if (b <= res.s) continue;
    res.clause_b = b + 1 > l || pcol(g, path, b, l) != pcol(g, path, b, b + 1);
    break;
  }

  auto clause_c_on = [&](bool exclude_two) {
    for (int a : res.A) {
      if (a <= res.r || a > res.s) continue;
      if (exclude_two && a == 2) continue;
      if (a + 1 > l) return false;
      if (pcol(g, path, 1, a) != pcol(g, path, a, a + 1)) return false;
      if (pcol(g, path, a, a + 1) == pcol(g, path, a, a - 1)) return false;
    }
    return true;
  };
  res.clause_c = clause_c_on(true);
  res.clause_c_without_exclusion = clause_c_on(false);

  if (res.s >= 2) {
    // u: longest run of A-positions after s satisfying c(1,a) = c(a,a+1)
    for (int a : res.A) {
      if (a <= res.s) continue;
      if (a + 1 > l || pcol(g, path, 1, a) != pcol(g, path, a, a + 1)) break;
      res.u = a;
    }
    if (res.u) {
      for (int a : res.A)
        if (a > *res.u) {
          res.w = a;
          break;
        }
    }
    if (res.u) {
      res.clause_d = true;
      for (int a : res.A) {
        if (a <= res.s || a > *res.u) continue;
        if (pcol(g, path, a, a + 1) == pcol(g, path, a, a - 1)) res.clause_d = false;
      }
      res.clause_e = res.w.has_value();
      if (res.w)
        res.clause_f = *res.w == l || pcol(g, path, 1, *res.w) != pcol(g, path, *res.w, *res.w + 1);
    }
  }
  return res;
}

namespace {

// All properly coloured cycles of a small graph, one tuple per cycle:
// smallest vertex first, direction fixed by second entry < last entry.
std::vector<Cycle> enumerate_pc_cycles(const EdgeColouredGraph& g, int min_len) {
  std::vector<Cycle> out;
  std::vector<char> visited(g.n(), 0);
  Path cur;
  Colour first_colour = -1;
  Vertex start = 0;

  std::function<void(Vertex, Colour)> dfs = [&](Vertex at, Colour in) {
    if (cur.size() >= 3 && g.has_edge(at, start)) {
      Colour cc = g.colour(at, start);
      if (cc != in && cc != first_colour && static_cast<int>(cur.size()) >= min_len &&
          cur[1] < cur.back()) {
        Cycle c = cur;
        c.push_back(start);
        out.push_back(c);
      }
    }
    for (const auto& [v, c] : g.neighbours(at)) {
      if (v <= start || visited[v] || c == in) continue;
      if (cur.size() == 1) first_colour = c;
      visited[v] = 1;
      cur.push_back(v);
      dfs(v, c);
      cur.pop_back();
      visited[v] = 0;
    }
  };
  for (start = 0; start < g.n(); ++start) {
    cur = {start};
    visited[start] = 1;
    first_colour = -1;
    dfs(start, -1);
    visited[start] = 0;
  }
  return out;
}

// All spanning properly coloured paths of a small graph, capped.
std::vector<Path> enumerate_spanning_pc_paths(const EdgeColouredGraph& g, std::size_t cap) {
  std::vector<Path> out;
  std::vector<char> visited(g.n(), 0);
  Path cur;
  std::function<void(Vertex, Colour)> dfs = [&](Vertex at, Colour in) {
    if (out.size() >= cap) return;
    if (static_cast<int>(cur.size()) == g.n()) {
      out.push_back(cur);
      return;
    }
    for (const auto& [v, c] : g.neighbours(at)) {
      if (visited[v] || c == in) continue;
      visited[v] = 1;
      cur.push_back(v);
      dfs(v, c);
      cur.pop_back();
      visited[v] = 0;
    }
  };
  for (Vertex s = 0; s < g.n(); ++s) {
    cur = {s};
    visited[s] = 1;
    dfs(s, -1);
    visited[s] = 0;
  }
  return out;
}

std::optional<CycleDecomposition> try_attach(const EdgeColouredGraph& g, const Cycle& cycle,
                                             const Path& q) {
  if (q.empty()) return CycleDecomposition{cycle, {}, -1};
  int open = static_cast<int>(cycle.size()) - 1;
  for (const Path& oriented : {q, reflect(q)}) {
    Vertex head = oriented.front();
    for (int j = 0; j < open; ++j) {
      if (!g.has_edge(head, cycle[j])) continue;
      if (oriented.size() >= 2 &&
          g.colour(head, oriented[1]) == g.colour(head, cycle[j]))
        continue;
      return CycleDecomposition{cycle, oriented, j};
    }
  }
  return std::nullopt;
}

}  // namespace

CycleDecomposition crossing_decompose(const EdgeColouredGraph& g, const Path& maximal_path,
                                      std::size_t cap) {
  require_pc(g, maximal_path);
  const Path& p0 = maximal_path;
  if (!has_crossing(g, p0)) throw error(Errc::no_crossing, "path has no crossing");
  int d = g.min_colour_degree();
  if (d < 2)
    throw error(Errc::hypothesis_violated, "minimum colour degree below 2");
  int l = len(p0);

  ClosureResult closure = closure_R(g, p0, cap);
  for (const Path& member : closure.paths)
    for (const Path& oriented : {member, reflect(member)})
      if (!extension_candidates(g, oriented).empty())
        throw error(Errc::not_maximal, "a closure member is extensible");

  auto [sub, relabel] = g.induced_subgraph(p0);
  std::vector<Vertex> back(relabel.size());
  for (const auto& [old_id, new_id] : relabel) back[new_id] = old_id;

  if (d == 2) {
    CycleSearchResult r = longest_pc_cycle(sub);
    if (!r.cycle)
      throw error(Errc::contract_violation,
                  "no properly coloured cycle inside the path's vertex set");
    Cycle translated;
    for (Vertex v : *r.cycle) translated.push_back(back[v]);
    return {translated, {}, -1};
  }

  int need = l >= 2 * d + 1 ? d : d + 1;

  // Structural route: scan closure members for the plateau/jump structure
  // and cut the member into (1..s, l..w, 1) plus the middle as the path.
  struct Candidate {
    Path member;
    int s, w;
    std::size_t plateau;
  };
  std::vector<Candidate> candidates;
  for (const Path& member : closure.paths) {
    for (const Path& oriented : {member, reflect(member)}) {
      EndpointAnalysis ea;
      try {
        ea = analyze_endpoints(g, oriented);
      } catch (const error&) {
        continue;
      }
      if (ea.s >= 2 && ea.w) candidates.push_back({oriented, ea.s, *ea.w, ea.S.size()});
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& x, const Candidate& y) { return x.plateau > y.plateau; });
  for (const Candidate& cand : candidates) {
    const Path& m = cand.member;
    int ml = len(m);
    if (cand.s >= cand.w) continue;
    Cycle c(m.begin(), m.begin() + cand.s);
    for (int i = ml; i >= cand.w; --i) c.push_back(m[i - 1]);
    c.push_back(m.front());
    if (cycle_length(c) < need) continue;
    if (!is_pc_cycle(g, c)) continue;
    Path q(m.begin() + cand.s, m.begin() + cand.w - 1);
    if (!q.empty() && !is_pc_path(g, q)) continue;
    auto dec = try_attach(g, c, q);
    if (dec) return *dec;
  }

  // Exhaustive fallback inside the path's vertex span.
  std::vector<Cycle> cycles = enumerate_pc_cycles(sub, need);
  std::stable_sort(cycles.begin(), cycles.end(), [](const Cycle& x, const Cycle& y) {
    return x.size() > y.size();
  });
  for (const Cycle& c : cycles) {
    std::set<Vertex> on_cycle(c.begin(), c.end());
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < sub.n(); ++v)
      if (!on_cycle.count(v)) rest.push_back(v);
    Cycle translated;
    for (Vertex v : c) translated.push_back(back[v]);
    if (rest.empty()) return {translated, {}, -1};
    auto [comp, comp_map] = sub.induced_subgraph(rest);
    std::vector<Vertex> comp_back(comp_map.size());
    for (const auto& [old_id, new_id] : comp_map) comp_back[new_id] = old_id;
    for (const Path& q : enumerate_spanning_pc_paths(comp, 10000)) {
      Path q_orig;
      for (Vertex v : q) q_orig.push_back(back[comp_back[v]]);
      auto dec = try_attach(g, translated, q_orig);
      if (dec) return *dec;
    }
  }
  throw error(Errc::contract_violation,
              "no cycle/path decomposition found despite a maximal crossing path");
}

}  // namespace ecg
