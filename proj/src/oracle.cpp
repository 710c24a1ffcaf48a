#include "ecg/oracle.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace ecg {
namespace {

struct Budget {
  std::uint64_t limit = 0;
  std::uint64_t used = 0;
  bool tick() {
    if (limit && used >= limit) return false;
    ++used;
    return true;
  }
};

// Count unvisited vertices (ids > min_v) reachable from `from` ignoring
// colours; admissible optimistic bound on how much a path can still grow.
int reachable_count(const EdgeColouredGraph& g, const std::vector<char>& visited, Vertex from,
                    Vertex min_v) {
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> stack{from};
  seen[from] = 1;
  int count = 0;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (const auto& [v, c] : g.neighbours(u)) {
      if (v <= min_v || seen[v] || visited[v]) continue;
      seen[v] = 1;
      ++count;
      stack.push_back(v);
    }
  }
  return count;
}

struct PathSearcher {
  const EdgeColouredGraph& g;
  Budget& budget;
  bool exact = true;
  Path best;
  std::vector<char> visited;
  Path cur;

  PathSearcher(const EdgeColouredGraph& g, Budget& b) : g(g), budget(b) {}

  void dfs(Vertex at, Colour in) {
    if (!exact) return;
    if (!budget.tick()) {
      exact = false;
      return;
    }
    if (cur.size() > best.size()) best = cur;
    if (static_cast<int>(cur.size()) + reachable_count(g, visited, at, -1) <=
        static_cast<int>(best.size()))
      return;
    for (const auto& [v, c] : g.neighbours(at)) {
      if (visited[v] || c == in) continue;
      visited[v] = 1;
      cur.push_back(v);
      dfs(v, c);
      cur.pop_back();
      visited[v] = 0;
      if (!exact) return;
    }
  }

  void run() {
    best = {0};
    visited.assign(g.n(), 0);
    for (Vertex s = 0; s < g.n() && exact; ++s) {
      cur = {s};
      visited[s] = 1;
      dfs(s, -1);
      visited[s] = 0;
    }
  }
};

struct CycleSearcher {
  const EdgeColouredGraph& g;
  Budget& budget;
  bool exact = true;
  std::optional<Cycle> best;
  int best_open = 2;
  int target = 0;  // decision mode when > 0: stop at first cycle >= target
  bool done = false;
  Vertex start = 0;
  Colour first_colour = -1;
  std::vector<char> visited;
  Path cur;

  CycleSearcher(const EdgeColouredGraph& g, Budget& b) : g(g), budget(b) {}

  void consider_close(Vertex at, Colour in) {
    if (cur.size() < 3) return;
    if (!g.has_edge(at, start)) return;
    Colour cc = g.colour(at, start);
    if (cc == in || cc == first_colour) return;
    int open = static_cast<int>(cur.size());
    if (target > 0) {
      if (open >= target) {
        Cycle cand = cur;
        cand.push_back(start);
        best = std::move(cand);
        done = true;
      }
      return;
    }
    if (open > best_open) {
      Cycle cand = cur;
      cand.push_back(start);
      best = std::move(cand);
      best_open = open;
    }
  }

  void dfs(Vertex at, Colour in) {
    if (!exact || done) return;
    if (!budget.tick()) {
      exact = false;
      return;
    }
    consider_close(at, in);
    if (done) return;
    int potential = static_cast<int>(cur.size()) + reachable_count(g, visited, at, start);
    int need = target > 0 ? std::max(target, 3) : best_open + 1;
    if (potential < need) return;
    for (const auto& [v, c] : g.neighbours(at)) {
      if (v <= start || visited[v] || c == in) continue;
      if (cur.size() == 1) first_colour = c;
      visited[v] = 1;
      cur.push_back(v);
      dfs(v, c);
      cur.pop_back();
      visited[v] = 0;
      if (!exact || done) return;
    }
  }

  void run(int tgt = 0) {
    target = tgt > 0 ? std::max(tgt, 3) : 0;
    visited.assign(g.n(), 0);
    for (start = 0; start < g.n() && exact && !done; ++start) {
      cur = {start};
      visited[start] = 1;
      first_colour = -1;
      dfs(start, -1);
      visited[start] = 0;
    }
  }
};

// ---------------------------------------------------------------------------
// Block-cut-tree preprocessing. Every cycle lives inside a single
// biconnected block, and a longest path decomposes into per-block segments
// joined at cut vertices, so per-block exhaustive search plus a tree DP is
// exact.

struct BlockCutTree {
  std::vector<std::vector<Vertex>> block_vertices;
  std::vector<std::vector<int>> vertex_blocks;  // per vertex
  std::vector<char> is_cut;

  int block_count() const { return static_cast<int>(block_vertices.size()); }
};

BlockCutTree build_block_cut_tree(const EdgeColouredGraph& g) {
  BlockCutTree t;
  int n = g.n();
  t.vertex_blocks.assign(n, {});
  t.is_cut.assign(n, 0);
  std::vector<int> disc(n, 0), low(n, 0);
  std::vector<std::pair<Vertex, Vertex>> stack;
  int timer = 1;

  struct Frame {
    Vertex u;
    Vertex parent;
    std::map<Vertex, Colour>::const_iterator it;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root]) continue;
    std::vector<Frame> frames;
    disc[root] = low[root] = timer++;
    frames.push_back({root, -1, g.neighbours(root).begin()});
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.it != g.neighbours(f.u).end()) {
        Vertex v = f.it->first;
        ++f.it;
        if (v == f.parent) continue;
        if (!disc[v]) {
          stack.emplace_back(f.u, v);
          disc[v] = low[v] = timer++;
          frames.push_back({v, f.u, g.neighbours(v).begin()});
        } else if (disc[v] < disc[f.u]) {
          stack.emplace_back(f.u, v);
          low[f.u] = std::min(low[f.u], disc[v]);
        }
      } else {
        Vertex u = f.u, parent = f.parent;
        frames.pop_back();
        if (parent == -1) continue;
        low[parent] = std::min(low[parent], low[u]);
        if (low[u] >= disc[parent]) {
          // pop one block ending with the tree edge (parent, u)
          std::set<Vertex> members;
          while (!stack.empty()) {
            auto [a, b] = stack.back();
            stack.pop_back();
            members.insert(a);
            members.insert(b);
            if (a == parent && b == u) break;
          }
          int id = t.block_count();
          t.block_vertices.emplace_back(members.begin(), members.end());
          for (Vertex w : members) t.vertex_blocks[w].push_back(id);
        }
      }
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (t.vertex_blocks[v].size() >= 2) t.is_cut[v] = 1;
  return t;
}

struct Arm {
  int edges = -1;
  Path path;  // starts at the junction vertex
};

class BlockSolver {
 public:
  BlockSolver(const EdgeColouredGraph& g, Budget& budget) : g_(g), budget_(budget) {
    t_ = build_block_cut_tree(g);
    in_block_.assign(t_.block_count(), std::vector<char>(g.n(), 0));
    for (int b = 0; b < t_.block_count(); ++b)
      for (Vertex v : t_.block_vertices[b]) in_block_[b][v] = 1;
    root_tree();
  }

  bool exact() const { return exact_; }
  int block_count() const { return t_.block_count(); }

  PathSearchResult solve_path() {
    PathSearchResult res;
    int best_edges = 0;
    Path best_path = {0};
    // apex inside a block: a properly coloured segment with optional
    // descents into child subtrees at both endpoints
    for (int b = 0; b < t_.block_count(); ++b) {
      for (Vertex a : t_.block_vertices[b]) {
        SegmentScan scan{this, b, a, best_edges, best_path};
        scan.run();
        best_edges = scan.best_edges;
        best_path = scan.best_path;
      }
    }
    // apex at a cut vertex: two descending arms through distinct child
    // blocks with distinct first-edge colours
    for (Vertex v = 0; v < g_.n(); ++v) {
      auto it = cut_children_.find(v);
      if (it == cut_children_.end()) continue;
      struct Entry {
        int edges;
        Colour colour;
        int block;
        const Path* path;
      };
      std::vector<Entry> entries;
      for (int b : it->second)
        for (const auto& [c, arm] : arms(b, v))
          entries.push_back({arm.edges, c, b, &arm.path});
      for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = 0; j < entries.size(); ++j) {
          if (i == j || entries[i].block == entries[j].block ||
              entries[i].colour == entries[j].colour)
            continue;
          int total = entries[i].edges + entries[j].edges;
          if (total > best_edges) {
            Path p(entries[i].path->rbegin(), entries[i].path->rend());
            p.insert(p.end(), entries[j].path->begin() + 1, entries[j].path->end());
            best_edges = total;
            best_path = std::move(p);
          }
        }
    }
    res.path = best_path;
    res.exact = exact_;
    res.expansions = budget_.used;
    return res;
  }

  CycleSearchResult solve_cycle(int target = 0) {
    CycleSearchResult res;
    for (int b = 0; b < t_.block_count(); ++b) {
      auto [sub, relabel] = g_.induced_subgraph(t_.block_vertices[b]);
      std::vector<Vertex> back(relabel.size());
      for (const auto& [old_id, new_id] : relabel) back[new_id] = old_id;
      Budget local{0, 0};
      local.limit = budget_.limit ? (budget_.limit > budget_.used ? budget_.limit - budget_.used : 1)
                                  : 0;
      CycleSearcher cs(sub, local);
      cs.run(target);
      budget_.used += local.used;
      if (!cs.exact) exact_ = false;
      if (cs.best) {
        Cycle translated;
        translated.reserve(cs.best->size());
        for (Vertex v : *cs.best) translated.push_back(back[v]);
        if (!res.cycle || cycle_length(translated) > cycle_length(*res.cycle) ||
            (cycle_length(translated) == cycle_length(*res.cycle) && translated < *res.cycle))
          res.cycle = translated;
        if (target > 0 && res.cycle) break;
      }
    }
    res.exact = exact_;
    res.expansions = budget_.used;
    return res;
  }

 private:
  void root_tree() {
    std::vector<char> block_seen(t_.block_count(), 0);
    std::vector<char> cut_seen(g_.n(), 0);
    for (int rb = 0; rb < t_.block_count(); ++rb) {
      if (block_seen[rb]) continue;
      std::vector<int> queue{rb};
      block_seen[rb] = 1;
      entry_cut_[rb] = -1;
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int b = queue[qi];
        for (Vertex v : t_.block_vertices[b]) {
          if (!t_.is_cut[v] || v == entry_cut_[b] || cut_seen[v]) continue;
          cut_seen[v] = 1;
          for (int child : t_.vertex_blocks[v]) {
            if (child == b) continue;
            block_seen[child] = 1;
            entry_cut_[child] = v;
            cut_children_[v].push_back(child);
            queue.push_back(child);
          }
        }
      }
    }
  }

  // Best continuation from u arriving on colour `in`, descending into child
  // blocks of u other than `exclude_block`. Always at least the empty arm.
  Arm descend(Vertex u, Colour in, int exclude_block) {
    Arm best{0, {u}};
    auto it = cut_children_.find(u);
    if (it == cut_children_.end()) return best;
    for (int b : it->second) {
      if (b == exclude_block) continue;
      for (const auto& [c, arm] : arms(b, u)) {
        if (c == in) continue;
        if (arm.edges > best.edges) best = arm;
      }
    }
    return best;
  }

  // Per first-edge colour, the longest properly coloured path starting at v
  // that stays in block b and may descend below any interior cut vertex it
  // ends at.
  const std::map<Colour, Arm>& arms(int b, Vertex v) {
    auto key = std::make_pair(b, v);
    auto found = memo_.find(key);
    if (found != memo_.end()) return found->second;
    std::map<Colour, Arm> out;
    std::vector<char> visited(g_.n(), 0);
    visited[v] = 1;
    Path cur{v};
    arm_dfs(b, v, -1, -1, visited, cur, out);
    return memo_.emplace(key, std::move(out)).first->second;
  }

  void arm_dfs(int b, Vertex at, Colour first, Colour in, std::vector<char>& visited, Path& cur,
               std::map<Colour, Arm>& out) {
    if (!budget_.tick()) {
      exact_ = false;
      return;
    }
    if (cur.size() >= 2) {
      Arm d = descend(at, in, b);
      int total = static_cast<int>(cur.size()) - 1 + d.edges;
      Arm& slot = out[first];
      if (total > slot.edges) {
        slot.edges = total;
        slot.path = cur;
        slot.path.insert(slot.path.end(), d.path.begin() + 1, d.path.end());
      }
    }
    for (const auto& [w, c] : g_.neighbours(at)) {
      if (!in_block_[b][w] || visited[w] || c == in) continue;
      visited[w] = 1;
      cur.push_back(w);
      arm_dfs(b, w, cur.size() == 2 ? c : first, c, visited, cur, out);
      cur.pop_back();
      visited[w] = 0;
      if (!exact_) return;
    }
  }

  struct SegmentScan {
    BlockSolver* s;
    int b;
    Vertex a;
    int best_edges;
    Path best_path;

    void run() {
      std::vector<char> visited(s->g_.n(), 0);
      visited[a] = 1;
      Path cur{a};
      dfs(a, -1, -1, visited, cur);
    }

    void dfs(Vertex at, Colour first, Colour in, std::vector<char>& visited, Path& cur) {
      if (!s->budget_.tick()) {
        s->exact_ = false;
        return;
      }
      if (cur.size() >= 2) {
        Arm head = s->descend(a, first, b);
        Arm tail = s->descend(at, in, b);
        int total = head.edges + static_cast<int>(cur.size()) - 1 + tail.edges;
        if (total > best_edges) {
          Path p(head.path.rbegin(), head.path.rend());
          p.insert(p.end(), cur.begin() + 1, cur.end());
          p.insert(p.end(), tail.path.begin() + 1, tail.path.end());
          best_edges = total;
          best_path = std::move(p);
        }
      }
      for (const auto& [w, c] : s->g_.neighbours(at)) {
        if (!s->in_block_[b][w] || visited[w] || c == in) continue;
        visited[w] = 1;
        cur.push_back(w);
        dfs(w, cur.size() == 2 ? c : first, c, visited, cur);
        cur.pop_back();
        visited[w] = 0;
        if (!s->exact_) return;
      }
    }
  };

  const EdgeColouredGraph& g_;
  Budget& budget_;
  BlockCutTree t_;
  std::vector<std::vector<char>> in_block_;
  std::map<int, Vertex> entry_cut_;
  std::map<Vertex, std::vector<int>> cut_children_;
  std::map<std::pair<int, Vertex>, std::map<Colour, Arm>> memo_;
  bool exact_ = true;
};

bool prefer_block_route(const EdgeColouredGraph& g, const SearchOptions& opts, int* nblocks) {
  if (!opts.use_blocks || g.n() <= 12) return false;
  BlockCutTree t = build_block_cut_tree(g);
  if (nblocks) *nblocks = t.block_count();
  return t.block_count() >= 2;
}

}  // namespace

PathSearchResult longest_pc_path_direct(const EdgeColouredGraph& g, SearchOptions opts) {
  if (g.n() < 1) throw error(Errc::empty_graph, "empty graph");
  Budget budget{opts.budget, 0};
  PathSearcher s(g, budget);
  s.run();
  return {s.best, s.exact, budget.used};
}

CycleSearchResult longest_pc_cycle_direct(const EdgeColouredGraph& g, SearchOptions opts) {
  if (g.n() < 1) throw error(Errc::empty_graph, "empty graph");
  Budget budget{opts.budget, 0};
  CycleSearcher s(g, budget);
  s.run();
  return {s.best, s.exact, budget.used};
}

PathSearchResult longest_pc_path_blocks(const EdgeColouredGraph& g, SearchOptions opts) {
  if (g.n() < 1) throw error(Errc::empty_graph, "empty graph");
  Budget budget{opts.budget, 0};
  BlockSolver solver(g, budget);
  return solver.solve_path();
}

CycleSearchResult longest_pc_cycle_blocks(const EdgeColouredGraph& g, SearchOptions opts) {
  if (g.n() < 1) throw error(Errc::empty_graph, "empty graph");
  Budget budget{opts.budget, 0};
  BlockSolver solver(g, budget);
  return solver.solve_cycle();
}

PathSearchResult longest_pc_path(const EdgeColouredGraph& g, SearchOptions opts) {
  if (prefer_block_route(g, opts, nullptr)) return longest_pc_path_blocks(g, opts);
  return longest_pc_path_direct(g, opts);
}

CycleSearchResult longest_pc_cycle(const EdgeColouredGraph& g, SearchOptions opts) {
  if (prefer_block_route(g, opts, nullptr)) return longest_pc_cycle_blocks(g, opts);
  return longest_pc_cycle_direct(g, opts);
}

BoolSearchResult has_pc_cycle_of_length_at_least(const EdgeColouredGraph& g, int k,
                                                 SearchOptions opts) {
  if (k < 3) throw error(Errc::bad_parameters, "k must be at least 3");
  Budget budget{opts.budget, 0};
  if (prefer_block_route(g, opts, nullptr)) {
    BlockSolver solver(g, budget);
    CycleSearchResult r = solver.solve_cycle(k);
    return {r.cycle.has_value(), r.exact, r.cycle};
  }
  CycleSearcher s(g, budget);
  s.run(k);
  return {s.best.has_value(), s.exact, s.best};
}

}  // namespace ecg
