#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <functional>
#include <random>

#include "doctest.h"
#include "ecg/generators.hpp"
#include "ecg/oracle.hpp"
#include "ecg/paths.hpp"

using namespace ecg;

namespace {

EdgeColouredGraph random_graph(std::mt19937_64& rng, int n, int colours, double density) {
  EdgeColouredGraph g(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> pick(0, colours - 1);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < density) g.add_edge(u, v, pick(rng));
  return g;
}

// Unpruned exhaustive search; same enumeration order as the production
// searcher, so the first longest path found is also its expected witness.
Path naive_longest_path(const EdgeColouredGraph& g) {
  Path best{0}, cur;
  std::vector<char> visited(g.n(), 0);
  std::function<void(Vertex, Colour)> dfs = [&](Vertex at, Colour in) {
    if (cur.size() > best.size()) best = cur;
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
  return best;
}

int naive_longest_cycle(const EdgeColouredGraph& g) {
  int best = -1;
  Path cur;
  std::vector<char> visited(g.n(), 0);
  Vertex start = 0;
  Colour first_colour = -1;
  std::function<void(Vertex, Colour)> dfs = [&](Vertex at, Colour in) {
    if (cur.size() >= 3 && g.has_edge(at, start)) {
      Colour cc = g.colour(at, start);
      if (cc != in && cc != first_colour) best = std::max(best, static_cast<int>(cur.size()));
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
  return best;
}

}  // namespace

TEST_CASE("pruned search equals exhaustive search on random instances") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 1000; ++it) {
    int n = 2 + it % 7;  // up to 8 vertices
    EdgeColouredGraph g = random_graph(rng, n, 1 + it % 4, 0.55);
    Path naive = naive_longest_path(g);
    PathSearchResult direct = longest_pc_path_direct(g);
    REQUIRE(direct.exact);
    CHECK(is_pc_path(g, direct.path));
    CHECK(direct.path == naive);  // same length and same first-found witness
    CycleSearchResult cyc = longest_pc_cycle_direct(g);
    REQUIRE(cyc.exact);
    CHECK(cyc.length() == naive_longest_cycle(g));
    if (cyc.cycle) CHECK(is_pc_cycle(g, *cyc.cycle));
  }
}

TEST_CASE("block-decomposed search equals direct search") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 300; ++it) {
    // build a random tree of small cliques to force articulation points
    int blocks = 2 + it % 3;
    EdgeColouredGraph g(1);
    std::vector<Vertex> anchors{0};
    std::uniform_int_distribution<int> pickc(0, 3);
    for (int b = 0; b < blocks; ++b) {
      Vertex anchor = anchors[std::uniform_int_distribution<std::size_t>(0, anchors.size() - 1)(
          rng)];
      int extra = 2 + it % 3;
      int base = g.n();
      EdgeColouredGraph grown(base + extra);
      for (const auto& [u, v, c] : g.edges()) grown.add_edge(u, v, c);
      std::vector<Vertex> members{anchor};
      for (int i = 0; i < extra; ++i) members.push_back(base + i);
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
          grown.add_edge(members[i], members[j], pickc(rng));
      g = grown;
      for (int i = 0; i < extra; ++i) anchors.push_back(base + i);
    }
    PathSearchResult direct = longest_pc_path_direct(g);
    PathSearchResult blocked = longest_pc_path_blocks(g);
    REQUIRE(blocked.exact);
    CHECK(is_pc_path(g, blocked.path));
    CHECK(path_length(blocked.path) == path_length(direct.path));
    CycleSearchResult cd = longest_pc_cycle_direct(g);
    CycleSearchResult cb = longest_pc_cycle_blocks(g);
    CHECK(cb.length() == cd.length());
    if (cb.cycle) CHECK(is_pc_cycle(g, *cb.cycle));
  }
}

TEST_CASE("extremal family values") {
  CHECK(longest_pc_path(gen_tilde(2, 2)).length() == 4);
  CHECK(longest_pc_path(gen_tilde(2, 3)).length() == 4);
  CHECK(longest_pc_path(gen_tilde(3, 4)).length() == 6);
  CHECK(longest_pc_cycle(gen_tilde(2, 3)).length() == -1);
  CHECK(longest_pc_cycle(gen_tilde(3, 3)).length() == 3);
  CHECK(longest_pc_path(gen_hat(4, 10)).length() == 6);
  CHECK(longest_pc_path(gen_hat(2, 6)).length() == 3);
  CHECK(longest_pc_path(gen_recursive(2, 3, 3)).length() == 4);
  CHECK(longest_pc_path(gen_recursive(3, 3, 3)).length() == 10);
  CHECK(longest_pc_cycle(gen_recursive(3, 3, 3)).length() == -1);
  CHECK(longest_pc_path(gen_counterexample_mono(3, 1)).length() == 4);
}

TEST_CASE("rainbow complete graphs have Hamiltonian paths and cycles") {
  for (int n = 4; n <= 7; ++n) {
    EdgeColouredGraph g = gen_rainbow_complete(n);
    CHECK(longest_pc_path(g).length() == n - 1);
    CHECK(longest_pc_cycle(g).length() == n);
    BoolSearchResult ham = has_pc_cycle_of_length_at_least(g, n);
    CHECK(ham.found);
    REQUIRE(ham.witness.has_value());
    CHECK(is_pc_cycle(g, *ham.witness));
    CHECK(cycle_length(*ham.witness) >= n);
  }
}

TEST_CASE("cycle decision agrees with the optimum") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 300; ++it) {
    EdgeColouredGraph g = random_graph(rng, 3 + it % 6, 1 + it % 4, 0.6);
    int opt = longest_pc_cycle_direct(g).length();
    for (int k = 3; k <= g.n(); ++k) {
      BoolSearchResult r = has_pc_cycle_of_length_at_least(g, k);
      REQUIRE(r.exact);
      CHECK(r.found == (opt >= k));
      if (r.witness) {
        CHECK(is_pc_cycle(g, *r.witness));
        CHECK(cycle_length(*r.witness) >= k);
      }
    }
  }
}

TEST_CASE("budget exhaustion reports inexact, never a wrong claim") {
  EdgeColouredGraph g = gen_rainbow_complete(8);
  PathSearchResult r = longest_pc_path(g, {.budget = 5});
  CHECK_FALSE(r.exact);
  CHECK(is_pc_path(g, r.path));
  CHECK(r.expansions <= 5);
  PathSearchResult full = longest_pc_path(g);
  CHECK(full.exact);
  CHECK(full.length() == 7);
}

TEST_CASE("degenerate inputs") {
  CHECK_THROWS_AS(longest_pc_path(EdgeColouredGraph(0)), error);
  CHECK(longest_pc_path(EdgeColouredGraph(1)).length() == 0);
  CHECK(longest_pc_cycle(EdgeColouredGraph(3)).length() == -1);
  CHECK_THROWS_AS(has_pc_cycle_of_length_at_least(gen_rainbow_complete(4), 2), error);
}
