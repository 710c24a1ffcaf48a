#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "ecg/generators.hpp"
#include "ecg/oracle.hpp"
#include "ecg/rotation.hpp"

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

Path random_tuple(std::mt19937_64& rng, int l) {
  Path t(l);
  for (int i = 0; i < l; ++i) t[i] = i + 1;
  std::shuffle(t.begin(), t.end(), rng);
  return t;
}

std::set<Path> as_set(const std::vector<Path>& v) { return {v.begin(), v.end()}; }

void all_pc_cycles(const EdgeColouredGraph& g, int min_len, std::vector<Cycle>& out) {
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
}

void all_spanning_pc_paths(const EdgeColouredGraph& g, std::vector<Path>& out) {
  std::vector<char> visited(g.n(), 0);
  Path cur;
  std::function<void(Vertex, Colour)> dfs = [&](Vertex at, Colour in) {
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
}

// Exhaustively decides whether the span of the path contains a properly
// coloured cycle of length >= d+1 together with a vertex-disjoint properly
// coloured path covering the remaining vertices and attached to the cycle
// (empty remainder counts).
bool forbidden_cycle_path_pair(const EdgeColouredGraph& sub, int d) {
  std::vector<Cycle> cycles;
  all_pc_cycles(sub, d + 1, cycles);
  for (const Cycle& c : cycles) {
    std::set<Vertex> on_cycle(c.begin(), c.end());
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < sub.n(); ++v)
      if (!on_cycle.count(v)) rest.push_back(v);
    if (rest.empty()) return true;
    auto [comp, relabel] = sub.induced_subgraph(rest);
    std::vector<Vertex> back(relabel.size());
    for (const auto& [o, nw] : relabel) back[nw] = o;
    std::vector<Path> spanning;
    all_spanning_pc_paths(comp, spanning);
    int open = static_cast<int>(c.size()) - 1;
    for (const Path& q : spanning) {
      Vertex head = back[q.front()];
      for (int j = 0; j < open; ++j) {
        if (!sub.has_edge(head, c[j])) continue;
        if (q.size() >= 2 && sub.colour(head, back[q[1]]) == sub.colour(head, c[j])) continue;
        return true;
      }
    }
  }
  return false;
}

// rainbow K_4 on a path-friendly labelling
EdgeColouredGraph rainbow_k4() { return gen_rainbow_complete(4); }

}  // namespace

TEST_CASE("pinned worked example: g then f") {
  Path p{1, 2, 3, 4, 5, 6};
  Path after_g = rotate_g_positional(p, 1);
  CHECK(after_g == Path{1, 6, 5, 4, 3, 2});
  CHECK(rotate_f_positional(after_g, 3) == Path{6, 1, 5, 4, 3, 2});
}

TEST_CASE("positional algebra: involutions and commutation") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 10000; ++it) {
    int l = 3 + it % 8;
    Path t = random_tuple(rng, l);
    std::uniform_int_distribution<int> pos(1, l);
    int i = pos(rng), j = pos(rng);
    CHECK(rotate_f_positional(rotate_f_positional(t, i), i) == t);
    CHECK(rotate_g_positional(rotate_g_positional(t, j), j) == t);
    if (i > j) std::swap(i, j);
    CHECK(rotate_f_positional(rotate_g_positional(t, j), i) ==
          rotate_g_positional(rotate_f_positional(t, i), j));
    CHECK(reflect(reflect(t)) == t);
    CHECK(reflect(t).size() == t.size());
  }
  CHECK_THROWS_AS(rotate_f_positional({1, 2, 3}, 4), error);
  CHECK_THROWS_AS(rotate_g_positional({1, 2, 3}, 0), error);
}

TEST_CASE("validated rotations enforce chord and colour conditions") {
  EdgeColouredGraph g = rainbow_k4();
  Path p{0, 1, 2, 3};
  // chord (0,2) exists with its own colour: pivot at position 3 is valid
  Path rotated = rotate_f(g, p, 3);
  CHECK(rotated == Path{1, 0, 2, 3});
  CHECK(is_pc_path(g, rotated));
  // f applied twice at the same pivot returns the original when both valid
  CHECK(rotate_f(g, rotated, 3) == p);
  CHECK_THROWS_AS(rotate_f(g, p, 2), error);   // position out of range
  CHECK_THROWS_AS(rotate_f(g, p, 5), error);
  CHECK(rotate_g(g, p, 1) == Path{0, 3, 2, 1});
  CHECK_THROWS_AS(rotate_g(g, p, 3), error);   // j beyond l-2

  // missing chord
  EdgeColouredGraph sparse(4);
  sparse.add_edge(0, 1, 0);
  sparse.add_edge(1, 2, 1);
  sparse.add_edge(2, 3, 2);
  Path q{0, 1, 2, 3};
  CHECK_THROWS_AS(rotate_f(sparse, q, 3), error);
  CHECK_THROWS_AS(rotate_g(sparse, q, 1), error);

  // chord present but clashing with the first edge's colour
  EdgeColouredGraph clash(4);
  clash.add_edge(0, 1, 0);
  clash.add_edge(1, 2, 1);
  clash.add_edge(2, 3, 2);
  clash.add_edge(0, 2, 0);
  CHECK_THROWS_AS(rotate_f(clash, q, 3), error);
}

TEST_CASE("crossing detection") {
  EdgeColouredGraph g = rainbow_k4();
  Path p{0, 1, 2, 3};
  auto w = find_crossing(g, p);
  REQUIRE(w.has_value());
  auto [a, b] = *w;
  CHECK(a < b);
  CHECK(eligible_endpoint_set(g, p, PathEnd::last).count(p[a - 1]) == 1);
  CHECK(eligible_endpoint_set(g, p, PathEnd::first).count(p[b - 1]) == 1);

  // bare path graph: eligible sets stay inside the path edges
  EdgeColouredGraph p4(4);
  p4.add_edge(0, 1, 0);
  p4.add_edge(1, 2, 1);
  p4.add_edge(2, 3, 0);
  CHECK_FALSE(has_crossing(p4, {0, 1, 2, 3}));
}

TEST_CASE("extension and maximalisation") {
  EdgeColouredGraph g = rainbow_k4();
  CHECK(is_extensible(g, {0, 1}));
  MaximalisationResult m = extend_to_maximal(g, {0, 1});
  CHECK(m.certified);
  CHECK(path_length(m.path) == 3);
  CHECK(is_pc_path(g, m.path));

  // a longest path from the exhaustive search is never extensible
  std::mt19937_64 rng(9);
  for (int it = 0; it < 100; ++it) {
    EdgeColouredGraph h = random_graph(rng, 7, 3, 0.5);
    PathSearchResult r = longest_pc_path(h);
    CHECK_FALSE(is_extensible(h, r.path));
  }
}

TEST_CASE("closures: trivial cases, reflection law, symmetry, vertex support") {
  EdgeColouredGraph p3(3);
  p3.add_edge(0, 1, 0);
  p3.add_edge(1, 2, 1);
  Path p{0, 1, 2};
  ClosureResult r = closure_R(p3, p);
  CHECK(r.size == 2);  // the path and its reflection
  CHECK(r.paths.size() == 1);
  ClosureResult rp = closure_Rprime(p3, p);
  CHECK(rp.size == 1);
  CHECK(rp.paths == std::vector<Path>{p});

  std::mt19937_64 rng(13);
  for (int it = 0; it < 60; ++it) {
    EdgeColouredGraph g = random_graph(rng, 6, 3, 0.6);
    PathSearchResult seed = longest_pc_path(g);
    if (seed.path.size() < 3) continue;
    ClosureResult full = closure_R(g, seed.path);
    ClosureResult prime = closure_Rprime(g, seed.path);
    REQUIRE_FALSE(full.truncated);
    REQUIRE_FALSE(prime.truncated);

    // R(P) as an orientation set equals R'(P) plus its reflections
    std::set<Path> canon_from_prime;
    for (const Path& q : prime.paths) canon_from_prime.insert(std::min(q, reflect(q)));
    CHECK(as_set(full.paths) == canon_from_prime);

    // every member is a properly coloured path on exactly V(P)
    std::set<Vertex> support(seed.path.begin(), seed.path.end());
    for (const Path& q : full.paths) {
      CHECK(is_pc_path(g, q));
      CHECK(std::set<Vertex>(q.begin(), q.end()) == support);
    }

    // membership is symmetric: each member's own closure contains the seed
    int probes = 0;
    for (const Path& q : prime.paths) {
      if (++probes > 5) break;
      ClosureResult back = closure_Rprime(g, q);
      CHECK(as_set(back.paths).count(seed.path) == 1);
    }
  }
}

TEST_CASE("closure cap truncates and flags") {
  EdgeColouredGraph g = gen_rainbow_complete(6);
  Path p = longest_pc_path(g).path;
  ClosureResult r = closure_R(g, p, 5);
  CHECK(r.truncated);
  CHECK(r.paths.size() <= 5);
}

TEST_CASE("crossing-free closures split into an f-phase and a g-phase") {
  std::mt19937_64 rng(19);
  int tested = 0;
  for (int it = 0; it < 400 && tested < 30; ++it) {
    EdgeColouredGraph g = random_graph(rng, 6, 3, 0.45);
    PathSearchResult seed = longest_pc_path(g);
    if (seed.path.size() < 4) continue;
    ClosureResult prime = closure_Rprime(g, seed.path);
    if (prime.truncated) continue;
    bool any_crossing = false;
    for (const Path& q : prime.paths)
      if (has_crossing(g, q)) any_crossing = true;
    if (any_crossing) continue;

    // two-phase reachability: rotations fixing the last endpoint first, then
    // rotations fixing the first endpoint (and the reverse order)
    for (bool f_first : {true, false}) {
      std::set<Path> phase1{seed.path};
      std::vector<Path> queue{seed.path};
      auto expand = [&](std::set<Path>& acc, std::vector<Path>& q, bool use_f) {
        while (!q.empty()) {
          Path cur = q.back();
          q.pop_back();
          int l = static_cast<int>(cur.size());
          for (int i = use_f ? 3 : 1; i <= (use_f ? l : l - 2); ++i) {
            Path next;
            try {
              next = use_f ? rotate_f(g, cur, i) : rotate_g(g, cur, i);
            } catch (const error&) {
              continue;
            }
            if (acc.insert(next).second) q.push_back(next);
          }
        }
      };
      expand(phase1, queue, f_first);
      std::set<Path> phase2 = phase1;
      std::vector<Path> queue2(phase1.begin(), phase1.end());
      expand(phase2, queue2, !f_first);
      CHECK(phase2 == as_set(prime.paths));
    }
    ++tested;
  }
  CHECK(tested >= 10);
}

TEST_CASE("cycle construction from an end-chord pair") {
  EdgeColouredGraph g = rainbow_k4();
  Path p{0, 1, 2, 3};
  Cycle c = lemma_simplecycle(g, p, 3, 1);
  CHECK(is_pc_cycle(g, c));
  CHECK(c == Cycle{0, 3, 2, 0});

  // violated colour condition: c(1,a) = c(a,a+1)
  EdgeColouredGraph bad(4);
  bad.add_edge(0, 1, 0);
  bad.add_edge(1, 2, 1);
  bad.add_edge(2, 3, 2);
  bad.add_edge(0, 2, 2);
  bad.add_edge(0, 3, 3);
  CHECK_THROWS_AS(lemma_simplecycle(bad, {0, 1, 2, 3}, 3, 1), error);

  CHECK_THROWS_AS(lemma_simplecycle(g, p, 1, 3), error);  // needs b < a
  CHECK_THROWS_AS(lemma_simplecycle(g, p, 2, 1), error);  // a = 2 excluded
}

TEST_CASE("cycle construction, first-position branch") {
  // closing edge colour equals the first path edge, so the cycle must route
  // through the chord at a instead of along the full path
  EdgeColouredGraph g(5);
  g.add_edge(0, 1, 0);
  g.add_edge(1, 2, 1);
  g.add_edge(2, 3, 2);
  g.add_edge(3, 4, 3);
  g.add_edge(0, 4, 0);
  g.add_edge(0, 2, 4);
  Path p{0, 1, 2, 3, 4};
  Cycle c = lemma_simplecycle(g, p, 3, 1);
  CHECK(c == Cycle{0, 4, 3, 2, 0});
  CHECK(is_pc_cycle(g, c));
}

namespace {

// Builds a path 0..l-1 with end chords in one of two patterns.  The chord
// colours repeat path-edge colours so that every spanning candidate cycle
// picks up two consecutive edges of one colour; only short cycles (length
// <= 3 < d+1) survive, which is exactly the regime where a crossing exists
// yet no qualifying cycle/path pair does.  Middle vertices get their colour
// degree from a fresh rainbow clique that stays outside the path's span.
EdgeColouredGraph chorded_path_instance(const std::vector<Colour>& pc, bool deep_plateau) {
  int l = static_cast<int>(pc.size()) + 1;
  const int pad = 5, d = 3;
  EdgeColouredGraph g(l + pad);
  for (int i = 0; i + 1 < l; ++i) g.add_edge(i, i + 1, pc[i]);
  if (deep_plateau) {
    g.add_edge(0, 2, pc[2]);
    g.add_edge(0, l - 1, pc[l - 2]);
    g.add_edge(1, l - 1, pc[1]);
    g.add_edge(l - 3, l - 1, pc[l - 4]);
  } else {
    g.add_edge(0, 2, pc[2]);
    g.add_edge(0, l - 2, pc[l - 3]);
    g.add_edge(0, l - 1, pc[0]);
    g.add_edge(l - 3, l - 1, pc[l - 4]);
  }
  Colour fresh = 1000;
  for (int a = 0; a < pad; ++a)
    for (int b = a + 1; b < pad; ++b) g.add_edge(l + a, l + b, fresh++);
  for (Vertex v = 1; v + 1 < l; ++v) {
    int k = 0;
    while (g.colour_degree(v) < d && k < pad) g.add_edge(v, l + k++, fresh++);
  }
  return g;
}

}  // namespace

TEST_CASE("endpoint structure on instances satisfying the hypotheses") {
  std::mt19937_64 rng(29);
  const int d = 3;
  int verified = 0, with_s2 = 0;
  for (int it = 0; it < 4000 && verified < 120; ++it) {
    int l = 7 + it % 4;
    std::vector<Colour> pc(l - 1);
    std::uniform_int_distribution<int> col(0, 4);
    bool proper = true;
    for (int i = 0; i + 1 < l; ++i) {
      pc[i] = col(rng);
      if (i && pc[i] == pc[i - 1]) proper = false;
    }
    if (!proper) continue;
    EdgeColouredGraph g = chorded_path_instance(pc, it % 2 == 1);
    if (g.min_colour_degree() < d) continue;
    Path p(l);
    for (int i = 0; i < l; ++i) p[i] = i;
    if (!is_pc_path(g, p)) continue;
    EndpointAnalysis ea;
    try {
      ea = analyze_endpoints(g, p);
    } catch (const error&) {
      continue;
    }
    auto [sub, relabel] = g.induced_subgraph(p);
    if (forbidden_cycle_path_pair(sub, d)) continue;

    ++verified;
    CHECK(ea.r == *ea.B.begin());
    CHECK(ea.clause_a);
    CHECK(ea.clause_b);
    CHECK(ea.clause_c);
    for (int pos : ea.S) {
      CHECK(pos >= ea.r);
      CHECK(pos <= ea.s);
      CHECK(ea.B.count(pos) == 1);
    }
    if (ea.s >= 2) {
      ++with_s2;
      REQUIRE(ea.u.has_value());
      REQUIRE(ea.w.has_value());
      CHECK(ea.r <= ea.s);
      CHECK(ea.s < *ea.u);
      CHECK(*ea.u < *ea.w);
      CHECK(*ea.w <= static_cast<int>(p.size()));
      CHECK(ea.clause_d);
      CHECK(ea.clause_e);
      CHECK(ea.clause_f);
    }
  }
  CHECK(verified >= 50);
  CHECK(with_s2 >= 1);
}

TEST_CASE("endpoint structure rejects extensible input") {
  EdgeColouredGraph g = rainbow_k4();
  CHECK_THROWS_AS(analyze_endpoints(g, Path{0, 1}), error);
}

TEST_CASE("cycle/path decomposition of maximal crossing paths") {
  // rainbow K_5: d = 4, maximal paths have 5 < 2d+1 vertices, so the cycle
  // must reach length d+1 = 5, i.e. span everything
  EdgeColouredGraph k5 = gen_rainbow_complete(5);
  Path p = longest_pc_path(k5).path;
  REQUIRE(has_crossing(k5, p));
  CycleDecomposition dec = crossing_decompose(k5, p);
  CHECK(is_pc_cycle(k5, dec.cycle));
  CHECK(cycle_length(dec.cycle) >= 5);
  CHECK(dec.path.empty());

  // two-colour square: some properly coloured cycle comes back
  EdgeColouredGraph c4(4);
  c4.add_edge(0, 1, 0);
  c4.add_edge(1, 2, 1);
  c4.add_edge(2, 3, 0);
  c4.add_edge(3, 0, 1);
  CycleDecomposition dec2 = crossing_decompose(c4, {0, 1, 2, 3});
  CHECK(is_pc_cycle(c4, dec2.cycle));
  CHECK(dec2.path.empty());

  CHECK_THROWS_AS(crossing_decompose(rainbow_k4(), {0, 1}), error);  // extensible

  EdgeColouredGraph p4(4);
  p4.add_edge(0, 1, 0);
  p4.add_edge(1, 2, 1);
  p4.add_edge(2, 3, 0);
  CHECK_THROWS_AS(crossing_decompose(p4, {0, 1, 2, 3}), error);  // no crossing
}

TEST_CASE("decomposition contract on random instances") {
  std::mt19937_64 rng(31);
  int done = 0;
  for (int it = 0; it < 600 && done < 40; ++it) {
    int n = 6 + it % 5;
    EdgeColouredGraph g;
    try {
      g = gen_random_min_cdeg(n, 3, 6, 5000 + it, 0.3);
    } catch (const error&) {
      continue;
    }
    int d = g.min_colour_degree();
    if (d < 3) continue;
    Path p = longest_pc_path(g).path;
    if (!has_crossing(g, p)) continue;
    CycleDecomposition dec;
    try {
      dec = crossing_decompose(g, p);
    } catch (const error& e) {
      if (e.code() == Errc::not_maximal) continue;
      throw;
    }
    ++done;
    CHECK(is_pc_cycle(g, dec.cycle));
    int csize = cycle_length(dec.cycle);
    CHECK(csize >= d);
    if (static_cast<int>(p.size()) < 2 * d + 1) CHECK(csize >= d + 1);
    std::set<Vertex> cyc(dec.cycle.begin(), dec.cycle.end());
    std::set<Vertex> support(p.begin(), p.end());
    if (!dec.path.empty()) {
      CHECK(is_pc_path(g, dec.path));
      std::set<Vertex> qset(dec.path.begin(), dec.path.end());
      for (Vertex v : qset) CHECK(cyc.count(v) == 0);
      std::set<Vertex> uni = cyc;
      uni.insert(qset.begin(), qset.end());
      CHECK(uni == support);
      REQUIRE(dec.attach >= 0);
      REQUIRE(dec.attach < static_cast<int>(dec.cycle.size()) - 1);
      Vertex head = dec.path.front();
      Vertex anchor = dec.cycle[dec.attach];
      CHECK(g.has_edge(head, anchor));
      if (dec.path.size() >= 2)
        CHECK(g.colour(head, dec.path[1]) != g.colour(head, anchor));
    }
  }
  CHECK(done >= 20);
}
