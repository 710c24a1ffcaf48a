#include "ecg/generators.hpp"

#include <algorithm>
#include <random>

namespace ecg {
namespace {

int colour_span(const EdgeColouredGraph& g) {
  auto cs = g.colours_present();
  return cs.empty() ? 0 : *cs.rbegin() + 1;
}

}  // namespace

EdgeColouredGraph gen_tilde(int d, int p) {
  if (d < 2 || p < d) throw error(Errc::bad_parameters, "requires p >= d >= 2");
  EdgeColouredGraph g(1 + p * d);
  Colour next = 0;
  for (int j = 0; j < p; ++j) {
    int off = 1 + j * d;
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b) g.add_edge(off + a, off + b, next++);
    Colour hub = next++;
    for (int a = 0; a < d; ++a) g.add_edge(0, off + a, hub);
  }
  return g;
}

EdgeColouredGraph gen_hat(int d, int n) {
  if (d < 1 || n < (3 * d + 1) / 2)
    throw error(Errc::bad_parameters, "requires n >= ceil(3d/2) and d >= 1");
  EdgeColouredGraph g(n);
  Colour next = 0;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) g.add_edge(a, b, next++);
  for (int a = 0; a < d; ++a) {
    Colour hub = next++;
    for (int y = d; y < n; ++y) g.add_edge(a, y, hub);
  }
  return g;
}

EdgeColouredGraph gen_recursive(int d, int k, int p) {
  if (k < 3 || d < k - 1 || p < d)
    throw error(Errc::bad_parameters, "requires d >= k-1 >= 2 and p >= d");
  if (d == k - 1) return gen_tilde(k - 1, p);
  EdgeColouredGraph sub = gen_recursive(d - 1, k, p);
  int sn = sub.n();
  int span = colour_span(sub);
  EdgeColouredGraph g(1 + p * sn);
  for (int j = 0; j < p; ++j) {
    int off = 1 + j * sn;
    for (const auto& [u, v, c] : sub.edges()) g.add_edge(off + u, off + v, c + j * span);
    Colour hub = p * span + j;
    for (int t = 0; t < sn; ++t) g.add_edge(0, off + t, hub);
  }
  return g;
}

ProperComplete gen_proper_complete(int n) {
  if (n < 2) throw error(Errc::bad_parameters, "requires n >= 2");
  ProperComplete out;
  out.graph = EdgeColouredGraph(n);
  if (n % 2 == 1) {
    // colour(i,j) = (i+j) / 2 modulo n, with /2 the modular inverse; vertex
    // i then misses exactly colour i
    int half = (n + 1) / 2;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) out.graph.add_edge(i, j, ((i + j) * half) % n);
    for (int i = 0; i < n; ++i) out.missing[i] = i;
  } else {
    // circle method: vertex n-1 in the middle, the rest on a cycle
    for (int r = 0; r < n - 1; ++r) {
      out.graph.add_edge(n - 1, r, r);
      for (int s = 1; s <= n / 2 - 1; ++s) {
        int a = (r + s) % (n - 1);
        int b = (r - s + (n - 1)) % (n - 1);
        out.graph.add_edge(std::min(a, b), std::max(a, b), r);
      }
    }
  }
  return out;
}

EdgeColouredGraph blow_up(const EdgeColouredGraph& g, int delta) {
  if (delta < 1) throw error(Errc::bad_parameters, "requires delta >= 1");
  EdgeColouredGraph out(g.n() * delta);
  for (const auto& [u, v, c] : g.edges())
    for (int s = 0; s < delta; ++s)
      for (int t = 0; t < delta; ++t) out.add_edge(u * delta + s, v * delta + t, c);
  return out;
}

int mono_min_degree(const EdgeColouredGraph& g) {
  if (g.edge_count() == 0) throw error(Errc::edgeless_graph, "no edges");
  std::map<Colour, std::vector<int>> deg;
  for (const auto& [u, v, c] : g.edges()) {
    auto& d = deg[c];
    if (d.empty()) d.assign(g.n(), 0);
    ++d[u];
    ++d[v];
  }
  int best = -1;
  for (const auto& [c, d] : deg) {
    int mn = *std::min_element(d.begin(), d.end());
    if (best < 0 || mn < best) best = mn;
  }
  return best;
}

EdgeColouredGraph gen_counterexample_mono(int k, int delta) {
  if (k < 3 || delta < 1) throw error(Errc::bad_parameters, "requires k >= 3 and delta >= 1");
  int eps = k % 2 == 0 ? 1 : 0;
  int xs = k + eps;
  int ys = k + eps;
  EdgeColouredGraph base(xs + ys);
  if (k % 2 == 1) {
    // odd k: K_k with vertex i missing colour i
    ProperComplete pc = gen_proper_complete(k);
    for (const auto& [u, v, c] : pc.graph.edges()) base.add_edge(u, v, c);
  } else {
    // even k: properly (k+1)-colour K_{k+1}, then drop colour class k,
    // which is a perfect matching avoiding vertex k
    ProperComplete pc = gen_proper_complete(k + 1);
    for (const auto& [u, v, c] : pc.graph.edges())
      if (c != k) base.add_edge(u, v, c);
  }
  for (int y = 0; y < ys; ++y)
    for (int i = 0; i < k; ++i) base.add_edge(xs + y, i, i);
  return blow_up(base, delta);
}

EdgeColouredGraph gen_rainbow_complete(int n) {
  if (n < 1) throw error(Errc::bad_parameters, "requires n >= 1");
  EdgeColouredGraph g(n);
  Colour next = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j, next++);
  return g;
}

EdgeColouredGraph gen_random_min_cdeg(int n, int d, int colours, std::uint64_t seed,
                                      double density) {
  if (d < 1 || n < d + 1 || colours < d || density < 0.0 || density > 1.0)
    throw error(Errc::bad_parameters, "requires n >= d+1, colours >= d, density in [0,1]");

  // block pattern guaranteeing colour degree >= d within the palette
  EdgeColouredGraph pattern;
  if (colours >= d * (d + 1) / 2) {
    pattern = gen_rainbow_complete(d + 1);
  } else if (d % 2 == 1 || colours >= d + 1) {
    // proper colouring of K_{d+1}: d colours when d+1 is even, d+1 when odd
    pattern = gen_proper_complete(d + 1).graph;
  } else {
    // d even with only d colours: K_{d+2} minus one colour class of its
    // (d+1)-colour 1-factorization
    if (n < d + 2)
      throw error(Errc::bad_parameters,
                  "palette of d colours with even d needs blocks of d+2 vertices");
    EdgeColouredGraph full = gen_proper_complete(d + 2).graph;
    pattern = EdgeColouredGraph(d + 2);
    for (const auto& [u, v, c] : full.edges())
      if (c != d) pattern.add_edge(u, v, c);
  }

  int bs = pattern.n();
  EdgeColouredGraph g(n);
  std::vector<int> offsets;
  for (int off = 0; off + bs <= n; off += bs) offsets.push_back(off);
  if (offsets.empty() || offsets.back() + bs < n) offsets.push_back(n - bs);
  for (int off : offsets)
    for (const auto& [u, v, c] : pattern.edges())
      if (!g.has_edge(off + u, off + v)) g.add_edge(off + u, off + v, c);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> pick(0, colours - 1);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      if (coin(rng) < density) g.add_edge(u, v, pick(rng));
    }
  return g;
}

}  // namespace ecg
