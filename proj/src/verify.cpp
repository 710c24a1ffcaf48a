#include "ecg/verify.hpp"

#include <cmath>

#include "ecg/generators.hpp"
#include "ecg/paths.hpp"
#include "ecg/yeo.hpp"
#include "json.hpp"

namespace ecg {
namespace {

// pass via a found witness is sound even under budget pressure; fail needs
// exact searches on every branch
void settle(VerificationReport& r, bool path_ok, const Path& path_witness, bool cycle_ok,
            const std::vector<Vertex>& cycle_witness, bool all_exact) {
  if (path_ok) {
    r.verdict = Verdict::pass;
    r.witness = path_witness;
  } else if (cycle_ok) {
    r.verdict = Verdict::pass;
    r.witness = cycle_witness;
  } else if (all_exact) {
    r.verdict = Verdict::fail;
  } else {
    r.verdict = Verdict::inconclusive;
  }
  r.exact = all_exact;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    default:
      return "inconclusive";
  }
}

std::string to_json_line(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = "ecg-report-v1";
  j["theorem"] = r.theorem;
  j["instance"] = r.instance;
  j["delta"] = r.delta;
  j["path_length"] = r.path_length;
  j["cycle_length"] = r.cycle_length;
  j["hamiltonian"] = r.hamiltonian;
  j["bound"] = r.bound;
  j["verdict"] = to_string(r.verdict);
  j["witness"] = r.witness;
  j["exact"] = r.exact;
  j["note"] = r.note;
  return j.dump();
}

VerificationReport check_thm_2dplus1(const EdgeColouredGraph& g, SearchOptions opts) {
  int d = g.min_colour_degree();
  if (d < 2) throw error(Errc::hypothesis_violated, "minimum colour degree below 2");
  VerificationReport r;
  r.theorem = "thm2";
  r.delta = d;
  r.bound = 2 * d;
  PathSearchResult p = longest_pc_path(g, opts);
  CycleSearchResult c = longest_pc_cycle(g, opts);
  r.path_length = p.length();
  r.cycle_length = c.length();
  settle(r, p.length() >= 2 * d, p.path, c.length() >= d + 1,
         c.cycle ? *c.cycle : std::vector<Vertex>{}, p.exact && c.exact);
  r.note = "path >= 2d or cycle >= d+1";
  return r;
}

VerificationReport check_thm_kd(const EdgeColouredGraph& g, int k, SearchOptions opts) {
  if (k < 3) throw error(Errc::bad_parameters, "k must be at least 3");
  int d = g.min_colour_degree();
  int ceil3k2 = (3 * k + 1) / 2;
  if (d < ceil3k2 - 3)
    throw error(Errc::hypothesis_violated, "minimum colour degree below ceil(3k/2) - 3");
  VerificationReport r;
  r.theorem = "thm3";
  r.delta = d;
  r.bound = k * (1 << (d - ceil3k2 + 4)) - 2;
  PathSearchResult p = longest_pc_path(g, opts);
  BoolSearchResult c = has_pc_cycle_of_length_at_least(g, std::max(k, 3), opts);
  r.path_length = p.length();
  r.cycle_length = c.witness ? cycle_length(*c.witness) : -1;
  settle(r, p.length() >= r.bound, p.path, c.found, c.witness ? *c.witness : std::vector<Vertex>{},
         p.exact && c.exact);
  r.note = "path >= k*2^(d-ceil(3k/2)+4)-2 or cycle >= k";
  return r;
}

VerificationReport check_cor_k3(const EdgeColouredGraph& g, SearchOptions opts) {
  int d = g.min_colour_degree();
  if (d < 1) throw error(Errc::hypothesis_violated, "minimum colour degree below 1");
  VerificationReport r;
  r.theorem = "cor3";
  r.delta = d;
  r.bound = 3 * (1 << (d - 1)) - 2;
  PathSearchResult p = longest_pc_path(g, opts);
  CycleSearchResult c = longest_pc_cycle(g, opts);
  r.path_length = p.length();
  r.cycle_length = c.length();
  if (c.exact) {
    AcyclicityCertificate cert = certify_acyclic(g);
    if (cert.acyclic == c.cycle.has_value())
      throw error(Errc::contract_violation,
                  "peeling certificate disagrees with exhaustive cycle search");
    r.note = cert.acyclic ? "peeling certificate confirms no cycle" : "cycle cross-checked";
  }
  settle(r, p.length() >= r.bound, p.path, c.cycle.has_value(),
         c.cycle ? *c.cycle : std::vector<Vertex>{}, p.exact && c.exact);
  return r;
}

VerificationReport check_thm_path(const EdgeColouredGraph& g, SearchOptions opts) {
  int d = g.min_colour_degree();
  if (d < 1) throw error(Errc::hypothesis_violated, "minimum colour degree below 1");
  VerificationReport r;
  r.theorem = "thm6";
  r.delta = d;
  r.bound = (6 * d - 1) / 5;  // smallest integer >= 6d/5 - 1
  PathSearchResult p = longest_pc_path(g, opts);
  bool ham_exact = true;
  std::vector<Vertex> ham_witness;
  bool ham = false;
  if (g.n() >= 3) {
    BoolSearchResult h = has_pc_cycle_of_length_at_least(g, g.n(), opts);
    ham = h.found;
    ham_exact = h.exact;
    if (h.witness) ham_witness = *h.witness;
  }
  r.path_length = p.length();
  r.hamiltonian = ham;
  r.cycle_length = ham ? g.n() : -1;
  settle(r, p.length() >= r.bound, p.path, ham, ham_witness, p.exact && ham_exact);
  r.note = "integer bound floor((6d-1)/5) rounds the real bound 6d/5-1 up";
  return r;
}

VerificationReport check_thm_mono(const EdgeColouredGraph& g, SearchOptions opts) {
  if (!g.connected()) throw error(Errc::hypothesis_violated, "graph is not connected");
  int k = static_cast<int>(g.colours_present().size());
  if (k < 2) throw error(Errc::hypothesis_violated, "needs at least 2 colours");
  int delta = mono_min_degree(g);
  if (delta < 1) throw error(Errc::hypothesis_violated, "monochromatic minimum degree below 1");
  VerificationReport r;
  r.theorem = "thm8";
  r.delta = delta;
  r.bound = (10 * (k - 1) * delta + 7) / 9;  // smallest integer >= (10(k-1)delta+8)/9 - 1
  PathSearchResult p = longest_pc_path(g, opts);
  bool ham = false;
  bool ham_exact = true;
  std::vector<Vertex> ham_witness;
  if (g.n() >= 3) {
    BoolSearchResult h = has_pc_cycle_of_length_at_least(g, g.n(), opts);
    ham = h.found;
    ham_exact = h.exact;
    if (h.witness) ham_witness = *h.witness;
  }
  r.path_length = p.length();
  r.hamiltonian = ham;
  r.cycle_length = ham ? g.n() : -1;
  settle(r, p.length() >= r.bound, p.path, ham, ham_witness, p.exact && ham_exact);
  r.note = "delta taken as the monochromatic minimum degree over all colours present";
  return r;
}

VerificationReport check_prop_upper(int d, int k, int p, SearchOptions opts) {
  EdgeColouredGraph g = gen_recursive(d, k, p);
  VerificationReport r;
  r.theorem = "prop4";
  r.instance = "recursive(" + std::to_string(d) + "," + std::to_string(k) + "," +
               std::to_string(p) + ")";
  r.delta = g.min_colour_degree();
  r.bound = k * (1 << (d - k + 2)) - 2;
  PathSearchResult path = longest_pc_path(g, opts);
  BoolSearchResult cyc = has_pc_cycle_of_length_at_least(g, std::max(k, 3), opts);
  r.path_length = path.length();
  r.cycle_length = cyc.witness ? cycle_length(*cyc.witness) : -1;
  r.exact = path.exact && cyc.exact;
  if (!r.exact) {
    r.verdict = Verdict::inconclusive;
  } else if (path.length() == r.bound && !cyc.found) {
    r.verdict = Verdict::pass;
    r.witness = path.path;
  } else {
    r.verdict = Verdict::fail;
  }
  r.note = "tightness: path exactly k*2^(d-k+2)-2 and no cycle of length >= k";
  return r;
}

namespace {

std::vector<std::pair<std::string, EdgeColouredGraph>> instance_stream(const HuntParams& hp) {
  std::vector<std::pair<std::string, EdgeColouredGraph>> out;
  auto add = [&](const std::string& name, EdgeColouredGraph g) {
    if (g.n() <= hp.max_n) out.emplace_back(name, std::move(g));
  };
  for (int d = 2; d <= hp.max_d; ++d)
    for (int p = d; p <= d + 2; ++p)
      if (1 + p * d <= hp.max_n)
        add("tilde(" + std::to_string(d) + "," + std::to_string(p) + ")", gen_tilde(d, p));
  for (int d = 2; d <= hp.max_d; ++d)
    for (int n = (3 * d + 1) / 2; n <= hp.max_n; ++n)
      add("hat(" + std::to_string(d) + "," + std::to_string(n) + ")", gen_hat(d, n));
  if (1 + 3 * (1 + 3 * 2) <= hp.max_n) add("recursive(3,3,3)", gen_recursive(3, 3, 3));
  if (7 <= hp.max_n) add("recursive(2,3,3)", gen_recursive(2, 3, 3));
  if (6 <= hp.max_n) add("mono(3,1)", gen_counterexample_mono(3, 1));
  for (int n = 3; n <= hp.max_n; ++n) add("rainbow(" + std::to_string(n) + ")",
                                          gen_rainbow_complete(n));
  int made = 0;
  for (int i = 0; made < hp.random_instances; ++i) {
    int d = 2 + i % (std::max(1, hp.max_d - 1));
    int n = d + 2 + i % std::max(1, hp.max_n - d - 1);
    if (n > hp.max_n) continue;
    int colours = d + i % (d + 2);
    if (colours < d) colours = d;
    try {
      add("random(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ",c=" +
              std::to_string(colours) + ",seed=" + std::to_string(hp.seed + i) + ")",
          gen_random_min_cdeg(n, d, colours, hp.seed + i, 0.3));
    } catch (const error&) {
      continue;
    }
    ++made;
  }
  return out;
}

}  // namespace

HuntResult conjecture_search(const std::string& which, const HuntParams& hp) {
  if (which != "conj5" && which != "conj7")
    throw error(Errc::bad_parameters, "unknown conjecture " + which);
  HuntResult res;
  SearchOptions opts;
  opts.budget = hp.budget;
  for (auto& [name, g] : instance_stream(hp)) {
    int d = 0;
    try {
      d = g.min_colour_degree();
    } catch (const error&) {
      continue;
    }
    VerificationReport r;
    r.instance = name;
    r.delta = d;
    if (which == "conj5") {
      if (d < std::max(2, hp.k - 1)) continue;
      r.theorem = "conj5";
      r.bound = hp.k * (1 << (d - hp.k + 2)) - 2 + hp.bound_offset;
      PathSearchResult p = longest_pc_path(g, opts);
      BoolSearchResult c = has_pc_cycle_of_length_at_least(g, std::max(hp.k, 3), opts);
      r.path_length = p.length();
      r.cycle_length = c.witness ? cycle_length(*c.witness) : -1;
      settle(r, p.length() >= r.bound, p.path, c.found,
             c.witness ? *c.witness : std::vector<Vertex>{}, p.exact && c.exact);
    } else {
      if (!g.connected() || d < 1) continue;
      r.theorem = "conj7";
      r.bound = 3 * d / 2 + hp.bound_offset;
      PathSearchResult p = longest_pc_path(g, opts);
      bool ham = false;
      bool ham_exact = true;
      std::vector<Vertex> ham_witness;
      if (g.n() >= 3) {
        BoolSearchResult h = has_pc_cycle_of_length_at_least(g, g.n(), opts);
        ham = h.found;
        ham_exact = h.exact;
        if (h.witness) ham_witness = *h.witness;
      }
      r.path_length = p.length();
      r.hamiltonian = ham;
      settle(r, p.length() >= r.bound, p.path, ham, ham_witness, p.exact && ham_exact);
    }
    ++res.checked;
    if (r.verdict == Verdict::fail) {
      res.found = true;
      res.counterexample = g;
      res.report = r;
      return res;
    }
  }
  return res;
}

}  // namespace ecg
