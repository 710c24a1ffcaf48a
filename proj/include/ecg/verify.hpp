#pragma once

#include <cstdint>
#include <string>

#include "ecg/graph.hpp"
#include "ecg/oracle.hpp"

namespace ecg {

enum class Verdict { pass, fail, inconclusive };

std::string to_string(Verdict v);

/// One theorem check against one instance, serialisable as a JSON line
/// (schema "ecg-report-v1").
struct VerificationReport {
  std::string theorem;
  std::string instance;
  /// Relevant degree parameter: minimum colour degree, or the monochromatic
  /// minimum degree for the bounded-palette theorem.
  int delta = -1;
  int path_length = -1;
  int cycle_length = -1;  // -1: no properly coloured cycle found
  bool hamiltonian = false;
  int bound = -1;
  Verdict verdict = Verdict::inconclusive;
  /// Tuple backing a pass: the path or cycle that meets the bound.
  std::vector<Vertex> witness;
  bool exact = true;
  std::string note;
};

std::string to_json_line(const VerificationReport& r);

/// Long path or long cycle: properly coloured path of length 2d or cycle of
/// length at least d+1, d the minimum colour degree (requires d >= 2).
VerificationReport check_thm_2dplus1(const EdgeColouredGraph& g, SearchOptions opts = {});

/// Short-cycle regime: path of length k*2^(d - ceil(3k/2) + 4) - 2 or cycle
/// of length at least k. Requires k >= 3 and d >= ceil(3k/2) - 3.
VerificationReport check_thm_kd(const EdgeColouredGraph& g, int k, SearchOptions opts = {});

/// k = 3 corollary: path of length 3*2^(d-1) - 2 or any properly coloured
/// cycle; the cycle branch is cross-checked against the peeling certificate.
VerificationReport check_cor_k3(const EdgeColouredGraph& g, SearchOptions opts = {});

/// Hamiltonian properly coloured cycle or path of length 6d/5 - 1; the real
/// bound is rounded up to floor((6d-1)/5) since lengths are integers.
VerificationReport check_thm_path(const EdgeColouredGraph& g, SearchOptions opts = {});

/// Bounded palette: with k colours present and monochromatic minimum degree
/// delta, a Hamiltonian properly coloured cycle or a path of length
/// (10(k-1)delta + 8)/9 - 1, rounded up to floor((10(k-1)delta + 7)/9).
/// Requires a connected graph with at least 2 colours and delta >= 1.
VerificationReport check_thm_mono(const EdgeColouredGraph& g, SearchOptions opts = {});

/// Tightness of the recursive family: longest path exactly k*2^(d-k+2) - 2
/// and no properly coloured cycle of length >= k.
VerificationReport check_prop_upper(int d, int k, int p, SearchOptions opts = {});

struct HuntParams {
  int max_n = 8;
  int max_d = 3;
  /// Fixed cycle-length parameter for the short-cycle conjecture.
  int k = 3;
  std::uint64_t seed = 1;
  /// Per-instance oracle budget (0 = unlimited).
  std::uint64_t budget = 0;
  /// Number of random instances streamed after the generator families.
  int random_instances = 200;
  /// Added to the conjectured bound; +1 turns a tight family into a
  /// counterexample, which exercises the detection path.
  int bound_offset = 0;
};

struct HuntResult {
  bool found = false;
  EdgeColouredGraph counterexample;
  VerificationReport report;
  int checked = 0;
};

/// Bounded counterexample search. `which` selects the conjecture:
/// "conj5" - path of length k*2^(d-k+2) - 2 or cycle of length >= k;
/// "conj7" - Hamiltonian properly coloured cycle or path of length
/// floor(3d/2), checked on connected instances.
/// Only exact oracle runs can flag a counterexample.
HuntResult conjecture_search(const std::string& which, const HuntParams& params);

}  // namespace ecg
