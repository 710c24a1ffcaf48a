#pragma once

#include <optional>

#include "ecg/graph.hpp"
#include "ecg/oracle.hpp"

namespace ecg {

/// A vertex z such that every connected component of G - z meets z through
/// edges of one single colour. Such a vertex exists whenever the graph has
/// no properly coloured cycle, and no properly coloured cycle can pass
/// through it.
struct YeoCertificate {
  Vertex z = -1;
  /// Components of G - z with the unique colour joining them to z, or -1
  /// for components z does not touch.
  std::vector<std::pair<std::vector<Vertex>, Colour>> components;
};

/// Smallest qualifying z, or none. n >= 1 required.
std::optional<YeoCertificate> find_yeo_vertex(const EdgeColouredGraph& g);

/// Checks a certificate against the graph from scratch.
bool valid_yeo_certificate(const EdgeColouredGraph& g, const YeoCertificate& cert);

struct AcyclicityCertificate {
  bool acyclic = false;
  /// Peeling order: certificates found while recursively removing qualifying
  /// vertices, each expressed in the original vertex ids.
  std::vector<YeoCertificate> chain;
  /// Set iff acyclic is false.
  std::optional<Cycle> cycle;
};

/// Either certifies that no properly coloured cycle exists by recursively
/// peeling qualifying vertices, or returns a cycle found by exhaustive
/// search. Exactly one of chain/cycle is meaningful.
AcyclicityCertificate certify_acyclic(const EdgeColouredGraph& g);

}  // namespace ecg
