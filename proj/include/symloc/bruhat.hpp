#pragma once

#include <optional>
#include <vector>

#include "symloc/perm.hpp"

namespace symloc {

enum class CoverMode {
  Weak,    // successors sigma -> sigma . s_i at every ascent position i
  Bruhat,  // every tau = t . sigma (t a value transposition) with length +1
};

/// A covering pair (src, dst) with length(dst) = length(src) + 1.
/// swap is the value pair exchanged, i.e. the transposition dst . src^{-1};
/// position is the index i with dst = src . s_i when the cover is weak.
struct CoveringEdge {
  Permutation src;
  Permutation dst;
  Transposition swap;
  std::optional<int> position;
};

/// Covering edges out of sigma under the chosen mode. Weak edges are a
/// subset of bruhat edges. Deterministic order: weak by ascent position,
/// bruhat by swapped value pair.
std::vector<CoveringEdge> successors(const Permutation& sigma, CoverMode mode);

/// True iff tau is a successor of sigma under the chosen mode.
bool covers(const Permutation& sigma, const Permutation& tau, CoverMode mode);

/// Builds the edge src -> dst, validating that it is a covering pair
/// (dst . src^{-1} is a transposition and the rank rises by exactly one).
CoveringEdge cover_edge(const Permutation& src, const Permutation& dst);

/// Bruhat order comparison by prefix domination: u <= w iff for every k the
/// sorted value set {u(1..k)} is elementwise <= the sorted set {w(1..k)}.
bool bruhat_leq(const Permutation& u, const Permutation& w);

/// Rank in the covering system: rank(identity) = 0, rank(reverse) = m(m-1)/2.
int rank_of(const Permutation& sigma);

inline constexpr int kDefaultGraphCap = 7;

/// The full labeled covering DAG of S_m under one cover mode.
/// Graded: every edge connects rank r to rank r+1.
struct CoveringGraph {
  int m = 0;
  CoverMode mode = CoverMode::Weak;
  std::vector<Permutation> nodes;        // all m! permutations, lexicographic
  std::vector<CoveringEdge> edges;       // sorted by (src, dst) one-line forms
  std::vector<std::vector<int>> ranks;   // ranks[r] = node indices of rank r

  int node_index(const Permutation& sigma) const;
};

/// Materializes S_m; refuses m above the cap (m! nodes).
CoveringGraph build_graph(int m, CoverMode mode, int cap = kDefaultGraphCap);

}  // namespace symloc
