#pragma once

#include <cstdint>
#include <vector>

#include "symloc/perm.hpp"

namespace symloc {

/// The periodic trace T = A B: A touches 1..m in order, then B[i] = sigma(i).
struct TraceSpec {
  Permutation sigma;

  int m() const { return sigma.size(); }
};

/// d[i-1] = LRU stack distance of access B[i]: number of distinct elements
/// touched since the previous access to that element, counting the element
/// itself. Immediate re-access has distance 1.
using DistanceVector = std::vector<int>;

/// h[c-1] = number of hits in B under a fully associative LRU cache of size c.
using HitVector = std::vector<int>;

DistanceVector stack_distances(const TraceSpec& spec);

/// h[c-1] = #{ i : d[i] <= c }.
HitVector hit_vector(const TraceSpec& spec);

/// Hits in B at cache size c, 1 <= c <= m.
int hits_at(const TraceSpec& spec, int c);

enum class MissScope {
  BOnly,      // misses over the m accesses of B
  FullTrace,  // misses over all 2m accesses; A is entirely cold
};

double miss_ratio(const TraceSpec& spec, int c, MissScope scope = MissScope::BOnly);

/// Literal bounded-cache LRU simulation over the raw 2m-access sequence:
/// keep at most c resident elements, evict the least recently used. Counts
/// hits after A. Kept independent of stack_distances as a cross-check.
int lru_oracle(const TraceSpec& spec, int c);

enum class TraversalOrder { Cyclic, Sawtooth };

/// Total reuse distance of a repeated rows x cols matrix traversal:
/// cyclic re-traversal costs (rows*cols)^2, sawtooth costs nm(nm+1)/2.
std::uint64_t matrix_reuse_total(std::uint64_t rows, std::uint64_t cols, TraversalOrder order);

}  // namespace symloc
