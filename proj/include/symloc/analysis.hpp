#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symloc/chainfind.hpp"
#include "symloc/trace_cache.hpp"

namespace symloc {

struct HitTableRow {
  Permutation sigma;
  DistanceVector distances;
  HitVector hits;
};

/// One row per element of S_m in lexicographic order; m <= 7.
std::vector<HitTableRow> hit_table(int m);

/// CSV form: header "perm,distances,hits", semicolon-separated values within
/// each field.
std::string hit_table_csv(int m);

/// Greedy chains from the identity under hit-feasible labeling at two cache
/// sizes (everything feasible), and the first rank at which they differ.
/// The minimal chain is not unique across cache sizes; this exhibits it.
struct ChainDivergenceReport {
  Chain chain1;
  Chain chain2;
  std::optional<int> first_divergence_rank;
};

ChainDivergenceReport chain_divergence(int m, int c1, int c2);

struct ReuseReport {
  std::uint64_t cyclic = 0;
  std::uint64_t sawtooth = 0;
  double ratio = 0.0;  // sawtooth / cyclic, approaches 1/2 for large matrices
};

ReuseReport reuse_report(std::uint64_t rows, std::uint64_t cols);

// Exhaustive verification sweeps backing the `verify` command.

struct DeltaHitsWitness {
  Permutation src;
  Permutation dst;
  int c = 0;
  int before = 0;
  int after = 0;
};

struct DeltaHitsReport {
  bool holds = true;
  std::vector<DeltaHitsWitness> witnesses;
};

/// |hits_c(dst) - hits_c(src)| <= 1 for every weak cover and every c; m <= 5.
DeltaHitsReport check_delta_hits(int m);

struct BruhatEquivWitness {
  Permutation u;
  Permutation w;
  bool leq = false;
  bool reachable = false;
};

struct BruhatEquivReport {
  bool holds = true;
  std::vector<BruhatEquivWitness> witnesses;
};

/// Prefix-domination comparison vs. reachability over bruhat-mode covers,
/// all ordered pairs; m <= 4.
BruhatEquivReport check_bruhat_equivalence(int m);

struct OracleWitness {
  Permutation sigma;
  int c = 0;
  int hits = 0;
  int oracle = 0;
};

struct OracleReport {
  bool holds = true;
  std::vector<OracleWitness> witnesses;
};

/// hits_at vs. the literal bounded-cache simulation, all sigma and c; m <= 6.
OracleReport check_lru_oracle(int m);

}  // namespace symloc
