#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "symloc/bruhat.hpp"
#include "symloc/labeling.hpp"
#include "symloc/trace_cache.hpp"

namespace symloc {

enum class ChainTermination {
  ReachedMaximum,  // head is the reverse permutation, rank m(m-1)/2
  Stuck,           // no (feasible) successor edges remained
  StepLimit,       // max_steps transitions taken
};

/// A saturated chain: consecutive steps are covering pairs, one label per
/// transition. label_evaluations counts label computations for the greedy
/// run's work bound.
struct Chain {
  std::vector<Permutation> steps;
  std::vector<EdgeLabel> labels;
  ChainTermination terminated = ChainTermination::ReachedMaximum;
  std::size_t label_evaluations = 0;
};

/// Greedy chain construction: from the current head, take the successor edge
/// with the maximum label; edges to infeasible destinations are discarded
/// when the scheme carries feasibility. Label ties (possible only under the
/// ranked scheme) fall back to the larger swapped value pair, so the pick is
/// always unique. Stops at the reverse permutation, when stuck, or at
/// max_steps transitions.
Chain chain_find(const Permutation& start, const LabelScheme& scheme,
                 CoverMode mode = CoverMode::Weak,
                 std::optional<std::size_t> max_steps = std::nullopt);

/// The recommended re-traversal under must-precede constraints: greedy chain
/// from the identity under the feasibility-carrying scheme; returns the final
/// head and its hit vector. Greedy, not a certified optimum.
std::pair<Permutation, HitVector> best_feasible(const FeasibilitySpec& spec, int m,
                                                LabelScheme scheme);

/// Recomputes the labels of an existing chain under the scheme; throws if
/// consecutive steps are not covering pairs.
std::vector<EdgeLabel> replay_labels(const Chain& chain, const LabelScheme& scheme);

}  // namespace symloc
