#include "symloc/chainfind.hpp"

#include <algorithm>
#include <stdexcept>

namespace symloc {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Chain chain_find(const Permutation& start, const LabelScheme& scheme, CoverMode mode,
                 std::optional<std::size_t> max_steps) {
  const int m = start.size();
  if (scheme.carries_feasibility())
    require(feasible(start, scheme.feasibility) == 1,
            "chain start violates the feasibility constraints");

  Chain chain;
  chain.steps.push_back(start);
  const int max_rank = m * (m - 1) / 2;

  for (;;) {
    const Permutation head = chain.steps.back();
    if (rank_of(head) == max_rank) {
      chain.terminated = ChainTermination::ReachedMaximum;
      break;
    }
    if (max_steps && chain.labels.size() >= *max_steps) {
      chain.terminated = ChainTermination::StepLimit;
      break;
    }
    auto edges = successors(head, mode);
    if (scheme.carries_feasibility()) {
      std::erase_if(edges, [&](const CoveringEdge& e) {
        return feasible(e.dst, scheme.feasibility) == 0;
      });
    }
    if (edges.empty()) {
      chain.terminated = ChainTermination::Stuck;
      break;
    }

    std::size_t best = 0;
    EdgeLabel best_label = label(scheme, edges[0]);
    ++chain.label_evaluations;
    for (std::size_t k = 1; k < edges.size(); ++k) {
      EdgeLabel candidate = label(scheme, edges[k]);
      ++chain.label_evaluations;
      const auto order = compare(scheme, candidate, best_label);
      if (order > 0 || (order == 0 && edges[k].swap > edges[best].swap)) {
        best = k;
        best_label = std::move(candidate);
      }
    }
    chain.steps.push_back(edges[best].dst);
    chain.labels.push_back(std::move(best_label));
  }
  return chain;
}

std::pair<Permutation, HitVector> best_feasible(const FeasibilitySpec& spec, int m,
                                                LabelScheme scheme) {
  require(scheme.carries_feasibility(),
          "best_feasible needs a feasibility-carrying labeling scheme");
  require(spec.is_acyclic(m), "constraint relation is cyclic; no feasible permutation exists");
  scheme.feasibility = spec;
  const Chain chain = chain_find(Permutation::identity(m), scheme, CoverMode::Weak);
  const Permutation& head = chain.steps.back();
  return {head, hit_vector(TraceSpec{head})};
}

std::vector<EdgeLabel> replay_labels(const Chain& chain, const LabelScheme& scheme) {
  std::vector<EdgeLabel> labels;
  for (std::size_t k = 0; k + 1 < chain.steps.size(); ++k) {
    const CoveringEdge edge = cover_edge(chain.steps[k], chain.steps[k + 1]);
    labels.push_back(label(scheme, edge));
  }
  return labels;
}

}  // namespace symloc
