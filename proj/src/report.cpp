#include "symloc/report.hpp"

#include <algorithm>

namespace symloc {

namespace {

std::string node_id(const Permutation& sigma) {
  std::string id;
  for (int v : sigma.image()) id += std::to_string(v);
  return id;
}

std::string hits_annotation(const Permutation& sigma) {
  const HitVector h = hit_vector(TraceSpec{sigma});
  std::string text = "(";
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i > 0) text += ',';
    text += std::to_string(h[i]);
  }
  text += ')';
  return text;
}

// Scheme components beyond the swap, for DOT edge labels.
std::string label_extra(const EdgeLabel& label) {
  if (const auto* f = std::get_if<FeasLabel>(&label)) return "y=" + std::to_string(f->y);
  if (const auto* h = std::get_if<HitFeasLabel>(&label))
    return "y=" + std::to_string(h->y) + " h=" + std::to_string(h->hits_c);
  if (const auto* r = std::get_if<RankedLabel>(&label)) {
    std::string text = "y=" + std::to_string(r->y) + " h=(";
    for (std::size_t i = 0; i < r->ranked_hits.size(); ++i) {
      if (i > 0) text += ',';
      text += std::to_string(r->ranked_hits[i]);
    }
    text += ')';
    return text;
  }
  return {};
}

}  // namespace

json hits_report(const TraceSpec& spec, std::vector<int> cache_sizes, MissScope scope) {
  json out;
  out["m"] = spec.m();
  out["perm"] = spec.sigma.image();
  out["distances"] = stack_distances(spec);
  out["hits"] = hit_vector(spec);
  std::sort(cache_sizes.begin(), cache_sizes.end());
  cache_sizes.erase(std::unique(cache_sizes.begin(), cache_sizes.end()), cache_sizes.end());
  json ratios = json::object();
  for (int c : cache_sizes) ratios[std::to_string(c)] = miss_ratio(spec, c, scope);
  out["miss_ratio"] = std::move(ratios);
  return out;
}

json label_to_json(const EdgeLabel& label) {
  json out;
  if (const auto* s = std::get_if<StdLabel>(&label)) {
    out["kind"] = "std";
    out["swap"] = {s->swap.a, s->swap.b};
  } else if (const auto* f = std::get_if<FeasLabel>(&label)) {
    out["kind"] = "feasible";
    out["y"] = f->y;
    out["swap"] = {f->swap.a, f->swap.b};
  } else if (const auto* h = std::get_if<HitFeasLabel>(&label)) {
    out["kind"] = "hit-feasible";
    out["y"] = h->y;
    out["hits_c"] = h->hits_c;
    out["swap"] = {h->swap.a, h->swap.b};
  } else if (const auto* r = std::get_if<RankedLabel>(&label)) {
    out["kind"] = "ranked-hit-feasible";
    out["y"] = r->y;
    out["ranked_hits"] = r->ranked_hits;
  }
  return out;
}

const char* termination_name(ChainTermination t) {
  switch (t) {
    case ChainTermination::ReachedMaximum: return "reached-maximum";
    case ChainTermination::Stuck: return "stuck";
    case ChainTermination::StepLimit: return "step-limit";
  }
  return "unknown";
}

json chain_report(const Chain& chain) {
  json out;
  out["start"] = chain.steps.front().image();
  json steps = json::array();
  for (std::size_t k = 1; k < chain.steps.size(); ++k) {
    json step;
    step["perm"] = chain.steps[k].image();
    step["label"] = label_to_json(chain.labels[k - 1]);
    step["hits"] = hit_vector(TraceSpec{chain.steps[k]});
    steps.push_back(std::move(step));
  }
  out["steps"] = std::move(steps);
  out["terminated"] = termination_name(chain.terminated);
  return out;
}

json divergence_report(const ChainDivergenceReport& report) {
  json out;
  out["chain1"] = chain_report(report.chain1);
  out["chain2"] = chain_report(report.chain2);
  if (report.first_divergence_rank)
    out["first_divergence_rank"] = *report.first_divergence_rank;
  else
    out["first_divergence_rank"] = nullptr;
  return out;
}

json reuse_report_json(const ReuseReport& report) {
  json out;
  out["cyclic"] = report.cyclic;
  out["sawtooth"] = report.sawtooth;
  out["ratio"] = report.ratio;
  return out;
}

std::string dot_export(const CoveringGraph& graph, NodeAnnotation annotate,
                       const LabelScheme* scheme) {
  std::string out = "digraph covering {\n  rankdir=BT;\n  node [shape=box];\n";
  for (const Permutation& node : graph.nodes) {
    const std::string id = node_id(node);
    out += "  \"" + id + "\" [label=\"" + id;
    if (annotate == NodeAnnotation::Hits) out += "\\n" + hits_annotation(node);
    out += "\"];\n";
  }
  for (const CoveringEdge& e : graph.edges) {
    std::string text = "(" + std::to_string(e.swap.a) + " " + std::to_string(e.swap.b) + ")";
    if (scheme && scheme->kind != LabelKind::InverseStandard)
      text += " " + label_extra(label(*scheme, e));
    out += "  \"" + node_id(e.src) + "\" -> \"" + node_id(e.dst) + "\" [label=\"" + text +
           "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace symloc
