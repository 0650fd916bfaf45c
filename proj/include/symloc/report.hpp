#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "symloc/analysis.hpp"
#include "symloc/bruhat.hpp"
#include "symloc/chainfind.hpp"
#include "symloc/labeling.hpp"
#include "symloc/trace_cache.hpp"

namespace symloc {

// All rendering is byte-deterministic for fixed inputs: stable key order
// (ordered JSON) and lexicographic node/edge order in DOT.

using json = nlohmann::ordered_json;

/// {"m":..,"perm":[..],"distances":[..],"hits":[..],"miss_ratio":{"c":..}}
json hits_report(const TraceSpec& spec, std::vector<int> cache_sizes,
                 MissScope scope = MissScope::BOnly);

json label_to_json(const EdgeLabel& label);

/// {"start":[..],"steps":[{"perm":[..],"label":{..},"hits":[..]}],"terminated":".."}
json chain_report(const Chain& chain);

json divergence_report(const ChainDivergenceReport& report);

json reuse_report_json(const ReuseReport& report);

const char* termination_name(ChainTermination t);

enum class NodeAnnotation { None, Hits };

/// DOT text: node id = concatenated one-line digits ("1243"), edge label =
/// "(a b)" plus the scheme's extra label components when a scheme is given.
std::string dot_export(const CoveringGraph& graph, NodeAnnotation annotate,
                       const LabelScheme* scheme = nullptr);

}  // namespace symloc
