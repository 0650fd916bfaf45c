#include "symloc/labeling.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

namespace symloc {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

void FeasibilitySpec::add(int a, int b) {
  require(a >= 1 && b >= 1, "constraint values must be >= 1");
  require(a != b, "constraint values must differ");
  const std::pair<int, int> c{a, b};
  if (std::find(constraints.begin(), constraints.end(), c) == constraints.end())
    constraints.push_back(c);
}

bool FeasibilitySpec::is_acyclic(int m) const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(m + 1));
  for (const auto& [a, b] : constraints) {
    require(a <= m && b <= m, "constraint value out of range 1..m");
    adj[static_cast<std::size_t>(a)].push_back(b);
  }
  // 0 = unseen, 1 = on stack, 2 = done
  std::vector<char> color(static_cast<std::size_t>(m + 1), 0);
  for (int start = 1; start <= m; ++start) {
    if (color[static_cast<std::size_t>(start)] != 0) continue;
    std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
    color[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next < adj[static_cast<std::size_t>(node)].size()) {
        const int to = adj[static_cast<std::size_t>(node)][next++];
        if (color[static_cast<std::size_t>(to)] == 1) return false;
        if (color[static_cast<std::size_t>(to)] == 0) {
          color[static_cast<std::size_t>(to)] = 1;
          stack.emplace_back(to, 0);
        }
      } else {
        color[static_cast<std::size_t>(node)] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

int feasible(const Permutation& tau, const FeasibilitySpec& spec) {
  if (spec.empty()) return 1;
  const Permutation inv = tau.inverse();
  for (const auto& [a, b] : spec.constraints) {
    require(a <= tau.size() && b <= tau.size(), "constraint value out of range 1..m");
    if (inv(a) > inv(b)) return 0;
  }
  return 1;
}

FeasibilitySpec parse_constraints(std::istream& in) {
  FeasibilitySpec spec;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    int a = 0;
    int b = 0;
    if (!(fields >> a)) continue;  // blank or comment-only line
    std::string trailing;
    if (!(fields >> b) || (fields >> trailing)) {
      throw std::invalid_argument("constraints line " + std::to_string(lineno) +
                                  ": expected two values 'a b'");
    }
    spec.add(a, b);
  }
  return spec;
}

LabelScheme LabelScheme::inverse_standard() { return {}; }

LabelScheme LabelScheme::feasible_standard(FeasibilitySpec fs) {
  LabelScheme s;
  s.kind = LabelKind::Feasible;
  s.feasibility = std::move(fs);
  return s;
}

LabelScheme LabelScheme::hit_feasible(int c, FeasibilitySpec fs) {
  LabelScheme s;
  s.kind = LabelKind::HitFeasible;
  s.cache_size = c;
  s.feasibility = std::move(fs);
  return s;
}

LabelScheme LabelScheme::ranked_hit_feasible(Permutation rank_order, FeasibilitySpec fs) {
  LabelScheme s;
  s.kind = LabelKind::RankedHitFeasible;
  s.rank_order = std::move(rank_order);
  s.feasibility = std::move(fs);
  return s;
}

EdgeLabel label(const LabelScheme& scheme, const CoveringEdge& edge) {
  const int m = edge.src.size();
  switch (scheme.kind) {
    case LabelKind::InverseStandard:
      return StdLabel{edge.swap};
    case LabelKind::Feasible:
      return FeasLabel{feasible(edge.dst, scheme.feasibility), edge.swap};
    case LabelKind::HitFeasible: {
      require(scheme.cache_size >= 1 && scheme.cache_size <= m,
              "hit-feasible labeling needs a cache size in 1..m");
      const int y = feasible(edge.dst, scheme.feasibility);
      return HitFeasLabel{y, hits_at(TraceSpec{edge.dst}, scheme.cache_size), edge.swap};
    }
    case LabelKind::RankedHitFeasible: {
      require(scheme.rank_order.has_value() && scheme.rank_order->size() == m,
              "ranked labeling needs a cache-size ranking over 1..m");
      const int y = feasible(edge.dst, scheme.feasibility);
      const HitVector h = hit_vector(TraceSpec{edge.dst});
      std::vector<int> ranked(static_cast<std::size_t>(m));
      for (int k = 1; k <= m; ++k)
        ranked[static_cast<std::size_t>(k - 1)] =
            h[static_cast<std::size_t>((*scheme.rank_order)(k) - 1)];
      return RankedLabel{y, std::move(ranked)};
    }
  }
  throw std::invalid_argument("unknown label kind");
}

LabelKind kind_of(const EdgeLabel& label) {
  switch (label.index()) {
    case 0: return LabelKind::InverseStandard;
    case 1: return LabelKind::Feasible;
    case 2: return LabelKind::HitFeasible;
    default: return LabelKind::RankedHitFeasible;
  }
}

std::strong_ordering compare(const LabelScheme& scheme, const EdgeLabel& x, const EdgeLabel& y) {
  require(x.index() == y.index(), "cannot compare labels of different kinds");
  require(kind_of(x) == scheme.kind, "label kind does not match the scheme");
  return std::visit(
      [](const auto& a, const auto& b) -> std::strong_ordering {
        if constexpr (std::is_same_v<decltype(a), decltype(b)>) {
          return a <=> b;
        } else {
          throw std::invalid_argument("cannot compare labels of different kinds");
        }
      },
      x, y);
}

GoodLabelingReport check_good(const LabelScheme& scheme, int m) {
  require(m >= 1 && m <= 5, "good-labeling check is exhaustive; m must be in 1..5");
  GoodLabelingReport report;
  std::vector<int> img(static_cast<std::size_t>(m));
  std::iota(img.begin(), img.end(), 1);
  do {
    const Permutation sigma(img);
    const auto edges = successors(sigma, CoverMode::Weak);
    std::vector<EdgeLabel> labels;
    labels.reserve(edges.size());
    for (const CoveringEdge& e : edges) labels.push_back(label(scheme, e));
    for (std::size_t i = 0; i < edges.size(); ++i) {
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        if (labels[i] == labels[j]) {
          report.holds = false;
          report.witnesses.push_back({sigma, edges[i].dst, edges[j].dst});
        }
      }
    }
  } while (std::next_permutation(img.begin(), img.end()));
  return report;
}

namespace {

// -1, 0, +1 comparison of equal-length label sequences, first difference wins.
int lex_compare(const LabelScheme& scheme, const std::vector<EdgeLabel>& a,
                const std::vector<EdgeLabel>& b) {
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto c = compare(scheme, a[i], b[i]);
    if (c < 0) return -1;
    if (c > 0) return 1;
  }
  return 0;
}

bool weakly_increasing(const LabelScheme& scheme, const std::vector<EdgeLabel>& seq) {
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (compare(scheme, seq[i - 1], seq[i]) > 0) return false;
  }
  return true;
}

}  // namespace

ElReport check_el(const LabelScheme& scheme, int m, CoverMode mode) {
  require(m >= 1 && m <= 4, "EL check enumerates interval chains; m must be in 1..4");
  const CoveringGraph g = build_graph(m, mode);
  const int n = static_cast<int>(g.nodes.size());

  std::vector<std::vector<std::pair<int, EdgeLabel>>> adj(static_cast<std::size_t>(n));
  for (const CoveringEdge& e : g.edges) {
    const int si = g.node_index(e.src);
    const int di = g.node_index(e.dst);
    adj[static_cast<std::size_t>(si)].emplace_back(di, label(scheme, e));
  }

  // Reachability closure over cover edges, one DFS per source.
  std::vector<std::vector<char>> reach(static_cast<std::size_t>(n),
                                       std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    std::vector<int> stack{i};
    auto& row = reach[static_cast<std::size_t>(i)];
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (const auto& out : adj[static_cast<std::size_t>(u)]) {
        if (!row[static_cast<std::size_t>(out.first)]) {
          row[static_cast<std::size_t>(out.first)] = 1;
          stack.push_back(out.first);
        }
      }
    }
  }

  ElReport report;
  std::vector<std::vector<EdgeLabel>> chains;
  std::vector<EdgeLabel> prefix;

  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y || !reach[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) continue;
      ++report.intervals_checked;

      chains.clear();
      prefix.clear();
      // All saturated chains x -> y; prune branches that cannot reach y.
      auto dfs = [&](auto&& self, int u) -> void {
        if (u == y) {
          chains.push_back(prefix);
          return;
        }
        for (const auto& [v, lab] : adj[static_cast<std::size_t>(u)]) {
          if (v != y && !reach[static_cast<std::size_t>(v)][static_cast<std::size_t>(y)]) continue;
          prefix.push_back(lab);
          self(self, v);
          prefix.pop_back();
        }
      };
      dfs(dfs, x);
      assert(!chains.empty());

      int increasing = 0;
      const std::vector<EdgeLabel>* increasing_seq = nullptr;
      for (const auto& seq : chains) {
        if (weakly_increasing(scheme, seq)) {
          ++increasing;
          increasing_seq = &seq;
        }
      }
      bool lex_min = false;
      if (increasing == 1) {
        lex_min = std::none_of(chains.begin(), chains.end(), [&](const auto& seq) {
          return lex_compare(scheme, seq, *increasing_seq) < 0;
        });
      }
      if (increasing != 1 || !lex_min) {
        report.holds = false;
        report.witnesses.push_back({g.nodes[static_cast<std::size_t>(x)],
                                    g.nodes[static_cast<std::size_t>(y)], increasing, lex_min});
      }
    }
  }
  return report;
}

}  // namespace symloc
