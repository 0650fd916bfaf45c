#include "symloc/analysis.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "symloc/bruhat.hpp"

namespace symloc {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::vector<Permutation> all_permutations(int m) {
  std::vector<int> img(static_cast<std::size_t>(m));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

void append_field(std::string& line, const std::vector<int>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) line += ';';
    line += std::to_string(values[i]);
  }
}

}  // namespace

std::vector<HitTableRow> hit_table(int m) {
  require(m >= 1 && m <= 7, "hit table is exhaustive over S_m; m must be in 1..7");
  std::vector<HitTableRow> rows;
  for (Permutation& sigma : all_permutations(m)) {
    TraceSpec spec{sigma};
    rows.push_back({std::move(sigma), stack_distances(spec), hit_vector(spec)});
  }
  return rows;
}

std::string hit_table_csv(int m) {
  std::string out = "perm,distances,hits\n";
  for (const HitTableRow& row : hit_table(m)) {
    std::string line;
    append_field(line, row.sigma.image());
    line += ',';
    append_field(line, row.distances);
    line += ',';
    append_field(line, row.hits);
    out += line;
    out += '\n';
  }
  return out;
}

ChainDivergenceReport chain_divergence(int m, int c1, int c2) {
  require(m >= 1 && m <= 7, "chain divergence supports m in 1..7");
  require(c1 >= 1 && c1 <= m && c2 >= 1 && c2 <= m, "cache size out of range 1..m");
  require(c1 != c2, "cache sizes must differ");
  ChainDivergenceReport report{
      chain_find(Permutation::identity(m), LabelScheme::hit_feasible(c1)),
      chain_find(Permutation::identity(m), LabelScheme::hit_feasible(c2)),
      std::nullopt,
  };
  const std::size_t shared = std::min(report.chain1.steps.size(), report.chain2.steps.size());
  for (std::size_t k = 0; k < shared; ++k) {
    if (report.chain1.steps[k] != report.chain2.steps[k]) {
      report.first_divergence_rank = static_cast<int>(k);
      break;
    }
  }
  if (!report.first_divergence_rank &&
      report.chain1.steps.size() != report.chain2.steps.size())
    report.first_divergence_rank = static_cast<int>(shared);
  return report;
}

ReuseReport reuse_report(std::uint64_t rows, std::uint64_t cols) {
  ReuseReport report;
  report.cyclic = matrix_reuse_total(rows, cols, TraversalOrder::Cyclic);
  report.sawtooth = matrix_reuse_total(rows, cols, TraversalOrder::Sawtooth);
  report.ratio = static_cast<double>(report.sawtooth) / static_cast<double>(report.cyclic);
  return report;
}

DeltaHitsReport check_delta_hits(int m) {
  require(m >= 1 && m <= 5, "delta-hits check is exhaustive; m must be in 1..5");
  DeltaHitsReport report;
  for (const Permutation& sigma : all_permutations(m)) {
    const HitVector before = hit_vector(TraceSpec{sigma});
    for (const CoveringEdge& e : successors(sigma, CoverMode::Weak)) {
      const HitVector after = hit_vector(TraceSpec{e.dst});
      for (int c = 1; c <= m; ++c) {
        const int b = before[static_cast<std::size_t>(c - 1)];
        const int a = after[static_cast<std::size_t>(c - 1)];
        if (std::abs(a - b) > 1) {
          report.holds = false;
          report.witnesses.push_back({sigma, e.dst, c, b, a});
        }
      }
    }
  }
  return report;
}

BruhatEquivReport check_bruhat_equivalence(int m) {
  require(m >= 1 && m <= 4, "bruhat-equivalence check is exhaustive; m must be in 1..4");
  const CoveringGraph g = build_graph(m, CoverMode::Bruhat);
  const int n = static_cast<int>(g.nodes.size());

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const CoveringEdge& e : g.edges)
    adj[static_cast<std::size_t>(g.node_index(e.src))].push_back(g.node_index(e.dst));

  BruhatEquivReport report;
  for (int i = 0; i < n; ++i) {
    std::vector<char> reachable(static_cast<std::size_t>(n), 0);
    reachable[static_cast<std::size_t>(i)] = 1;  // reflexive
    std::vector<int> stack{i};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        if (!reachable[static_cast<std::size_t>(v)]) {
          reachable[static_cast<std::size_t>(v)] = 1;
          stack.push_back(v);
        }
      }
    }
    for (int j = 0; j < n; ++j) {
      const bool leq = bruhat_leq(g.nodes[static_cast<std::size_t>(i)],
                                  g.nodes[static_cast<std::size_t>(j)]);
      const bool reach = reachable[static_cast<std::size_t>(j)] != 0;
      if (leq != reach) {
        report.holds = false;
        report.witnesses.push_back({g.nodes[static_cast<std::size_t>(i)],
                                    g.nodes[static_cast<std::size_t>(j)], leq, reach});
      }
    }
  }
  return report;
}

OracleReport check_lru_oracle(int m) {
  require(m >= 1 && m <= 6, "oracle check is exhaustive; m must be in 1..6");
  OracleReport report;
  for (const Permutation& sigma : all_permutations(m)) {
    const TraceSpec spec{sigma};
    for (int c = 1; c <= m; ++c) {
      const int fast = hits_at(spec, c);
      const int slow = lru_oracle(spec, c);
      if (fast != slow) {
        report.holds = false;
        report.witnesses.push_back({sigma, c, fast, slow});
      }
    }
  }
  return report;
}

}  // namespace symloc
