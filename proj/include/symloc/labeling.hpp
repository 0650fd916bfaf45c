#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "symloc/bruhat.hpp"
#include "symloc/perm.hpp"
#include "symloc/trace_cache.hpp"

namespace symloc {

/// Must-precede constraints: (a, b) means a is accessed before b in any
/// acceptable re-traversal. Realizes the feasibility predicate Y.
struct FeasibilitySpec {
  std::vector<std::pair<int, int>> constraints;

  bool empty() const { return constraints.empty(); }
  void add(int a, int b);

  /// False iff the constraint relation contains a directed cycle (in which
  /// case no feasible permutation exists).
  bool is_acyclic(int m) const;
};

/// Y(tau): 1 iff every constrained value a sits before its partner b in the
/// re-traversal order tau.
int feasible(const Permutation& tau, const FeasibilitySpec& spec);

/// One constraint per line, "a b"; '#' starts a comment; blank lines ignored.
FeasibilitySpec parse_constraints(std::istream& in);

enum class LabelKind {
  InverseStandard,
  Feasible,
  HitFeasible,
  RankedHitFeasible,
};

/// A labeling scheme plus its parameters. HitFeasible needs a cache size,
/// RankedHitFeasible a ranking permutation over cache sizes; all but
/// InverseStandard carry a feasibility spec (empty = everything feasible).
struct LabelScheme {
  LabelKind kind = LabelKind::InverseStandard;
  int cache_size = 0;
  std::optional<Permutation> rank_order;
  FeasibilitySpec feasibility;

  bool carries_feasibility() const { return kind != LabelKind::InverseStandard; }

  static LabelScheme inverse_standard();
  static LabelScheme feasible_standard(FeasibilitySpec fs = {});
  static LabelScheme hit_feasible(int c, FeasibilitySpec fs = {});
  static LabelScheme ranked_hit_feasible(Permutation rank_order, FeasibilitySpec fs = {});
};

// Label values. Field order is the comparison order; in every component
// larger is preferred: feasibility 1 beats 0, more hits beat fewer, and
// swaps compare by dictionary order on (a, b) with the larger pair winning
// (the reverse of the standard labeling's minimal-chain preference).
struct StdLabel {
  Transposition swap;
  bool operator==(const StdLabel&) const = default;
  auto operator<=>(const StdLabel&) const = default;
};

struct FeasLabel {
  int y;
  Transposition swap;
  bool operator==(const FeasLabel&) const = default;
  auto operator<=>(const FeasLabel&) const = default;
};

struct HitFeasLabel {
  int y;
  int hits_c;  // destination's absolute hit count at the scheme's cache size
  Transposition swap;
  bool operator==(const HitFeasLabel&) const = default;
  auto operator<=>(const HitFeasLabel&) const = default;
};

struct RankedLabel {
  int y;
  std::vector<int> ranked_hits;  // destination hit vector reordered by rank_order
  bool operator==(const RankedLabel&) const = default;
  auto operator<=>(const RankedLabel&) const = default;
};

using EdgeLabel = std::variant<StdLabel, FeasLabel, HitFeasLabel, RankedLabel>;

LabelKind kind_of(const EdgeLabel& label);

/// Label of a covering edge under the scheme. Y is evaluated on the
/// destination permutation only.
EdgeLabel label(const LabelScheme& scheme, const CoveringEdge& edge);

/// Total order on labels of the scheme's kind; throws on kind mismatch.
std::strong_ordering compare(const LabelScheme& scheme, const EdgeLabel& x, const EdgeLabel& y);

struct GoodLabelingWitness {
  Permutation src;
  Permutation tau1;
  Permutation tau2;
};

struct GoodLabelingReport {
  bool holds = true;
  std::vector<GoodLabelingWitness> witnesses;
};

/// Scans the weak-mode successor edges of every node of S_m for two distinct
/// successors sharing a label. Exhaustive; m <= 5.
GoodLabelingReport check_good(const LabelScheme& scheme, int m);

struct ElIntervalWitness {
  Permutation x;
  Permutation y;
  int increasing_chains = 0;       // saturated chains with non-decreasing labels
  bool increasing_is_lex_min = false;
};

struct ElReport {
  bool holds = true;
  std::vector<ElIntervalWitness> witnesses;
  long intervals_checked = 0;
};

/// EL-labeling check: for every comparable pair x < y of the covering graph,
/// enumerate all saturated chains of [x, y]; the property holds iff exactly
/// one chain is weakly increasing and that chain is lexicographically minimal.
/// Exhaustive chain enumeration; m <= 4.
ElReport check_el(const LabelScheme& scheme, int m, CoverMode mode);

}  // namespace symloc
