#include "symloc/bruhat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace symloc {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Index i such that dst = src . s_i, if the two one-line forms differ at
// exactly two adjacent positions.
std::optional<int> weak_position(const Permutation& src, const Permutation& dst) {
  int first = 0;
  int second = 0;
  for (int i = 1; i <= src.size(); ++i) {
    if (src(i) != dst(i)) {
      if (first == 0)
        first = i;
      else if (second == 0)
        second = i;
      else
        return std::nullopt;
    }
  }
  if (second == first + 1 && src(first) == dst(second) && src(second) == dst(first)) return first;
  return std::nullopt;
}

}  // namespace

std::vector<CoveringEdge> successors(const Permutation& sigma, CoverMode mode) {
  const int m = sigma.size();
  std::vector<CoveringEdge> out;
  if (mode == CoverMode::Weak) {
    for (int i = 1; i < m; ++i) {
      if (sigma(i) < sigma(i + 1)) {
        Transposition swap(sigma(i), sigma(i + 1));
        out.push_back({sigma, apply_transposition(sigma, Transposition(i, i + 1), Side::Right),
                       swap, i});
      }
    }
    return out;
  }
  const int base = length(sigma);
  for (int a = 1; a < m; ++a) {
    for (int b = a + 1; b <= m; ++b) {
      Transposition t(a, b);
      Permutation tau = apply_transposition(sigma, t, Side::Left);
      if (length(tau) == base + 1) {
        std::optional<int> pos = weak_position(sigma, tau);
        out.push_back({sigma, std::move(tau), t, pos});
      }
    }
  }
  return out;
}

bool covers(const Permutation& sigma, const Permutation& tau, CoverMode mode) {
  require(sigma.size() == tau.size(), "cannot compare permutations of different sizes");
  const auto edges = successors(sigma, mode);
  return std::any_of(edges.begin(), edges.end(),
                     [&](const CoveringEdge& e) { return e.dst == tau; });
}

CoveringEdge cover_edge(const Permutation& src, const Permutation& dst) {
  require(src.size() == dst.size(), "cannot compare permutations of different sizes");
  require(length(dst) == length(src) + 1, "not a covering pair: rank must rise by one");
  const Permutation t = compose(dst, src.inverse());
  int a = 0;
  int b = 0;
  for (int v = 1; v <= t.size(); ++v) {
    if (t(v) != v) {
      if (a == 0)
        a = v;
      else if (b == 0)
        b = v;
      else
        require(false, "not a covering pair: dst . src^-1 is not a transposition");
    }
  }
  require(b != 0 && t(a) == b && t(b) == a,
          "not a covering pair: dst . src^-1 is not a transposition");
  return {src, dst, Transposition(a, b), weak_position(src, dst)};
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  require(u.size() == w.size(), "cannot compare permutations of different sizes");
  const int m = u.size();
  std::vector<int> up;
  std::vector<int> wp;
  up.reserve(static_cast<std::size_t>(m));
  wp.reserve(static_cast<std::size_t>(m));
  for (int k = 1; k <= m; ++k) {
    up.insert(std::upper_bound(up.begin(), up.end(), u(k)), u(k));
    wp.insert(std::upper_bound(wp.begin(), wp.end(), w(k)), w(k));
    for (int i = 0; i < k; ++i) {
      if (up[static_cast<std::size_t>(i)] > wp[static_cast<std::size_t>(i)]) return false;
    }
  }
  return true;
}

int rank_of(const Permutation& sigma) { return length(sigma); }

int CoveringGraph::node_index(const Permutation& sigma) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), sigma);
  if (it == nodes.end() || *it != sigma) return -1;
  return static_cast<int>(it - nodes.begin());
}

CoveringGraph build_graph(int m, CoverMode mode, int cap) {
  require(m >= 1, "group size must be >= 1");
  require(m <= cap, "group size above the covering-graph cap");
  CoveringGraph g;
  g.m = m;
  g.mode = mode;

  std::vector<int> img(static_cast<std::size_t>(m));
  std::iota(img.begin(), img.end(), 1);
  do {
    g.nodes.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));

  const std::size_t rank_count = static_cast<std::size_t>(m) * static_cast<std::size_t>(m - 1) / 2 + 1;
  g.ranks.assign(rank_count, {});
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    g.ranks[static_cast<std::size_t>(rank_of(g.nodes[i]))].push_back(static_cast<int>(i));

  for (const Permutation& node : g.nodes) {
    auto edges = successors(node, mode);
    g.edges.insert(g.edges.end(), std::make_move_iterator(edges.begin()),
                   std::make_move_iterator(edges.end()));
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const CoveringEdge& x, const CoveringEdge& y) {
    if (x.src != y.src) return x.src < y.src;
    return x.dst < y.dst;
  });
  return g;
}

}  // namespace symloc
