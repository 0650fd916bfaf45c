#include "symloc/trace_cache.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace symloc {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

DistanceVector stack_distances(const TraceSpec& spec) {
  const int m = spec.m();
  // LRU stack, most recent first. After processing A = 1..m it reads (m, m-1, ..., 1).
  std::vector<int> stack;
  stack.reserve(static_cast<std::size_t>(m));
  for (int v = m; v >= 1; --v) stack.push_back(v);

  DistanceVector d;
  d.reserve(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    const int v = spec.sigma(i);
    auto it = std::find(stack.begin(), stack.end(), v);
    assert(it != stack.end());
    d.push_back(static_cast<int>(it - stack.begin()) + 1);
    stack.erase(it);
    stack.insert(stack.begin(), v);
  }
  return d;
}

HitVector hit_vector(const TraceSpec& spec) {
  const int m = spec.m();
  const DistanceVector d = stack_distances(spec);
  HitVector h(static_cast<std::size_t>(m), 0);
  for (int dist : d) ++h[static_cast<std::size_t>(dist - 1)];
  for (int c = 1; c < m; ++c) h[static_cast<std::size_t>(c)] += h[static_cast<std::size_t>(c - 1)];
  return h;
}

int hits_at(const TraceSpec& spec, int c) {
  require(c >= 1 && c <= spec.m(), "cache size out of range 1..m");
  return hit_vector(spec)[static_cast<std::size_t>(c - 1)];
}

double miss_ratio(const TraceSpec& spec, int c, MissScope scope) {
  const int hits = hits_at(spec, c);
  const int accesses = scope == MissScope::BOnly ? spec.m() : 2 * spec.m();
  return 1.0 - static_cast<double>(hits) / static_cast<double>(accesses);
}

int lru_oracle(const TraceSpec& spec, int c) {
  const int m = spec.m();
  require(c >= 1 && c <= m, "cache size out of range 1..m");
  std::vector<int> cache;  // resident elements, most recently used first
  cache.reserve(static_cast<std::size_t>(c));
  int hits = 0;
  for (int t = 1; t <= 2 * m; ++t) {
    const int v = t <= m ? t : spec.sigma(t - m);
    auto it = std::find(cache.begin(), cache.end(), v);
    if (it != cache.end()) {
      if (t > m) ++hits;  // the hits function counts only accesses after A
      cache.erase(it);
    } else if (static_cast<int>(cache.size()) == c) {
      cache.pop_back();
    }
    cache.insert(cache.begin(), v);
  }
  return hits;
}

std::uint64_t matrix_reuse_total(std::uint64_t rows, std::uint64_t cols, TraversalOrder order) {
  require(rows >= 1 && cols >= 1, "matrix dimensions must be >= 1");
  const std::uint64_t nm = rows * cols;
  switch (order) {
    case TraversalOrder::Cyclic:
      return nm * nm;
    case TraversalOrder::Sawtooth:
      return nm % 2 == 0 ? (nm / 2) * (nm + 1) : nm * ((nm + 1) / 2);
  }
  return 0;  // unreachable
}

}  // namespace symloc
