#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "symloc/trace_cache.hpp"

using namespace symloc;

namespace {

std::vector<Permutation> all_perms(int m) {
  std::vector<int> img(static_cast<std::size_t>(m));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace

TEST_CASE("stack distances of the named traces") {
  CHECK(stack_distances({Permutation::reverse(4)}) == DistanceVector{1, 2, 3, 4});
  CHECK(stack_distances({Permutation::identity(4)}) == DistanceVector{4, 4, 4, 4});
  CHECK(stack_distances({Permutation({3, 1, 2})}) == DistanceVector{1, 3, 3});
}

TEST_CASE("sawtooth hit vector matches the known value") {
  CHECK(hit_vector({Permutation::reverse(4)}) == HitVector{1, 2, 3, 4});
  for (int m = 1; m <= 8; ++m) {
    const HitVector h = hit_vector({Permutation::reverse(m)});
    for (int c = 1; c <= m; ++c) CHECK(h[static_cast<std::size_t>(c - 1)] == c);
  }
}

TEST_CASE("cyclic trace hits only once the cache holds everything") {
  for (int m = 1; m <= 8; ++m) {
    const HitVector h = hit_vector({Permutation::identity(m)});
    for (int c = 1; c < m; ++c) CHECK(h[static_cast<std::size_t>(c - 1)] == 0);
    CHECK(h[static_cast<std::size_t>(m - 1)] == m);
  }
}

TEST_CASE("two distinct re-traversals can share a hit vector") {
  CHECK(hit_vector({Permutation({2, 1, 3})}) == HitVector{0, 1, 3});
  CHECK(hit_vector({Permutation({1, 3, 2})}) == HitVector{0, 1, 3});
}

TEST_CASE("hits_at") {
  CHECK(hits_at({Permutation::reverse(4)}, 2) == 2);
  CHECK(hits_at({Permutation::identity(4)}, 3) == 0);
  CHECK(hits_at({Permutation({3, 1, 2})}, 1) == 1);
  CHECK_THROWS_AS(hits_at({Permutation::identity(4)}, 0), std::invalid_argument);
  CHECK_THROWS_AS(hits_at({Permutation::identity(4)}, 5), std::invalid_argument);
}

TEST_CASE("miss ratios") {
  CHECK(miss_ratio({Permutation::reverse(4)}, 4) == 0.0);
  CHECK(miss_ratio({Permutation::identity(4)}, 2) == 1.0);
  CHECK(miss_ratio({Permutation::reverse(4)}, 2, MissScope::FullTrace) == 0.75);
  CHECK(miss_ratio({Permutation({3, 1, 2})}, 1) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("bounded-cache oracle") {
  CHECK(lru_oracle({Permutation::reverse(4)}, 1) == 1);
  CHECK(lru_oracle({Permutation::identity(3)}, 3) == 3);
}

TEST_CASE("hits_at agrees with the bounded-cache oracle, exhaustive S_5") {
  for (const Permutation& sigma : all_perms(5)) {
    const TraceSpec spec{sigma};
    for (int c = 1; c <= 5; ++c) CHECK(hits_at(spec, c) == lru_oracle(spec, c));
  }
}

TEST_CASE("hits_at agrees with the bounded-cache oracle on sampled larger groups") {
  std::mt19937 rng(20240817);
  for (int m : {9, 12, 16}) {
    std::vector<int> img(static_cast<std::size_t>(m));
    std::iota(img.begin(), img.end(), 1);
    for (int trial = 0; trial < 20; ++trial) {
      std::shuffle(img.begin(), img.end(), rng);
      const TraceSpec spec{Permutation(img)};
      for (int c = 1; c <= m; ++c) CHECK(hits_at(spec, c) == lru_oracle(spec, c));
    }
  }
}

TEST_CASE("hit vector invariants, exhaustive m <= 6") {
  for (int m = 1; m <= 6; ++m) {
    for (const Permutation& sigma : all_perms(m)) {
      const DistanceVector d = stack_distances({sigma});
      for (int dist : d) {
        CHECK(dist >= 1);
        CHECK(dist <= m);
      }
      const HitVector h = hit_vector({sigma});
      CHECK(h[static_cast<std::size_t>(m - 1)] == m);
      for (int c = 1; c <= m; ++c) {
        CHECK(h[static_cast<std::size_t>(c - 1)] <= c);
        if (c > 1)
          CHECK(h[static_cast<std::size_t>(c - 1)] >= h[static_cast<std::size_t>(c - 2)]);
      }
    }
  }
}

TEST_CASE("matrix reuse totals") {
  CHECK(matrix_reuse_total(4, 4, TraversalOrder::Cyclic) == 256);
  CHECK(matrix_reuse_total(4, 4, TraversalOrder::Sawtooth) == 136);
  CHECK(matrix_reuse_total(1, 1, TraversalOrder::Cyclic) == 1);
  CHECK(matrix_reuse_total(1, 1, TraversalOrder::Sawtooth) == 1);
  CHECK_THROWS_AS(matrix_reuse_total(0, 3, TraversalOrder::Cyclic), std::invalid_argument);
}

TEST_CASE("single-row reuse totals coincide with summed stack distances") {
  for (int m = 1; m <= 8; ++m) {
    const DistanceVector cyc = stack_distances({Permutation::identity(m)});
    const DistanceVector saw = stack_distances({Permutation::reverse(m)});
    const auto sum = [](const DistanceVector& d) {
      return std::accumulate(d.begin(), d.end(), std::uint64_t{0});
    };
    CHECK(matrix_reuse_total(1, static_cast<std::uint64_t>(m), TraversalOrder::Cyclic) ==
          sum(cyc));
    CHECK(matrix_reuse_total(1, static_cast<std::uint64_t>(m), TraversalOrder::Sawtooth) ==
          sum(saw));
  }
}
