#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "symloc/perm.hpp"

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

Permutation transposition_as_perm(int m, Transposition t) {
  return apply_transposition(Permutation::identity(m), t, Side::Left);
}

}  // namespace

TEST_CASE("identity and reverse") {
  CHECK(Permutation::identity(4).image() == std::vector<int>{1, 2, 3, 4});
  CHECK(Permutation::identity(1).image() == std::vector<int>{1});
  CHECK(Permutation::reverse(4).image() == std::vector<int>{4, 3, 2, 1});
  CHECK(inversion_number(Permutation::identity(5)) == 0);
  CHECK_THROWS_AS(Permutation::identity(0), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::reverse(0), std::invalid_argument);
}

TEST_CASE("construction validates bijectivity") {
  CHECK_THROWS_AS(Permutation({1, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("compose") {
  const Permutation f({2, 1, 3});
  const Permutation g({1, 3, 2});
  CHECK(compose(f, g).image() == std::vector<int>{2, 3, 1});
  for (const Permutation& sigma : all_perms(4)) {
    CHECK(compose(sigma, Permutation::identity(4)) == sigma);
    CHECK(compose(Permutation::identity(4), sigma) == sigma);
    CHECK(compose(sigma, sigma.inverse()) == Permutation::identity(4));
  }
  CHECK_THROWS_AS(compose(f, Permutation::identity(4)), std::invalid_argument);
}

TEST_CASE("inverse") {
  CHECK(Permutation::identity(5).inverse() == Permutation::identity(5));
  CHECK(Permutation::reverse(5).inverse() == Permutation::reverse(5));
  CHECK(Permutation({2, 3, 1}).inverse().image() == std::vector<int>{3, 1, 2});
}

TEST_CASE("inversion numbers") {
  CHECK(inversion_number(Permutation({3, 2, 1})) == 3);  // the value swap (1 3) in S_3
  CHECK(inversion_number(Permutation({2, 1, 3})) == 1);
  CHECK(inversion_number(Permutation::reverse(4)) == 6);
  for (int m = 1; m <= 8; ++m) CHECK(inversion_number(Permutation::reverse(m)) == m * (m - 1) / 2);
}

TEST_CASE("length equals the worked example values") {
  // tau = (13) extended into S_5 is (3,2,1,4,5); tau . s_3 appends one inversion.
  const Permutation tau({3, 2, 1, 4, 5});
  CHECK(length(tau) == 3);
  CHECK(length(apply_transposition(tau, Transposition(3, 4), Side::Right)) == 4);
  CHECK(length(Permutation::identity(6)) == 0);
}

TEST_CASE("length change at ascents and descents, exhaustive S_4") {
  for (const Permutation& tau : all_perms(4)) {
    for (int i = 1; i < 4; ++i) {
      const Permutation next = apply_transposition(tau, Transposition(i, i + 1), Side::Right);
      if (tau(i) < tau(i + 1))
        CHECK(length(next) == length(tau) + 1);
      else
        CHECK(length(next) == length(tau) - 1);
    }
  }
}

TEST_CASE("reduced words recompose and have minimal length, exhaustive m <= 6") {
  CHECK(reduced_word(Permutation::identity(4)).empty());
  CHECK(reduced_word(Permutation({3, 2, 1})).size() == 3);
  // Word length is an adjacent-swap route to the Coxeter length, independent
  // of the pair-counting route.
  for (int m = 1; m <= 6; ++m) {
    for (const Permutation& sigma : all_perms(m)) {
      const std::vector<int> word = reduced_word(sigma);
      CHECK(static_cast<int>(word.size()) == inversion_number(sigma));
      CHECK(static_cast<int>(word.size()) == length(sigma));
      CHECK(compose_word(m, word) == sigma);
    }
  }
}

TEST_CASE("reduced words round-trip on sampled S_10 elements") {
  std::mt19937 rng(7);
  std::vector<int> img(10);
  std::iota(img.begin(), img.end(), 1);
  for (int trial = 0; trial < 50; ++trial) {
    std::shuffle(img.begin(), img.end(), rng);
    const Permutation sigma(img);
    const std::vector<int> word = reduced_word(sigma);
    CHECK(static_cast<int>(word.size()) == inversion_number(sigma));
    CHECK(compose_word(10, word) == sigma);
  }
}

TEST_CASE("cycle decomposition into transpositions") {
  const auto three_cycle = cycle_to_transpositions({1, 2, 3});
  REQUIRE(three_cycle.size() == 2);
  CHECK(three_cycle[0] == Transposition(1, 3));
  CHECK(three_cycle[1] == Transposition(1, 2));

  CHECK(cycle_to_transpositions({2, 5}) == std::vector<Transposition>{Transposition(2, 5)});
  CHECK(cycle_to_transpositions({4}).empty());
  CHECK_THROWS_AS(cycle_to_transpositions({1, 2, 1}), std::invalid_argument);

  // (2,4,1) in S_4 maps 2->4->1->2.
  const Permutation cyc = permutation_from_cycle(4, {2, 4, 1});
  CHECK(cyc(2) == 4);
  CHECK(cyc(4) == 1);
  CHECK(cyc(1) == 2);
  CHECK(cyc(3) == 3);
  const auto parts = cycle_to_transpositions({2, 4, 1});
  CHECK(parts.size() == 2);
}

TEST_CASE("cycle decomposition recomposes, all k-cycles with k <= 5 in S_6") {
  const int m = 6;
  // Enumerate ordered tuples of distinct values.
  std::vector<int> cycle;
  auto enumerate = [&](auto&& self, int k) -> void {
    if (static_cast<int>(cycle.size()) == k) {
      Permutation product = Permutation::identity(m);
      for (Transposition t : cycle_to_transpositions(cycle))
        product = compose(product, transposition_as_perm(m, t));
      CHECK(product == permutation_from_cycle(m, cycle));
      return;
    }
    for (int v = 1; v <= m; ++v) {
      if (std::find(cycle.begin(), cycle.end(), v) != cycle.end()) continue;
      cycle.push_back(v);
      self(self, k);
      cycle.pop_back();
    }
  };
  for (int k = 2; k <= 5; ++k) enumerate(enumerate, k);
}

TEST_CASE("transposition application") {
  CHECK(apply_transposition(Permutation::identity(4), Transposition(3, 4), Side::Left).image() ==
        std::vector<int>{1, 2, 4, 3});
  CHECK(apply_transposition(Permutation({1, 4, 2, 3}), Transposition(1, 2), Side::Right).image() ==
        std::vector<int>{4, 1, 2, 3});
  for (const Permutation& sigma : all_perms(4)) {
    const Transposition t(2, 4);
    CHECK(apply_transposition(apply_transposition(sigma, t, Side::Left), t, Side::Left) == sigma);
    CHECK(apply_transposition(apply_transposition(sigma, t, Side::Right), t, Side::Right) ==
          sigma);
  }
  CHECK_THROWS_AS(apply_transposition(Permutation::identity(3), Transposition(3, 4), Side::Left),
                  std::invalid_argument);
}

TEST_CASE("transposition application matches the group products, exhaustive S_4") {
  // Left application is the product t . sigma, right application sigma . t.
  for (const Permutation& sigma : all_perms(4)) {
    for (int a = 1; a < 4; ++a) {
      for (int b = a + 1; b <= 4; ++b) {
        const Transposition t(a, b);
        const Permutation t_perm = transposition_as_perm(4, t);
        CHECK(apply_transposition(sigma, t, Side::Left) == compose(t_perm, sigma));
        CHECK(apply_transposition(sigma, t, Side::Right) == compose(sigma, t_perm));
      }
    }
  }
}

TEST_CASE("transposition normalization") {
  CHECK(Transposition(4, 2) == Transposition(2, 4));
  CHECK_THROWS_AS(Transposition(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(Transposition(0, 1), std::invalid_argument);
}

TEST_CASE("text round trip") {
  CHECK(to_string(Permutation({2, 1, 3})) == "2,1,3");
  CHECK(parse_permutation("2,1,3") == Permutation({2, 1, 3}));
  CHECK(parse_permutation(" 4, 3 ,2,1 ") == Permutation::reverse(4));
  CHECK_THROWS_AS(parse_permutation("1,2,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("1,2,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation(""), std::invalid_argument);
  for (const Permutation& sigma : all_perms(5)) CHECK(parse_permutation(to_string(sigma)) == sigma);
}

TEST_CASE("one-based accessors") {
  const Permutation sigma({3, 1, 2});
  CHECK(sigma(1) == 3);
  CHECK(sigma.position_of(3) == 1);
  CHECK(sigma.position_of(2) == 3);
  CHECK_THROWS_AS(sigma.position_of(4), std::invalid_argument);
}
