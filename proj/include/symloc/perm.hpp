#pragma once

#include <cassert>
#include <compare>
#include <span>
#include <string>
#include <vector>

namespace symloc {

/// An unordered pair of element values to exchange, normalized so a < b.
/// Adjacent pairs (b == a+1) are the Coxeter generators s_a of S_m.
struct Transposition {
  int a;
  int b;

  Transposition(int x, int y);

  bool adjacent() const { return b == a + 1; }

  bool operator==(const Transposition&) const = default;
  auto operator<=>(const Transposition&) const = default;  // dictionary order on (a, b)
};

/// An element of S_m in one-line notation, 1-based: operator()(i) = sigma(i).
/// Doubles as a re-traversal order B with B[i] = sigma(i).
/// Immutable after construction; construction validates bijectivity.
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int m);
  static Permutation reverse(int m);

  int size() const { return static_cast<int>(image_.size()); }

  /// Image of i, 1-based.
  int operator()(int i) const {
    assert(i >= 1 && i <= size());
    return image_[static_cast<std::size_t>(i - 1)];
  }

  /// Position of a value in the one-line form, i.e. sigma^{-1}(value), 1-based.
  int position_of(int value) const;

  const std::vector<int>& image() const { return image_; }

  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;  // lexicographic on one-line form

 private:
  std::vector<int> image_;
};

enum class Side { Left, Right };

/// Composition (f . g)(i) = f(g(i)). Both arguments must share the same m.
Permutation compose(const Permutation& f, const Permutation& g);

/// Number of pairs i < j with sigma(i) > sigma(j).
int inversion_number(const Permutation& sigma);

/// Coxeter length over adjacent transpositions; equals inversion_number.
int length(const Permutation& sigma);

/// Left: swap the values t.a, t.b wherever they occur (group product t . sigma).
/// Right: swap positions t.a, t.b of the one-line form (group product sigma . t).
Permutation apply_transposition(const Permutation& sigma, Transposition t, Side side);

/// Indices i1..ik with sigma = s_{i1} ... s_{ik} and k = length(sigma).
/// Deterministic: obtained by repeatedly clearing the leftmost descent.
std::vector<int> reduced_word(const Permutation& sigma);

/// Product s_{w[0]} . s_{w[1]} ... of adjacent transpositions in S_m.
Permutation compose_word(int m, std::span<const int> word);

/// Decomposition (a1 ... ak) = (a1 ak)(a1 a_{k-1}) ... (a1 a2).
/// Values must be distinct; a 1-cycle (or empty cycle) yields the empty product.
std::vector<Transposition> cycle_to_transpositions(const std::vector<int>& cycle);

/// The k-cycle (a1 ... ak) as an element of S_m: a1 -> a2 -> ... -> ak -> a1.
Permutation permutation_from_cycle(int m, const std::vector<int>& cycle);

/// Text form used by the CLI and all file formats: "2,1,3" (1-based, comma separated).
std::string to_string(const Permutation& sigma);
Permutation parse_permutation(const std::string& text);

}  // namespace symloc
