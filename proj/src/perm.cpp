#include "symloc/perm.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace symloc {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Transposition::Transposition(int x, int y) : a(std::min(x, y)), b(std::max(x, y)) {
  require(a >= 1 && a < b, "transposition needs two distinct values >= 1");
}

Permutation::Permutation(std::vector<int> one_line) : image_(std::move(one_line)) {
  const int m = size();
  require(m >= 1, "permutation needs at least one element");
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  for (int v : image_) {
    require(v >= 1 && v <= m, "one-line entry out of range 1..m");
    char& slot = seen[static_cast<std::size_t>(v - 1)];
    require(!slot, "one-line entry repeated");
    slot = 1;
  }
}

Permutation Permutation::identity(int m) {
  require(m >= 1, "group size must be >= 1");
  std::vector<int> img(static_cast<std::size_t>(m));
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::reverse(int m) {
  require(m >= 1, "group size must be >= 1");
  std::vector<int> img(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) img[static_cast<std::size_t>(i)] = m - i;
  return Permutation(std::move(img));
}

int Permutation::position_of(int value) const {
  require(value >= 1 && value <= size(), "value out of range 1..m");
  auto it = std::find(image_.begin(), image_.end(), value);
  assert(it != image_.end());
  return static_cast<int>(it - image_.begin()) + 1;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& f, const Permutation& g) {
  require(f.size() == g.size(), "cannot compose permutations of different sizes");
  std::vector<int> img(static_cast<std::size_t>(f.size()));
  for (int i = 1; i <= f.size(); ++i) img[static_cast<std::size_t>(i - 1)] = f(g(i));
  return Permutation(std::move(img));
}

int inversion_number(const Permutation& sigma) {
  int count = 0;
  const int m = sigma.size();
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (sigma(i) > sigma(j)) ++count;
  return count;
}

int length(const Permutation& sigma) { return inversion_number(sigma); }

Permutation apply_transposition(const Permutation& sigma, Transposition t, Side side) {
  require(t.b <= sigma.size(), "transposition out of range for this group size");
  std::vector<int> img = sigma.image();
  if (side == Side::Left) {
    for (int& v : img) {
      if (v == t.a)
        v = t.b;
      else if (v == t.b)
        v = t.a;
    }
  } else {
    std::swap(img[static_cast<std::size_t>(t.a - 1)], img[static_cast<std::size_t>(t.b - 1)]);
  }
  return Permutation(std::move(img));
}

std::vector<int> reduced_word(const Permutation& sigma) {
  // Sort sigma down to the identity by clearing the leftmost descent; the
  // word read back in reverse rebuilds sigma as s_{i1} ... s_{ik}.
  std::vector<int> img = sigma.image();
  const int m = sigma.size();
  std::vector<int> word;
  for (;;) {
    int descent = 0;
    for (int i = 1; i < m; ++i) {
      if (img[static_cast<std::size_t>(i - 1)] > img[static_cast<std::size_t>(i)]) {
        descent = i;
        break;
      }
    }
    if (descent == 0) break;
    std::swap(img[static_cast<std::size_t>(descent - 1)], img[static_cast<std::size_t>(descent)]);
    word.push_back(descent);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

Permutation compose_word(int m, std::span<const int> word) {
  require(m >= 1, "group size must be >= 1");
  std::vector<int> img(static_cast<std::size_t>(m));
  std::iota(img.begin(), img.end(), 1);
  for (int i : word) {
    require(i >= 1 && i < m, "generator index out of range 1..m-1");
    std::swap(img[static_cast<std::size_t>(i - 1)], img[static_cast<std::size_t>(i)]);
  }
  return Permutation(std::move(img));
}

std::vector<Transposition> cycle_to_transpositions(const std::vector<int>& cycle) {
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    require(cycle[i] >= 1, "cycle values must be >= 1");
    for (std::size_t j = i + 1; j < cycle.size(); ++j)
      require(cycle[i] != cycle[j], "cycle values must be distinct");
  }
  std::vector<Transposition> out;
  for (std::size_t k = cycle.size(); k >= 2; --k) out.emplace_back(cycle[0], cycle[k - 1]);
  return out;
}

Permutation permutation_from_cycle(int m, const std::vector<int>& cycle) {
  for (int v : cycle) require(v >= 1 && v <= m, "cycle value out of range 1..m");
  std::vector<int> img(static_cast<std::size_t>(m));
  std::iota(img.begin(), img.end(), 1);
  if (cycle.size() >= 2) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i];
      const int to = cycle[(i + 1) % cycle.size()];
      img[static_cast<std::size_t>(from - 1)] = to;
    }
  }
  return Permutation(std::move(img));  // ctor re-checks bijectivity, catching repeats
}

std::string to_string(const Permutation& sigma) {
  std::string out;
  for (int i = 1; i <= sigma.size(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(sigma(i));
  }
  return out;
}

Permutation parse_permutation(const std::string& text) {
  std::vector<int> img;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::size_t lo = pos;
    std::size_t hi = comma;
    while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
    while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) --hi;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + lo, text.data() + hi, value);
    if (ec != std::errc{} || ptr != text.data() + hi)
      throw std::invalid_argument("cannot parse permutation entry in '" + text + "'");
    img.push_back(value);
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return Permutation(std::move(img));
}

}  // namespace symloc
