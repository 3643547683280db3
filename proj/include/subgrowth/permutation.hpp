#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "subgrowth/error.hpp"

namespace subgrowth {

/// Points are 0-based internally and 1-based in cycle notation.
using Point = std::uint16_t;

/// A bijection of {0, ..., degree-1}, stored as its image sequence.
class Permutation {
 public:
  Permutation() : images_{0} {}

  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    if (images_.empty()) throw InputError("permutation of degree 0");
    std::vector<bool> seen(images_.size(), false);
    for (Point p : images_) {
      if (p >= images_.size() || seen[p]) throw InputError("image sequence is not a bijection");
      seen[p] = true;
    }
  }

  static Permutation identity(std::size_t degree) {
    if (degree == 0) throw InputError("permutation of degree 0");
    std::vector<Point> im(degree);
    std::iota(im.begin(), im.end(), Point{0});
    return Permutation(std::move(im), Unchecked{});
  }

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  Permutation inverse() const {
    std::vector<Point> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
    return Permutation(std::move(inv), Unchecked{});
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  std::size_t fixed_points() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) n += images_[i] == i;
    return n;
  }

  /// Cycle lengths, including fixed points as 1-cycles.
  std::vector<std::size_t> cycle_type() const {
    std::vector<std::size_t> lengths;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t s = 0; s < images_.size(); ++s) {
      if (seen[s]) continue;
      std::size_t len = 0;
      for (std::size_t x = s; !seen[x]; x = images_[x]) {
        seen[x] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
  }

  std::size_t order() const {
    std::size_t o = 1;
    for (std::size_t len : cycle_type()) o = std::lcm(o, len);
    return o;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation& p, const Permutation& q);

  std::vector<Point> images_;
};

/// (p∘q)(x) = p(q(x)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw InputError("degree mismatch: " + std::to_string(p.degree()) + " vs " + std::to_string(q.degree()));
  std::vector<Point> im(p.degree());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = p.images_[q.images_[i]];
  return Permutation(std::move(im), Permutation::Unchecked{});
}

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Point x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Parses cycle notation such as `(1 2)(3 4)` or `()`. Points are 1-based and
/// may be separated by blanks or commas. A product of overlapping cycles is
/// evaluated right to left, like `compose`.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0) throw InputError("permutation of degree 0");
  Permutation result = Permutation::identity(degree);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw InputError("empty permutation");
  std::vector<Permutation> cycles;
  while (i < text.size()) {
    if (text[i] != '(') throw InputError("expected '(' in cycle notation '" + std::string(text) + "'");
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i >= text.size()) throw InputError("unterminated cycle in '" + std::string(text) + "'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw InputError("unexpected character '" + std::string(1, text[i]) + "' in cycle notation");
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::size_t>(text[i] - '0');
        if (v > 65535) throw InputError("point out of range");
        ++i;
      }
      if (v < 1 || v > degree)
        throw InputError("point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      Point p = static_cast<Point>(v - 1);
      if (std::find(cycle.begin(), cycle.end(), p) != cycle.end())
        throw InputError("point " + std::to_string(v) + " repeated within a cycle");
      cycle.push_back(p);
    }
    std::vector<Point> im(degree);
    std::iota(im.begin(), im.end(), Point{0});
    for (std::size_t k = 0; k < cycle.size(); ++k) im[cycle[k]] = cycle[(k + 1) % cycle.size()];
    cycles.emplace_back(std::move(im));
    skip_ws();
  }
  for (const auto& c : cycles) result = compose(result, c);
  return result;
}

/// Disjoint-cycle notation, 1-based, fixed points omitted; `()` for identity.
inline std::string to_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t s = 0; s < p.degree(); ++s) {
    if (seen[s] || p(static_cast<Point>(s)) == s) continue;
    out += '(';
    bool first = true;
    for (std::size_t x = s; !seen[x]; x = p(static_cast<Point>(x))) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace subgrowth
