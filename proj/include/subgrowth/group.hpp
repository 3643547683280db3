#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "subgrowth/error.hpp"
#include "subgrowth/permutation.hpp"

namespace subgrowth {

/// Index of an element within FiniteGroup::elements().
using Element = std::uint16_t;

/// Groups up to this order carry a full multiplication table.
inline constexpr std::size_t kTableCap = 5040;

namespace detail {
struct GroupData {
  std::size_t degree = 1;
  std::string label;
  std::vector<Permutation> generators;
  std::vector<Element> generator_indices;
  std::vector<Permutation> elements;  // lexicographic on image sequences
  std::vector<Element> inverses;
  std::vector<Element> table;  // order*order, row-major; empty above kTableCap
  std::unordered_map<Permutation, Element, PermutationHash> index;
};
}  // namespace detail

/// An explicit permutation group with its full element list. Immutable;
/// copies share the underlying data.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(make_trivial()) {}

  std::size_t degree() const { return data_->degree; }
  std::size_t order() const { return data_->elements.size(); }
  const std::string& label() const { return data_->label; }
  const std::vector<Permutation>& generators() const { return data_->generators; }
  const std::vector<Element>& generator_indices() const { return data_->generator_indices; }
  const std::vector<Permutation>& elements() const { return data_->elements; }
  const Permutation& element(Element e) const { return data_->elements[e]; }

  /// The identity is lexicographically smallest, hence always index 0.
  static constexpr Element identity() { return 0; }

  std::optional<Element> find(const Permutation& p) const {
    auto it = data_->index.find(p);
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const Permutation& p) const { return find(p).has_value(); }
  Element index_of(const Permutation& p) const {
    auto e = find(p);
    if (!e) throw InputError("element " + to_cycles(p) + " is not in the group");
    return *e;
  }

  Element multiply(Element a, Element b) const {
    if (!data_->table.empty()) return data_->table[std::size_t{a} * order() + b];
    return data_->index.at(compose(data_->elements[a], data_->elements[b]));
  }
  Element inverse(Element a) const { return data_->inverses[a]; }
  /// a^{-1} x a
  Element conjugate(Element x, Element a) const { return multiply(inverse(a), multiply(x, a)); }

  std::size_t element_order(Element a) const {
    std::size_t k = 1;
    for (Element p = a; p != identity(); p = multiply(p, a)) ++k;
    return k;
  }

  friend FiniteGroup generate(std::span<const Permutation> gens, std::size_t degree, std::size_t max_order,
                              std::string label);

 private:
  explicit FiniteGroup(std::shared_ptr<const detail::GroupData> d) : data_(std::move(d)) {}
  static std::shared_ptr<const detail::GroupData> make_trivial();

  std::shared_ptr<const detail::GroupData> data_;
};

/// Closure of `gens` under composition. Throws CapExceeded when the closure
/// would exceed `max_order` elements.
inline FiniteGroup generate(std::span<const Permutation> gens, std::size_t degree, std::size_t max_order = 10000,
                            std::string label = {}) {
  if (degree == 0) throw InputError("group of degree 0");
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw InputError("generator " + to_cycles(g) + " has degree " + std::to_string(g.degree()) + ", expected " +
                       std::to_string(degree));
  max_order = std::min<std::size_t>(max_order, 65535);

  auto data = std::make_shared<detail::GroupData>();
  data->degree = degree;
  data->label = std::move(label);
  data->generators.assign(gens.begin(), gens.end());

  std::unordered_map<Permutation, Element, PermutationHash> seen;
  std::vector<Permutation> found{Permutation::identity(degree)};
  seen.emplace(found[0], 0);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& g : gens) {
      Permutation p = compose(found[i], g);
      if (seen.contains(p)) continue;
      if (found.size() >= max_order)
        throw CapExceeded("group too large: more than " + std::to_string(max_order) + " elements");
      seen.emplace(p, 0);
      found.push_back(std::move(p));
    }
  }
  std::sort(found.begin(), found.end());
  data->elements = std::move(found);
  const std::size_t n = data->elements.size();
  data->index.reserve(n);
  for (std::size_t i = 0; i < n; ++i) data->index.emplace(data->elements[i], static_cast<Element>(i));
  data->inverses.resize(n);
  for (std::size_t i = 0; i < n; ++i) data->inverses[i] = data->index.at(data->elements[i].inverse());
  for (const auto& g : gens) data->generator_indices.push_back(data->index.at(g));
  if (n <= kTableCap) {
    data->table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        data->table[a * n + b] = data->index.at(compose(data->elements[a], data->elements[b]));
  }
  return FiniteGroup(std::move(data));
}

inline std::shared_ptr<const detail::GroupData> FiniteGroup::make_trivial() {
  static const std::shared_ptr<const detail::GroupData> trivial = [] {
    auto d = std::make_shared<detail::GroupData>();
    d->degree = 1;
    d->label = "Trivial";
    d->elements.push_back(Permutation::identity(1));
    d->inverses.push_back(0);
    d->table.push_back(0);
    d->index.emplace(d->elements[0], 0);
    return d;
  }();
  return trivial;
}

/// Permutation on `degree` points given by 0-based cycles.
inline Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> im(degree);
  for (std::size_t i = 0; i < degree; ++i) im[i] = static_cast<Point>(i);
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) im[c[k]] = c[(k + 1) % c.size()];
  return Permutation(std::move(im));
}

inline FiniteGroup trivial_group(std::size_t degree = 1) {
  return generate({}, degree, 1, "Trivial");
}

inline FiniteGroup symmetric_group(std::size_t k, std::size_t max_order = 10000) {
  std::string label = "Sym(" + std::to_string(k) + ")";
  if (k <= 1) return generate({}, std::max<std::size_t>(k, 1), 1, label);
  std::vector<Point> all(k);
  for (std::size_t i = 0; i < k; ++i) all[i] = static_cast<Point>(i);
  std::vector<Permutation> gens{from_cycles(k, {{0, 1}})};
  if (k > 2) gens.push_back(from_cycles(k, {all}));
  return generate(gens, k, max_order, label);
}

inline FiniteGroup alternating_group(std::size_t k, std::size_t max_order = 10000) {
  std::string label = "Alt(" + std::to_string(k) + ")";
  if (k <= 2) return generate({}, std::max<std::size_t>(k, 1), 1, label);
  std::vector<Permutation> gens{from_cycles(k, {{0, 1, 2}})};
  if (k > 3) {
    // An odd-length cycle on all points, or on the last k-1 points.
    std::vector<Point> cyc;
    for (std::size_t i = (k % 2 == 1 ? 0 : 1); i < k; ++i) cyc.push_back(static_cast<Point>(i));
    gens.push_back(from_cycles(k, {cyc}));
  }
  return generate(gens, k, max_order, label);
}

inline FiniteGroup cyclic_group(std::size_t n) {
  std::string label = "Cyc(" + std::to_string(n) + ")";
  if (n <= 1) return generate({}, 1, 1, label);
  std::vector<Point> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Point>(i);
  std::vector<Permutation> gens{from_cycles(n, {all})};
  return generate(gens, n, n, label);
}

/// Dihedral group of order 2n acting on the n vertices of a regular n-gon.
inline FiniteGroup dihedral_group(std::size_t n) {
  if (n < 3) throw InputError("Dih(n) requires n >= 3");
  std::vector<Point> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Point>(i);
  std::vector<std::vector<Point>> refl;
  for (std::size_t i = 1; i < n - i; ++i) refl.push_back({static_cast<Point>(i), static_cast<Point>(n - i)});
  std::vector<Permutation> gens{from_cycles(n, {all}), from_cycles(n, refl)};
  return generate(gens, n, 2 * n, "Dih(" + std::to_string(n) + ")");
}

inline FiniteGroup klein_four() {
  std::vector<Permutation> gens{from_cycles(4, {{0, 1}, {2, 3}}), from_cycles(4, {{0, 2}, {1, 3}})};
  return generate(gens, 4, 4, "Klein4");
}

}  // namespace subgrowth
