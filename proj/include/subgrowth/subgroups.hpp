#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "subgrowth/error.hpp"
#include "subgrowth/group.hpp"
#include "subgrowth/rational.hpp"

namespace subgrowth {

/// Sorted element indices of a subgroup of some parent group. Doubles as the
/// canonical key of that subgroup.
using ElementList = std::vector<Element>;

struct ElementListHash {
  std::size_t operator()(const ElementList& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Element x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Subgroup generated by `gens` inside `g`, as a sorted element list.
inline ElementList close_subgroup(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<bool> in(g.order(), false);
  ElementList elems{FiniteGroup::identity()};
  in[FiniteGroup::identity()] = true;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (Element s : gens) {
      Element p = g.multiply(elems[i], s);
      if (!in[p]) {
        in[p] = true;
        elems.push_back(p);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

/// Sorted image of a subgroup under x -> a^{-1} x a.
inline ElementList conjugate_subgroup(const FiniteGroup& g, const ElementList& u, Element a) {
  ElementList out;
  out.reserve(u.size());
  for (Element x : u) out.push_back(g.conjugate(x, a));
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_member(const ElementList& u, Element x) { return std::binary_search(u.begin(), u.end(), x); }

inline ElementList conjugacy_class(const FiniteGroup& g, Element x) {
  if (x >= g.order()) throw InputError("element index out of range");
  std::vector<bool> in(g.order(), false);
  for (Element a = 0; a < g.order(); ++a) in[g.conjugate(x, a)] = true;
  ElementList out;
  for (std::size_t i = 0; i < in.size(); ++i)
    if (in[i]) out.push_back(static_cast<Element>(i));
  return out;
}

inline ElementList centralizer(const FiniteGroup& g, Element x) {
  if (x >= g.order()) throw InputError("element index out of range");
  ElementList out;
  for (std::size_t a = 0; a < g.order(); ++a) {
    auto e = static_cast<Element>(a);
    if (g.multiply(e, x) == g.multiply(x, e)) out.push_back(e);
  }
  return out;
}

inline ElementList normalizer(const FiniteGroup& g, const ElementList& u) {
  for (Element x : u)
    if (x >= g.order()) throw InputError("subgroup element outside the group");
  ElementList out;
  for (std::size_t a = 0; a < g.order(); ++a) {
    auto e = static_cast<Element>(a);
    bool keeps = std::all_of(u.begin(), u.end(), [&](Element x) { return is_member(u, g.conjugate(x, e)); });
    if (keeps) out.push_back(e);
  }
  return out;
}

/// The elements of `sub` as a stand-alone FiniteGroup on the parent's points.
inline FiniteGroup as_group(const FiniteGroup& parent, std::span<const Element> gens) {
  std::vector<Permutation> perms;
  for (Element e : gens)
    if (e != FiniteGroup::identity()) perms.push_back(parent.element(e));
  return generate(perms, parent.degree(), parent.order());
}

/// One conjugacy class of subgroups.
struct SubgroupClass {
  std::size_t class_id = 0;
  ElementList representative;  // lexicographically smallest member
  ElementList generators;      // generate `representative`
  std::size_t order = 1;
  std::size_t index = 1;
  std::size_t normalizer_order = 1;
  std::size_t aut_count = 1;  // (N:U), the automorphism count of the G-set G/U
  std::size_t class_size = 1;
};

/// All subgroups of a group, grouped into conjugacy classes. Classes are
/// ordered by descending subgroup order, then by representative key.
class SubgroupLattice {
 public:
  SubgroupLattice() = default;

  const FiniteGroup& group() const { return group_; }
  const std::vector<SubgroupClass>& classes() const { return classes_; }
  const SubgroupClass& operator[](std::size_t i) const { return classes_[i]; }
  std::size_t size() const { return classes_.size(); }
  std::size_t subgroup_count() const { return class_of_.size(); }

  std::optional<std::size_t> class_of(const ElementList& sorted_elements) const {
    auto it = class_of_.find(sorted_elements);
    if (it == class_of_.end()) return std::nullopt;
    return it->second;
  }

  /// Class containing the subgroup generated by `gens`.
  std::size_t class_of_generated(std::span<const Permutation> gens) const {
    std::vector<Element> idx;
    for (const auto& p : gens) idx.push_back(group_.index_of(p));
    auto c = class_of(close_subgroup(group_, idx));
    if (!c) throw Error("subgroup missing from lattice");
    return *c;
  }

  const std::vector<ElementList>& members(std::size_t class_id) const { return members_[class_id]; }

  std::vector<ElementList> all_subgroups() const {
    std::vector<ElementList> out;
    for (const auto& m : members_) out.insert(out.end(), m.begin(), m.end());
    return out;
  }

  friend SubgroupLattice subgroup_classes(const FiniteGroup& g, const Caps& caps);

 private:
  FiniteGroup group_;
  std::vector<SubgroupClass> classes_;
  std::vector<std::vector<ElementList>> members_;
  std::unordered_map<ElementList, std::size_t, ElementListHash> class_of_;
};

/// Enumerates subgroups up to conjugacy: starting from the trivial subgroup,
/// each class representative is joined with every cyclic subgroup of
/// prime-power order; new subgroups are closed and deduplicated by element
/// set, and each new class is expanded into its members by conjugation.
/// Every subgroup is a chain of such joins, and conjugating a chain
/// conjugates its end, so representatives suffice.
inline SubgroupLattice subgroup_classes(const FiniteGroup& g, const Caps& caps = {}) {
  if (g.order() > caps.max_subgroup_order)
    throw CapExceeded("subgroup enumeration cap exceeded: group order " + std::to_string(g.order()) + " > " +
                      std::to_string(caps.max_subgroup_order));

  // Prime-power cyclic subgroups, one generator each.
  std::vector<Element> candidates;
  {
    std::unordered_map<ElementList, bool, ElementListHash> seen;
    for (std::size_t a = 1; a < g.order(); ++a) {
      auto e = static_cast<Element>(a);
      std::size_t o = g.element_order(e);
      std::size_t q = o;
      std::size_t p = 2;
      while (q % p != 0) ++p;
      while (q % p == 0) q /= p;
      if (q != 1) continue;
      Element gen[] = {e};
      if (seen.emplace(close_subgroup(g, gen), true).second) candidates.push_back(e);
    }
  }

  struct Found {
    ElementList gens;
    std::vector<ElementList> members;
    std::vector<Element> conjugators;  // members[i] = found^{conjugators[i]}
  };
  std::vector<Found> found;
  std::unordered_map<ElementList, std::size_t, ElementListHash> class_of;

  auto add_class = [&](const ElementList& k, ElementList gens) {
    if (class_of.contains(k)) return;
    Found f;
    f.gens = std::move(gens);
    std::size_t id = found.size();
    for (std::size_t a = 0; a < g.order(); ++a) {
      auto e = static_cast<Element>(a);
      ElementList c = conjugate_subgroup(g, k, e);
      if (class_of.emplace(c, id).second) {
        f.members.push_back(std::move(c));
        f.conjugators.push_back(e);
      }
    }
    found.push_back(std::move(f));
  };

  add_class(ElementList{FiniteGroup::identity()}, {});
  for (std::size_t qi = 0; qi < found.size(); ++qi) {
    const ElementList rep = found[qi].members.front();
    const ElementList rep_gens = found[qi].gens;
    for (Element c : candidates) {
      if (is_member(rep, c)) continue;
      ElementList gens = rep_gens;
      gens.push_back(c);
      ElementList k = close_subgroup(g, gens);
      if (!class_of.contains(k)) add_class(k, std::move(gens));
    }
  }

  SubgroupLattice lat;
  lat.group_ = g;
  std::vector<std::size_t> perm(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) {
    auto& f = found[i];
    std::size_t best = 0;
    for (std::size_t m = 1; m < f.members.size(); ++m)
      if (f.members[m] < f.members[best]) best = m;
    SubgroupClass sc;
    sc.representative = f.members[best];
    for (Element x : f.gens) sc.generators.push_back(g.conjugate(x, f.conjugators[best]));
    sc.order = sc.representative.size();
    sc.index = g.order() / sc.order;
    sc.class_size = f.members.size();
    sc.normalizer_order = g.order() / sc.class_size;
    sc.aut_count = sc.normalizer_order / sc.order;
    std::sort(f.members.begin(), f.members.end());
    lat.classes_.push_back(std::move(sc));
    lat.members_.push_back(std::move(f.members));
    perm[i] = i;
  }
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = lat.classes_[a];
    const auto& y = lat.classes_[b];
    if (x.order != y.order) return x.order > y.order;
    return x.representative < y.representative;
  });
  std::vector<SubgroupClass> classes;
  std::vector<std::vector<ElementList>> members;
  std::vector<std::size_t> new_id(found.size());
  for (std::size_t pos = 0; pos < perm.size(); ++pos) {
    new_id[perm[pos]] = pos;
    classes.push_back(std::move(lat.classes_[perm[pos]]));
    classes.back().class_id = pos;
    members.push_back(std::move(lat.members_[perm[pos]]));
  }
  lat.classes_ = std::move(classes);
  lat.members_ = std::move(members);
  for (auto& [key, id] : class_of) id = new_id[id];
  lat.class_of_ = std::move(class_of);
  return lat;
}

inline std::vector<ElementList> all_subgroups(const FiniteGroup& g, const Caps& caps = {}) {
  return subgroup_classes(g, caps).all_subgroups();
}

/// Left action of G on the cosets aU; point 0 is U itself.
class CosetAction {
 public:
  CosetAction(const FiniteGroup& g, const ElementList& u) : group_(g) {
    if (u.empty() || u.front() != FiniteGroup::identity()) throw InputError("not a subgroup");
    coset_of_.assign(g.order(), kNone);
    for (std::size_t a = 0; a < g.order(); ++a) {
      if (coset_of_[a] != kNone) continue;
      auto e = static_cast<Element>(a);
      auto id = static_cast<Element>(reps_.size());
      reps_.push_back(e);
      for (Element x : u) coset_of_[g.multiply(e, x)] = id;
    }
    if (reps_.size() * u.size() != g.order()) throw InputError("not a subgroup");
  }

  std::size_t degree() const { return reps_.size(); }
  Element coset_of(Element a) const { return coset_of_[a]; }
  Element representative(Point c) const { return reps_[c]; }
  Point act(Element g, Point c) const { return static_cast<Point>(coset_of_[group_.multiply(g, reps_[c])]); }

  Permutation image(Element g) const {
    std::vector<Point> im(degree());
    for (std::size_t c = 0; c < im.size(); ++c) im[c] = act(g, static_cast<Point>(c));
    return Permutation(std::move(im));
  }

  std::vector<Permutation> images() const {
    std::vector<Permutation> out;
    out.reserve(group_.order());
    for (std::size_t a = 0; a < group_.order(); ++a) out.push_back(image(static_cast<Element>(a)));
    return out;
  }

 private:
  static constexpr Element kNone = 0xFFFF;
  FiniteGroup group_;
  std::vector<Element> coset_of_;
  std::vector<Element> reps_;
};

inline CosetAction coset_action(const SubgroupLattice& lat, const SubgroupClass& u) {
  return CosetAction(lat.group(), u.representative);
}

}  // namespace subgrowth
