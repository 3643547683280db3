#pragma once

#include <cstddef>
#include <deque>
#include <string>
#include <vector>

#include "subgrowth/error.hpp"
#include "subgrowth/group.hpp"
#include "subgrowth/rational.hpp"
#include "subgrowth/subgroups.hpp"

namespace subgrowth {

/// A transitive permutation representation, i.e. the coset action on G/U for
/// one conjugacy class of stabilizers U.
struct RepClass {
  std::size_t class_id = 0;
  std::size_t degree = 1;
  std::size_t aut_count = 1;
  std::size_t stabilizer = 0;  // index into the lattice's classes
};

/// Complete list of transitive representations of a group, in lattice order:
/// the trivial class first, the regular class last.
struct RepCatalog {
  FiniteGroup group;
  SubgroupLattice lattice;
  std::vector<RepClass> classes;

  std::size_t size() const { return classes.size(); }
  const SubgroupClass& stabilizer(std::size_t i) const { return lattice[classes[i].stabilizer]; }
};

inline RepCatalog build_catalog(const FiniteGroup& g, const Caps& caps = {}) {
  RepCatalog cat;
  cat.group = g;
  cat.lattice = subgroup_classes(g, caps);
  for (const auto& sc : cat.lattice.classes())
    cat.classes.push_back(RepClass{sc.class_id, sc.index, sc.aut_count, sc.class_id});
  return cat;
}

/// An injective homomorphism from an edge group into a vertex group,
/// determined by the images of the domain's generators.
class EmbeddingMap {
 public:
  EmbeddingMap() = default;

  /// Validates that the generator assignment extends to an injective
  /// homomorphism; the check runs over every edge of the domain's Cayley graph.
  EmbeddingMap(FiniteGroup domain, FiniteGroup codomain, std::vector<Permutation> generator_images)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(generator_images)) {
    const auto& gens = domain_.generator_indices();
    if (images_.size() != gens.size())
      throw InputError("embedding lists " + std::to_string(images_.size()) + " images for " +
                       std::to_string(gens.size()) + " generators");
    std::vector<Element> img_idx;
    for (std::size_t s = 0; s < images_.size(); ++s) {
      if (images_[s].degree() != codomain_.degree())
        throw InputError("image " + to_cycles(images_[s]) + " has wrong degree");
      auto e = codomain_.find(images_[s]);
      if (!e) throw InputError("image " + to_cycles(images_[s]) + " is not in the target group");
      img_idx.push_back(*e);
    }
    constexpr Element kUnset = 0xFFFF;
    map_.assign(domain_.order(), kUnset);
    map_[FiniteGroup::identity()] = FiniteGroup::identity();
    std::deque<Element> queue{FiniteGroup::identity()};
    while (!queue.empty()) {
      Element e = queue.front();
      queue.pop_front();
      for (std::size_t s = 0; s < gens.size(); ++s) {
        Element next = domain_.multiply(e, gens[s]);
        Element want = codomain_.multiply(map_[e], img_idx[s]);
        if (map_[next] == kUnset) {
          map_[next] = want;
          queue.push_back(next);
        } else if (map_[next] != want) {
          throw InputError("not a homomorphism: generator " + to_cycles(domain_.generators()[s]) + " -> " +
                           to_cycles(images_[s]));
        }
      }
    }
    std::vector<bool> hit(codomain_.order(), false);
    for (Element v : map_) {
      if (hit[v]) throw InputError("embedding is not injective");
      hit[v] = true;
    }
  }

  const FiniteGroup& domain() const { return domain_; }
  const FiniteGroup& codomain() const { return codomain_; }
  const std::vector<Permutation>& generator_images() const { return images_; }
  Element operator()(Element e) const { return map_[e]; }
  const std::vector<Element>& element_map() const { return map_; }

  /// Sorted image of the whole domain.
  ElementList image() const {
    ElementList out(map_.begin(), map_.end());
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  FiniteGroup domain_;
  FiniteGroup codomain_;
  std::vector<Permutation> images_;
  std::vector<Element> map_;
};

/// Inclusion of the subgroup generated by `gens` into `g`.
inline EmbeddingMap inclusion(const FiniteGroup& g, std::span<const Element> gens) {
  FiniteGroup sub = as_group(g, gens);
  return EmbeddingMap(sub, g, sub.generators());
}

/// M[j][i] = multiplicity of edge class j in the restriction of vertex class i.
struct RestrictionMatrix {
  std::size_t rows = 0;  // edge classes
  std::size_t cols = 0;  // vertex classes
  std::vector<std::size_t> data;

  std::size_t& at(std::size_t j, std::size_t i) { return data[j * cols + i]; }
  std::size_t at(std::size_t j, std::size_t i) const { return data[j * cols + i]; }
  std::vector<std::size_t> column(std::size_t i) const {
    std::vector<std::size_t> c(rows);
    for (std::size_t j = 0; j < rows; ++j) c[j] = at(j, i);
    return c;
  }
};

/// Restricts every transitive representation of the vertex group along `emb`
/// and decomposes it into orbits, each classified by the conjugacy class of
/// its point stabilizer pulled back into the edge group.
inline RestrictionMatrix restriction_matrix(const EmbeddingMap& emb, const RepCatalog& vcat, const RepCatalog& ecat) {
  if (emb.codomain().order() != vcat.group.order() || emb.domain().order() != ecat.group.order() ||
      emb.codomain().degree() != vcat.group.degree() || emb.domain().degree() != ecat.group.degree())
    throw InputError("embedding does not match the catalogs");
  const FiniteGroup& g = vcat.group;
  const FiniteGroup& e = ecat.group;
  RestrictionMatrix m{ecat.size(), vcat.size(), std::vector<std::size_t>(ecat.size() * vcat.size(), 0)};
  std::vector<Element> gen_images;
  for (Element s : e.generator_indices()) gen_images.push_back(emb(s));

  for (std::size_t i = 0; i < vcat.size(); ++i) {
    CosetAction act(g, vcat.stabilizer(i).representative);
    std::vector<bool> seen(act.degree(), false);
    for (std::size_t start = 0; start < act.degree(); ++start) {
      if (seen[start]) continue;
      // orbit of the embedded edge group through `start`
      std::vector<Point> orbit{static_cast<Point>(start)};
      seen[start] = true;
      for (std::size_t k = 0; k < orbit.size(); ++k)
        for (Element s : gen_images) {
          Point q = act.act(s, orbit[k]);
          if (!seen[q]) {
            seen[q] = true;
            orbit.push_back(q);
          }
        }
      ElementList stab;
      for (std::size_t a = 0; a < e.order(); ++a)
        if (act.act(emb(static_cast<Element>(a)), static_cast<Point>(start)) == start)
          stab.push_back(static_cast<Element>(a));
      auto j = ecat.lattice.class_of(stab);
      if (!j) throw Error("stabilizer missing from edge lattice");
      if (ecat.classes[*j].degree != orbit.size()) throw Error("orbit size does not match stabilizer index");
      ++m.at(*j, i);
    }
  }
  for (std::size_t i = 0; i < vcat.size(); ++i) {
    std::size_t deg = 0;
    for (std::size_t j = 0; j < ecat.size(); ++j) deg += m.at(j, i) * ecat.classes[j].degree;
    if (deg != vcat.classes[i].degree) throw Error("restriction changed the degree");
  }
  return m;
}

/// Number of fixed points of x on G/U: |G|·|[x]∩U| / (|U|·|[x]|).
inline Rational fixed_point_multiplicity(const FiniteGroup& g, const ElementList& u, Element x) {
  if (x >= g.order()) throw InputError("element not in group");
  ElementList cls = conjugacy_class(g, x);
  std::size_t meet = 0;
  for (Element y : cls) meet += is_member(u, y);
  Rational r(static_cast<unsigned long>(g.order() * meet), static_cast<unsigned long>(u.size() * cls.size()));
  r.canonicalize();
  return r;
}

inline Rational fixed_point_multiplicity(const FiniteGroup& g, const ElementList& u, const Permutation& x) {
  auto e = g.find(x);
  if (!e) throw InputError("element " + to_cycles(x) + " is not in the group");
  return fixed_point_multiplicity(g, u, *e);
}

}  // namespace subgrowth
