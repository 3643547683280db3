#pragma once

#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "subgrowth/catalog.hpp"
#include "subgrowth/error.hpp"
#include "subgrowth/gog.hpp"
#include "subgrowth/ratlp.hpp"

namespace subgrowth {

/// Catalogs and restriction matrices of every vertex and edge of a graph,
/// plus the growth LP built from them.
struct GrowthModel {
  std::vector<RepCatalog> vertex_catalogs;
  std::vector<RepCatalog> edge_catalogs;
  std::vector<RestrictionMatrix> into_x;  // per edge: vertex x classes -> edge classes
  std::vector<RestrictionMatrix> into_y;
  std::vector<std::size_t> offset;        // first LP column of each vertex
  RationalLP lp;

  std::size_t variable(std::size_t v, std::size_t i) const { return offset[v] + i; }
};

namespace detail {
/// Groups with identical element lists share one catalog.
class CatalogCache {
 public:
  explicit CatalogCache(const Caps& caps) : caps_(caps) {}
  const RepCatalog& get(const FiniteGroup& g) {
    for (const auto& c : cache_)
      if (c.group.degree() == g.degree() && c.group.elements() == g.elements()) return c;
    cache_.push_back(build_catalog(g, caps_));
    return cache_.back();
  }

 private:
  Caps caps_;
  std::deque<RepCatalog> cache_;
};

/// Copy of `cat` re-targeted at `g`, which must have the same elements, so
/// embeddings validated against `g` line up with the catalog.
inline RepCatalog rebind(const RepCatalog& cat, const FiniteGroup& g) {
  RepCatalog out = cat;
  out.group = g;
  return out;
}
}  // namespace detail

/// Variables α_{v,i} for every vertex v and catalog class i. Constraints:
/// Σ_i n_{v,i} α_{v,i} = 1 per vertex and M_{e,x} α_x − M_{e,y} α_y = 0 per
/// edge. Objective Σ_e ½·1ᵀ(M_{e,x} α_x + M_{e,y} α_y) − Σ_v 1ᵀ α_v.
inline GrowthModel build_growth_model(const GraphOfGroups& g, const Caps& caps = {}) {
  GrowthModel m;
  detail::CatalogCache cache(caps);
  std::size_t nvars = 0;
  for (const auto& v : g.vertices()) {
    m.vertex_catalogs.push_back(detail::rebind(cache.get(v.group), v.group));
    m.offset.push_back(nvars);
    nvars += m.vertex_catalogs.back().size();
  }
  for (const auto& e : g.edges()) {
    m.edge_catalogs.push_back(detail::rebind(cache.get(e.group), e.group));
    m.into_x.push_back(restriction_matrix(e.into_x, m.vertex_catalogs[e.x], m.edge_catalogs.back()));
    m.into_y.push_back(restriction_matrix(e.into_y, m.vertex_catalogs[e.y], m.edge_catalogs.back()));
  }

  RationalLP& lp = m.lp;
  lp.c.assign(nvars, Rational(0));
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    const auto& cat = m.vertex_catalogs[v];
    std::vector<Rational> row(nvars, Rational(0));
    for (std::size_t i = 0; i < cat.size(); ++i) {
      row[m.variable(v, i)] = static_cast<unsigned long>(cat.classes[i].degree);
      lp.c[m.variable(v, i)] -= 1;
      lp.labels.push_back(g.vertices()[v].name + "." + std::to_string(i + 1));
    }
    lp.A.push_back(std::move(row));
    lp.b.push_back(1);
  }
  const Rational half(1, 2);
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& e = g.edges()[k];
    const auto& mx = m.into_x[k];
    const auto& my = m.into_y[k];
    for (std::size_t j = 0; j < mx.rows; ++j) {
      std::vector<Rational> row(nvars, Rational(0));
      for (std::size_t i = 0; i < mx.cols; ++i) row[m.variable(e.x, i)] += static_cast<unsigned long>(mx.at(j, i));
      for (std::size_t i = 0; i < my.cols; ++i) row[m.variable(e.y, i)] -= static_cast<unsigned long>(my.at(j, i));
      lp.A.push_back(std::move(row));
      lp.b.push_back(0);
    }
    for (std::size_t i = 0; i < mx.cols; ++i) {
      unsigned long s = 0;
      for (std::size_t j = 0; j < mx.rows; ++j) s += mx.at(j, i);
      lp.c[m.variable(e.x, i)] += half * s;
    }
    for (std::size_t i = 0; i < my.cols; ++i) {
      unsigned long s = 0;
      for (std::size_t j = 0; j < my.rows; ++j) s += my.at(j, i);
      lp.c[m.variable(e.y, i)] += half * s;
    }
  }
  return m;
}

inline RationalLP build_growth_lp(const GraphOfGroups& g, const Caps& caps = {}) {
  return build_growth_model(g, caps).lp;
}

/// α_{v,i}, grouped by vertex.
using TypeVector = std::vector<std::vector<Rational>>;

inline TypeVector split_point(const GrowthModel& m, const std::vector<Rational>& point) {
  TypeVector alpha;
  for (std::size_t v = 0; v < m.vertex_catalogs.size(); ++v)
    alpha.emplace_back(point.begin() + static_cast<std::ptrdiff_t>(m.offset[v]),
                       point.begin() + static_cast<std::ptrdiff_t>(m.offset[v] + m.vertex_catalogs[v].size()));
  return alpha;
}

/// Induced edge-side multiplicities λ = M α.
inline std::vector<Rational> induced(const RestrictionMatrix& mat, const std::vector<Rational>& alpha) {
  std::vector<Rational> lambda(mat.rows, Rational(0));
  for (std::size_t j = 0; j < mat.rows; ++j)
    for (std::size_t i = 0; i < mat.cols; ++i) lambda[j] += static_cast<unsigned long>(mat.at(j, i)) * alpha[i];
  return lambda;
}

/// The point giving every vertex group only regular orbits: α_{v,reg} = 1/|G_v|.
inline std::vector<Rational> all_regular_point(const GrowthModel& m) {
  std::vector<Rational> x(m.lp.cols(), Rational(0));
  for (std::size_t v = 0; v < m.vertex_catalogs.size(); ++v) {
    const auto& cat = m.vertex_catalogs[v];
    x[m.variable(v, cat.size() - 1)] = Rational(1, cat.group.order());
  }
  return x;
}

struct GrowthReport {
  Rational mu;
  Rational chi;
  Rational mu_free;
  TypeVector optimizer;
  std::vector<Rational> sigma;  // per vertex Σ_i α_{v,i}
  std::vector<Rational> tau;    // per edge Σ_j λ_{e,j}
  std::size_t variables = 0;
  std::size_t constraints = 0;
  std::size_t pivots = 0;
  std::size_t redundant_rows = 0;
  std::string dominant;
  std::optional<Rational> expected_mu;

  bool expected_mismatch() const { return expected_mu && *expected_mu != mu; }
};

inline std::string subgroup_generators_text(const SubgroupLattice& lat, const SubgroupClass& sc) {
  if (sc.order == lat.group().order() && !lat.group().label().empty()) return lat.group().label();
  std::string s = "<";
  bool first = true;
  for (Element e : sc.generators) {
    if (e == FiniteGroup::identity()) continue;
    s += (first ? "" : ", ") + to_cycles(lat.group().element(e));
    first = false;
  }
  return first ? "1" : s + ">";
}

/// μ(Γ) as the optimum of the growth LP, with the optimizer and per-vertex and
/// per-edge exponents.
inline GrowthReport mu(const GraphOfGroups& g, const Caps& caps = {}, std::ostream* dump = nullptr) {
  GrowthModel m = build_growth_model(g, caps);
  if (dump) {
    *dump << "# constraints\n";
    write_lp_tsv(m.lp, *dump);
    *dump << "# final tableau\n";
  }
  LPSolution sol = solve_max(m.lp, dump);
  if (sol.status != LPStatus::optimal)
    throw Error(std::string("growth LP is ") + to_string(sol.status) + "; the all-regular point should be feasible");
  GrowthReport r;
  EulerData eu = euler_characteristic(g);
  r.mu = sol.value;
  r.chi = eu.chi;
  r.mu_free = eu.mu_free;
  r.optimizer = split_point(m, sol.point);
  r.variables = m.lp.cols();
  r.constraints = m.lp.rows();
  r.pivots = sol.pivots;
  r.redundant_rows = sol.redundant_rows;
  r.expected_mu = g.expected_mu;
  for (const auto& a : r.optimizer) r.sigma.push_back(std::accumulate(a.begin(), a.end(), Rational(0)));
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    auto lx = induced(m.into_x[k], r.optimizer[g.edges()[k].x]);
    auto ly = induced(m.into_y[k], r.optimizer[g.edges()[k].y]);
    if (lx != ly) throw Error("optimizer violates admissibility");
    r.tau.push_back(std::accumulate(lx.begin(), lx.end(), Rational(0)));
  }
  Rational check = std::accumulate(r.tau.begin(), r.tau.end(), Rational(0)) -
                   std::accumulate(r.sigma.begin(), r.sigma.end(), Rational(0));
  if (check != r.mu) throw Error("optimizer value disagrees with tau - sigma");
  if (r.mu < r.mu_free) throw Error("optimum below the all-regular value");

  std::ostringstream os;
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    const auto& cat = m.vertex_catalogs[v];
    os << g.vertices()[v].name << ":";
    for (std::size_t i = 0; i < cat.size(); ++i) {
      if (sgn(r.optimizer[v][i]) == 0) continue;
      os << " [" << i + 1 << "] " << subgroup_generators_text(cat.lattice, cat.stabilizer(i)) << " index "
         << cat.classes[i].degree << " weight " << r.optimizer[v][i].get_str() << ";";
    }
    os << "\n";
  }
  r.dominant = os.str();
  return r;
}

// ---------------------------------------------------------------------------
// Closed forms for C_p amalgams

namespace detail {
inline std::size_t prime_order_of(const FiniteGroup& g, Element x) {
  std::size_t p = g.element_order(x);
  if (!is_prime(p)) throw InputError("element " + to_cycles(g.element(x)) + " does not have prime order");
  if (g.order() <= 2 * p) throw InputError("requires |G| > 2p");
  return p;
}
}  // namespace detail

/// 1/p + |[x]∩H|(p−1)/(|[x]|p) − 2/(G:H)
inline Rational cyclic_amalgam_value(const FiniteGroup& g, Element x, const ElementList& h) {
  std::size_t p = detail::prime_order_of(g, x);
  ElementList cls = conjugacy_class(g, x);
  std::size_t meet = 0;
  for (Element y : cls) meet += is_member(h, y);
  Rational v = make_rational(1, p) + make_rational(meet * (p - 1), cls.size() * p) - make_rational(2 * h.size(), g.order());
  v.canonicalize();
  return v;
}

struct CyclicAmalgamResult {
  Rational value;
  std::size_t argmax = 0;  // class id in the lattice
};

/// μ(G ∗_⟨x⟩ G) for x of prime order: the maximum of cyclic_amalgam_value
/// over subgroup classes (the value is class-invariant). The first maximal
/// class wins.
inline CyclicAmalgamResult cyclic_amalgam_mu(const SubgroupLattice& lat, Element x) {
  detail::prime_order_of(lat.group(), x);
  CyclicAmalgamResult best;
  bool have = false;
  for (const auto& sc : lat.classes()) {
    Rational v = cyclic_amalgam_value(lat.group(), x, sc.representative);
    if (!have || v > best.value) {
      best = CyclicAmalgamResult{v, sc.class_id};
      have = true;
    }
  }
  return best;
}

inline CyclicAmalgamResult cyclic_amalgam_mu(const FiniteGroup& g, const Permutation& x, const Caps& caps = {}) {
  Element e = g.index_of(x);
  detail::prime_order_of(g, e);
  return cyclic_amalgam_mu(subgroup_classes(g, caps), e);
}

/// True iff |N_G(⟨x⟩)| <= 2p, the condition for μ(G ∗_⟨x⟩ G) = −χ.
inline bool chi_sharp(const FiniteGroup& g, const Permutation& x) {
  Element e = g.index_of(x);
  std::size_t p = detail::prime_order_of(g, e);
  Element gen[] = {e};
  return normalizer(g, close_subgroup(g, gen)).size() <= 2 * p;
}

inline int family_delta(std::size_t p, std::size_t l) { return (p == 2 && l % 2 == 1) ? 1 : 0; }

/// Closed-form value for Γ_{p,k,ℓ} including the listed exceptional triples.
inline Rational family_mu(std::size_t p, std::size_t k, std::size_t l, FamilyVariant variant) {
  check_family(p, k, l, variant);
  const bool e252 = p == 2 && k == 5 && l == 2;
  const bool e372 = p == 3 && k == 7 && l == 2;
  Rational v;
  if (variant == FamilyVariant::symmetric) {
    if (e252) return Rational(1, 2);
    if (e372) return Rational(2, 5);
    v = 1 - make_rational((p - 1) * l + 1 + static_cast<std::size_t>(family_delta(p, l)), k);
  } else {
    if (e252 || e372) return Rational(1, 3);
    v = 1 - make_rational((p - 1) * l + 2, k);
  }
  v.canonicalize();
  return v;
}

inline bool is_family_exception(std::size_t p, std::size_t k, std::size_t l) {
  return (p == 2 && k == 5 && l == 2) || (p == 3 && k == 7 && l == 2);
}

// ---------------------------------------------------------------------------
// Realizing a prescribed rational

struct RealizationPlan {
  Rational target;
  std::size_t r = 0;  // integer part
  bool free_only = false;
  std::size_t free_rank = 0;  // rank of the free factor
  std::size_t p = 0, k = 0, l = 0;
  FamilyVariant variant = FamilyVariant::symmetric;
  int delta = 0;
  Rational predicted_mu;

  /// Graph-of-groups text realizing the plan.
  std::string gog_text() const {
    if (free_only) {
      std::ostringstream os;
      os << "vertex v = Trivial\n";
      for (std::size_t i = 1; i <= free_rank; ++i) os << "edge f" << i << " v v { group Trivial; left: ; right: ; }\n";
      return os.str();
    }
    return family_gog_text(p, k, l, variant, free_rank);
  }

  std::string line() const {
    std::ostringstream os;
    os << "target=" << target.get_str() << " r=" << r;
    if (free_only) {
      os << " free_group=" << free_rank;
    } else {
      os << " p=" << p << " k=" << k << " l=" << l
         << " variant=" << (variant == FamilyVariant::symmetric ? "symmetric" : "alternating") << " delta=" << delta
         << " free_rank=" << free_rank;
    }
    os << " predicted_mu=" << predicted_mu.get_str();
    return os.str();
  }
};

/// Chooses Γ_{p,k,ℓ} ∗ F_r with growth coefficient a/b. The prime search
/// skips primes whose triple is an exceptional one.
inline RealizationPlan realize(long a, long b) {
  if (a < 0 || b < 1) throw InputError("realize requires a >= 0 and b >= 1");
  if (std::gcd(a, b) != 1) throw InputError("realize requires gcd(a, b) = 1");
  RealizationPlan plan;
  plan.target = make_rational(a, b);
  plan.r = static_cast<std::size_t>(a / b);
  const std::size_t fa = static_cast<std::size_t>(a % b);
  const std::size_t fb = static_cast<std::size_t>(b);
  if (fa == 0) {
    plan.free_only = true;
    plan.free_rank = plan.r + 1;
    plan.predicted_mu = Rational(static_cast<long>(plan.free_rank) - 1);
    return plan;
  }
  plan.free_rank = plan.r;
  const std::size_t m = fb - fa;
  const bool odd = m % 2 == 1;
  // With b−a even, b is odd because gcd(a, b) = 1.
  for (std::size_t p = fb + 1; p < 1000000; ++p) {
    if (!is_prime(p)) continue;
    if (std::gcd(p - 1, m) != (odd ? 1u : 2u)) continue;
    const std::size_t residue = odd ? 1 : 2;  // (p−1)ℓ ≡ −residue (mod m)
    std::optional<std::size_t> l;
    for (std::size_t cand = 1; cand <= std::max<std::size_t>(1, m - 1); ++cand)
      if (((p - 1) * cand + residue) % m == 0) {
        l = cand;
        break;
      }
    if (!l) continue;
    std::size_t num = fb * (*l) * (p - 1) + residue * fb;
    if (num % m != 0) continue;
    std::size_t k = num / m;
    if (k < (*l) * p + 2 || is_family_exception(p, k, *l)) continue;
    plan.p = p;
    plan.k = k;
    plan.l = *l;
    plan.variant = odd ? FamilyVariant::symmetric : FamilyVariant::alternating;
    plan.delta = odd ? family_delta(p, *l) : 0;
    plan.predicted_mu = Rational(static_cast<long>(plan.r)) + family_mu(p, k, *l, plan.variant);
    plan.predicted_mu.canonicalize();
    if (plan.predicted_mu != plan.target) throw Error("realize: plan does not hit the target");
    return plan;
  }
  throw Error("realize: no admissible prime found");
}

}  // namespace subgrowth
