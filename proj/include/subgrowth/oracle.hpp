#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "subgrowth/catalog.hpp"
#include "subgrowth/error.hpp"
#include "subgrowth/gog.hpp"
#include "subgrowth/growth.hpp"
#include "subgrowth/rational.hpp"

namespace subgrowth {

/// Integer representation type: xi[v][i] orbits of class i at vertex v.
struct TypePartition {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> xi;
};

struct TypeCount {
  TypePartition type;
  BigInt count;
};

struct CountLedger {
  std::size_t n = 0;
  BigInt total;                   // |Hom(Γ, S_n)|
  std::vector<TypeCount> per_type;
  std::vector<BigInt> totals;     // |Hom(Γ, S_m)| for m = 0..n
  std::vector<BigInt> transitive; // t_m for m = 0..n (t_0 unused)
  std::vector<BigInt> subgroups;  // s_m for m = 0..n (s_0 unused)

  const BigInt& t_n() const { return transitive[n]; }
  const BigInt& s_n() const { return subgroups[n]; }
};

/// Number of homomorphisms G -> S_n of type η: n! / Π_i (η_i! · c_i^{η_i}),
/// with c_i the automorphism count of the i-th transitive G-set.
inline BigInt vertex_hom_count(const RepCatalog& cat, const std::vector<std::size_t>& eta, std::size_t n) {
  if (eta.size() != cat.size()) throw InputError("type length does not match the catalog");
  std::size_t deg = 0;
  for (std::size_t i = 0; i < eta.size(); ++i) deg += eta[i] * cat.classes[i].degree;
  if (deg != n) throw InputError("type has degree " + std::to_string(deg) + ", expected " + std::to_string(n));
  BigInt den = 1;
  for (std::size_t i = 0; i < eta.size(); ++i)
    den *= factorial(eta[i]) * pow(BigInt(static_cast<unsigned long>(cat.classes[i].aut_count)), eta[i]);
  BigInt num = factorial(n);
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) throw Error("vertex count is not integral");
  return num / den;
}

/// All η with Σ_i n_i η_i = n, in lexicographic order.
inline std::vector<std::vector<std::size_t>> vertex_types(const RepCatalog& cat, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> eta(cat.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
    if (i == cat.size()) {
      if (left == 0) out.push_back(eta);
      return;
    }
    std::size_t d = cat.classes[i].degree;
    for (std::size_t c = 0; c * d <= left; ++c) {
      eta[i] = c;
      self(self, i + 1, left - c * d);
    }
    eta[i] = 0;
  };
  rec(rec, 0, n);
  return out;
}

inline std::vector<std::size_t> induced_type(const RestrictionMatrix& mat, const std::vector<std::size_t>& xi) {
  std::vector<std::size_t> lambda(mat.rows, 0);
  for (std::size_t j = 0; j < mat.rows; ++j)
    for (std::size_t i = 0; i < mat.cols; ++i) lambda[j] += mat.at(j, i) * xi[i];
  return lambda;
}

inline bool is_admissible(const GraphOfGroups& g, const GrowthModel& m, const TypePartition& t) {
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& e = g.edges()[k];
    if (induced_type(m.into_x[k], t.xi[e.x]) != induced_type(m.into_y[k], t.xi[e.y])) return false;
  }
  return true;
}

/// n!^h · Π_v N_v(ξ_v) / Π_e N_e(λ_e) with h = |E| − |V| + 1.
inline BigInt type_hom_count(const GraphOfGroups& g, const GrowthModel& m, const TypePartition& t) {
  if (t.xi.size() != g.vertices().size()) throw InputError("type does not cover every vertex");
  if (!is_admissible(g, m, t)) throw InputError("inadmissible type");
  const std::size_t h = g.edges().size() + 1 - g.vertices().size();
  BigInt num = pow(factorial(t.n), h);
  for (std::size_t v = 0; v < g.vertices().size(); ++v) num *= vertex_hom_count(m.vertex_catalogs[v], t.xi[v], t.n);
  BigInt den = 1;
  for (std::size_t k = 0; k < g.edges().size(); ++k)
    den *= vertex_hom_count(m.edge_catalogs[k], induced_type(m.into_x[k], t.xi[g.edges()[k].x]), t.n);
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) throw Error("type count is not integral");
  return num / den;
}

namespace detail {

/// Sum over admissible types of degree n; appends to `types` when given.
inline BigInt typesum_total(const GraphOfGroups& g, const GrowthModel& m, std::size_t n,
                            std::vector<TypeCount>* types) {
  const std::size_t nv = g.vertices().size();
  std::vector<std::vector<std::vector<std::size_t>>> options(nv);
  for (std::size_t v = 0; v < nv; ++v) options[v] = vertex_types(m.vertex_catalogs[v], n);
  // edges checked once both endpoints are assigned
  std::vector<std::vector<std::size_t>> closing(nv);
  for (std::size_t k = 0; k < g.edges().size(); ++k)
    closing[std::max(g.edges()[k].x, g.edges()[k].y)].push_back(k);

  TypePartition t;
  t.n = n;
  t.xi.resize(nv);
  BigInt total = 0;
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == nv) {
      BigInt c = type_hom_count(g, m, t);
      total += c;
      if (types) types->push_back(TypeCount{t, c});
      return;
    }
    for (const auto& eta : options[v]) {
      t.xi[v] = eta;
      bool ok = true;
      for (std::size_t k : closing[v]) {
        const auto& e = g.edges()[k];
        if (induced_type(m.into_x[k], t.xi[e.x]) != induced_type(m.into_y[k], t.xi[e.y])) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, v + 1);
    }
  };
  rec(rec, 0);
  return total;
}

}  // namespace detail

/// |Hom(Γ, S_m)| for m = 1..n by summing over admissible types, then the
/// transitive counts t_m and subgroup counts s_m = t_m / (m−1)!.
inline CountLedger hom_count_typesum(const GraphOfGroups& g, std::size_t n, const Caps& caps = {},
                                     bool keep_types = false) {
  if (n == 0) throw InputError("n must be positive");
  if (n > caps.max_typesum_n)
    throw CapExceeded("n = " + std::to_string(n) + " exceeds the type-sum cap " + std::to_string(caps.max_typesum_n));
  GrowthModel m = build_growth_model(g, caps);
  CountLedger led;
  led.n = n;
  led.totals.assign(n + 1, BigInt(0));
  led.totals[0] = 1;
  for (std::size_t k = 1; k <= n; ++k)
    led.totals[k] = detail::typesum_total(g, m, k, (keep_types && k == n) ? &led.per_type : nullptr);
  led.total = led.totals[n];
  led.transitive.assign(n + 1, BigInt(0));
  led.subgroups.assign(n + 1, BigInt(0));
  for (std::size_t k = 1; k <= n; ++k) {
    BigInt t = led.totals[k];
    for (std::size_t j = 1; j < k; ++j) t -= binomial(k - 1, j - 1) * led.transitive[j] * led.totals[k - j];
    led.transitive[k] = t;
    BigInt f = factorial(k - 1);
    if (!mpz_divisible_p(t.get_mpz_t(), f.get_mpz_t()))
      throw Error("(n-1)! does not divide t_n at n = " + std::to_string(k));
    led.subgroups[k] = t / f;
  }
  return led;
}

namespace detail {

/// S_n as an indexed group with a multiplication table.
struct SymmetricTable {
  std::size_t n = 0;
  std::vector<std::vector<Point>> perms;
  std::vector<std::uint16_t> mul;  // mul[a*N+b] = a∘b
  std::vector<std::uint16_t> inv;
  std::vector<std::size_t> order;

  explicit SymmetricTable(std::size_t deg) : n(deg) {
    std::vector<Point> p(n);
    std::iota(p.begin(), p.end(), Point{0});
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const std::size_t N = perms.size();
    std::map<std::vector<Point>, std::uint16_t> idx;
    for (std::size_t a = 0; a < N; ++a) idx.emplace(perms[a], static_cast<std::uint16_t>(a));
    mul.resize(N * N);
    inv.resize(N);
    order.resize(N);
    std::vector<Point> c(n);
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) {
        for (std::size_t x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
        mul[a * N + b] = idx.at(c);
      }
    for (std::size_t a = 0; a < N; ++a) {
      for (std::size_t x = 0; x < n; ++x) c[perms[a][x]] = static_cast<Point>(x);
      inv[a] = idx.at(c);
      std::size_t k = 1;
      for (std::uint16_t q = static_cast<std::uint16_t>(a); q != 0; q = mul[q * N + a]) ++k;
      order[a] = k;
    }
  }
  std::size_t size() const { return perms.size(); }
  std::uint16_t operator()(std::uint16_t a, std::uint16_t b) const { return mul[std::size_t{a} * size() + b]; }
};

/// Every homomorphism G -> S_n, each as the image index of every element.
inline std::vector<std::vector<std::uint16_t>> enumerate_homs(const FiniteGroup& g, const SymmetricTable& sn) {
  std::vector<Element> gens;
  for (Element s : g.generator_indices())
    if (s != FiniteGroup::identity()) gens.push_back(s);
  // BFS tree: element = parent · gens[via]
  std::vector<Element> order{FiniteGroup::identity()};
  std::vector<Element> parent(g.order(), 0), via(g.order(), 0);
  std::vector<bool> seen(g.order(), false);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Element q = g.multiply(order[i], gens[s]);
      if (!seen[q]) {
        seen[q] = true;
        parent[q] = order[i];
        via[q] = static_cast<Element>(s);
        order.push_back(q);
      }
    }
  std::vector<std::vector<std::uint16_t>> cands(gens.size());
  for (std::size_t s = 0; s < gens.size(); ++s) {
    std::size_t o = g.element_order(gens[s]);
    for (std::size_t a = 0; a < sn.size(); ++a)
      if (o % sn.order[a] == 0) cands[s].push_back(static_cast<std::uint16_t>(a));
  }
  std::vector<std::vector<std::uint16_t>> homs;
  std::vector<std::uint16_t> img(gens.size()), phi(g.order());
  auto check = [&] {
    phi[0] = 0;  // identity of S_n is index 0
    for (std::size_t i = 1; i < order.size(); ++i) phi[order[i]] = sn(phi[parent[order[i]]], img[via[order[i]]]);
    for (std::size_t e = 0; e < g.order(); ++e)
      for (std::size_t s = 0; s < gens.size(); ++s)
        if (phi[g.multiply(static_cast<Element>(e), gens[s])] != sn(phi[e], img[s])) return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t s) -> void {
    if (s == gens.size()) {
      if (check()) homs.push_back(phi);
      return;
    }
    for (std::uint16_t c : cands[s]) {
      img[s] = c;
      self(self, s + 1);
    }
  };
  rec(rec, 0);
  return homs;
}

}  // namespace detail

/// Brute-force |Hom(Γ, S_n)|: enumerate homomorphisms of each vertex group,
/// require exact agreement on tree edges, and multiply by the number of
/// conjugators for every non-tree edge. `tree` overrides the BFS tree.
inline BigInt hom_count_enumerate(const GraphOfGroups& g, std::size_t n, const Caps& caps = {},
                                  std::optional<std::vector<std::size_t>> tree = std::nullopt) {
  if (n == 0) throw InputError("n must be positive");
  if (n > caps.max_enumerate_n)
    throw CapExceeded("n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(caps.max_enumerate_n));
  for (const auto& v : g.vertices())
    if (v.group.order() > caps.max_enumerate_group_order)
      throw CapExceeded("vertex group of order " + std::to_string(v.group.order()) + " exceeds the enumeration cap");
  const auto& vs = g.vertices();
  const auto& es = g.edges();
  const std::size_t nv = vs.size();
  std::vector<std::size_t> tree_edges = tree ? *tree : spanning_tree(g);
  if (tree_edges.size() + 1 != nv) throw InputError("spanning tree has the wrong size");
  std::vector<bool> in_tree(es.size(), false);
  for (std::size_t k : tree_edges) {
    if (k >= es.size() || es[k].is_loop()) throw InputError("invalid spanning tree edge");
    in_tree[k] = true;
  }

  detail::SymmetricTable sn(n);
  std::vector<std::vector<std::vector<std::uint16_t>>> homs(nv);
  for (std::size_t v = 0; v < nv; ++v) homs[v] = detail::enumerate_homs(vs[v].group, sn);

  // Visit order: BFS over the tree from vertex 0.
  std::vector<std::size_t> order{0}, pos(nv, nv), parent_edge(nv, es.size());
  pos[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t k : tree_edges) {
      std::size_t v = order[i];
      std::size_t w = es[k].x == v ? es[k].y : es[k].y == v ? es[k].x : nv;
      if (w < nv && pos[w] == nv) {
        pos[w] = order.size();
        order.push_back(w);
        parent_edge[w] = k;
      }
    }
  if (order.size() != nv) throw InputError("spanning tree does not span");

  // Image of the edge generators under φ_v ∘ ψ_side.
  auto key = [&](std::size_t k, bool x_side, const std::vector<std::uint16_t>& phi) {
    const EmbeddingMap& emb = x_side ? es[k].into_x : es[k].into_y;
    std::vector<std::uint16_t> out;
    for (Element a : es[k].group.generator_indices()) out.push_back(phi[emb(a)]);
    return out;
  };
  // For each non-root vertex, its homomorphisms bucketed by the key on the tree
  // edge to its parent.
  std::vector<std::map<std::vector<std::uint16_t>, std::vector<std::size_t>>> bucket(nv);
  for (std::size_t v : order) {
    if (v == 0) continue;
    std::size_t k = parent_edge[v];
    bool x_side = es[k].x == v;
    for (std::size_t h = 0; h < homs[v].size(); ++h) bucket[v][key(k, x_side, homs[v][h])].push_back(h);
  }
  // Non-tree edges are weighed when their later endpoint is placed.
  std::vector<std::vector<std::size_t>> closing(nv);
  for (std::size_t k = 0; k < es.size(); ++k)
    if (!in_tree[k]) closing[pos[es[k].x] > pos[es[k].y] ? es[k].x : es[k].y].push_back(k);

  auto conj_count = [&](const std::vector<std::uint16_t>& a, const std::vector<std::uint16_t>& b,
                        std::map<std::pair<std::vector<std::uint16_t>, std::vector<std::uint16_t>>, unsigned long>& memo) {
    auto it = memo.find({a, b});
    if (it != memo.end()) return it->second;
    unsigned long c = 0;
    for (std::size_t gi = 0; gi < sn.size(); ++gi) {
      auto gg = static_cast<std::uint16_t>(gi);
      bool ok = true;
      for (std::size_t i = 0; i < a.size() && ok; ++i) ok = sn(sn(gg, a[i]), sn.inv[gg]) == b[i];
      c += ok;
    }
    memo.emplace(std::make_pair(a, b), c);
    return c;
  };

  auto run = [&](std::size_t first, std::size_t stride) {
    std::map<std::pair<std::vector<std::uint16_t>, std::vector<std::uint16_t>>, unsigned long> memo;
    std::vector<std::size_t> chosen(nv, 0);
    BigInt total = 0;
    auto rec = [&](auto&& self, std::size_t i, const BigInt& weight) -> void {
      if (i == nv) {
        total += weight;
        return;
      }
      std::size_t v = order[i];
      auto place = [&](std::size_t h) {
        chosen[v] = h;
        BigInt w = weight;
        for (std::size_t k : closing[v]) {
          unsigned long c = conj_count(key(k, true, homs[es[k].x][chosen[es[k].x]]),
                                       key(k, false, homs[es[k].y][chosen[es[k].y]]), memo);
          if (c == 0) return;
          w *= c;
        }
        self(self, i + 1, w);
      };
      if (i == 0) {
        for (std::size_t h = first; h < homs[v].size(); h += stride) place(h);
        return;
      }
      std::size_t k = parent_edge[v];
      std::size_t u = es[k].x == v ? es[k].y : es[k].x;
      auto it = bucket[v].find(key(k, es[k].x == u, homs[u][chosen[u]]));
      if (it == bucket[v].end()) return;
      for (std::size_t h : it->second) place(h);
    };
    rec(rec, 0, BigInt(1));
    return total;
  };

  const unsigned threads = std::max(1u, caps.threads);
  if (threads == 1) return run(0, 1);
  std::vector<BigInt> partial(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back([&, t] { partial[t] = run(t, threads); });
  }
  BigInt total = 0;
  for (const auto& p : partial) total += p;
  return total;
}

struct SlopeRow {
  std::size_t n = 0;
  double slope = 0;  // log|Hom(Γ,S_n)| / (n log n) − 1
};

/// Floating-point trend of the normalized log-count; display only.
inline std::vector<SlopeRow> slope_diagnostic(const GraphOfGroups& g, std::size_t n_max, const Caps& caps = {}) {
  CountLedger led = hom_count_typesum(g, n_max, caps);
  std::vector<SlopeRow> rows;
  for (std::size_t n = 2; n <= n_max; ++n) {
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, led.totals[n].get_mpz_t());
    double lg = std::log(mant) + static_cast<double>(exp) * std::log(2.0);
    double nn = static_cast<double>(n);
    rows.push_back(SlopeRow{n, lg / (nn * std::log(nn)) - 1.0});
  }
  return rows;
}

}  // namespace subgrowth
