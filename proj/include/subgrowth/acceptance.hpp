#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <functional>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "subgrowth/corpus.hpp"
#include "subgrowth/growth.hpp"
#include "subgrowth/oracle.hpp"
#include "subgrowth/ratlp.hpp"

namespace subgrowth {

struct AcceptanceOptions {
  bool slow = false;
  unsigned threads = 1;
  unsigned seed = 20240601;
  std::size_t random_graphs = 25;
};

struct CriterionResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

namespace detail {

inline Permutation cyc(std::string_view text, std::size_t degree) { return parse_cycles(text, degree); }

inline std::size_t class_by_gens(const SubgroupLattice& lat, const std::vector<std::string_view>& gens) {
  std::vector<Permutation> ps;
  for (auto s : gens) ps.push_back(cyc(s, lat.group().degree()));
  return lat.class_of_generated(ps);
}

/// Every transitive Sym(3)-set comes from ⟨s, t | s², t³, (st)²⟩; counts the
/// pairs in Sym(3) satisfying the relations.
inline std::size_t brute_force_hom_s3_s3() {
  std::vector<Permutation> s3;
  std::vector<Point> p{0, 1, 2};
  do s3.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::size_t count = 0;
  for (const auto& s : s3)
    for (const auto& t : s3)
      if ((s * s).is_identity() && (t * t * t).is_identity() && ((s * t) * (s * t)).is_identity()) ++count;
  return count;
}

/// A connected graph with 1–3 vertices, vertex groups of order ≤ 24 and edge
/// groups of order ≤ 4.
inline GraphOfGroups random_graph(std::mt19937& rng) {
  const std::vector<std::function<FiniteGroup()>> pool{
      [] { return trivial_group(); },     [] { return cyclic_group(2); },     [] { return cyclic_group(3); },
      [] { return cyclic_group(4); },     [] { return cyclic_group(6); },     [] { return klein_four(); },
      [] { return symmetric_group(3); },  [] { return dihedral_group(4); },   [] { return dihedral_group(5); },
      [] { return dihedral_group(6); },   [] { return alternating_group(4); }, [] { return symmetric_group(4); }};
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };

  const std::size_t nv = 1 + pick(3);
  std::vector<Vertex> vs;
  for (std::size_t v = 0; v < nv; ++v) vs.push_back(Vertex{"v" + std::to_string(v + 1), pool[pick(pool.size())]()});

  auto make_edge = [&](std::size_t x, std::size_t y, const std::string& name) {
    const FiniteGroup& gx = vs[x].group;
    const FiniteGroup& gy = vs[y].group;
    std::vector<ElementList> small;
    for (auto& u : all_subgroups(gx))
      if (u.size() <= 4) small.push_back(u);
    const ElementList& u = small[pick(small.size())];
    // at most two generators suffice for groups of order ≤ 4
    std::vector<Element> gens;
    for (Element a : u)
      if (a != FiniteGroup::identity() && close_subgroup(gx, gens).size() < u.size() && !is_member(close_subgroup(gx, gens), a))
        gens.push_back(a);
    FiniteGroup e = as_group(gx, gens);
    EmbeddingMap ix(e, gx, e.generators());
    std::vector<Element> order(gy.order());
    std::iota(order.begin(), order.end(), Element{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Permutation> img(e.generators().size());
    std::optional<EmbeddingMap> iy;
    auto search = [&](auto&& self, std::size_t s) -> bool {
      if (s == img.size()) {
        try {
          iy.emplace(e, gy, img);
          return true;
        } catch (const InputError&) {
          return false;
        }
      }
      for (Element a : order) {
        img[s] = gy.element(a);
        if (self(self, s + 1)) return true;
      }
      return false;
    };
    if (!search(search, 0)) {
      FiniteGroup t = trivial_group();
      return Edge{name, x, y, t, EmbeddingMap(t, gx, {}), EmbeddingMap(t, gy, {})};
    }
    return Edge{name, x, y, e, ix, *iy};
  };

  std::vector<Edge> es;
  for (std::size_t v = 1; v < nv; ++v) es.push_back(make_edge(pick(v), v, "t" + std::to_string(v)));
  const std::size_t extra = pick(3);
  for (std::size_t k = 0; k < extra; ++k) es.push_back(make_edge(pick(nv), pick(nv), "x" + std::to_string(k + 1)));
  return GraphOfGroups(std::move(vs), std::move(es));
}

/// Orbit counts of the subgroup k on the cosets of h, bucketed by which of
/// `stabs` is the point stabilizer; computed from the cosets directly.
inline std::array<std::size_t, 5> direct_orbit_counts(const FiniteGroup& g, const ElementList& h, const ElementList& k,
                                                      const std::array<ElementList, 5>& stabs) {
  auto coset = [&](Element a) {
    ElementList c;
    for (Element b : h) c.push_back(g.multiply(a, b));
    std::sort(c.begin(), c.end());
    return c;
  };
  std::set<ElementList> seen;
  std::array<std::size_t, 5> out{};
  for (Element a = 0; a < g.order(); ++a) {
    if (seen.count(coset(a))) continue;
    for (Element x : k) seen.insert(coset(g.multiply(x, a)));
    ElementList stab;
    for (Element x : k)
      if (is_member(h, g.multiply(g.multiply(g.inverse(a), x), a))) stab.push_back(x);
    auto it = std::find(stabs.begin(), stabs.end(), stab);
    if (it == stabs.end()) throw Error("unexpected stabilizer");
    ++out[static_cast<std::size_t>(it - stabs.begin())];
  }
  return out;
}

inline std::string str(const Rational& r) { return r.get_str(); }

}  // namespace detail

inline CriterionResult check_a1() {
  using detail::class_by_gens;
  CriterionResult res{"A1", true, ""};
  std::vector<std::string> notes;
  auto fail = [&](const std::string& why) {
    res.pass = false;
    notes.push_back(why);
  };

  GraphOfGroups g = parse_gog(find_corpus("s4_klein_amalgam")->text);
  GrowthModel m = build_growth_model(g);
  const RepCatalog& vc = m.vertex_catalogs[0];
  const RepCatalog& ec = m.edge_catalogs[0];
  const FiniteGroup& s4 = vc.group;
  if (vc.size() != 11) fail("Sym(4) has " + std::to_string(vc.size()) + " classes");

  // Reference rows: stabilizer generators, index, orbit counts under the two
  // embedded Klein groups, columns ordered whole, <(12)(34)>, <(13)(24)>,
  // <(14)(23)>, trivial (images of the edge subgroups).
  struct Row {
    std::vector<std::string_view> gens;
    std::size_t index;
    std::array<std::size_t, 5> u1, u2;
  };
  const std::vector<Row> rows{
      {{"(1 2)", "(1 2 3 4)"}, 1, {1, 0, 0, 0, 0}, {1, 0, 0, 0, 0}},
      {{"(1 2 3)", "(1 2)(3 4)"}, 2, {2, 0, 0, 0, 0}, {0, 1, 0, 0, 0}},
      {{"(1 2)", "(1 3)(2 4)"}, 3, {3, 0, 0, 0, 0}, {1, 1, 0, 0, 0}},
      {{"(1 2)(3 4)", "(1 3)(2 4)"}, 6, {6, 0, 0, 0, 0}, {0, 3, 0, 0, 0}},
      {{"(1 2)", "(1 2 3)"}, 4, {0, 0, 0, 0, 1}, {0, 0, 1, 1, 0}},
      {{"(1 2 3 4)"}, 6, {0, 1, 1, 1, 0}, {0, 1, 0, 0, 1}},
      {{"(1 2)", "(3 4)"}, 6, {0, 1, 1, 1, 0}, {2, 0, 0, 0, 1}},
      {{"(1 2 3)"}, 8, {0, 0, 0, 0, 2}, {0, 0, 0, 0, 2}},
      {{"(1 2)(3 4)"}, 12, {0, 2, 2, 2, 0}, {0, 2, 0, 0, 2}},
      {{"(1 2)"}, 12, {0, 0, 0, 0, 6}, {0, 0, 2, 2, 1}},
      {{}, 24, {0, 0, 0, 0, 6}, {0, 0, 0, 0, 6}},
  };
  const std::array<std::size_t, 5> tau{class_by_gens(ec.lattice, {"(1 2)(3 4)", "(1 3)(2 4)"}),
                                       class_by_gens(ec.lattice, {"(1 2)(3 4)"}),
                                       class_by_gens(ec.lattice, {"(1 3)(2 4)"}),
                                       class_by_gens(ec.lattice, {"(1 4)(2 3)"}), class_by_gens(ec.lattice, {})};
  // the same five subgroups pushed into Sym(4) along each embedding
  std::array<std::array<ElementList, 5>, 2> tau_image;
  for (std::size_t j = 0; j < 5; ++j) {
    const ElementList& t = ec.lattice[tau[j]].representative;
    for (int side = 0; side < 2; ++side) {
      const EmbeddingMap& emb = side == 0 ? g.edges()[0].into_x : g.edges()[0].into_y;
      ElementList img;
      for (Element a : t) img.push_back(emb(a));
      std::sort(img.begin(), img.end());
      tau_image[side][j] = img;
    }
  }
  const std::array<ElementList, 2> klein{g.edges()[0].into_x.image(), g.edges()[0].into_y.image()};

  auto row_text = [](const std::array<std::size_t, 5>& a) {
    std::string t;
    for (std::size_t v : a) t += (t.empty() ? "" : " ") + std::to_string(v);
    return t;
  };
  auto gens_text = [](const std::vector<std::string_view>& gens) {
    std::string t;
    for (auto gs : gens) t += (t.empty() ? "" : ", ") + std::string(gs);
    return t;
  };
  std::vector<std::size_t> index_column;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::size_t i = class_by_gens(vc.lattice, rows[r].gens);
    index_column.push_back(vc.classes[i].degree);
    std::array<std::array<std::size_t, 5>, 2> computed{};
    for (std::size_t j = 0; j < 5; ++j) {
      computed[0][j] = m.into_x[0].at(tau[j], i);
      computed[1][j] = m.into_y[0].at(tau[j], i);
    }
    const ElementList& h = vc.lattice[i].representative;
    for (int side = 0; side < 2; ++side) {
      auto direct = detail::direct_orbit_counts(s4, h, klein[side], tau_image[side]);
      if (direct != computed[side]) fail("row " + std::to_string(r + 1) + " restriction disagrees with direct orbit count");
    }
    if (computed[0] != rows[r].u1 || computed[1] != rows[r].u2)
      fail("row " + std::to_string(r + 1) + " (stabilizer <" + gens_text(rows[r].gens) + ">) computed " + row_text(computed[0]) + " | " + row_text(computed[1]) + ", reference " +
           row_text(rows[r].u1) + " | " + row_text(rows[r].u2) + "; computed row confirmed by direct coset count");
  }
  std::vector<std::size_t> want{1, 2, 3, 6, 4, 6, 6, 8, 12, 12, 24};
  if (index_column != want) fail("index column");

  // fixed points of (12) and (123) on Sym(3)/U
  FiniteGroup s3 = symmetric_group(3);
  struct FpRow {
    std::vector<std::string_view> gens;
    std::size_t order;
    long fa, fb;
  };
  const std::vector<FpRow> s3rows{{{"(1 2)", "(1 3)"}, 6, 1, 1}, {{"(1 2 3)"}, 3, 0, 2}, {{"(1 2)"}, 2, 1, 0},
                                  {{"(1 3)"}, 2, 1, 0},          {{"(2 3)"}, 2, 1, 0},   {{}, 1, 0, 0}};
  auto subgroup = [](const FiniteGroup& grp, const std::vector<Permutation>& gens) {
    std::vector<Element> idx;
    for (const auto& p : gens) idx.push_back(grp.index_of(p));
    return close_subgroup(grp, idx);
  };
  auto perms = [](const std::vector<std::string_view>& gens, std::size_t d) {
    std::vector<Permutation> out;
    for (auto s : gens) out.push_back(detail::cyc(s, d));
    return out;
  };
  for (const auto& r : s3rows) {
    ElementList u = subgroup(s3, perms(r.gens, 3));
    if (u.size() != r.order || fixed_point_multiplicity(s3, u, detail::cyc("(1 2)", 3)) != r.fa ||
        fixed_point_multiplicity(s3, u, detail::cyc("(1 2 3)", 3)) != r.fb)
      fail("Sym(3) fixed-point table");
  }
  // fixed points of two reflections on Dih(5)/U, U running over the table
  FiniteGroup d10 = dihedral_group(5);
  Permutation t1 = detail::cyc("(2 5)(3 4)", 5), t2 = detail::cyc("(1 3)(4 5)", 5);
  std::vector<std::pair<std::vector<Permutation>, std::size_t>> drows{{{t1, t2}, 10}, {{t1 * t2}, 5}, {{}, 1}};
  for (Element a = 0; a < d10.order(); ++a)
    if (d10.element_order(a) == 2) drows.push_back({{d10.element(a)}, 2});
  if (drows.size() != 8) fail("Dih(5) should have 5 reflections");
  for (const auto& [gens, order] : drows) {
    ElementList u = subgroup(d10, gens);
    long want_fp = order % 2 == 0 ? 1 : 0;
    if (u.size() != order || fixed_point_multiplicity(d10, u, t1) != want_fp ||
        fixed_point_multiplicity(d10, u, t2) != want_fp)
      fail("Dih(5) fixed-point table");
  }
  if (res.pass) {
    res.detail = "11 classes, index column and both restriction matrices match; fixed-point tables match";
  } else {
    for (const auto& n : notes) res.detail += (res.detail.empty() ? "" : "; ") + n;
  }
  return res;
}

inline CriterionResult check_a2() {
  using detail::class_by_gens;
  GraphOfGroups g = parse_gog(find_corpus("s4_klein_amalgam")->text);
  GrowthReport r = mu(g);
  GrowthModel m = build_growth_model(g);
  Rational best = -1000;
  for (const auto& v : enumerate_vertices(m.lp)) best = std::max(best, v.value);
  std::vector<Rational> x(m.lp.cols(), Rational(0));
  const auto& vx = m.vertex_catalogs[0].lattice;
  const auto& vy = m.vertex_catalogs[1].lattice;
  x[m.variable(0, class_by_gens(vx, {"(1 2)(3 4)", "(1 3)(2 4)"}))] = Rational(1, 18);
  x[m.variable(0, class_by_gens(vx, {}))] = Rational(1, 36);
  x[m.variable(1, class_by_gens(vy, {"(1 2)", "(3 4)"}))] = Rational(1, 6);
  const bool feasible = m.lp.feasible(x);
  const Rational obj = m.lp.objective(x);
  bool pass = r.mu == Rational(1, 4) && r.chi == Rational(-1, 6) && best == r.mu && feasible && obj == Rational(1, 4);
  return {"A2", pass,
          "mu=" + detail::str(r.mu) + " chi=" + detail::str(r.chi) + " vertex_max=" + detail::str(best) +
              " stated_point_feasible=" + (feasible ? "yes" : "no") + " objective=" + detail::str(obj)};
}

inline CriterionResult check_a3() {
  struct Case {
    std::string name;
    FiniteGroup g;
    std::string x;
  };
  std::vector<Case> cases{{"Sym(4),(1 2)", symmetric_group(4), "(1 2)"},
                          {"Sym(4),(1 2 3)", symmetric_group(4), "(1 2 3)"},
                          {"Sym(4),(1 2)(3 4)", symmetric_group(4), "(1 2)(3 4)"},
                          {"Dih(4),(1 3)(2 4)", dihedral_group(4), "(1 3)(2 4)"},
                          {"Sym(5),(1 2)", symmetric_group(5), "(1 2)"},
                          {"Sym(5),(1 2)(3 4)", symmetric_group(5), "(1 2)(3 4)"}};
  CriterionResult res{"A3", true, ""};
  for (const auto& c : cases) {
    Permutation x = detail::cyc(c.x, c.g.degree());
    Rational lp = mu(cyclic_amalgam(c.g, x)).mu;
    Rational cf = cyclic_amalgam_mu(c.g, x).value;
    res.detail += (res.detail.empty() ? "" : " ") + c.name + "=" + detail::str(lp);
    if (lp != cf) {
      res.pass = false;
      res.detail += "(closed form " + detail::str(cf) + ")";
    }
  }
  return res;
}

inline CriterionResult check_a4() {
  FiniteGroup s4 = symmetric_group(4);
  Permutation x = detail::cyc("(1 2 3)", 4);
  Rational t2 = family_mu(3, 4, 1, FamilyVariant::symmetric);
  Rational p4 = cyclic_amalgam_mu(s4, x).value;
  bool sharp = chi_sharp(s4, x);
  GrowthReport r = mu(cyclic_amalgam(s4, x));
  bool pass = t2 == Rational(1, 4) && p4 == t2 && sharp && r.mu == -r.chi && r.mu == t2;
  return {"A4", pass,
          "closed=" + detail::str(t2) + " cyclic=" + detail::str(p4) + " chi_sharp=" + (sharp ? "true" : "false") +
              " mu=" + detail::str(r.mu) + " chi=" + detail::str(r.chi)};
}

inline CriterionResult check_a5() {
  CriterionResult res{"A5", true, ""};
  auto expect = [&](const std::string& name, const GraphOfGroups& g, const Rational& want) {
    Rational got = mu(g).mu;
    res.detail += (res.detail.empty() ? "" : " ") + name + "=" + detail::str(got);
    if (got != want) res.pass = false;
  };
  expect("C2*C3", free_product({cyclic_group(2), cyclic_group(3)}), Rational(1, 6));
  expect("C2*C2", free_product({cyclic_group(2), cyclic_group(2)}), Rational(0));
  for (long r = 1; r <= 4; ++r) expect("F" + std::to_string(r), free_group(static_cast<std::size_t>(r)), Rational(r - 1));
  return res;
}

inline CriterionResult check_a6(const AcceptanceOptions& opt) {
  std::size_t checked = 0, failed = 0;
  auto check = [&](const GraphOfGroups& g) {
    GrowthReport r = mu(g);
    ++checked;
    if (r.mu < -r.chi) ++failed;
  };
  for (const auto& e : corpus()) check(parse_gog(e.text));
  std::mt19937 rng(opt.seed);
  for (std::size_t k = 0; k < opt.random_graphs; ++k) check(detail::random_graph(rng));
  return {"A6", failed == 0,
          std::to_string(checked) + " graphs (" + std::to_string(opt.random_graphs) + " random, seed " +
              std::to_string(opt.seed) + "), " + std::to_string(failed) + " below -chi"};
}

inline CriterionResult check_o1() {
  RepCatalog cat = build_catalog(symmetric_group(3));
  BigInt corrected = 0;
  Rational uncorrected = 0;
  for (const auto& eta : vertex_types(cat, 3)) {
    corrected += vertex_hom_count(cat, eta, 3);
    BigInt den = 1;
    for (std::size_t i = 0; i < eta.size(); ++i)
      den *= factorial(eta[i]) * pow(BigInt(static_cast<unsigned long>(cat.classes[i].degree)), eta[i]);
    uncorrected += Rational(factorial(3)) / Rational(den);
  }
  std::size_t brute = detail::brute_force_hom_s3_s3();
  return {"O1", corrected == 10 && brute == 10,
          "type sum=" + corrected.get_str() + " brute force=" + std::to_string(brute) +
              " with orbit sizes in place of automorphism counts=" + detail::str(uncorrected)};
}

inline CriterionResult check_o2(const AcceptanceOptions& opt) {
  Caps caps;
  caps.threads = opt.threads;
  const std::size_t n_max = opt.slow ? 6 : 5;
  CriterionResult res{"O2", true, "n<=" + std::to_string(n_max) + ":"};
  for (auto name : {"free1", "free2", "modular", "s3_amalgam_c2", "s3_amalgam_c3", "s4_klein_amalgam", "triangle_d10"}) {
    GraphOfGroups g = parse_gog(find_corpus(name)->text);
    CountLedger led = hom_count_typesum(g, n_max, caps);
    bool ok = true;
    for (std::size_t n = 1; n <= n_max; ++n)
      if (led.totals[n] != hom_count_enumerate(g, n, caps)) ok = false;
    res.detail += std::string(" ") + name + (ok ? "=ok" : "=MISMATCH");
    res.pass = res.pass && ok;
  }
  return res;
}

inline CriterionResult check_o3() {
  CriterionResult res{"O3", true, ""};
  for (const auto& e : corpus()) {
    CountLedger led = hom_count_typesum(parse_gog(e.text), 5);
    if (led.subgroups[1] != 1) {
      res.pass = false;
      res.detail += std::string(e.name) + " s_1=" + led.subgroups[1].get_str() + " ";
    }
    for (std::size_t n = 1; n <= 5; ++n) {
      BigInt f = factorial(n - 1);
      if (!mpz_divisible_p(led.transitive[n].get_mpz_t(), f.get_mpz_t())) {
        res.pass = false;
        res.detail += std::string(e.name) + " t_" + std::to_string(n) + " ";
      }
    }
  }
  BigInt s2 = hom_count_typesum(parse_gog(find_corpus("modular")->text), 2).subgroups[2];
  if (s2 != 1) res.pass = false;
  res.detail += "s_1=1 on " + std::to_string(corpus().size()) + " graphs, (n-1)! | t_n for n<=5, s_2(C2*C3)=" + s2.get_str();
  return res;
}

inline CriterionResult check_r1() {
  CriterionResult res{"R1", true, ""};
  for (auto [a, b] : std::vector<std::pair<long, long>>{{1, 2}, {2, 5}, {5, 7}, {9, 10}, {7, 3}, {3, 1}}) {
    RealizationPlan plan = realize(a, b);
    Rational target = make_rational(a, b);
    bool ok = plan.predicted_mu == target;
    if (plan.free_only) {
      ok = ok && Rational(static_cast<long>(plan.free_rank) - 1) == target;
    } else {
      const std::size_t p = plan.p, k = plan.k, l = plan.l;
      // recompute the value from the family parameters directly
      const bool sym = plan.variant == FamilyVariant::symmetric;
      const std::size_t d = (sym && p == 2 && l % 2 == 1) ? 1 : 0;
      Rational v = Rational(static_cast<long>(plan.free_rank)) + 1 -
                   make_rational((p - 1) * l + (sym ? 1 + d : 2), k);
      ok = ok && is_prime(p) && l >= 1 && k >= l * p + 2 && !is_family_exception(p, k, l) && v == target &&
           plan.free_rank == static_cast<std::size_t>(a / b);
    }
    res.detail += (res.detail.empty() ? "" : "; ") + plan.line();
    res.pass = res.pass && ok;
  }
  return res;
}

inline CriterionResult check_p6() {
  GraphOfGroups g = parse_gog(find_corpus("triangle_d10")->text);
  GrowthReport r = mu(g);
  Rational best = -1000;
  for (const auto& v : enumerate_vertices(build_growth_lp(g))) best = std::max(best, v.value);
  const bool flagged = r.expected_mismatch() && *r.expected_mu == Rational(3, 2);
  bool pass = r.mu == best && r.mu >= -r.chi && flagged;
  return {"P6", pass,
          "mu=" + detail::str(r.mu) + " vertex_max=" + detail::str(best) + " -chi=" + detail::str(-r.chi) +
              " stated=3/2 flagged=" + (flagged ? "yes" : "no")};
}

inline CriterionResult check_x1() {
  FiniteGroup s5 = symmetric_group(5);
  Permutation x = detail::cyc("(1 2)(3 4)", 5);
  CyclicAmalgamResult cls = cyclic_amalgam_mu(s5, x);
  // same maximum over every subgroup, not only class representatives
  Element xe = s5.index_of(x);
  Rational exhaustive = -1000;
  std::size_t n_sub = 0;
  for (const auto& h : all_subgroups(s5)) {
    exhaustive = std::max(exhaustive, cyclic_amalgam_value(s5, xe, h));
    ++n_sub;
  }
  SubgroupLattice lat = subgroup_classes(s5);
  const bool matches_exception = exhaustive == Rational(1, 2);
  return {"X1", exhaustive == cls.value && exhaustive == Rational(8, 15),
          "value=" + detail::str(exhaustive) + " over " + std::to_string(n_sub) + " subgroups, attained at " +
              subgroup_generators_text(lat, lat[cls.argmax]) + "; listed exception 1/2 " +
              (matches_exception ? "matches" : "does not match")};
}

inline std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {}) {
  std::vector<std::function<CriterionResult()>> checks{
      check_a1, check_a2, check_a3, check_a4, check_a5, [&] { return check_a6(opt); }, check_o1,
      [&] { return check_o2(opt); }, check_o3, check_r1, check_p6, check_x1};
  static const char* ids[] = {"A1", "A2", "A3", "A4", "A5", "A6", "O1", "O2", "O3", "R1", "P6", "X1"};
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    try {
      out.push_back(checks[i]());
    } catch (const std::exception& e) {
      out.push_back({ids[i], false, std::string("error: ") + e.what()});
    }
  }
  return out;
}

inline void print_acceptance(const std::vector<CriterionResult>& results, std::ostream& os) {
  for (const auto& r : results) os << r.id << " " << (r.pass ? "PASS" : "FAIL") << "  " << r.detail << "\n";
}

}  // namespace subgrowth
