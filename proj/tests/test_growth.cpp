#include <catch_amalgamated.hpp>

#include "subgrowth/corpus.hpp"
#include "subgrowth/growth.hpp"

using namespace subgrowth;

namespace {

Permutation P(std::string_view s, std::size_t d) { return parse_cycles(s, d); }

GraphOfGroups corpus_graph(std::string_view name) {
  const CorpusEntry* e = find_corpus(name);
  REQUIRE(e != nullptr);
  return parse_gog(e->text);
}

Rational vertex_max(const RationalLP& lp) {
  auto vs = enumerate_vertices(lp);
  REQUIRE_FALSE(vs.empty());
  Rational best = vs.front().value;
  for (const auto& v : vs) best = std::max(best, v.value);
  return best;
}

}  // namespace

TEST_CASE("LP shapes") {
  auto klein = build_growth_model(corpus_graph("s4_klein_amalgam"));
  CHECK(klein.lp.cols() == 22);
  CHECK(klein.lp.rows() == 2 + 5);
  auto tri = build_growth_model(corpus_graph("triangle_d10"));
  CHECK(tri.lp.cols() == 12);
  for (std::size_t r = 1; r <= 3; ++r) CHECK(build_growth_lp(free_group(r)).cols() == 1);
}

TEST_CASE("growth coefficients of the corpus") {
  struct Case {
    const char* name;
    Rational mu;
  };
  const std::vector<Case> cases{{"s4_klein_amalgam", make_rational(1, 4)}, {"triangle_d10", make_rational(9, 10)},
                                {"modular", make_rational(1, 6)},         {"free2", Rational(1)},
                                {"free1", Rational(0)},                   {"c2_free_c2", Rational(0)},
                                {"hnn_s3", make_rational(1, 3)},          {"s4_transposition", make_rational(5, 12)},
                                {"s3_amalgam_c2", make_rational(1, 6)},   {"s3_amalgam_c3", Rational(0)}};
  for (const auto& c : cases) {
    INFO(c.name);
    auto g = corpus_graph(c.name);
    auto r = mu(g);
    CHECK(r.mu == c.mu);
    CHECK(r.mu >= r.mu_free);
    CHECK(r.mu_free == -r.chi);
    auto lp = build_growth_lp(g);
    if (lp.cols() <= 24) CHECK(vertex_max(lp) == r.mu);
    auto model = build_growth_model(g);
    CHECK(model.lp.feasible(all_regular_point(model)));
    CHECK(model.lp.objective(all_regular_point(model)) == r.mu_free);
  }
}

TEST_CASE("optimizer of the Klein amalgam") {
  auto g = corpus_graph("s4_klein_amalgam");
  auto r = mu(g);
  REQUIRE(r.optimizer.size() == 2);
  auto model = build_growth_model(g);
  // each vertex distribution sums to its weight and every edge agrees
  for (std::size_t v = 0; v < 2; ++v) {
    Rational deg = 0;
    for (std::size_t i = 0; i < model.vertex_catalogs[v].size(); ++i)
      deg += r.optimizer[v][i] * static_cast<long>(model.vertex_catalogs[v].classes[i].degree);
    CHECK(deg == 1);
  }
  CHECK(induced(model.into_x[0], r.optimizer[0]) == induced(model.into_y[0], r.optimizer[1]));
  CHECK_FALSE(r.dominant.empty());
  CHECK(r.variables == 22);
}

TEST_CASE("growth is unchanged by relabelling points") {
  // conjugate Klein amalgam by (1 4) in the second vertex
  auto g = parse_gog("vertex X = Sym(4)\nvertex Y = Sym(4)\n"
                     "edge k X Y { degree 4; gens (1 2)(3 4), (1 3)(2 4);\n"
                     "  into X: (1 2)(3 4), (1 3)(2 4); into Y: (1 3)(2 4), (2 4); }\n");
  CHECK(mu(g).mu == make_rational(1, 4));
}

TEST_CASE("prime-order amalgam values") {
  auto s4 = symmetric_group(4);
  Element x = s4.index_of(P("(1 2 3)", 4));
  Element gen[] = {x};
  CHECK(cyclic_amalgam_value(s4, x, close_subgroup(s4, gen)) == make_rational(1, 4));
  Element t = s4.index_of(P("(1 2)", 4));
  CHECK(cyclic_amalgam_value(s4, t, ElementList{0}) == make_rational(5, 12));

  // with H trivial the value is 1/p − 2/|G|
  for (auto [k, cyc, p] : std::vector<std::tuple<std::size_t, const char*, long>>{
           {4, "(1 2 3)", 3}, {5, "(1 2 3 4 5)", 5}, {5, "(1 2)", 2}}) {
    auto g = symmetric_group(k);
    CHECK(cyclic_amalgam_value(g, g.index_of(P(cyc, k)), ElementList{0}) ==
          make_rational(1, p) - make_rational(2, static_cast<long>(g.order())));
  }

  CHECK(cyclic_amalgam_mu(s4, P("(1 2)", 4)).value == make_rational(5, 12));
  CHECK(cyclic_amalgam_mu(s4, P("(1 2 3)", 4)).value == make_rational(1, 4));
  CHECK(cyclic_amalgam_mu(s4, P("(1 2)(3 4)", 4)).value == make_rational(2, 3));
  CHECK(cyclic_amalgam_mu(symmetric_group(5), P("(1 2)", 5)).value == make_rational(11, 20));
  CHECK(cyclic_amalgam_mu(symmetric_group(5), P("(1 2)(3 4)", 5)).value == make_rational(8, 15));
  CHECK_THROWS_AS(cyclic_amalgam_mu(s4, P("(1 2 3 4)", 4)), InputError);

  CHECK(chi_sharp(s4, P("(1 2 3)", 4)));
  CHECK(chi_sharp(s4, P("(1 2)", 4)));
  CHECK_FALSE(chi_sharp(symmetric_group(5), P("(1 2)", 5)));
}

TEST_CASE("cyclic amalgams agree with the LP") {
  for (auto [k, cyc] : std::vector<std::pair<std::size_t, const char*>>{
           {3, "(1 2)"}, {4, "(1 2)"}, {4, "(1 2 3)"}, {4, "(1 2)(3 4)"}, {5, "(1 2 3)"}}) {
    INFO(k << " " << cyc);
    auto g = symmetric_group(k);
    auto lp = mu(cyclic_amalgam(g, P(cyc, k))).mu;
    CHECK(lp == cyclic_amalgam_mu(g, P(cyc, k)).value);
  }
  // the closed expression needs |G| > 2p
  CHECK_THROWS_AS(cyclic_amalgam_mu(symmetric_group(3), P("(1 2 3)", 3)), InputError);
}

TEST_CASE("closed form for the family") {
  CHECK(family_mu(3, 4, 1, FamilyVariant::symmetric) == make_rational(1, 4));
  CHECK(family_mu(3, 5, 1, FamilyVariant::symmetric) == make_rational(2, 5));
  CHECK(family_mu(2, 6, 1, FamilyVariant::symmetric) == make_rational(1, 2));
  CHECK(family_mu(2, 5, 2, FamilyVariant::symmetric) == make_rational(1, 2));
  CHECK(family_mu(3, 7, 2, FamilyVariant::symmetric) == make_rational(2, 5));
  CHECK(family_mu(2, 5, 2, FamilyVariant::alternating) == make_rational(1, 3));
  CHECK(family_mu(5, 12, 2, FamilyVariant::alternating) == make_rational(1, 6));
  CHECK(family_delta(2, 1) == 1);
  CHECK(family_delta(2, 2) == 0);
  CHECK(family_delta(3, 1) == 0);
  CHECK_THROWS_AS(family_mu(2, 5, 1, FamilyVariant::alternating), InputError);

  // odd p: the LP matches the closed form at small k
  for (auto [p, k] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 4}, {3, 5}}) {
    auto g = family_gamma(p, k, 1, FamilyVariant::symmetric);
    CHECK(mu(g).mu == family_mu(p, k, 1, FamilyVariant::symmetric));
  }
  // p = 2 at small k: the closed form undercounts, fixed-point Klein classes dominate
  CHECK(mu(family_gamma(2, 5, 1, FamilyVariant::symmetric)).mu == make_rational(11, 20));
}

TEST_CASE("realizing rationals") {
  for (auto [a, b] : std::vector<std::pair<long, long>>{{1, 2}, {2, 5}, {5, 7}, {9, 10}, {7, 3}, {3, 1}, {0, 1}, {1, 3}}) {
    INFO(a << "/" << b);
    auto plan = realize(a, b);
    CHECK(plan.target == make_rational(a, b));
    CHECK(plan.predicted_mu == plan.target);
    CHECK(plan.r == static_cast<std::size_t>(a / b));
    if (plan.free_only) {
      CHECK(a % b == 0);
      continue;
    }
    CHECK(is_prime(plan.p));
    CHECK(plan.p > static_cast<std::size_t>(b));
    CHECK(family_in_range(plan.p, plan.k, plan.l));
    CHECK_FALSE(is_family_exception(plan.p, plan.k, plan.l));
    CHECK(plan.free_rank == plan.r);
    CHECK(plan.line().find("predicted_mu=" + plan.target.get_str()) != std::string::npos);
  }
  CHECK(realize(9, 10).p == 11);
  CHECK(realize(9, 10).k == 110);
  CHECK_THROWS_AS(realize(2, 4), InputError);
  CHECK_THROWS_AS(realize(1, 0), InputError);
  CHECK_THROWS_AS(realize(-1, 2), InputError);
}

TEST_CASE("realized plans emit graph text") {
  // the family text is produced without building the groups
  auto plan = realize(1, 2);
  auto text = plan.gog_text();
  CHECK(text.find("edge c A B") != std::string::npos);
  auto free = realize(3, 1);
  auto g = parse_gog(free.gog_text());
  CHECK(mu(g).mu == 3);
}

TEST_CASE("caps propagate") {
  Caps caps;
  caps.max_group_order = 100;
  CHECK_THROWS_AS(parse_gog("vertex A = Sym(5)\n", caps), CapExceeded);
  caps = Caps{};
  caps.max_subgroup_order = 60;
  CHECK_THROWS_AS(mu(parse_gog("vertex A = Sym(5)\n"), caps), CapExceeded);
}
