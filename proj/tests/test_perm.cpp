#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "subgrowth/subgroups.hpp"

using namespace subgrowth;

namespace {

Permutation P(std::string_view s, std::size_t d) { return parse_cycles(s, d); }

std::vector<FiniteGroup> small_groups() {
  return {trivial_group(),      cyclic_group(4),       cyclic_group(6),     klein_four(),
          symmetric_group(3),   dihedral_group(4),     dihedral_group(5),   dihedral_group(6),
          alternating_group(4), symmetric_group(4),
          generate(std::vector<Permutation>{P("(1 2)", 6), P("(1 2 3 4)", 6), P("(5 6)", 6)}, 6)};
}

// Subgroups by brute force: close every subset of at most three elements.
// Every subgroup of the test groups is 3-generated.
std::set<ElementList> brute_force_subgroups(const FiniteGroup& g) {
  std::set<ElementList> out;
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = a; b < g.order(); ++b)
      for (Element c = b; c < g.order(); ++c) {
        Element gens[] = {a, b, c};
        out.insert(close_subgroup(g, gens));
      }
  return out;
}

}  // namespace

TEST_CASE("composition and inverses") {
  auto id3 = Permutation::identity(3);
  auto c = P("(1 2 3)", 3);
  CHECK(compose(id3, c) == c);
  CHECK(compose(P("(1 2)", 2), P("(1 2)", 2)).is_identity());
  CHECK(compose(c, c) == P("(1 3 2)", 3));
  CHECK(compose(c, c.inverse()).is_identity());
  // p∘q applies q first
  CHECK(compose(P("(1 2)", 3), P("(2 3)", 3)) == P("(1 2 3)", 3));
  CHECK_THROWS_AS(compose(P("(1 2)", 2), id3), InputError);
}

TEST_CASE("cycle notation") {
  CHECK(to_cycles(P("(1 2)(3 4)", 4)) == "(1 2)(3 4)");
  CHECK(to_cycles(P("()", 4)) == "()");
  CHECK(P(" ( 1  2 ) ( 3 4 ) ", 4) == P("(1 2)(3 4)", 4));
  CHECK(P("(1,2,3)", 3) == P("(1 2 3)", 3));
  CHECK(P("(3 1 2)", 3) == P("(1 2 3)", 3));
  CHECK(P("(1 2 3 4 5)", 5).order() == 5);
  CHECK(P("(1 2)(3 4 5)", 5).order() == 6);
  CHECK_THROWS_AS(P("(1 2 1)", 3), InputError);
  CHECK_THROWS_AS(P("(1 4)", 3), InputError);
  CHECK_THROWS_AS(P("(1 2", 3), InputError);
  CHECK_THROWS_AS(P("(0 1)", 3), InputError);
}

TEST_CASE("generated groups") {
  CHECK(generate(std::vector<Permutation>{P("(1 2)", 3), P("(1 2 3)", 3)}, 3).order() == 6);
  CHECK(generate(std::vector<Permutation>{}, 4).order() == 1);
  CHECK(generate(std::vector<Permutation>{P("(1 2 3 4 5)", 5), P("(2 5)(3 4)", 5)}, 5).order() == 10);
  CHECK(symmetric_group(5).order() == 120);
  CHECK(alternating_group(5).order() == 60);
  CHECK(alternating_group(6).order() == 360);
  CHECK(dihedral_group(4).order() == 8);
  CHECK_THROWS_AS(symmetric_group(8, 1000), CapExceeded);

  auto g = symmetric_group(4);
  CHECK(g.identity() == 0);
  CHECK(g.element(0).is_identity());
  CHECK(std::is_sorted(g.elements().begin(), g.elements().end()));
  for (Element a = 0; a < g.order(); ++a) {
    CHECK(g.multiply(a, g.inverse(a)) == 0);
    CHECK(g.element(g.multiply(a, 5)) == compose(g.element(a), g.element(5)));
  }
}

TEST_CASE("conjugacy, centralizers and normalizers") {
  auto s4 = symmetric_group(4);
  Element t = s4.index_of(P("(1 2)", 4));
  CHECK(conjugacy_class(s4, t).size() == 6);
  Element c3 = s4.index_of(P("(1 2 3)", 4));
  Element gens[] = {c3};
  CHECK(normalizer(s4, close_subgroup(s4, gens)).size() == 6);
  CHECK(centralizer(s4, s4.identity()).size() == 24);
  for (const auto& g : small_groups())
    for (Element x = 0; x < g.order(); ++x)
      CHECK(conjugacy_class(g, x).size() * centralizer(g, x).size() == g.order());
}

TEST_CASE("subgroup counts") {
  CHECK(all_subgroups(symmetric_group(3)).size() == 6);
  CHECK(all_subgroups(trivial_group()).size() == 1);
  CHECK(all_subgroups(symmetric_group(4)).size() == 30);
  CHECK(all_subgroups(symmetric_group(5)).size() == 156);
  CHECK(all_subgroups(alternating_group(5)).size() == 59);

  CHECK(subgroup_classes(symmetric_group(4)).size() == 11);
  auto s3 = subgroup_classes(symmetric_group(3));
  REQUIRE(s3.size() == 4);
  std::vector<std::size_t> orders;
  for (const auto& c : s3.classes()) orders.push_back(c.order);
  CHECK(orders == std::vector<std::size_t>{6, 3, 2, 1});
  CHECK(subgroup_classes(cyclic_group(4)).size() == 3);
}

TEST_CASE("subgroup enumeration agrees with brute force") {
  for (const auto& g : small_groups()) {
    INFO(g.label() << " of order " << g.order());
    auto lat = subgroup_classes(g);
    auto listed = lat.all_subgroups();
    std::set<ElementList> as_set(listed.begin(), listed.end());
    CHECK(as_set.size() == listed.size());
    CHECK(as_set == brute_force_subgroups(g));
    std::size_t total = 0;
    for (const auto& c : lat.classes()) {
      total += c.class_size;
      CHECK(g.order() % c.order == 0);
      CHECK(c.order * c.index == g.order());
      CHECK(c.aut_count * c.order == c.normalizer_order);
      CHECK(c.index % c.aut_count == 0);
      CHECK(c.class_size * c.normalizer_order == g.order());
      for (const auto& m : lat.members(c.class_id)) {
        bool conj = false;
        for (Element a = 0; a < g.order() && !conj; ++a) conj = conjugate_subgroup(g, c.representative, a) == m;
        CHECK(conj);
      }
    }
    CHECK(total == lat.subgroup_count());
  }
}

TEST_CASE("class order is deterministic") {
  auto a = subgroup_classes(symmetric_group(4));
  auto b = subgroup_classes(symmetric_group(4));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].representative == b[i].representative);
  for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].order >= a[i].order);
}

TEST_CASE("coset actions") {
  auto s3 = symmetric_group(3);
  auto lat = subgroup_classes(s3);
  auto fixed = [](const Permutation& p) { return p.fixed_points(); };

  std::vector<Permutation> a3gen{P("(1 2 3)", 3)};
  auto a3 = coset_action(lat, lat[lat.class_of_generated(a3gen)]);
  CHECK(a3.degree() == 2);
  CHECK(fixed(a3.image(s3.index_of(P("(1 2)", 3)))) == 0);
  CHECK(fixed(a3.image(s3.index_of(P("(1 2 3)", 3)))) == 2);

  auto whole = coset_action(lat, lat[0]);
  CHECK(whole.degree() == 1);

  auto regular = coset_action(lat, lat[lat.size() - 1]);
  CHECK(regular.degree() == 6);
  CHECK(fixed(regular.image(s3.index_of(P("(1 2)", 3)))) == 0);
}

TEST_CASE("coset actions are transitive homomorphisms with the right stabilizer") {
  for (const auto& g : small_groups()) {
    auto lat = subgroup_classes(g);
    for (const auto& c : lat.classes()) {
      auto act = coset_action(lat, c);
      for (Element a = 0; a < g.order(); ++a)
        for (Element b = 0; b < g.order(); b = static_cast<Element>(b + 3))
          CHECK(act.image(g.multiply(a, b)) == compose(act.image(a), act.image(b)));
      std::set<Point> orbit;
      ElementList stab;
      for (Element a = 0; a < g.order(); ++a) {
        orbit.insert(act.act(a, 0));
        if (act.act(a, 0) == 0) stab.push_back(a);
      }
      CHECK(orbit.size() == c.index);
      CHECK(stab == c.representative);
    }
  }
}
