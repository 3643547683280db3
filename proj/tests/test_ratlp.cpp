#include <catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "subgrowth/ratlp.hpp"

using namespace subgrowth;

namespace {

RationalLP lp(std::vector<std::vector<long>> a, std::vector<long> b, std::vector<long> c) {
  RationalLP out;
  for (auto& row : a) {
    std::vector<Rational> r;
    for (long v : row) r.emplace_back(v);
    out.A.push_back(r);
  }
  for (long v : b) out.b.emplace_back(v);
  for (long v : c) out.c.emplace_back(v);
  return out;
}

Rational best_vertex(const RationalLP& p) {
  auto vs = enumerate_vertices(p);
  REQUIRE_FALSE(vs.empty());
  Rational best = vs.front().value;
  for (const auto& v : vs) best = std::max(best, v.value);
  return best;
}

}  // namespace

TEST_CASE("small programs") {
  auto simple = lp({{1, 1}}, {1}, {1, 1});
  auto s = solve_max(simple);
  REQUIRE(s.status == LPStatus::optimal);
  CHECK(s.value == 1);

  // x1 + 2 x2 = 1, x1 + 2 z2 = 1, maximize 2 x2 + z2
  auto reduced = lp({{1, 2, 0}, {1, 0, 2}}, {1, 1}, {0, 2, 1});
  auto r = solve_max(reduced);
  REQUIRE(r.status == LPStatus::optimal);
  CHECK(r.value == make_rational(3, 2));
  CHECK(r.point == std::vector<Rational>{0, make_rational(1, 2), make_rational(1, 2)});
  CHECK(best_vertex(reduced) == make_rational(3, 2));

  CHECK(solve_max(lp({{1}}, {-1}, {1})).status == LPStatus::infeasible);
  CHECK(solve_max(lp({{1, -1}}, {0}, {1, 0})).status == LPStatus::unbounded);

  auto one = lp({{1}}, {1}, {3});
  auto vs = enumerate_vertices(one);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].value == 3);
}

TEST_CASE("redundant and degenerate rows") {
  // the third row is the sum of the first two
  auto p = lp({{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 1, 1, 1}}, {1, 1, 2}, {1, 2, 3, 1});
  auto s = solve_max(p);
  REQUIRE(s.status == LPStatus::optimal);
  CHECK(s.value == 5);
  CHECK(s.redundant_rows == 1);
  CHECK(best_vertex(p) == 5);

  // inconsistent duplicate
  CHECK(solve_max(lp({{1, 1}, {1, 1}}, {1, 2}, {1, 1})).status == LPStatus::infeasible);
  // all-zero row with zero right-hand side
  CHECK(solve_max(lp({{0, 0}, {1, 2}}, {0, 2}, {1, 1})).value == 2);
}

TEST_CASE("optimality certificate") {
  auto p = lp({{1, 2, 1, 0}, {3, 1, 0, 1}}, {4, 6}, {3, 2, 0, 0});
  auto s = solve_max(p);
  REQUIRE(s.status == LPStatus::optimal);
  CHECK(p.feasible(s.point));
  CHECK(p.objective(s.point) == s.value);
  for (const auto& rc : s.reduced_costs) CHECK(sgn(rc) <= 0);
  CHECK(s.value == make_rational(36, 5));
}

TEST_CASE("simplex and vertex enumeration agree on random programs") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> coef(-3, 3), pos(0, 4);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t m = 1 + rng() % 3, n = m + 1 + rng() % 4;
    std::vector<std::vector<long>> a(m, std::vector<long>(n));
    for (auto& row : a)
      for (auto& v : row) v = coef(rng);
    // a bounded feasible region: add a normalization row with positive weights
    std::vector<long> norm(n);
    for (auto& v : norm) v = 1 + pos(rng);
    a.push_back(norm);
    // right-hand side from a random non-negative point keeps it feasible
    std::vector<long> x(n);
    for (auto& v : x) v = pos(rng);
    std::vector<long> b;
    for (const auto& row : a) {
      long s = 0;
      for (std::size_t j = 0; j < n; ++j) s += row[j] * x[j];
      b.push_back(s);
    }
    std::vector<long> c(n);
    for (auto& v : c) v = coef(rng);
    auto p = lp(a, b, c);
    auto s = solve_max(p);
    INFO("trial " << trial);
    REQUIRE(s.status == LPStatus::optimal);
    CHECK(p.feasible(s.point));
    CHECK(s.value == best_vertex(p));
  }
}

TEST_CASE("caps and dumps") {
  RationalLP big;
  big.A.assign(1, std::vector<Rational>(30, Rational(1)));
  big.b = {1};
  big.c.assign(30, Rational(0));
  CHECK_THROWS_AS(enumerate_vertices(big, 24), CapExceeded);

  auto p = lp({{1, 2, 0}, {1, 0, 2}}, {1, 1}, {0, 2, 1});
  std::ostringstream dump;
  solve_max(p, &dump);
  CHECK(dump.str().find('\t') != std::string::npos);
  std::ostringstream tsv;
  write_lp_tsv(p, tsv);
  CHECK(tsv.str().find("1/2") == std::string::npos);
  CHECK(tsv.str().find('\t') != std::string::npos);

  auto bad = p;
  bad.b.push_back(1);
  CHECK_THROWS_AS(bad.check(), InputError);
}

TEST_CASE("solutions are deterministic") {
  auto p = lp({{1, 1, 1, 1}, {1, -1, 0, 0}}, {1, 0}, {1, 1, 1, 1});
  auto a = solve_max(p), b = solve_max(p);
  CHECK(a.point == b.point);
  CHECK(a.basis == b.basis);
}
