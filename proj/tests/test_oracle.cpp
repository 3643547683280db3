#include <catch_amalgamated.hpp>

#include "subgrowth/corpus.hpp"
#include "subgrowth/oracle.hpp"

using namespace subgrowth;

namespace {

GraphOfGroups corpus_graph(std::string_view name) {
  const CorpusEntry* e = find_corpus(name);
  REQUIRE(e != nullptr);
  return parse_gog(e->text);
}

// Subgroup counts of a free group of rank r from |Hom(F_r, S_n)| = n!^r.
std::vector<BigInt> free_group_subgroups(unsigned r, std::size_t n_max) {
  std::vector<BigInt> a(n_max + 1), t(n_max + 1), s(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) a[n] = pow(factorial(n), r);
  for (std::size_t n = 1; n <= n_max; ++n) {
    t[n] = a[n];
    for (std::size_t j = 1; j < n; ++j) t[n] -= binomial(n - 1, j - 1) * t[j] * a[n - j];
    s[n] = t[n] / factorial(n - 1);
  }
  return s;
}

}  // namespace

TEST_CASE("per-vertex counts") {
  auto c2 = build_catalog(cyclic_group(2));
  // classes are the whole group then the trivial subgroup
  CHECK(vertex_hom_count(c2, {0, 2}, 4) == 3);
  CHECK(vertex_hom_count(c2, {2, 1}, 4) == 6);
  CHECK(vertex_hom_count(c2, {4, 0}, 4) == 1);
  BigInt total = 0;
  for (const auto& eta : vertex_types(c2, 4)) total += vertex_hom_count(c2, eta, 4);
  CHECK(total == 10);

  auto s3 = build_catalog(symmetric_group(3));
  total = 0;
  for (const auto& eta : vertex_types(s3, 3)) total += vertex_hom_count(s3, eta, 3);
  CHECK(total == 10);
  CHECK_THROWS_AS(vertex_hom_count(s3, {1, 0, 0, 0}, 3), InputError);
}

TEST_CASE("type sums on small graphs") {
  auto f1 = hom_count_typesum(free_group(1), 6);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(f1.totals[n] == factorial(n));
  for (std::size_t n = 1; n <= 6; ++n) CHECK(f1.subgroups[n] == 1);

  auto modular = hom_count_typesum(corpus_graph("modular"), 6);
  CHECK(modular.totals[3] == 12);
  CHECK(modular.subgroups[1] == 1);
  CHECK(modular.subgroups[2] == 1);
  CHECK(modular.subgroups[3] == 4);
  CHECK(modular.subgroups[4] == 8);
  CHECK(modular.subgroups[5] == 5);
  CHECK(modular.subgroups[6] == 22);

  auto f2 = hom_count_typesum(free_group(2), 6);
  auto hall = free_group_subgroups(2, 6);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(f2.subgroups[n] == hall[n]);
  CHECK(f2.subgroups[5] == 461);
  auto f3 = hom_count_typesum(free_group(3), 4);
  auto hall3 = free_group_subgroups(3, 4);
  for (std::size_t n = 1; n <= 4; ++n) CHECK(f3.subgroups[n] == hall3[n]);
}

TEST_CASE("free products multiply counts") {
  auto c2 = build_catalog(cyclic_group(2));
  auto c3 = build_catalog(cyclic_group(3));
  auto homs = [](const RepCatalog& cat, std::size_t n) {
    BigInt t = 0;
    for (const auto& eta : vertex_types(cat, n)) t += vertex_hom_count(cat, eta, n);
    return t;
  };
  auto g = free_product({cyclic_group(2), cyclic_group(3)});
  for (std::size_t n = 1; n <= 6; ++n) CHECK(hom_count_typesum(g, n).total == homs(c2, n) * homs(c3, n));
}

TEST_CASE("per-type ledger") {
  auto led = hom_count_typesum(corpus_graph("s4_klein_amalgam"), 4, {}, true);
  BigInt sum = 0;
  for (const auto& tc : led.per_type) {
    CHECK(tc.count > 0);
    CHECK(tc.type.n == 4);
    sum += tc.count;
  }
  CHECK(sum == led.total);
}

TEST_CASE("type sum agrees with brute-force enumeration") {
  for (const auto& e : corpus()) {
    auto g = parse_gog(e.text);
    const std::size_t n_max = 5;
    auto led = hom_count_typesum(g, n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
      INFO(e.name << " n=" << n);
      CHECK(hom_count_enumerate(g, n) == led.totals[n]);
    }
  }
}

TEST_CASE("enumeration is independent of the spanning tree and thread count") {
  auto g = corpus_graph("triangle_d10");
  BigInt base = hom_count_enumerate(g, 4);
  CHECK(hom_count_enumerate(g, 4, {}, std::vector<std::size_t>{1, 2}) == base);
  CHECK(hom_count_enumerate(g, 4, {}, std::vector<std::size_t>{0, 2}) == base);
  CHECK_THROWS_AS(hom_count_enumerate(g, 4, {}, std::vector<std::size_t>{0}), InputError);
  Caps threaded;
  threaded.threads = 4;
  CHECK(hom_count_enumerate(g, 4, threaded) == base);
  CHECK(hom_count_enumerate(corpus_graph("hnn_s3"), 4, threaded) == hom_count_enumerate(corpus_graph("hnn_s3"), 4));
}

TEST_CASE("degree one") {
  for (const auto& e : corpus()) {
    auto g = parse_gog(e.text);
    CHECK(hom_count_typesum(g, 1).total == 1);
    CHECK(hom_count_enumerate(g, 1) == 1);
  }
}

TEST_CASE("oracle caps") {
  auto g = free_group(2);
  CHECK_THROWS_AS(hom_count_typesum(g, 9), CapExceeded);
  CHECK_THROWS_AS(hom_count_enumerate(g, 7), CapExceeded);
  CHECK_THROWS_AS(hom_count_typesum(g, 0), InputError);
  Caps small;
  small.max_enumerate_group_order = 6;
  CHECK_THROWS_AS(hom_count_enumerate(corpus_graph("triangle_d10"), 3, small), CapExceeded);
}

TEST_CASE("slope diagnostic") {
  auto rows = slope_diagnostic(free_group(2), 6);
  REQUIRE(rows.size() == 5);
  // log(n!^2)/(n log n) − 1 rises towards 1
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].slope > rows[i - 1].slope);
  CHECK(rows.back().slope < 1.0);
}
