#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "twotrans/coxeter.hpp"
#include "word_oracle.hpp"

using namespace twotrans;

TEST_CASE("named diagrams") {
  auto a3 = CoxeterDiagram::named("A3");
  CHECK(a3.rank() == 3);
  CHECK(a3.bond(0, 1) == 3);
  CHECK(a3.bond(1, 2) == 3);
  CHECK(a3.bond(0, 2) == 2);

  auto i27 = CoxeterDiagram::named("I2(7)");
  CHECK(i27.rank() == 2);
  CHECK(i27.bond(0, 1) == 7);

  auto b4 = CoxeterDiagram::named("b4");  // case-insensitive
  CHECK(b4.bond(2, 3) == 4);
  CHECK(CoxeterDiagram::named("C4").bond(2, 3) == 4);

  auto e8 = CoxeterDiagram::named("E8");
  CHECK(e8.neighbors(3) == std::vector<int>{1, 2, 4});

  CHECK(CoxeterDiagram::named("I2(inf)").has_infinite_bond());
  CHECK_THROWS_AS(CoxeterDiagram::named("Q5"), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterDiagram::named("D3"), std::invalid_argument);
}

TEST_CASE("document parsing and validation") {
  auto d = CoxeterDiagram::parse(R"({"nodes": 3, "bonds": [[1,2,3],[2,3,4]]})");
  CHECK(d.rank() == 3);
  CHECK(d.bond(1, 2) == 4);

  // round trip
  auto again = CoxeterDiagram::parse(d.to_document());
  CHECK(again.bond(0, 1) == 3);
  CHECK(again.bond(1, 2) == 4);

  // named shorthand accepted wherever a diagram is expected
  CHECK(CoxeterDiagram::parse("G2").bond(0, 1) == 6);

  // asymmetric matrix rejected
  CHECK_THROWS_AS(
      CoxeterDiagram::parse(R"({"matrix": [[1,3],[4,1]]})"), std::invalid_argument);
  // bad diagonal
  CHECK_THROWS_AS(
      CoxeterDiagram::parse(R"({"matrix": [[2,3],[3,1]]})"), std::invalid_argument);
  // bond order below 2
  CHECK_THROWS_AS(
      CoxeterDiagram::parse(R"({"nodes": 2, "bonds": [[1,2,1]]})"),
      std::invalid_argument);
  // conflicting duplicate
  CHECK_THROWS_AS(
      CoxeterDiagram::parse(R"({"nodes": 2, "bonds": [[1,2,3],[2,1,4]]})"),
      std::invalid_argument);
}

namespace {

std::vector<AlgebraicScalar> fundamental(int rank, int i) {
  std::vector<AlgebraicScalar> v(rank, AlgebraicScalar(0));
  v[i] = AlgebraicScalar(1);
  return v;
}

}  // namespace

TEST_CASE("simple reflections in fundamental-weight coordinates") {
  auto a1 = CoxeterDiagram::named("A1");
  auto r = simple_reflection(a1, 0, fundamental(1, 0));
  CHECK(r[0] == AlgebraicScalar(-1));

  auto a2 = CoxeterDiagram::named("A2");
  auto s1w1 = simple_reflection(a2, 0, fundamental(2, 0));
  CHECK(s1w1[0] == AlgebraicScalar(-1));
  CHECK(s1w1[1] == AlgebraicScalar(1));

  // s_i fixes the other fundamental weights
  auto a3 = CoxeterDiagram::named("A3");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      CHECK(simple_reflection(a3, i, fundamental(3, j)) == fundamental(3, j));
    }
}

TEST_CASE("reflections are involutions, including irrational bonds") {
  for (const char* name : {"B3", "H3", "I2(7)"}) {
    auto d = CoxeterDiagram::named(name);
    std::mt19937 gen(7);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<AlgebraicScalar> v;
      for (int i = 0; i < d.rank(); ++i) v.emplace_back(coeff(gen));
      for (int i = 0; i < d.rank(); ++i) {
        auto twice = simple_reflection(d, i, simple_reflection(d, i, v));
        CHECK(twice == v);
      }
    }
  }
}

TEST_CASE("reduced words and lengths") {
  auto a2 = CoxeterDiagram::named("A2");
  CHECK(is_reduced(a2, {0, 1, 0}));
  CHECK_FALSE(is_reduced(a2, {0, 0}));
  CHECK(element_length(a2, {0, 1, 0, 1, 0, 1}) == 0);  // (s1 s2)^3 = 1
  CHECK(element_length(a2, {0, 1, 0}) == 3);

  auto b2 = CoxeterDiagram::named("B2");
  CHECK(element_length(b2, {0, 1, 0, 1}) == 4);
  CHECK_FALSE(is_reduced(b2, {0, 1, 0, 1, 0}));

  // central-node star: s1 s2 s3 s1 is reduced when 1 is joined to 2 and 3
  auto star = CoxeterDiagram::parse(R"({"nodes": 3, "bonds": [[1,2,3],[1,3,3]]})");
  CHECK(is_reduced(star, {0, 1, 2, 0}));

  // infinite bonds: word operations still work
  auto inf = CoxeterDiagram::named("I2(inf)");
  CHECK(is_reduced(inf, {0, 1, 0, 1, 0, 1, 0}));
  CHECK(element_length(inf, {0, 0, 1, 1, 0}) == 1);
}

TEST_CASE("group orders") {
  CHECK(group_order(CoxeterDiagram::named("A3")).order == 24);
  CHECK(group_order(CoxeterDiagram::named("B3")).order == 48);
  CHECK(group_order(CoxeterDiagram::named("H4")).order == 14400);
  CHECK(group_order(CoxeterDiagram::named("F4")).order == 1152);
  CHECK(group_order(CoxeterDiagram::named("E8")).order == 696729600);
  CHECK(group_order(CoxeterDiagram::named("I2(12)")).order == 24);
  CHECK_FALSE(group_order(CoxeterDiagram::named("I2(inf)")).finite);

  // affine A2: positive semidefinite but not definite
  auto affine =
      CoxeterDiagram::parse(R"({"nodes": 3, "bonds": [[1,2,3],[2,3,3],[1,3,3]]})");
  CHECK_FALSE(group_order(affine).finite);

  // reducible: two commuting A1 factors
  auto a1a1 = CoxeterDiagram::parse(R"({"nodes": 2, "bonds": []})");
  CHECK(group_order(a1a1).order == 4);
  CHECK_FALSE(a1a1.is_irreducible());
}

TEST_CASE("breadth-first enumeration agrees with the order formula") {
  for (const char* name :
       {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "F4", "G2", "H3", "H4",
        "I2(5)", "I2(9)"}) {
    auto d = CoxeterDiagram::named(name);
    auto go = group_order(d);
    REQUIRE(go.finite);
    CHECK(mpz_class(static_cast<long>(oracle::bfs_group_size(d))) == go.order);
  }
}

TEST_CASE("longest element length equals the number of positive roots") {
  for (const char* name :
       {"A2", "A3", "A4", "B2", "B3", "B4", "D4", "F4", "G2", "H3", "H4"}) {
    auto d = CoxeterDiagram::named(name);
    CHECK(oracle::bfs_longest_length(d) == oracle::positive_root_count(d));
  }
}

TEST_CASE("length parity and reducedness criterion on random words") {
  std::mt19937 gen(2024);
  for (const char* name : {"A3", "B3", "H3", "I2(7)", "I2(inf)"}) {
    auto d = CoxeterDiagram::named(name);
    std::uniform_int_distribution<int> letter(0, d.rank() - 1);
    std::uniform_int_distribution<int> len(0, 14);
    for (int trial = 0; trial < 60; ++trial) {
      Word w;
      int L = len(gen);
      for (int i = 0; i < L; ++i) w.push_back(letter(gen));
      int l = element_length(d, w);
      CHECK(l <= static_cast<int>(w.size()));
      CHECK((l - static_cast<int>(w.size())) % 2 == 0);
      CHECK(is_reduced(d, w) == (l == static_cast<int>(w.size())));
      Word r = reduced_word(d, w);
      CHECK(static_cast<int>(r.size()) == l);
      CHECK(is_reduced(d, r));
    }
  }
}
