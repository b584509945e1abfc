#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "twotrans/coset.hpp"
#include "word_oracle.hpp"

using namespace twotrans;

namespace {

std::vector<long long> class_sizes(const DoubleCosetDecomposition& d) {
  std::vector<long long> out;
  for (const auto& c : d.classes) out.push_back(c.size);
  return out;
}

}  // namespace

TEST_CASE("weight orbit sizes") {
  CHECK(WeightOrbit(CoxeterDiagram::named("A3"), 0).size() == 4);
  CHECK(WeightOrbit(CoxeterDiagram::named("B3"), 0).size() == 6);
  CHECK(WeightOrbit(CoxeterDiagram::named("E7"), 6).size() == 56);
  CHECK(WeightOrbit(CoxeterDiagram::named("H3"), 0).size() == 20);
  CHECK_THROWS_AS(WeightOrbit(CoxeterDiagram::named("I2(inf)"), 0),
                  std::domain_error);
}

TEST_CASE("orbit size equals the parabolic index") {
  for (const char* name : {"A2", "A3", "B2", "B3", "G2", "H3", "I2(8)"}) {
    auto d = CoxeterDiagram::named(name);
    mpz_class order = group_order(d).order;
    for (int node = 0; node < d.rank(); ++node) {
      WeightOrbit orbit(d, node);
      // order of the parabolic: product over components of the subdiagram
      std::vector<unsigned> bonds;
      std::vector<int> keep;
      for (int i = 0; i < d.rank(); ++i)
        if (i != node) keep.push_back(i);
      int m = static_cast<int>(keep.size());
      mpz_class parabolic = 1;
      if (m > 0) {
        std::vector<unsigned> sub(static_cast<size_t>(m) * m, 2);
        for (int a = 0; a < m; ++a) {
          sub[a * m + a] = 1;
          for (int b = 0; b < m; ++b)
            if (a != b) sub[a * m + b] = d.bond(keep[a], keep[b]);
        }
        parabolic = group_order(CoxeterDiagram(m, sub)).order;
      }
      CHECK(mpz_class(orbit.size()) * parabolic == order);
    }
  }
}

TEST_CASE("orbit points are exact weight vectors") {
  WeightOrbit orbit(CoxeterDiagram::named("A3"), 0);
  auto base = orbit.point(WeightOrbit::kBase);
  CHECK(base == std::vector<AlgebraicScalar>{AlgebraicScalar(1), AlgebraicScalar(0),
                                             AlgebraicScalar(0)});
  int neighbor = orbit.generator_perms()[0][WeightOrbit::kBase];
  CHECK(orbit.point(neighbor) ==
        std::vector<AlgebraicScalar>{AlgebraicScalar(-1), AlgebraicScalar(1),
                                     AlgebraicScalar(0)});
  // exact path: the icosahedral orbit lives in the golden field
  WeightOrbit h3(CoxeterDiagram::named("H3"), 0);
  auto p = h3.point(h3.generator_perms()[0][WeightOrbit::kBase]);
  CHECK(p[0] == AlgebraicScalar(-1));
  CHECK_FALSE(p[1].is_rational());
}

TEST_CASE("sweep bounds") {
  CHECK_THROWS_AS(classify(9, 12), std::invalid_argument);
  CHECK_THROWS_AS(classify(4, 2), std::invalid_argument);
}

TEST_CASE("generator permutations are involutions") {
  WeightOrbit orbit(CoxeterDiagram::named("B3"), 0);
  for (const auto& perm : orbit.generator_perms()) {
    for (int p = 0; p < orbit.size(); ++p) CHECK(perm[perm[p]] == p);
  }
}

TEST_CASE("double coset decompositions of small orbits") {
  auto a2 = double_cosets(CoxeterDiagram::named("A2"), 0);
  CHECK(class_sizes(a2) == std::vector<long long>{1, 2});

  auto b3 = double_cosets(CoxeterDiagram::named("B3"), 0);
  CHECK(class_sizes(b3) == std::vector<long long>{1, 4, 1});

  auto a3mid = double_cosets(CoxeterDiagram::named("A3"), 1);
  CHECK(a3mid.classes.size() == 3);

  SUBCASE("classes partition the orbit") {
    WeightOrbit orbit(CoxeterDiagram::named("B3"), 0);
    auto decomp = double_cosets(orbit);
    long long total = 0;
    for (const auto& c : decomp.classes) total += c.size;
    CHECK(total == orbit.size());
    CHECK(decomp.classes[0].size == 1);  // the base weight is its own class
    CHECK(decomp.class_of_point[WeightOrbit::kBase] == 0);
  }

  SUBCASE("representatives are reduced and land in their class") {
    for (const char* name : {"A3", "B3", "H3"}) {
      auto d = CoxeterDiagram::named(name);
      for (int node = 0; node < d.rank(); ++node) {
        WeightOrbit orbit(d, node);
        auto decomp = double_cosets(orbit);
        for (size_t cls = 0; cls < decomp.classes.size(); ++cls) {
          const auto& rep = decomp.classes[cls].representative;
          CHECK(is_reduced(d, rep));
          CHECK(static_cast<int>(rep.size()) == decomp.classes[cls].min_length);
          int image = orbit.apply_word(rep, WeightOrbit::kBase);
          CHECK(decomp.class_of_point[image] == static_cast<int>(cls));
        }
      }
    }
  }
}

TEST_CASE("class counts match the end-node flip of the A series") {
  for (int k = 2; k <= 5; ++k) {
    auto d = CoxeterDiagram::named("A" + std::to_string(k));
    for (int node = 0; node < d.rank(); ++node) {
      int mirrored = d.rank() - 1 - node;
      CHECK(double_cosets(d, node).classes.size() ==
            double_cosets(d, mirrored).classes.size());
    }
  }
}

TEST_CASE("orbit method agrees with the word-level brute force") {
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "G2", "I2(5)", "I2(7)"}) {
    auto d = CoxeterDiagram::named(name);
    for (int node = 0; node < d.rank(); ++node) {
      auto decomp = double_cosets(d, node);
      long long brute = oracle::word_level_double_coset_count(d, node);
      CHECK_MESSAGE(static_cast<long long>(decomp.classes.size()) == brute,
                    name << " node " << node + 1);
    }
  }
}

TEST_CASE("two-transitivity predicate") {
  for (int k = 2; k <= 5; ++k) {
    auto d = CoxeterDiagram::named("A" + std::to_string(k));
    CHECK(is_two_transitive(d, 0));
    CHECK(is_two_transitive(d, k - 1));
  }
  CHECK_FALSE(is_two_transitive(CoxeterDiagram::named("A3"), 1));
  CHECK_FALSE(is_two_transitive(CoxeterDiagram::named("B3"), 0));
  // central node of D4 has three neighbors
  CHECK_FALSE(is_two_transitive(CoxeterDiagram::named("D4"), 1));
  // dihedral actions on m >= 4 points are never 2-transitive
  CHECK_FALSE(is_two_transitive(CoxeterDiagram::named("G2"), 0));
  CHECK_FALSE(is_two_transitive(CoxeterDiagram::named("I2(7)"), 0));
}

TEST_CASE("witness words for the three violation patterns") {
  // star: node 1 adjacent to both 2 and 3
  auto star = CoxeterDiagram::parse(R"({"nodes": 3, "bonds": [[1,2,3],[1,3,3]]})");
  CHECK(witness_word(star, WitnessCase::kBranchAtDistinguished) ==
        Word{0, 1, 2, 0});

  // path 1-2-3 where 3 carries two extra neighbors 4, 5
  auto tail = CoxeterDiagram::parse(
      R"({"nodes": 5, "bonds": [[1,2,3],[2,3,3],[3,4,3],[3,5,3]]})");
  CHECK(witness_word(tail, WitnessCase::kBranchAtInterior) ==
        Word{0, 1, 2, 3, 4, 2, 1, 0});

  // bond of order 4 at the far end of a path
  auto b3 = CoxeterDiagram::named("B3");
  CHECK(witness_word(b3, WitnessCase::kMultipleBond) == Word{0, 1, 2, 1, 0});

  SUBCASE("witness words are reduced and exhibit a third class") {
    struct Item {
      CoxeterDiagram d;
      WitnessCase c;
    };
    std::vector<Item> items{{star, WitnessCase::kBranchAtDistinguished},
                            {tail, WitnessCase::kBranchAtInterior},
                            {b3, WitnessCase::kMultipleBond}};
    for (const auto& item : items) {
      Word w = witness_word(item.d, item.c);
      CHECK(is_reduced(item.d, w));
      WeightOrbit orbit(item.d, 0);
      auto decomp = double_cosets(orbit);
      CHECK(decomp.classes.size() >= 3);
      int base_class = decomp.class_of_point[WeightOrbit::kBase];
      int s1_class =
          decomp.class_of_point[orbit.apply_word({0}, WeightOrbit::kBase)];
      int witness_class =
          decomp.class_of_point[orbit.apply_word(w, WeightOrbit::kBase)];
      CHECK(witness_class != base_class);
      CHECK(witness_class != s1_class);
    }
  }

  SUBCASE("missing pattern raises an error") {
    auto a3 = CoxeterDiagram::named("A3");
    CHECK_THROWS_AS(witness_word(a3, WitnessCase::kBranchAtDistinguished),
                    std::domain_error);
    CHECK_THROWS_AS(witness_word(a3, WitnessCase::kMultipleBond),
                    std::domain_error);
    CHECK_THROWS_AS(witness_word(a3, WitnessCase::kBranchAtInterior),
                    std::domain_error);
  }
}

TEST_CASE("classification sweep at desk scale") {
  auto rows = classify(4, 12);
  std::vector<std::pair<std::string, int>> got;
  for (const auto& r : rows) {
    CHECK(r.two_transitive);
    got.emplace_back(r.diagram, r.node + 1);
  }
  std::vector<std::pair<std::string, int>> expected{
      {"A1", 1}, {"A2", 1}, {"A2", 2}, {"A3", 1}, {"A3", 3}, {"A4", 1}, {"A4", 4}};
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  CHECK(got == expected);

  // the rank-1 action is reported but flagged
  for (const auto& r : rows)
    CHECK(r.degenerate == (r.diagram == "A1"));

  SUBCASE("full table keeps every pair with its class count") {
    auto all = classify_all_rows(3, 8);
    long long pairs = 0;
    for (const auto& r : all) {
      CHECK(r.class_count >= 2);
      CHECK(r.two_transitive == (r.class_count == 2));
      ++pairs;
    }
    // A1 A2 A3 B2 B3 G2 H3 I2(5) I2(7) I2(8): ranks 1+2+3+2+3+2+3+2+2+2
    CHECK(pairs == 22);
  }
}
