#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "twotrans/catalog.hpp"
#include "twotrans/cli.hpp"

using namespace twotrans;

namespace {

const Catalog& catalog() {
  static Catalog cat = Catalog::load(default_data_dir());
  return cat;
}

}  // namespace

TEST_CASE("table row counts match the source tables") {
  CHECK(catalog().table("trs-sphere").at("rows").size() == 9);
  CHECK(catalog().table("compact-class-a").at("rows").size() == 4);
  CHECK(catalog().table("compact-class-b").at("rows").size() == 5);
  CHECK(catalog().table("trs-proj").at("rows").size() == 16);
  CHECK(catalog().table("sh2trs").at("rows").size() == 4);
  CHECK(catalog().table("moufang-normalizer").at("rows").size() == 4);
  const auto& sections = catalog().table("trs-lin-grp").at("sections");
  CHECK(sections.at("a").size() == 7);
  CHECK(sections.at("b").size() == 7);
  CHECK(sections.at("c").size() == 3);
}

TEST_CASE("table id normalization") {
  CHECK(Catalog::normalize_table_id("Sh2Trs") == "sh2trs");
  CHECK(Catalog::normalize_table_id("CompactClass-a") == "compact-class-a");
  CHECK(Catalog::normalize_table_id("TRS_SPHERE") == "trs-sphere");
  CHECK_THROWS_AS(Catalog::normalize_table_id("nope"), std::invalid_argument);
}

TEST_CASE("lookups") {
  {
    Catalog::Query q;
    q.flag = "sphere_transitive";
    q.m = 16;
    auto hits = catalog().lookup(q);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].row.at("group") == "Spin(9)");
  }
  {
    Catalog::Query q;
    q.table = "Sh2Trs";
    auto hits = catalog().lookup(q);
    REQUIRE(hits.size() == 4);
    std::vector<std::string> groups;
    for (const auto& h : hits) groups.push_back(h.row.at("group"));
    CHECK(groups == std::vector<std::string>{"R^*", "C^*", "H^* = Sp(1)·S_0",
                                             "Sp(1)·S_a"});
  }
  {
    Catalog::Query q;
    q.table = "compact-class-a";
    q.space = "S^15";
    auto hits = catalog().lookup(q);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].row.at("group") == "F4(-20)");
  }
  {
    // the complex-structure filter reproduces the marked rows
    Catalog::Query q;
    q.table = "trs-lin-grp";
    auto hits = catalog().lookup(q);
    int marked = 0;
    for (const auto& h : hits)
      if (h.row.value("complex_structure", false)) ++marked;
    CHECK(marked == 6);
  }
}

TEST_CASE("catalog verification has zero failures") {
  CheckReport report = catalog().verify();
  for (const auto& item : report.items) {
    CAPTURE(item.name);
    CAPTURE(item.detail);
    CHECK(item.pass);
  }
  CHECK(report.failure_count() == 0);

  // the three exceptional sphere rows carry the advertised arithmetic
  bool spin9 = false, spin7 = false, g2 = false;
  for (const auto& item : report.items) {
    if (item.name == "sphere-orbit-dimension:Spin(9)")
      spin9 = item.pass && item.detail == "36 - 21 = 15 = m - 1";
    if (item.name == "sphere-orbit-dimension:Spin(7)")
      spin7 = item.pass && item.detail == "21 - 14 = 7 = m - 1";
    if (item.name == "sphere-orbit-dimension:G2")
      g2 = item.pass && item.detail == "14 - 8 = 6 = m - 1";
  }
  CHECK(spin9);
  CHECK(spin7);
  CHECK(g2);
}

TEST_CASE("spiral elements") {
  {
    Quat s = spiral_element(0.0, 1.5);
    CHECK(s.w == doctest::Approx(std::exp(1.5)).epsilon(1e-12));
    CHECK(s.x == 0.0);
    CHECK(s.w > 0);
  }
  {
    Quat s = spiral_element(3.7, 0.0);
    CHECK(s.w == doctest::Approx(1.0));
    CHECK(s.x == doctest::Approx(0.0));
  }
  {
    double t = std::log(2.0);
    Quat s = spiral_element(1.0, t);
    CHECK(s.w == doctest::Approx(2.0 * std::cos(t)).epsilon(1e-12));
    CHECK(s.x == doctest::Approx(2.0 * std::sin(t)).epsilon(1e-12));
  }
  for (double a : {-2.0, 0.0, 1.0, 3.5})
    CHECK(spiral_subgroup_law(a, 500, 1e-9, 99));
}

TEST_CASE("sharply transitive probes") {
  for (const char* kind : {"real", "complex", "quaternion"}) {
    auto r = sharply_transitive_probe(kind, 0.0, 1000, 1e-9, 4242);
    CAPTURE(kind);
    CHECK(r.pass);
    CHECK(r.samples == 1000);
  }
  for (double a : {-2.0, 0.0, 1.0, 3.5}) {
    auto r = sharply_transitive_probe("spiral", a, 1000, 1e-9, 4242);
    CAPTURE(a);
    CHECK(r.pass);
  }

  SUBCASE("deterministic for a fixed seed") {
    auto r1 = sharply_transitive_probe("spiral", 1.0, 200, 1e-9, 7);
    auto r2 = sharply_transitive_probe("spiral", 1.0, 200, 1e-9, 7);
    CHECK(r1.max_error == r2.max_error);
    auto r3 = sharply_transitive_probe("spiral", 1.0, 200, 1e-9, 8);
    CHECK(r1.max_error != r3.max_error);  // different draws
  }

  SUBCASE("an impossible tolerance fails honestly") {
    auto r = sharply_transitive_probe("spiral", 2.0, 100, 1e-18, 11);
    CHECK_FALSE(r.pass);
    CHECK_THROWS_AS(sharply_transitive_probe("spiral", 1.0, 10, -1.0, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(sharply_transitive_probe("nope", 1.0, 10, 1e-9, 1),
                    std::invalid_argument);
  }
}
