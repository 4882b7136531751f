#include <doctest.h>

#include <fstream>
#include <set>

#include "autocomm/automorphism.hpp"
#include "autocomm/catalog.hpp"
#include "autocomm/group_io.hpp"
#include "support/oracles.hpp"

using namespace autocomm;

namespace {

std::string data_path(const std::string& name) {
  return std::string(AUTOCOMM_TEST_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("constructors produce the advertised groups") {
  CHECK(build_group(GroupSpec::parse("cyclic:1")).order == 1);

  const FiniteGroup d4 = build_group(GroupSpec::parse("dihedral:4"));
  CHECK(d4.order == 8);
  CHECK(center(d4).size() == 2);

  const FiniteGroup s3 = build_group(GroupSpec::parse("symmetric:3"));
  CHECK(s3.order == 6);
  CHECK(center(s3).size() == 1);
  CHECK(is_isomorphic(s3, make_group(oracles::s3_table())).has_value());

  const FiniteGroup a4 = build_group(GroupSpec::parse("alternating:4"));
  CHECK(a4.order == 12);
  CHECK_FALSE(a4.is_abelian());

  const FiniteGroup q8 = build_group(GroupSpec::parse("dicyclic:2"));
  CHECK(q8.name == "Q8");
  int involutions = 0;
  for (int x = 1; x < 8; ++x)
    if (q8.element_order(x) == 2) ++involutions;
  CHECK(involutions == 1);

  const FiniteGroup e9 = build_group(GroupSpec::parse("elementary_abelian:3,2"));
  CHECK(e9.order == 9);
  for (int x = 1; x < 9; ++x) CHECK(e9.element_order(x) == 3);

  const FiniteGroup z12 = build_group(GroupSpec::parse("product:cyclic:3,cyclic:4"));
  CHECK(z12.order == 12);
  CHECK(is_isomorphic(z12, cyclic_group(12)).has_value());
}

TEST_CASE("spec parsing") {
  CHECK(GroupSpec::parse("cyclic:6").str() == "cyclic:6");
  CHECK(GroupSpec::parse("product:cyclic:3,cyclic:4").str() == "product:cyclic:3,cyclic:4");
  const GroupSpec nested = GroupSpec::parse("product:product:cyclic:2,cyclic:3,cyclic:5");
  CHECK(nested.str() == "product:product:cyclic:2,cyclic:3,cyclic:5");
  CHECK(build_group(nested).order == 30);
  CHECK(GroupSpec::parse("file:some/path.json").path == "some/path.json");

  CHECK_THROWS_AS(GroupSpec::parse("frobnicate:3"), InvalidSpecError);
  CHECK_THROWS_AS(GroupSpec::parse("cyclic"), InvalidSpecError);
  CHECK_THROWS_AS(GroupSpec::parse("cyclic:x"), InvalidSpecError);
  CHECK_THROWS_AS(GroupSpec::parse("cyclic:3,4"), InvalidSpecError);
  CHECK_THROWS_AS(GroupSpec::parse("product:cyclic:3"), InvalidSpecError);
  CHECK_THROWS_AS(GroupSpec::parse("dicyclic:1"), InvalidSpecError);
  CHECK_THROWS_AS(build_group(GroupSpec::parse("symmetric:9")), InvalidSpecError);
  CHECK_THROWS_AS(build_group(GroupSpec::parse("elementary_abelian:4,2")), InvalidSpecError);
}

TEST_CASE("corpus composition") {
  SUBCASE("max order 1") {
    const auto corpus = standard_corpus(1);
    REQUIRE(corpus.size() == 1);
    CHECK(corpus[0].order == 1);
  }
  SUBCASE("max order 6 holds Z6 and S3 exactly once each") {
    const auto corpus = standard_corpus(6);
    int z6 = 0, s3 = 0, order6 = 0;
    for (const FiniteGroup& g : corpus) {
      if (g.order == 6) ++order6;
      if (g.name == "Z6") ++z6;
      if (g.name == "S3") ++s3;
    }
    CHECK(z6 == 1);
    CHECK(s3 == 1);
    CHECK(order6 == 2);
  }
  SUBCASE("max order 8 holds all five order-8 types") {
    const auto corpus = standard_corpus(8);
    std::set<std::string> names;
    for (const FiniteGroup& g : corpus)
      if (g.order == 8) names.insert(g.name);
    CHECK(names == std::set<std::string>{"Z8", "Z2xZ4", "Z2^3", "D4", "Q8"});
  }
  SUBCASE("corpus is duplicate-free under isomorphism") {
    const auto corpus = standard_corpus(16);
    for (size_t i = 0; i < corpus.size(); ++i)
      for (size_t j = i + 1; j < corpus.size(); ++j) {
        if (corpus[i].order != corpus[j].order) continue;
        CAPTURE(corpus[i].name);
        CAPTURE(corpus[j].name);
        CHECK_FALSE(is_isomorphic(corpus[i], corpus[j]).has_value());
      }
  }
  SUBCASE("sorted by order then name") {
    const auto corpus = standard_corpus(16);
    for (size_t i = 1; i < corpus.size(); ++i) {
      const bool ordered = corpus[i - 1].order < corpus[i].order ||
                           (corpus[i - 1].order == corpus[i].order &&
                            corpus[i - 1].name < corpus[i].name);
      CHECK(ordered);
    }
  }
}

TEST_CASE("cyclic groups have phi(n) automorphisms") {
  for (int n = 1; n <= 24; ++n)
    CHECK(enumerate_automorphisms(cyclic_group(n)).order() == oracles::totient(n));
}

TEST_CASE("table-format files load and validate") {
  const FiniteGroup z4 = load_group_file(data_path("z4_table.json"));
  CHECK(z4.order == 4);
  CHECK(z4.name == "Z4-from-file");
  CHECK(is_isomorphic(z4, cyclic_group(4)).has_value());

  CHECK_THROWS_AS(load_group_file(data_path("corrupt_table.json")), ValidationError);
  CHECK_THROWS_AS(load_group_file(data_path("missing.json")), FileFormatError);
}

TEST_CASE("generator-format files close under composition") {
  const FiniteGroup s3 = load_group_file(data_path("s3_perm.json"));
  CHECK(s3.order == 6);
  CHECK(is_isomorphic(s3, symmetric_group(3)).has_value());

  SUBCASE("closure cap") {
    Limits limits;
    limits.closure_cap = 4;
    CHECK_THROWS_AS(load_group_file(data_path("s3_perm.json"), limits), ClosureCapError);
  }
  SUBCASE("bad generator entries") {
    const std::string path = "/tmp/autocomm_bad_gen.json";
    std::ofstream(path) << R"({"name":"bad","degree":3,"generators":[[1,1,0]]})";
    CHECK_THROWS_AS(load_group_file(path), FileFormatError);
  }
}

TEST_CASE("every corpus group passes full construction validation") {
  for (const FiniteGroup& g : standard_corpus(16)) {
    std::vector<std::vector<int>> t(g.order, std::vector<int>(g.order));
    for (int a = 0; a < g.order; ++a)
      for (int b = 0; b < g.order; ++b) t[a][b] = g.mul(a, b);
    CHECK_NOTHROW(make_group(t, g.labels));
  }
}
