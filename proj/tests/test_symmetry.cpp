#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "coxfold/symmetry.hpp"

using namespace coxfold;

TEST_CASE("validate_symmetry accepts palindromic flips") {
  CHECK_NOTHROW(corpus::perm_of(corpus::a_n(3), {{"a1", "a3"}, {"a3", "a1"}}));
  CHECK_NOTHROW(corpus::perm_of(corpus::f4(),
                                {{"a1", "a4"}, {"a4", "a1"}, {"a2", "a3"}, {"a3", "a2"}}));
}

TEST_CASE("validate_symmetry reports a violating pair") {
  const CoxeterGraph g = corpus::path({"a1", "a2", "a3"}, {3, 4});
  try {
    validate_symmetry(g, {2, 1, 0});
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()).find("(a1,a2)") != std::string::npos);
  }
}

TEST_CASE("validate_symmetry rejects non-bijections") {
  const CoxeterGraph g = corpus::a_n(2);
  CHECK_THROWS_AS(validate_symmetry(g, {0, 0}), parse_error);
  CHECK_THROWS_AS(validate_symmetry(g, {0}), parse_error);
}

TEST_CASE("symmetry JSON schema: missing keys are fixed points") {
  const CoxeterGraph g = corpus::a_n(3);
  const Symmetry s = symmetry_from_json(
      g, nlohmann::json::parse(R"({"map":{"a1":"a3","a3":"a1"}})"));
  CHECK(s(g.index_of("a2")) == g.index_of("a2"));
  CHECK(s(g.index_of("a1")) == g.index_of("a3"));
}

TEST_CASE("generate_group orders") {
  const CoxeterGraph a3 = corpus::a_n(3);
  CHECK(corpus::flip_a_n(a3, 3).order() == 2);
  const CoxeterGraph d4 = corpus::d4();
  CHECK(corpus::group_of(d4, {{{"x1", "x2"}, {"x2", "x3"}, {"x3", "x1"}}}).order() == 3);
  CHECK(corpus::trivial_group(a3).order() == 1);
  CHECK(corpus::trivial_group(a3).elements[0].is_identity());
}

TEST_CASE("generate_group puts the identity first and closes under the operations") {
  for (const auto& test_case : corpus::corpus_cases()) {
    const SymmetryGroup& group = test_case.group;
    CAPTURE(test_case.name);
    REQUIRE(!group.elements.empty());
    CHECK(group.elements[0].is_identity());
    for (const Symmetry& a : group.elements) {
      CHECK_NOTHROW(validate_symmetry(group.graph, a.perm));
      CHECK(std::find(group.elements.begin(), group.elements.end(), inverse(a)) !=
            group.elements.end());
      for (const Symmetry& b : group.elements)
        CHECK(std::find(group.elements.begin(), group.elements.end(), compose(a, b)) !=
              group.elements.end());
    }
  }
}

TEST_CASE("orbit examples") {
  const CoxeterGraph a3 = corpus::a_n(3);
  const auto part = orbits(corpus::flip_a_n(a3, 3));
  REQUIRE(part.orbits.size() == 2);
  CHECK(part.orbits[0] == std::vector<int>{a3.index_of("a1"), a3.index_of("a3")});
  CHECK(part.orbits[1] == std::vector<int>{a3.index_of("a2")});

  const CoxeterGraph f4 = corpus::f4();
  const auto f4_orbits =
      orbits(corpus::group_of(f4, {{{"a1", "a4"}, {"a4", "a1"}, {"a2", "a3"}, {"a3", "a2"}}}));
  REQUIRE(f4_orbits.orbits.size() == 2);
  CHECK(f4_orbits.orbits[0] == std::vector<int>{f4.index_of("a1"), f4.index_of("a4")});

  const CoxeterGraph d4 = corpus::d4();
  const auto d4_orbits =
      orbits(corpus::group_of(d4, {{{"x1", "x2"}, {"x2", "x3"}, {"x3", "x1"}}}));
  REQUIRE(d4_orbits.orbits.size() == 2);
  CHECK(d4_orbits.orbits[0] == std::vector<int>{d4.index_of("c")});
  CHECK(d4_orbits.orbits[1].size() == 3);
}

TEST_CASE("orbit properties: sizes divide |G|, orbits are G-invariant, trivial G refines") {
  for (const auto& test_case : corpus::corpus_cases()) {
    const SymmetryGroup& group = test_case.group;
    const auto part = orbits(group);
    CAPTURE(test_case.name);
    std::size_t total = 0;
    for (const auto& orbit : part.orbits) {
      total += orbit.size();
      CHECK(group.order() % orbit.size() == 0);
      for (const Symmetry& g : group.elements)
        for (int s : orbit)
          CHECK(std::binary_search(orbit.begin(), orbit.end(), g(s)));
    }
    CHECK(total == static_cast<std::size_t>(group.graph.size()));
    if (group.is_trivial())
      for (const auto& orbit : part.orbits) CHECK(orbit.size() == 1);
  }
}

TEST_CASE("automorphism_group orders") {
  CHECK(automorphism_group(corpus::a_n(2)).order() == 2);
  CHECK(automorphism_group(CoxeterGraph::parse(R"({"vertices":["a","b"]})")).order() == 2);

  // Independent oracle: count all 4! permutations of the D4 star that
  // preserve the labels.
  const CoxeterGraph d4 = corpus::d4();
  std::vector<int> perm{0, 1, 2, 3};
  int count = 0;
  do {
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (!(d4.label(perm[i], perm[j]) == d4.label(i, j))) {
          ok = false;
          break;
        }
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(count == 6);
  CHECK(automorphism_group(d4).order() == static_cast<std::size_t>(count));

  CHECK_THROWS_AS(automorphism_group(corpus::a_n(3), 2), error);
}
