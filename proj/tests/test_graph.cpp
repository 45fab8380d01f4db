#include <doctest.h>

#include <random>

#include <Eigen/Dense>

#include "corpus.hpp"
#include "coxfold/graph.hpp"
#include "coxfold/root_basis.hpp"

using namespace coxfold;

TEST_CASE("parse: A2 from schema") {
  const CoxeterGraph g =
      CoxeterGraph::parse(R"({"vertices":["a","b"],"edges":[{"u":"a","v":"b","m":3}]})");
  CHECK(g.size() == 2);
  CHECK(g.label(0, 1) == CoxeterLabel::finite(3));
}

TEST_CASE("parse: infinite label") {
  const CoxeterGraph g =
      CoxeterGraph::parse(R"({"vertices":["a","b"],"edges":[{"u":"a","v":"b","m":"inf"}]})");
  CHECK(g.label(0, 1).is_infinite());
}

TEST_CASE("parse: errors") {
  CHECK_THROWS_AS(CoxeterGraph::parse(R"({"vertices":["a","b"],"edges":[{"u":"a","v":"b","m":1}]})"),
                  parse_error);
  CHECK_THROWS_AS(CoxeterGraph::parse(R"({"vertices":["a","a"]})"), parse_error);
  CHECK_THROWS_AS(CoxeterGraph::parse(R"({"vertices":["a"],"edges":[{"u":"a","v":"b","m":3}]})"),
                  parse_error);
  CHECK_THROWS_AS(CoxeterGraph::parse(R"({"vertices":["a"],"edges":[{"u":"a","v":"a","m":3}]})"),
                  parse_error);
  CHECK_THROWS_AS(CoxeterGraph::parse("not json"), parse_error);
}

TEST_CASE("parse: explicit m=2 edges are accepted and normalized away") {
  const CoxeterGraph g = CoxeterGraph::parse(
      R"({"vertices":["a","b","c"],"edges":[{"u":"a","v":"b","m":3},{"u":"a","v":"c","m":2}]})");
  CHECK(g.label(g.index_of("a"), g.index_of("c")) == CoxeterLabel::finite(2));
  CHECK(g.to_json()["edges"].size() == 1);
}

TEST_CASE("vertices are sorted lexicographically") {
  const CoxeterGraph g = CoxeterGraph::parse(R"({"vertices":["c","a","b"]})");
  CHECK(g.vertices() == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("full_subgraph") {
  const CoxeterGraph a3 = corpus::a_n(3);
  SUBCASE("non-adjacent pair becomes two isolated vertices") {
    const CoxeterGraph sub = full_subgraph(a3, {a3.index_of("a1"), a3.index_of("a3")});
    CHECK(sub.size() == 2);
    CHECK(sub.label(0, 1) == CoxeterLabel::finite(2));
  }
  SUBCASE("adjacent pair keeps its label") {
    const CoxeterGraph sub = full_subgraph(a3, {a3.index_of("a1"), a3.index_of("a2")});
    CHECK(sub.label(0, 1) == CoxeterLabel::finite(3));
  }
  SUBCASE("middle of F4 is I2(4)") {
    const CoxeterGraph f4 = corpus::f4();
    const CoxeterGraph sub = full_subgraph(f4, {f4.index_of("a2"), f4.index_of("a3")});
    CHECK(classify_finite_type(sub).components[0].second == "B2");
    CHECK(sub.label(0, 1) == CoxeterLabel::finite(4));
  }
  SUBCASE("unknown index") { CHECK_THROWS_AS(full_subgraph(a3, {7}), parse_error); }
}

TEST_CASE("connected components") {
  CHECK(connected_components(corpus::a_n(3)).size() == 1);
  const CoxeterGraph two = CoxeterGraph::parse(R"({"vertices":["a","b"]})");
  CHECK(connected_components(two).size() == 2);
  const auto comps = connected_components(corpus::a2_plus_a2());
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 2);
  CHECK(comps[1].size() == 2);
}

TEST_CASE("catalog: named instances") {
  auto tag_of = [](const CoxeterGraph& g) {
    const auto report = classify_finite_type(g);
    REQUIRE(report.components.size() == 1);
    return report.components[0].second;
  };
  CHECK(tag_of(corpus::i2(7)) == "I2(7)");
  CHECK(tag_of(corpus::f4()) == "F4");
  CHECK(tag_of(corpus::a_n(1)) == "A1");
  CHECK(tag_of(corpus::a_n(5)) == "A5");
  CHECK(tag_of(corpus::b3()) == "B3");
  CHECK(tag_of(corpus::d4()) == "D4");
  CHECK(tag_of(corpus::d5()) == "D5");
  CHECK(tag_of(corpus::e6()) == "E6");
  CHECK(tag_of(make_type_e(7)) == "E7");
  CHECK(tag_of(make_type_e(8)) == "E8");
  CHECK(tag_of(corpus::h3()) == "H3");
  CHECK(tag_of(make_type_h(4)) == "H4");
  CHECK(tag_of(corpus::i2(3)) == "A2");
  CHECK(tag_of(corpus::i2(4)) == "B2");

  CHECK_FALSE(classify_finite_type(corpus::inf_dihedral()).is_finite);
  CHECK_FALSE(classify_finite_type(corpus::triangle()).is_finite);
  CHECK(classify_finite_type(corpus::a3_plus_a3()).is_finite);
  CHECK(classify_finite_type(corpus::a3_plus_a3()).components.size() == 2);
}

TEST_CASE("catalog: finiteness agrees with positive definiteness of the canonical Gram") {
  // Independent numeric oracle: W_X is finite iff the canonical Gram matrix
  // of the subgraph is positive definite.
  for (const auto& test_case : corpus::corpus_cases()) {
    const CoxeterGraph& g = test_case.graph;
    const int n = g.size();
    REQUIRE(n <= 8);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> subset;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) subset.push_back(i);
      const CoxeterGraph sub = full_subgraph(g, subset);
      const bool catalog_finite = classify_finite_type(sub).is_finite;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(canonical_root_basis(sub).bilinear);
      const bool positive_definite = solver.eigenvalues().minCoeff() > 1e-9;
      CAPTURE(test_case.name);
      CAPTURE(mask);
      CHECK(catalog_finite == positive_definite);
    }
  }
}

TEST_CASE("round trip: parse(serialize) is the identity on canonical form") {
  for (const auto& test_case : corpus::corpus_cases()) {
    const nlohmann::json doc = test_case.graph.to_json();
    const CoxeterGraph back = CoxeterGraph::from_json(doc);
    CHECK(back == test_case.graph);
    CHECK(back.to_json() == doc);
  }
}

TEST_CASE("round trip and component partition on random graphs") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> size_dist(1, 7);
  std::uniform_int_distribution<int> label_dist(0, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = size_dist(rng);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<CoxeterGraph::Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const int pick = label_dist(rng);
        if (pick == 0) continue;  // m = 2
        if (pick == 4)
          edges.push_back({names[i], names[j], CoxeterLabel::infinity()});
        else
          edges.push_back({names[i], names[j], CoxeterLabel::finite(pick + 2)});
      }
    const CoxeterGraph g(names, edges);
    CHECK(CoxeterGraph::from_json(g.to_json()) == g);

    const auto comps = connected_components(g);
    std::vector<int> owner(n, -1);
    std::size_t total = 0;
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (int v : comps[c]) {
        CHECK(owner[v] == -1);
        owner[v] = static_cast<int>(c);
        ++total;
      }
    CHECK(total == static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (owner[i] != owner[j]) CHECK(g.label(i, j) == CoxeterLabel::finite(2));
  }
}

TEST_CASE("isomorphism distinguishes labels") {
  CHECK(is_isomorphic(corpus::a_n(3), make_type_a(3)));
  CHECK_FALSE(is_isomorphic(corpus::a_n(3), corpus::b3()));
  CHECK_FALSE(is_isomorphic(corpus::i2(5), corpus::i2(6)));
  CHECK(is_isomorphic(corpus::d4(), make_type_d(4)));
}
