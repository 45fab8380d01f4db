#pragma once

// Shared graph/symmetry fixtures used across the unit and acceptance suites.

#include <string>
#include <utility>
#include <vector>

#include "coxfold/graph.hpp"
#include "coxfold/root_basis.hpp"
#include "coxfold/symmetry.hpp"

namespace corpus {

using coxfold::CoxeterGraph;
using coxfold::CoxeterLabel;
using coxfold::RootBasis;
using coxfold::Symmetry;
using coxfold::SymmetryGroup;

inline CoxeterGraph path(const std::vector<std::string>& names, const std::vector<int>& labels) {
  std::vector<CoxeterGraph::Edge> edges;
  for (std::size_t i = 0; i + 1 < names.size(); ++i)
    edges.push_back({names[i], names[i + 1], CoxeterLabel::finite(labels[i])});
  return CoxeterGraph(names, edges);
}

inline CoxeterGraph a_n(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
  return path(names, std::vector<int>(std::max(0, n - 1), 3));
}

inline CoxeterGraph b3() { return path({"a1", "a2", "a3"}, {4, 3}); }
inline CoxeterGraph f4() { return path({"a1", "a2", "a3", "a4"}, {3, 4, 3}); }
inline CoxeterGraph h3() { return path({"a1", "a2", "a3"}, {5, 3}); }

inline CoxeterGraph i2(int m) {
  return CoxeterGraph({"a", "b"}, {{"a", "b", CoxeterLabel::finite(m)}});
}

inline CoxeterGraph inf_dihedral() {
  return CoxeterGraph({"a", "b"}, {{"a", "b", CoxeterLabel::infinity()}});
}

// D4 star: center c, outer x1 x2 x3.
inline CoxeterGraph d4() {
  return CoxeterGraph({"c", "x1", "x2", "x3"}, {{"c", "x1", CoxeterLabel::finite(3)},
                                                {"c", "x2", CoxeterLabel::finite(3)},
                                                {"c", "x3", CoxeterLabel::finite(3)}});
}

// D5: chain c1-c2-c3 with fork tips d1, d2 on c3.
inline CoxeterGraph d5() {
  return CoxeterGraph({"c1", "c2", "c3", "d1", "d2"}, {{"c1", "c2", CoxeterLabel::finite(3)},
                                                       {"c2", "c3", CoxeterLabel::finite(3)},
                                                       {"c3", "d1", CoxeterLabel::finite(3)},
                                                       {"c3", "d2", CoxeterLabel::finite(3)}});
}

// E6: chain p1..p5, branch q on the middle vertex p3.
inline CoxeterGraph e6() {
  return CoxeterGraph({"p1", "p2", "p3", "p4", "p5", "q"},
                      {{"p1", "p2", CoxeterLabel::finite(3)},
                       {"p2", "p3", CoxeterLabel::finite(3)},
                       {"p3", "p4", CoxeterLabel::finite(3)},
                       {"p4", "p5", CoxeterLabel::finite(3)},
                       {"p3", "q", CoxeterLabel::finite(3)}});
}

// Affine triangle: three vertices, all pairs labeled 3 (W infinite).
inline CoxeterGraph triangle() {
  return CoxeterGraph({"a1", "a2", "a3"}, {{"a1", "a2", CoxeterLabel::finite(3)},
                                           {"a1", "a3", CoxeterLabel::finite(3)},
                                           {"a2", "a3", CoxeterLabel::finite(3)}});
}

inline CoxeterGraph a3_plus_a3() {
  return CoxeterGraph({"a1", "a2", "a3", "b1", "b2", "b3"},
                      {{"a1", "a2", CoxeterLabel::finite(3)},
                       {"a2", "a3", CoxeterLabel::finite(3)},
                       {"b1", "b2", CoxeterLabel::finite(3)},
                       {"b2", "b3", CoxeterLabel::finite(3)}});
}

inline CoxeterGraph a2_plus_a2() {
  return CoxeterGraph({"a1", "a2", "b1", "b2"}, {{"a1", "a2", CoxeterLabel::finite(3)},
                                                 {"b1", "b2", CoxeterLabel::finite(3)}});
}

// Complete graph on four vertices, all labels infinite. Carries a valid
// root basis with dependent roots (see k4_dependent_basis).
inline CoxeterGraph k4_infinite() {
  std::vector<CoxeterGraph::Edge> edges;
  const std::vector<std::string> names{"w", "x", "y", "z"};
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      edges.push_back({names[i], names[j], CoxeterLabel::infinity()});
  return CoxeterGraph(names, edges);
}

// Roots on the circle of radius sqrt(2) in the form diag(1,1,-1): unit
// self-pairing, pairwise pairings -1 or -3, positive functional (0,0,1).
// Four vectors in R^3, hence linearly dependent.
inline RootBasis k4_dependent_basis() {
  const CoxeterGraph g = k4_infinite();
  RootBasis rb;
  rb.graph = g;
  rb.dim = 3;
  rb.bilinear = Eigen::MatrixXd::Identity(3, 3);
  rb.bilinear(2, 2) = -1.0;
  rb.roots.resize(3, 4);
  const double r = std::sqrt(2.0);
  auto set = [&](const std::string& name, double x, double y) {
    const int s = g.index_of(name);
    rb.roots(0, s) = x;
    rb.roots(1, s) = y;
    rb.roots(2, s) = 1.0;
  };
  set("w", r, 0.0);
  set("x", 0.0, r);
  set("y", -r, 0.0);
  set("z", 0.0, -r);
  return rb;
}

inline Symmetry perm_of(const CoxeterGraph& g,
                        const std::vector<std::pair<std::string, std::string>>& moves) {
  std::vector<int> perm(g.size());
  for (int i = 0; i < g.size(); ++i) perm[i] = i;
  for (const auto& [from, to] : moves) perm[g.index_of(from)] = g.index_of(to);
  return coxfold::validate_symmetry(g, perm);
}

inline SymmetryGroup group_of(const CoxeterGraph& g,
                              const std::vector<std::vector<std::pair<std::string, std::string>>>&
                                  generators) {
  std::vector<Symmetry> gens;
  for (const auto& moves : generators) gens.push_back(perm_of(g, moves));
  return coxfold::generate_group(g, gens);
}

inline SymmetryGroup trivial_group(const CoxeterGraph& g) { return group_of(g, {}); }

// Path flip a1 <-> an.
inline SymmetryGroup flip_a_n(const CoxeterGraph& g, int n) {
  std::vector<std::pair<std::string, std::string>> moves;
  for (int i = 1; i <= n; ++i)
    moves.emplace_back("a" + std::to_string(i), "a" + std::to_string(n + 1 - i));
  return group_of(g, {moves});
}

struct Case {
  std::string name;
  CoxeterGraph graph;
  SymmetryGroup group;
};

// The named graph/symmetry corpus: classical folds, degenerate inputs, and
// orbit-type coverage (I, II_3, II_4, II_5, multi-component II).
inline std::vector<Case> corpus_cases() {
  std::vector<Case> cases;
  auto add = [&](std::string name, const CoxeterGraph& g, SymmetryGroup group) {
    cases.push_back({std::move(name), g, std::move(group)});
  };

  add("A2+flip", a_n(2), flip_a_n(a_n(2), 2));
  add("A3+flip", a_n(3), flip_a_n(a_n(3), 3));
  add("A4+flip", a_n(4), flip_a_n(a_n(4), 4));
  add("A5+flip", a_n(5), flip_a_n(a_n(5), 5));
  add("F4+flip", f4(), group_of(f4(), {{{"a1", "a4"}, {"a4", "a1"}, {"a2", "a3"}, {"a3", "a2"}}}));
  add("D4+triality", d4(),
      group_of(d4(), {{{"x1", "x2"}, {"x2", "x3"}, {"x3", "x1"}}}));
  add("D4+swap", d4(), group_of(d4(), {{{"x1", "x2"}, {"x2", "x1"}}}));
  add("D4+full", d4(),
      group_of(d4(), {{{"x1", "x2"}, {"x2", "x1"}}, {{"x1", "x2"}, {"x2", "x3"}, {"x3", "x1"}}}));
  add("D5+flip", d5(), group_of(d5(), {{{"d1", "d2"}, {"d2", "d1"}}}));
  add("E6+flip", e6(),
      group_of(e6(), {{{"p1", "p5"}, {"p5", "p1"}, {"p2", "p4"}, {"p4", "p2"}}}));
  add("A3A3+swap", a3_plus_a3(),
      group_of(a3_plus_a3(), {{{"a1", "b1"}, {"b1", "a1"}, {"a2", "b2"}, {"b2", "a2"},
                               {"a3", "b3"}, {"b3", "a3"}}}));
  add("A2A2+cycle4", a2_plus_a2(),
      group_of(a2_plus_a2(), {{{"a1", "b1"}, {"b1", "a2"}, {"a2", "b2"}, {"b2", "a1"}}}));
  add("I2(4)+flip", i2(4), group_of(i2(4), {{{"a", "b"}, {"b", "a"}}}));
  add("I2(5)+flip", i2(5), group_of(i2(5), {{{"a", "b"}, {"b", "a"}}}));
  add("Atilde2+reflection", triangle(),
      group_of(triangle(), {{{"a1", "a2"}, {"a2", "a1"}}}));
  add("Atilde2+rotation", triangle(),
      group_of(triangle(), {{{"a1", "a2"}, {"a2", "a3"}, {"a3", "a1"}}}));
  add("inf+flip", inf_dihedral(), group_of(inf_dihedral(), {{{"a", "b"}, {"b", "a"}}}));
  add("B3+trivial", b3(), trivial_group(b3()));
  add("H3+trivial", h3(), trivial_group(h3()));
  add("K4inf+trivial", k4_infinite(), trivial_group(k4_infinite()));
  return cases;
}

}  // namespace corpus
