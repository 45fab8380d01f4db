#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxfold/graph.hpp"

namespace coxfold {

// A Coxeter-matrix-preserving permutation of the vertices of a fixed graph,
// stored as image indices: perm[s] is the index of g(s).
struct Symmetry {
  std::vector<int> perm;

  int operator()(int s) const { return perm[s]; }
  int size() const { return static_cast<int>(perm.size()); }
  bool is_identity() const;

  static Symmetry identity(int n);

  bool operator==(const Symmetry&) const = default;
};

// (a * b)(s) = a(b(s)).
Symmetry compose(const Symmetry& a, const Symmetry& b);
Symmetry inverse(const Symmetry& a);

// Checks that perm is a bijection on vertices(g) and preserves all labels;
// throws parse_error naming a violating pair otherwise.
Symmetry validate_symmetry(const CoxeterGraph& g, const std::vector<int>& perm);

// One generator object {"map": {vertex: vertex, ...}}; missing keys are
// fixed points.
Symmetry symmetry_from_json(const CoxeterGraph& g, const nlohmann::json& j);
nlohmann::json symmetry_to_json(const CoxeterGraph& g, const Symmetry& s);

struct SymmetryGroup {
  CoxeterGraph graph;
  std::vector<Symmetry> elements;  // identity first, then BFS closure order

  std::size_t order() const { return elements.size(); }
  bool is_trivial() const { return elements.size() == 1; }
};

// Closure of the generators under composition, breadth-first from the
// identity with generators applied in the given order.
SymmetryGroup generate_group(const CoxeterGraph& g, const std::vector<Symmetry>& generators,
                             std::size_t cap = 1000000);

// Whole symmetry file: array of generator objects.
SymmetryGroup group_from_json(const CoxeterGraph& g, const nlohmann::json& j,
                              std::size_t cap = 1000000);

struct OrbitPartition {
  std::vector<std::vector<int>> orbits;  // each sorted; list sorted by least vertex
};

OrbitPartition orbits(const SymmetryGroup& group);

// All Coxeter-matrix-preserving permutations, found by backtracking.
// Elements are ordered identity first, then lexicographically.
SymmetryGroup automorphism_group(const CoxeterGraph& g, int max_vertices = 16);

}  // namespace coxfold
