#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "coxfold/root_basis.hpp"

namespace coxfold {

// Orbit alternative of Lemma 3.2: no edges inside the orbit (I), or a
// perfect matching of single edges all labeled m (II_m).
struct OrbitType {
  enum class Kind { I, II };
  Kind kind = Kind::I;
  int m = 0;  // edge label, type II only

  bool is_matching() const { return kind == Kind::II; }
  std::string str() const { return kind == Kind::I ? "I" : "II_" + std::to_string(m); }
  bool operator==(const OrbitType&) const = default;
};

// Decides type I vs II_m from v_s(X) = |{t in X : m_{s,t} >= 3}|, which must
// be constantly 0 or constantly 1 on a genuine orbit with W_X finite.
OrbitType classify_orbit(const CoxeterGraph& g, const std::vector<int>& orbit);

// Word for the longest element w_X: the product of the members (type I,
// lexicographic order), or per matching edge {s,t} the alternating word
// st... of length m (type II_m), edges ordered by least member.
std::vector<int> longest_element_word(const CoxeterGraph& g, const std::vector<int>& orbit,
                                      const OrbitType& type);

// One generator of the folded system: an orbit X with finite W_X together
// with a_X = sum eps_s, the folded root eps~_X = a_X/|a_X| and the word w_X.
struct FoldedGenerator {
  std::vector<int> orbit;  // sorted vertex indices
  std::string name;        // "O_" + least member
  OrbitType type;
  Eigen::VectorXd a;
  double norm_a = 0.0;
  Eigen::VectorXd eps_tilde;
  std::vector<int> word;
};

// Builds the generator and checks the norm identity |a_X| = sqrt(|X|) resp.
// sqrt(|X|(1-cos(pi/m))) that must hold over any root basis.
FoldedGenerator make_folded_generator(const RootBasis& rb, const std::vector<int>& orbit,
                                      double tol = kDefaultTol);

enum class BiOrbitPattern {
  Orthogonal,  // every cross label is 2
  Type1,       // per component one edge x--y, label m
  Type2,       // per component a path x-y-x with simple edges
  Type3,       // per component a path y-x-x-y with simple edges
  Type4,       // per component a path y-x-x-y with labels 3,4,3
  Type5,       // per component a star of three x around one y, simple edges
  Infinite,    // anything else
};

std::string pattern_str(BiOrbitPattern p);

// Data of an unordered bi-orbit (X,Y) per Lemma 3.3.
struct BiOrbitData {
  int v_x = 0, v_y = 0;     // cross-edge counts per representative
  double p_x = 0, p_y = 0;  // <eps_s, a_Y> and <eps_t, a_X>
  double inner = 0;         // <eps~_X, eps~_Y>
  CoxeterLabel m_tilde;
  BiOrbitPattern pattern = BiOrbitPattern::Orthogonal;
};

// Numeric route: computes the inner product directly and through the matching
// case formula, requires the two to agree, and recognizes m~ from
// -cos(pi/m~). Throws classification_error when no label matches.
BiOrbitData bi_orbit_numeric(const RootBasis& rb, const FoldedGenerator& x,
                             const FoldedGenerator& y, double tol = kDefaultTol,
                             int k_max = 360);

// Combinatorial route: pattern matching on the components of the full
// subgraph spanned by X and Y. Returns the pattern and its folded label.
std::pair<BiOrbitPattern, CoxeterLabel> bi_orbit_combinatorial(const CoxeterGraph& g,
                                                               const FoldedGenerator& x,
                                                               const FoldedGenerator& y);

// The folded system: generators indexed by the orbit set S (orbits with
// finite W_X), the folded Coxeter matrix, the folded graph, and the folded
// root basis expressed in V^G coordinates.
struct FoldedSystem {
  std::vector<FoldedGenerator> generators;
  std::vector<CoxeterLabel> m_tilde;  // row-major |S| x |S|, diagonal 1
  CoxeterGraph folded_graph;
  FixedSubspace fixed;
  RootBasis folded_root_basis;

  int count() const { return static_cast<int>(generators.size()); }
  CoxeterLabel m_tilde_at(int i, int j) const {
    return m_tilde[static_cast<std::size_t>(i) * generators.size() + j];
  }
  nlohmann::json to_json() const;
};

// The full construction. Requires check_equivariance(rb, G) to pass (throws
// equivariance_error otherwise). With a canonical basis every bi-orbit label
// is cross-checked against the combinatorial classifier.
FoldedSystem fold(const CoxeterGraph& g, const SymmetryGroup& G, const RootBasis& rb,
                  double tol = kDefaultTol, int k_max = 360);

}  // namespace coxfold
