#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxfold/error.hpp"

namespace coxfold {

// Coxeter matrix entry m_{s,t}: a finite integer or infinity. Kept as a
// proper variant so that no integer ever doubles as a sentinel.
class CoxeterLabel {
 public:
  CoxeterLabel() : m_(2) {}

  static CoxeterLabel finite(int m) {
    if (m < 1) throw parse_error("Coxeter label must be >= 1, got " + std::to_string(m));
    CoxeterLabel l;
    l.m_ = m;
    return l;
  }
  static CoxeterLabel infinity() {
    CoxeterLabel l;
    l.m_.reset();
    return l;
  }

  bool is_infinite() const { return !m_.has_value(); }
  bool is_finite() const { return m_.has_value(); }
  // Finite value; calling this on the infinite label is a logic error.
  int value() const {
    if (!m_) throw error("CoxeterLabel::value() on infinite label");
    return *m_;
  }

  // cos(pi/m), with the m -> infinity limit value 1. The canonical Gram
  // entry is -cos(pi/m) in both cases.
  double cos_pi_over() const;

  std::string str() const { return m_ ? std::to_string(*m_) : "inf"; }

  bool operator==(const CoxeterLabel&) const = default;

 private:
  std::optional<int> m_;
};

// A Coxeter graph: vertex set S plus the symmetric label matrix (m_{s,t}).
// Vertices are identified by unique string names and stored sorted
// lexicographically; all indices below refer to that order. Pairs without a
// stored label have m = 2 (no edge); the diagonal is m = 1.
class CoxeterGraph {
 public:
  struct Edge {
    std::string u, v;
    CoxeterLabel m;
  };

  CoxeterGraph() = default;
  CoxeterGraph(std::vector<std::string> vertices, const std::vector<Edge>& edges);

  static CoxeterGraph parse(const std::string& json_text);
  static CoxeterGraph from_json(const nlohmann::json& j);
  // Canonical form: sorted vertices, edges only for m >= 3 (or inf), sorted.
  nlohmann::json to_json() const;

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& vertices() const { return names_; }
  const std::string& vertex(int i) const { return names_[i]; }
  // Index of a vertex name; throws parse_error if unknown.
  int index_of(const std::string& name) const;
  std::optional<int> find_index(const std::string& name) const;

  // m_{s,t} for s != t.
  CoxeterLabel label(int i, int j) const;
  // Edge of the underlying graph: m >= 3 or infinite.
  bool adjacent(int i, int j) const;

  bool operator==(const CoxeterGraph&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<CoxeterLabel> labels_;  // row-major size() x size(), diagonal = 1

  CoxeterLabel& at(int i, int j) { return labels_[static_cast<std::size_t>(i) * names_.size() + j]; }
  const CoxeterLabel& at(int i, int j) const {
    return labels_[static_cast<std::size_t>(i) * names_.size() + j];
  }
};

// Full subgraph spanned by X (indices into g). The subset keeps its induced
// labels; vertex order stays lexicographic.
CoxeterGraph full_subgraph(const CoxeterGraph& g, const std::vector<int>& X);

// Partition of the vertex set into connected components of the underlying
// graph (edges are pairs with m >= 3 or inf). Each component is sorted;
// the list is sorted by least vertex.
std::vector<std::vector<int>> connected_components(const CoxeterGraph& g);

// Label-preserving graph isomorphism (backtracking with degree/label-multiset
// pruning; intended for components of at most ~10 vertices).
bool is_isomorphic(const CoxeterGraph& a, const CoxeterGraph& b);

struct FiniteTypeReport {
  bool is_finite = false;
  // One entry per connected component: vertex subset plus catalog tag
  // ("A3", "I2(7)", ...) or "not finite".
  std::vector<std::pair<std::vector<int>, std::string>> components;
};

// Decides finiteness of the Coxeter group of g by matching every connected
// component against the catalog of finite irreducible Coxeter graphs
// (A_n, B_n, D_n, E6, E7, E8, F4, H3, H4, I2(m)).
FiniteTypeReport classify_finite_type(const CoxeterGraph& g);

// Catalog constructors, exposed for tests and for the oracle that re-checks
// folded graphs. Vertices are named v1..vn.
CoxeterGraph make_type_a(int n);
CoxeterGraph make_type_b(int n);
CoxeterGraph make_type_d(int n);
CoxeterGraph make_type_e(int n);  // n in {6,7,8}
CoxeterGraph make_type_f4();
CoxeterGraph make_type_h(int n);  // n in {3,4}
CoxeterGraph make_type_i2(CoxeterLabel m);

}  // namespace coxfold
