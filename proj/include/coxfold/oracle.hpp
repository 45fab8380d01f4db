#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "coxfold/repr.hpp"

namespace coxfold {

// Quantized fingerprint: every entry rounded to the 1e-6 grid, mixed into a
// 64-bit hash. Elements of finite reflection groups at desk-scale dimensions
// are far better separated than the grid, and the insert/separation audits
// turn any violation of that assumption into a loud failure.
std::uint64_t fingerprint(const Eigen::MatrixXd& m);

struct MatrixGroupElement {
  Eigen::MatrixXd matrix;
  std::uint64_t key = 0;
};

struct EnumerationResult {
  std::vector<MatrixGroupElement> elements;  // BFS order, identity first
  std::vector<std::vector<int>> words;       // shortest witness word per element
  std::unordered_map<std::uint64_t, int> index;
  bool truncated = false;

  std::size_t order() const { return elements.size(); }
  // Index of the element with this key, or -1.
  int find(std::uint64_t key) const;
};

// Breadth-first closure from the identity under right-multiplication by the
// generators. Stops with truncated = true once the element count would
// exceed cap. Throws on a fingerprint collision between distinct matrices.
EnumerationResult enumerate_matrix_group(const std::vector<Eigen::MatrixXd>& generators, int dim,
                                         std::size_t cap);

EnumerationResult enumerate_group(const ReflectionRep& rep, std::size_t cap);

// Elements fixed under conjugation by every P_g, filtered by fingerprint
// equality of the conjugate. Requires a complete enumeration.
EnumerationResult fixed_subgroup(const EnumerationResult& enumeration, const SymmetryGroup& G,
                                 const ReflectionRep& rep);

// Verifies that all stored elements are pairwise separated by more than
// min_gap in sup-norm; throws "tolerance collapse" otherwise.
void audit_separation(const EnumerationResult& enumeration, double min_gap = 1e-4);

struct TheoremReport {
  bool oracle_mode = false;  // full enumeration ran (|W| <= cap)
  std::size_t order_w = 0;
  std::size_t order_fixed = 0;
  std::size_t order_folded = 0;
  bool generation_ok = false;  // closure of {w_X} equals the fixed set
  bool order_ok = false;       // |W(folded)| == |W^G|
  bool relations_ok = false;
  bool lemma34_ok = false;
  bool folded_basis_ok = false;
  std::string folded_type;
  std::vector<std::string> failures;

  bool all_ok() const {
    return relations_ok && lemma34_ok && folded_basis_ok &&
           (!oracle_mode || (generation_ok && order_ok));
  }
  nlohmann::json to_json() const;
};

// Brute-force verification of the fixed-subgroup theorem on one instance:
// enumerate W, filter W^G, compare against the independently enumerated
// Coxeter group of the folded graph, and run the relation and reflection
// property checks. Falls back to the property checks alone when |W| > cap.
TheoremReport verify_theorem(const CoxeterGraph& g, const SymmetryGroup& G, std::size_t cap,
                             double tol = kDefaultTol, int k_max = 360,
                             std::uint64_t seed = 42, int samples = 100);

}  // namespace coxfold
