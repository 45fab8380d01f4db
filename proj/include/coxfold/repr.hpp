#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "coxfold/folding.hpp"
#include "coxfold/root_basis.hpp"

namespace coxfold {

// The rooted representation of (V, <.,.>, Pi): one generator matrix per
// vertex, acting on coordinate columns as f_s(x) = x - 2<x,eps_s> eps_s.
struct ReflectionRep {
  RootBasis basis;
  std::vector<Eigen::MatrixXd> gens;  // indexed like basis.graph vertices

  int dim() const { return basis.dim; }
};

ReflectionRep build_rep(const RootBasis& rb);

// Product of generator matrices, left-to-right letter = left-to-right factor.
Eigen::MatrixXd evaluate_word(const ReflectionRep& rep, std::span<const int> word);

// (w_X w_Y)^{m~} = Id within tol. Products get long, hence the looser
// default tolerance.
bool check_relation(const ReflectionRep& rep, const FoldedGenerator& x, const FoldedGenerator& y,
                    const CoxeterLabel& m_tilde, double tol = 1e-6);

// Samples seeded pseudo-random points of V^G and compares the matrix action
// of w_X with the reflection x - 2<x,eps~_X> eps~_X.
bool check_lemma_3_4(const ReflectionRep& rep, const FixedSubspace& fs, const FoldedGenerator& x,
                     int samples, std::uint64_t seed, double tol = 1e-8);

// Rooted representation of the folded graph, built from the folded root
// basis. Also verifies that restricting each w_X matrix to V^G reproduces
// the folded generator; a mismatch throws (it would contradict Lemma 3.4).
ReflectionRep folded_rep(const FoldedSystem& sys, double tol = 1e-8);

// Row-major array-of-arrays serialization.
nlohmann::json matrix_to_json(const Eigen::MatrixXd& m);

}  // namespace coxfold
