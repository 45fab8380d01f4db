#include "coxfold/repr.hpp"

#include <cmath>
#include <random>

namespace coxfold {

ReflectionRep build_rep(const RootBasis& rb) {
  ReflectionRep rep;
  rep.basis = rb;
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(rb.dim, rb.dim);
  for (int s = 0; s < rb.graph.size(); ++s) {
    const Eigen::VectorXd eps = rb.root(s);
    rep.gens.push_back(id - 2.0 * eps * (rb.bilinear * eps).transpose());
  }
  return rep;
}

Eigen::MatrixXd evaluate_word(const ReflectionRep& rep, std::span<const int> word) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Identity(rep.dim(), rep.dim());
  for (int letter : word) {
    if (letter < 0 || letter >= static_cast<int>(rep.gens.size()))
      throw error("word contains an unknown letter");
    out *= rep.gens[letter];
  }
  return out;
}

bool check_relation(const ReflectionRep& rep, const FoldedGenerator& x, const FoldedGenerator& y,
                    const CoxeterLabel& m_tilde, double tol) {
  if (m_tilde.is_infinite()) throw error("relation check requires a finite folded label");
  const Eigen::MatrixXd product = evaluate_word(rep, x.word) * evaluate_word(rep, y.word);
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(rep.dim(), rep.dim());
  for (int k = 0; k < m_tilde.value(); ++k) power *= product;
  if (rep.dim() == 0) return true;
  return (power - Eigen::MatrixXd::Identity(rep.dim(), rep.dim())).cwiseAbs().maxCoeff() < tol;
}

bool check_lemma_3_4(const ReflectionRep& rep, const FixedSubspace& fs, const FoldedGenerator& x,
                     int samples, std::uint64_t seed, double tol) {
  const Eigen::MatrixXd wx = evaluate_word(rep, x.word);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  const Eigen::MatrixXd& bil = rep.basis.bilinear;
  for (int i = 0; i < samples; ++i) {
    Eigen::VectorXd r(fs.subdim());
    for (int j = 0; j < fs.subdim(); ++j) r(j) = coeff(rng);
    const Eigen::VectorXd point = fs.basis * r;
    const Eigen::VectorXd reflected =
        point - 2.0 * point.dot(bil * x.eps_tilde) * x.eps_tilde;
    if ((wx * point - reflected).cwiseAbs().maxCoeff() >= tol) return false;
  }
  return true;
}

ReflectionRep folded_rep(const FoldedSystem& sys, double tol) {
  ReflectionRep rep = build_rep(sys.folded_root_basis);

  // Restriction check: conjugating the V-matrix of w_X into V^G coordinates
  // must reproduce the folded generator.
  const ReflectionRep ambient = build_rep(sys.fixed.parent);
  const Eigen::MatrixXd& basis = sys.fixed.basis;
  const auto solver = basis.completeOrthogonalDecomposition();
  for (const FoldedGenerator& gen : sys.generators) {
    const Eigen::MatrixXd wx = evaluate_word(ambient, gen.word);
    const Eigen::MatrixXd restricted = solver.solve(wx * basis);
    const Eigen::MatrixXd& folded = rep.gens[sys.folded_graph.index_of(gen.name)];
    if (restricted.size() > 0 && (restricted - folded).cwiseAbs().maxCoeff() > tol)
      throw error("restriction of w_X to V^G differs from the folded generator on " + gen.name);
  }
  return rep;
}

nlohmann::json matrix_to_json(const Eigen::MatrixXd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace coxfold
