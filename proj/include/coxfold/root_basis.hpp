#pragma once

#include <Eigen/Dense>
#include <json.hpp>

#include "coxfold/graph.hpp"
#include "coxfold/symmetry.hpp"

namespace coxfold {

inline constexpr double kDefaultTol = 1e-9;

// A root basis (V, <.,.>, Pi): bilinear form on R^dim and one coordinate
// vector per vertex. roots.col(s) is eps_s. dim may exceed |S| and the
// roots may be linearly dependent.
struct RootBasis {
  CoxeterGraph graph;
  int dim = 0;
  Eigen::MatrixXd bilinear;  // dim x dim, symmetric
  Eigen::MatrixXd roots;     // dim x |S|

  Eigen::VectorXd root(int s) const { return roots.col(s); }
  double pairing(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
    return x.dot(bilinear * y);
  }
  // Pairwise Gram matrix <eps_s, eps_t>, |S| x |S|.
  Eigen::MatrixXd root_gram() const { return roots.transpose() * bilinear * roots; }
  bool is_canonical(double tol = kDefaultTol) const;
};

// dim = |S|, eps_s = standard basis, <eps_s,eps_t> = -cos(pi/m_{s,t})
// (-1 for infinite labels), diagonal 1.
RootBasis canonical_root_basis(const CoxeterGraph& g);

// {"dim": int, "bilinear": [[..]], "roots": {vertex: [..], ...}}
RootBasis root_basis_from_json(const CoxeterGraph& g, const nlohmann::json& j);
nlohmann::json root_basis_to_json(const RootBasis& rb);

struct RootBasisReport {
  bool valid = false;
  char condition = 0;  // 'a', 'b' or 'c' when invalid
  std::string detail;
  Eigen::VectorXd chi;  // positive functional witness when found

  std::string condition_name() const { return std::string("condition (") + condition + ")"; }
};

// Checks conditions (a), (b), (c). When the roots are linearly independent
// (c) holds with an explicit dual witness; otherwise strict feasibility of
// chi(eps_s) > 0 is decided by a dense simplex with Bland's rule.
RootBasisReport validate_root_basis(const RootBasis& rb, double tol = kDefaultTol);

// validate_root_basis or throw root_basis_error naming the condition.
void require_valid_root_basis(const RootBasis& rb, double tol = kDefaultTol);

struct EquivarianceReport {
  bool ok = true;
  std::string detail;
};

// Verifies that G preserves the pairwise Gram data (<eps_{gs},eps_{gt}> =
// <eps_s,eps_t>) and that eps_s -> eps_{g(s)} extends to a well-defined
// linear map on span(Pi).
EquivarianceReport check_equivariance(const RootBasis& rb, const SymmetryGroup& G,
                                      double tol = kDefaultTol);

// Matrix of the linear action of g on V (eps_s -> eps_{g(s)}). Requires the
// roots to span V unless they are the standard basis; throws
// root_basis_error otherwise since the action outside span(Pi) would be
// undetermined.
Eigen::MatrixXd symmetry_action(const RootBasis& rb, const Symmetry& g);

// V^G with a deterministic basis: common kernel of (g - Id) over g in G,
// computed by elimination on the stacked system, columns scaled to unit
// Euclidean norm with positive leading entry.
struct FixedSubspace {
  RootBasis parent;
  SymmetryGroup group;
  Eigen::MatrixXd basis;               // dim x k
  Eigen::MatrixXd projected_bilinear;  // k x k

  int subdim() const { return static_cast<int>(basis.cols()); }
};

FixedSubspace fixed_subspace(const RootBasis& rb, const SymmetryGroup& G,
                             double tol = kDefaultTol);

// Elimination helpers shared by validation and the fixed-space computation.
// rank uses partial pivoting with the given pivot threshold; kernel_basis
// returns the free-variable basis of the right null space.
int matrix_rank(Eigen::MatrixXd m, double pivot_tol = kDefaultTol);
Eigen::MatrixXd kernel_basis(Eigen::MatrixXd m, double pivot_tol = kDefaultTol);

}  // namespace coxfold
