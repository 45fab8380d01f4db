#include "coxfold/root_basis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace coxfold {

namespace {

double canonical_pairing(const CoxeterLabel& m) {
  if (m.is_infinite()) return -1.0;
  switch (m.value()) {
    case 1: return 1.0;   // diagonal
    case 2: return 0.0;   // exact orthogonality for non-edges
    case 3: return -0.5;
    default: return -m.cos_pi_over();
  }
}

// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref(Eigen::MatrixXd& m, double pivot_tol) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int best = -1;
    double best_abs = pivot_tol;
    for (int r = row; r < m.rows(); ++r)
      if (std::abs(m(r, col)) > best_abs) {
        best_abs = std::abs(m(r, col));
        best = r;
      }
    if (best < 0) continue;
    m.row(row).swap(m.row(best));
    m.row(row) /= m(row, col);
    for (int r = 0; r < m.rows(); ++r)
      if (r != row && m(r, col) != 0.0) m.row(r) -= m(r, col) * m.row(row);
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// max c.x  s.t.  A x <= b, x >= 0, with b >= 0 so the slack basis is
// feasible. Dense tableau simplex, Bland's rule for both choices.
double simplex_max(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
                   Eigen::VectorXd& xout) {
  const int m = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m + 1, n + m + 1);
  t.block(0, 0, m, n) = a;
  t.block(0, n, m, m) = Eigen::MatrixXd::Identity(m, m);
  t.col(n + m).head(m) = b;
  t.row(m).head(n) = -c.transpose();

  std::vector<int> basis(m);
  std::iota(basis.begin(), basis.end(), n);

  const double eps = 1e-12;
  const int max_iter = 10000;
  int iter = 0;
  for (; iter < max_iter; ++iter) {
    int enter = -1;
    for (int j = 0; j < n + m; ++j)
      if (t(m, j) < -eps) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < m; ++i) {
      if (t(i, enter) <= eps) continue;
      const double ratio = t(i, n + m) / t(i, enter);
      if (leave < 0 || ratio < best_ratio - eps ||
          (std::abs(ratio - best_ratio) <= eps && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) throw error("feasibility LP unbounded");
    t.row(leave) /= t(leave, enter);
    for (int i = 0; i <= m; ++i)
      if (i != leave && t(i, enter) != 0.0) t.row(i) -= t(i, enter) * t.row(leave);
    basis[leave] = enter;
  }
  if (iter == max_iter) throw error("feasibility LP did not converge");

  xout = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) xout[basis[i]] = t(i, n + m);
  return t(m, n + m);
}

}  // namespace

int matrix_rank(Eigen::MatrixXd m, double pivot_tol) {
  return static_cast<int>(rref(m, pivot_tol).size());
}

Eigen::MatrixXd kernel_basis(Eigen::MatrixXd m, double pivot_tol) {
  const int n = static_cast<int>(m.cols());
  const std::vector<int> pivots = rref(m, pivot_tol);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, static_cast<int>(free_cols.size()));
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    k(free_cols[j], j) = 1.0;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      k(pivots[r], static_cast<int>(j)) = -m(static_cast<int>(r), free_cols[j]);
  }
  return k;
}

bool RootBasis::is_canonical(double tol) const {
  const int n = graph.size();
  if (dim != n) return false;
  if ((roots - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() > tol) return false;
  const RootBasis canon = canonical_root_basis(graph);
  if (n == 0) return true;
  return (bilinear - canon.bilinear).cwiseAbs().maxCoeff() <= tol;
}

RootBasis canonical_root_basis(const CoxeterGraph& g) {
  const int n = g.size();
  RootBasis rb;
  rb.graph = g;
  rb.dim = n;
  rb.roots = Eigen::MatrixXd::Identity(n, n);
  rb.bilinear = Eigen::MatrixXd::Identity(n, n);
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      rb.bilinear(s, t) = rb.bilinear(t, s) = canonical_pairing(g.label(s, t));
  return rb;
}

RootBasis root_basis_from_json(const CoxeterGraph& g, const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("dim") || !j.contains("bilinear") || !j.contains("roots"))
      throw parse_error("root basis document must contain \"dim\", \"bilinear\" and \"roots\"");
    RootBasis rb;
    rb.graph = g;
    rb.dim = j["dim"].get<int>();
    if (rb.dim < 0) throw parse_error("dim must be >= 0");
    rb.bilinear.resize(rb.dim, rb.dim);
    const auto& bil = j["bilinear"];
    if (static_cast<int>(bil.size()) != rb.dim) throw parse_error("bilinear must be dim x dim");
    for (int i = 0; i < rb.dim; ++i) {
      if (static_cast<int>(bil[i].size()) != rb.dim) throw parse_error("bilinear must be dim x dim");
      for (int k = 0; k < rb.dim; ++k) rb.bilinear(i, k) = bil[i][k].get<double>();
    }
    if (rb.dim > 0 &&
        (rb.bilinear - rb.bilinear.transpose()).cwiseAbs().maxCoeff() > 1e-12)
      throw parse_error("bilinear form is not symmetric");
    rb.roots.resize(rb.dim, g.size());
    std::vector<bool> seen(g.size(), false);
    for (const auto& [name, coords] : j["roots"].items()) {
      const int s = g.index_of(name);
      if (seen[s]) throw parse_error("duplicate root for vertex '" + name + "'");
      seen[s] = true;
      if (static_cast<int>(coords.size()) != rb.dim)
        throw parse_error("root vector for '" + name + "' must have length dim");
      for (int i = 0; i < rb.dim; ++i) rb.roots(i, s) = coords[i].get<double>();
    }
    for (int s = 0; s < g.size(); ++s)
      if (!seen[s]) throw parse_error("missing root for vertex '" + g.vertex(s) + "'");
    return rb;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("malformed root basis document: ") + e.what());
  }
}

nlohmann::json root_basis_to_json(const RootBasis& rb) {
  nlohmann::json j;
  j["dim"] = rb.dim;
  nlohmann::json bil = nlohmann::json::array();
  for (int i = 0; i < rb.dim; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < rb.dim; ++k) row.push_back(rb.bilinear(i, k));
    bil.push_back(std::move(row));
  }
  j["bilinear"] = std::move(bil);
  nlohmann::json roots = nlohmann::json::object();
  for (int s = 0; s < rb.graph.size(); ++s) {
    nlohmann::json v = nlohmann::json::array();
    for (int i = 0; i < rb.dim; ++i) v.push_back(rb.roots(i, s));
    roots[rb.graph.vertex(s)] = std::move(v);
  }
  j["roots"] = std::move(roots);
  return j;
}

RootBasisReport validate_root_basis(const RootBasis& rb, double tol) {
  const int n = rb.graph.size();
  if (rb.roots.rows() != rb.dim || rb.roots.cols() != n || rb.bilinear.rows() != rb.dim ||
      rb.bilinear.cols() != rb.dim)
    throw root_basis_error("root basis shape mismatch");
  if (rb.dim > 0 && (rb.bilinear - rb.bilinear.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw root_basis_error("bilinear form is not symmetric");

  RootBasisReport report;
  const Eigen::MatrixXd gram = rb.root_gram();

  for (int s = 0; s < n; ++s)
    if (std::abs(gram(s, s) - 1.0) > tol) {
      report.condition = 'a';
      report.detail = "<eps,eps> = " + std::to_string(gram(s, s)) + " at vertex '" +
                      rb.graph.vertex(s) + "'";
      return report;
    }

  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      const CoxeterLabel m = rb.graph.label(s, t);
      const double value = gram(s, t);
      bool ok = m.is_infinite() ? value <= -1.0 + tol
                                : std::abs(value - canonical_pairing(m)) <= tol;
      if (!ok) {
        report.condition = 'b';
        report.detail = "<eps_s,eps_t> = " + std::to_string(value) + " on pair (" +
                        rb.graph.vertex(s) + "," + rb.graph.vertex(t) + ") with m = " + m.str();
        return report;
      }
    }

  if (n == 0) {
    report.valid = true;
    report.chi = Eigen::VectorXd::Zero(rb.dim);
    return report;
  }

  if (matrix_rank(rb.roots, tol) == n) {
    // Independent roots: solve roots^T chi = 1 for an exact dual witness.
    report.chi = rb.roots.transpose()
                     .completeOrthogonalDecomposition()
                     .solve(Eigen::VectorXd::Ones(n));
    report.valid = true;
    return report;
  }

  // Dependent roots: maximize t subject to chi.eps_s >= t, |chi_i| <= 1.
  // Substituting chi = u - 1 and t = v - M (u in [0,2]^dim, v >= 0) puts the
  // program in standard form with a feasible slack basis.
  const int d = rb.dim;
  double m_bound = 1.0;
  for (int s = 0; s < n; ++s) m_bound = std::max(m_bound, 1.0 + rb.roots.col(s).cwiseAbs().sum());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n + d, d + 1);
  Eigen::VectorXd b(n + d);
  for (int s = 0; s < n; ++s) {
    a.row(s).head(d) = -rb.roots.col(s).transpose();
    a(s, d) = 1.0;
    b(s) = m_bound - rb.roots.col(s).sum();
  }
  for (int i = 0; i < d; ++i) {
    a(n + i, i) = 1.0;
    b(n + i) = 2.0;
  }
  Eigen::VectorXd c = Eigen::VectorXd::Zero(d + 1);
  c(d) = 1.0;
  Eigen::VectorXd x;
  const double optimum = simplex_max(a, b, c, x);
  const double t_star = optimum - m_bound;
  if (t_star > tol) {
    report.valid = true;
    report.chi = x.head(d) - Eigen::VectorXd::Ones(d);
  } else {
    report.condition = 'c';
    report.detail = "no functional with chi(eps_s) > 0 exists (best margin " +
                    std::to_string(t_star) + ")";
  }
  return report;
}

void require_valid_root_basis(const RootBasis& rb, double tol) {
  const RootBasisReport report = validate_root_basis(rb, tol);
  if (!report.valid)
    throw root_basis_error("root basis violates " + report.condition_name() + ": " +
                           report.detail);
}

EquivarianceReport check_equivariance(const RootBasis& rb, const SymmetryGroup& g, double tol) {
  if (!(g.graph == rb.graph))
    throw error("equivariance check requires the group and basis to share a graph");
  EquivarianceReport report;
  const int n = rb.graph.size();
  const Eigen::MatrixXd gram = rb.root_gram();
  for (std::size_t e = 1; e < g.elements.size(); ++e) {
    const Symmetry& sym = g.elements[e];
    for (int s = 0; s < n; ++s)
      for (int t = s; t < n; ++t)
        if (std::abs(gram(sym(s), sym(t)) - gram(s, t)) > tol) {
          report.ok = false;
          report.detail = "<eps_gs,eps_gt> != <eps_s,eps_t> for g = element #" +
                          std::to_string(e) + ", pair (" + rb.graph.vertex(s) + "," +
                          rb.graph.vertex(t) + ")";
          return report;
        }
  }
  // For dependent roots the assignment eps_s -> eps_{g(s)} must preserve
  // every linear relation among the roots.
  const Eigen::MatrixXd kernel = kernel_basis(rb.roots, tol);
  if (kernel.cols() > 0) {
    const double scale = std::max(1.0, rb.roots.cwiseAbs().maxCoeff());
    for (std::size_t e = 1; e < g.elements.size(); ++e) {
      const Symmetry& sym = g.elements[e];
      for (int j = 0; j < kernel.cols(); ++j) {
        Eigen::VectorXd moved = Eigen::VectorXd::Zero(n);
        for (int s = 0; s < n; ++s) moved(sym(s)) = kernel(s, j);
        if ((rb.roots * moved).cwiseAbs().maxCoeff() > tol * scale * 10) {
          report.ok = false;
          report.detail = "eps_s -> eps_{g(s)} is not well-defined on span(Pi) for g = element #" +
                          std::to_string(e);
          return report;
        }
      }
    }
  }
  return report;
}

Eigen::MatrixXd symmetry_action(const RootBasis& rb, const Symmetry& g) {
  const int n = rb.graph.size();
  const int d = rb.dim;
  const bool standard_roots =
      d == n && rb.roots == Eigen::MatrixXd::Identity(n, n);
  if (standard_roots) {
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
    for (int s = 0; s < n; ++s) p(g(s), s) = 1.0;
    return p;
  }
  if (matrix_rank(rb.roots) != d)
    throw root_basis_error(
        "the group action on V is undetermined: the roots do not span V and are not the "
        "standard basis");
  Eigen::MatrixXd target(d, n);
  for (int s = 0; s < n; ++s) target.col(g(s)) = rb.roots.col(s);
  // Solve M * roots = target; roots^T has full column rank so the system is
  // consistent and the least-squares solution is exact.
  Eigen::MatrixXd mt =
      rb.roots.transpose().colPivHouseholderQr().solve(target.transpose());
  return mt.transpose();
}

FixedSubspace fixed_subspace(const RootBasis& rb, const SymmetryGroup& g, double tol) {
  FixedSubspace fs;
  fs.parent = rb;
  fs.group = g;
  const int d = rb.dim;
  if (g.is_trivial()) {
    fs.basis = Eigen::MatrixXd::Identity(d, d);
    fs.projected_bilinear = rb.bilinear;
    return fs;
  }
  const int m = static_cast<int>(g.elements.size()) - 1;
  Eigen::MatrixXd stacked(static_cast<Eigen::Index>(m) * d, d);
  for (int e = 1; e <= m; ++e)
    stacked.middleRows(static_cast<Eigen::Index>(e - 1) * d, d) =
        symmetry_action(rb, g.elements[e]) - Eigen::MatrixXd::Identity(d, d);
  Eigen::MatrixXd basis = kernel_basis(stacked, tol);
  for (int j = 0; j < basis.cols(); ++j) {
    basis.col(j) /= basis.col(j).norm();
    for (int i = 0; i < d; ++i) {
      if (std::abs(basis(i, j)) > tol) {
        if (basis(i, j) < 0) basis.col(j) = -basis.col(j);
        break;
      }
    }
  }
  fs.basis = std::move(basis);
  fs.projected_bilinear = fs.basis.transpose() * rb.bilinear * fs.basis;
  return fs;
}

}  // namespace coxfold
