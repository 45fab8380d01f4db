#include "coxfold/folding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace coxfold {

OrbitType classify_orbit(const CoxeterGraph& g, const std::vector<int>& orbit) {
  if (orbit.empty()) throw classification_error("empty orbit");
  const CoxeterGraph sub = full_subgraph(g, orbit);
  if (!classify_finite_type(sub).is_finite)
    throw classification_error("W_X is infinite for orbit O_" + g.vertex(orbit.front()));

  int common_v = -1;
  for (int s : orbit) {
    int v = 0;
    for (int t : orbit)
      if (t != s && g.adjacent(s, t)) ++v;
    if (v >= 2)
      throw classification_error("v_s(X) = " + std::to_string(v) + " at vertex '" + g.vertex(s) +
                                 "': inconsistent with a finite-type orbit");
    if (common_v < 0)
      common_v = v;
    else if (v != common_v)
      throw classification_error("v_s(X) is not constant on '" + g.vertex(orbit.front()) +
                                 "...': the input is not a G-orbit");
  }
  if (common_v == 0) return OrbitType{OrbitType::Kind::I, 0};

  int m = 0;
  for (std::size_t a = 0; a < orbit.size(); ++a)
    for (std::size_t b = a + 1; b < orbit.size(); ++b) {
      if (!g.adjacent(orbit[a], orbit[b])) continue;
      const int label = g.label(orbit[a], orbit[b]).value();  // finite since W_X is
      if (m == 0)
        m = label;
      else if (label != m)
        throw classification_error("edge labels inside the orbit differ: the input is not a "
                                   "G-orbit");
    }
  return OrbitType{OrbitType::Kind::II, m};
}

std::vector<int> longest_element_word(const CoxeterGraph& g, const std::vector<int>& orbit,
                                      const OrbitType& type) {
  std::vector<int> sorted = orbit;
  std::sort(sorted.begin(), sorted.end());
  if (type.kind == OrbitType::Kind::I) return sorted;

  // Type II_m: matching edges {s,t}, word per edge is the alternating
  // product of length m starting at the smaller vertex: (st)^{m/2} for even
  // m and (st)^{(m-1)/2} s for odd m.
  std::vector<int> word;
  std::vector<bool> used(g.size(), false);
  for (int s : sorted) {
    if (used[s]) continue;
    int partner = -1;
    for (int t : sorted)
      if (t != s && g.adjacent(s, t)) partner = t;
    if (partner < 0) throw classification_error("type II orbit member without a matching edge");
    used[s] = used[partner] = true;
    for (int k = 0; k < type.m; ++k) word.push_back(k % 2 == 0 ? s : partner);
  }
  return word;
}

FoldedGenerator make_folded_generator(const RootBasis& rb, const std::vector<int>& orbit,
                                      double tol) {
  FoldedGenerator gen;
  gen.orbit = orbit;
  std::sort(gen.orbit.begin(), gen.orbit.end());
  gen.name = "O_" + rb.graph.vertex(gen.orbit.front());
  gen.type = classify_orbit(rb.graph, gen.orbit);
  gen.a = Eigen::VectorXd::Zero(rb.dim);
  for (int s : gen.orbit) gen.a += rb.root(s);
  const double norm_sq = rb.pairing(gen.a, gen.a);
  if (norm_sq <= tol)
    throw classification_error("a_X has non-positive norm on orbit " + gen.name);
  gen.norm_a = std::sqrt(norm_sq);

  const double size = static_cast<double>(gen.orbit.size());
  const double expected =
      gen.type.kind == OrbitType::Kind::I
          ? std::sqrt(size)
          : std::sqrt(size * (1.0 - std::cos(std::numbers::pi / gen.type.m)));
  if (std::abs(gen.norm_a - expected) > tol)
    throw classification_error("|a_X| = " + std::to_string(gen.norm_a) + " violates the norm " +
                               "identity (expected " + std::to_string(expected) + ") on orbit " +
                               gen.name);

  gen.eps_tilde = gen.a / gen.norm_a;
  gen.word = longest_element_word(rb.graph, gen.orbit, gen.type);
  return gen;
}

std::string pattern_str(BiOrbitPattern p) {
  switch (p) {
    case BiOrbitPattern::Orthogonal: return "orthogonal";
    case BiOrbitPattern::Type1: return "type1";
    case BiOrbitPattern::Type2: return "type2";
    case BiOrbitPattern::Type3: return "type3";
    case BiOrbitPattern::Type4: return "type4";
    case BiOrbitPattern::Type5: return "type5";
    case BiOrbitPattern::Infinite: return "infinite";
  }
  return "?";
}

namespace {

bool is_simple(const CoxeterGraph& g, int s, int t) {
  return g.adjacent(s, t) && g.label(s, t).is_finite() && g.label(s, t).value() == 3;
}

// Shape of one connected component of Gamma_{X u Y}, with px = members from
// one orbit and qx = members from the other. Returns the bi-orbit type
// (1..5) and the type-1 edge label, or 0 if the component matches nothing.
struct ComponentShape {
  int pattern = 0;
  CoxeterLabel edge_label;  // type 1 only
  bool x_first = true;      // whether the first argument plays the x role
};

ComponentShape match_component(const CoxeterGraph& g, std::vector<int> p, std::vector<int> q,
                               bool x_first) {
  ComponentShape shape;
  shape.x_first = x_first;
  // (1) single edge x--y
  if (p.size() == 1 && q.size() == 1 && g.adjacent(p[0], q[0])) {
    shape.pattern = 1;
    shape.edge_label = g.label(p[0], q[0]);
    return shape;
  }
  // (2) path x-y-x, simple edges
  if (p.size() == 2 && q.size() == 1) {
    if (is_simple(g, p[0], q[0]) && is_simple(g, p[1], q[0]) && !g.adjacent(p[0], p[1])) {
      shape.pattern = 2;
      return shape;
    }
  }
  // (5) star: one y adjacent to three x, simple edges
  if (p.size() == 3 && q.size() == 1) {
    bool ok = true;
    for (int s : p)
      if (!is_simple(g, s, q[0])) ok = false;
    for (std::size_t a = 0; a < p.size() && ok; ++a)
      for (std::size_t b = a + 1; b < p.size(); ++b)
        if (g.adjacent(p[a], p[b])) ok = false;
    if (ok) {
      shape.pattern = 5;
      return shape;
    }
  }
  // (3)/(4) path y-x-x-y: middle pair from p with label 3 or 4, simple arms,
  // each end attached to its own middle vertex
  if (p.size() == 2 && q.size() == 2 && g.adjacent(p[0], p[1]) &&
      g.label(p[0], p[1]).is_finite()) {
    const int mid = g.label(p[0], p[1]).value();
    if (mid == 3 || mid == 4) {
      for (int flip = 0; flip < 2; ++flip) {
        const int q0 = q[flip], q1 = q[1 - flip];
        if (is_simple(g, q0, p[0]) && is_simple(g, q1, p[1]) && !g.adjacent(q0, p[1]) &&
            !g.adjacent(q1, p[0]) && !g.adjacent(q0, q1)) {
          shape.pattern = mid == 3 ? 3 : 4;
          return shape;
        }
      }
    }
  }
  return shape;  // pattern 0: no match
}

CoxeterLabel pattern_label(int pattern, const CoxeterLabel& edge_label) {
  switch (pattern) {
    case 1: return edge_label;
    case 2:
    case 3: return CoxeterLabel::finite(4);
    case 4: return CoxeterLabel::finite(8);
    case 5: return CoxeterLabel::finite(6);
    default: return CoxeterLabel::infinity();
  }
}

}  // namespace

std::pair<BiOrbitPattern, CoxeterLabel> bi_orbit_combinatorial(const CoxeterGraph& g,
                                                               const FoldedGenerator& x,
                                                               const FoldedGenerator& y) {
  bool any_cross = false;
  for (int s : x.orbit)
    for (int t : y.orbit)
      if (g.adjacent(s, t)) any_cross = true;
  if (!any_cross) return {BiOrbitPattern::Orthogonal, CoxeterLabel::finite(2)};

  std::vector<int> both = x.orbit;
  both.insert(both.end(), y.orbit.begin(), y.orbit.end());
  std::sort(both.begin(), both.end());
  const CoxeterGraph joint = full_subgraph(g, both);
  std::set<int> in_x(x.orbit.begin(), x.orbit.end());

  ComponentShape common;
  bool first = true;
  for (const std::vector<int>& comp : connected_components(joint)) {
    std::vector<int> px, qy;
    for (int local : comp) {
      const int global = g.index_of(joint.vertex(local));
      (in_x.count(global) ? px : qy).push_back(global);
    }
    if (px.empty() || qy.empty()) return {BiOrbitPattern::Infinite, CoxeterLabel::infinity()};
    ComponentShape shape = match_component(g, px, qy, true);
    if (shape.pattern == 0) shape = match_component(g, qy, px, false);
    if (shape.pattern == 0) return {BiOrbitPattern::Infinite, CoxeterLabel::infinity()};
    if (first) {
      common = shape;
      first = false;
    } else if (shape.pattern != common.pattern || shape.x_first != common.x_first ||
               !(shape.edge_label == common.edge_label)) {
      return {BiOrbitPattern::Infinite, CoxeterLabel::infinity()};
    }
  }

  static constexpr BiOrbitPattern kPatterns[] = {BiOrbitPattern::Infinite, BiOrbitPattern::Type1,
                                                 BiOrbitPattern::Type2, BiOrbitPattern::Type3,
                                                 BiOrbitPattern::Type4, BiOrbitPattern::Type5};
  return {kPatterns[common.pattern], pattern_label(common.pattern, common.edge_label)};
}

namespace {

int cross_valence(const CoxeterGraph& g, int s, const std::vector<int>& other) {
  int v = 0;
  for (int t : other)
    if (g.adjacent(s, t)) ++v;
  return v;
}

double one_minus_cos(int m) { return 1.0 - std::cos(std::numbers::pi / m); }

}  // namespace

BiOrbitData bi_orbit_numeric(const RootBasis& rb, const FoldedGenerator& x,
                             const FoldedGenerator& y, double tol, int k_max) {
  const CoxeterGraph& g = rb.graph;
  BiOrbitData data;

  data.v_x = cross_valence(g, x.orbit.front(), y.orbit);
  for (int s : x.orbit)
    if (cross_valence(g, s, y.orbit) != data.v_x)
      throw classification_error("v_X depends on the representative: " + x.name + ", " + y.name +
                                 " are not orbits of one group");
  data.v_y = cross_valence(g, y.orbit.front(), x.orbit);
  for (int t : y.orbit)
    if (cross_valence(g, t, x.orbit) != data.v_y)
      throw classification_error("v_Y depends on the representative: " + x.name + ", " + y.name +
                                 " are not orbits of one group");

  // |X| v_X = |Y| v_Y counts the cross edges in two ways, exactly.
  if (x.orbit.size() * static_cast<std::size_t>(data.v_x) !=
      y.orbit.size() * static_cast<std::size_t>(data.v_y))
    throw classification_error("edge count identity |X| v_X = |Y| v_Y fails for " + x.name +
                               ", " + y.name);

  data.p_x = rb.pairing(rb.root(x.orbit.front()), y.a);
  for (int s : x.orbit)
    if (std::abs(rb.pairing(rb.root(s), y.a) - data.p_x) > tol)
      throw classification_error("p_X depends on the representative on " + x.name);
  data.p_y = rb.pairing(rb.root(y.orbit.front()), x.a);
  for (int t : y.orbit)
    if (std::abs(rb.pairing(rb.root(t), x.a) - data.p_y) > tol)
      throw classification_error("p_Y depends on the representative on " + y.name);

  if (data.v_x >= 1 && data.p_x > -0.5 * data.v_x + tol)
    throw classification_error("bound p_X <= -v_X/2 fails for " + x.name + ", " + y.name);
  if (data.v_y >= 1 && data.p_y > -0.5 * data.v_y + tol)
    throw classification_error("bound p_Y <= -v_Y/2 fails for " + x.name + ", " + y.name);

  data.inner = rb.pairing(x.a, y.a) / (x.norm_a * y.norm_a);

  double formula = 0.0;
  if (data.v_x > 0) {
    const bool x_matching = x.type.is_matching();
    const bool y_matching = y.type.is_matching();
    if (!x_matching && !y_matching) {
      formula = data.p_x * std::sqrt(static_cast<double>(data.v_y)) /
                std::sqrt(static_cast<double>(data.v_x));
    } else if (x_matching && !y_matching) {
      formula = data.p_x * std::sqrt(static_cast<double>(data.v_y)) /
                std::sqrt(data.v_x * one_minus_cos(x.type.m));
    } else if (!x_matching && y_matching) {
      formula = data.p_y * std::sqrt(static_cast<double>(data.v_x)) /
                std::sqrt(data.v_y * one_minus_cos(y.type.m));
    } else {
      formula = data.p_x * std::sqrt(static_cast<double>(data.v_y)) /
                std::sqrt(data.v_x * one_minus_cos(x.type.m) * one_minus_cos(y.type.m));
    }
  }
  if (std::abs(data.inner - formula) > tol)
    throw classification_error("direct inner product and case formula disagree on " + x.name +
                               ", " + y.name + ": " + std::to_string(data.inner) + " vs " +
                               std::to_string(formula));

  if (std::abs(data.inner) <= tol) {
    data.m_tilde = CoxeterLabel::finite(2);
  } else if (data.inner <= -1.0 + tol) {
    data.m_tilde = CoxeterLabel::infinity();
  } else if (data.inner < 0.0) {
    int best_k = -1;
    double best_err = tol;
    for (int k = 3; k <= k_max; ++k) {
      const double err = std::abs(data.inner + std::cos(std::numbers::pi / k));
      if (err < best_err) {
        best_err = err;
        best_k = k;
      }
    }
    if (best_k < 0)
      throw classification_error("inner product " + std::to_string(data.inner) + " on " + x.name +
                                 ", " + y.name + " matches no -cos(pi/k) for k <= " +
                                 std::to_string(k_max));
    data.m_tilde = CoxeterLabel::finite(best_k);
  } else {
    throw classification_error("positive inner product " + std::to_string(data.inner) + " on " +
                               x.name + ", " + y.name + " contradicts the root basis conditions");
  }

  data.pattern = bi_orbit_combinatorial(g, x, y).first;
  return data;
}

FoldedSystem fold(const CoxeterGraph& g, const SymmetryGroup& G, const RootBasis& rb, double tol,
                  int k_max) {
  const EquivarianceReport eq = check_equivariance(rb, G, tol);
  if (!eq.ok) throw equivariance_error(eq.detail);

  FoldedSystem sys;
  sys.fixed = fixed_subspace(rb, G, tol);

  for (const std::vector<int>& orbit : orbits(G).orbits)
    if (classify_finite_type(full_subgraph(g, orbit)).is_finite)
      sys.generators.push_back(make_folded_generator(rb, orbit, tol));

  const int n = sys.count();
  const bool canonical = rb.is_canonical(tol);
  sys.m_tilde.assign(static_cast<std::size_t>(n) * n, CoxeterLabel::finite(1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const BiOrbitData data =
          bi_orbit_numeric(rb, sys.generators[i], sys.generators[j], tol, k_max);
      if (canonical) {
        const auto [pattern, label] =
            bi_orbit_combinatorial(g, sys.generators[i], sys.generators[j]);
        if (!(label == data.m_tilde))
          throw classification_error(
              "combinatorial and numeric folded labels disagree on " + sys.generators[i].name +
              ", " + sys.generators[j].name + ": " + pattern_str(pattern) + " gives " +
              label.str() + ", Lemma 3.3 gives " + data.m_tilde.str());
      }
      sys.m_tilde[static_cast<std::size_t>(i) * n + j] = data.m_tilde;
      sys.m_tilde[static_cast<std::size_t>(j) * n + i] = data.m_tilde;
    }

  std::vector<std::string> names;
  for (const FoldedGenerator& gen : sys.generators) names.push_back(gen.name);
  std::vector<CoxeterGraph::Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const CoxeterLabel label = sys.m_tilde_at(i, j);
      if (label.is_infinite() || label.value() >= 3)
        edges.push_back({sys.generators[i].name, sys.generators[j].name, label});
    }
  sys.folded_graph = CoxeterGraph(names, edges);

  sys.folded_root_basis.graph = sys.folded_graph;
  sys.folded_root_basis.dim = sys.fixed.subdim();
  sys.folded_root_basis.bilinear = sys.fixed.projected_bilinear;
  sys.folded_root_basis.roots.resize(sys.fixed.subdim(), n);
  if (n > 0) {
    const auto solver = sys.fixed.basis.completeOrthogonalDecomposition();
    for (int i = 0; i < n; ++i) {
      const int col = sys.folded_graph.index_of(sys.generators[i].name);
      const Eigen::VectorXd coords = solver.solve(sys.generators[i].eps_tilde);
      const double residual =
          (sys.fixed.basis * coords - sys.generators[i].eps_tilde).cwiseAbs().maxCoeff();
      if (residual > 1e-7)
        throw classification_error("eps~ of " + sys.generators[i].name +
                                   " does not lie in V^G (residual " + std::to_string(residual) +
                                   ")");
      sys.folded_root_basis.roots.col(col) = coords;
    }
  }

  const RootBasisReport folded_report = validate_root_basis(sys.folded_root_basis, tol);
  if (!folded_report.valid)
    throw classification_error("folded root basis violates " + folded_report.condition_name() +
                               ": " + folded_report.detail);
  return sys;
}

namespace {

nlohmann::json vector_to_json(const Eigen::VectorXd& v) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

nlohmann::json label_to_json(const CoxeterLabel& label) {
  if (label.is_infinite()) return "inf";
  return label.value();
}

}  // namespace

nlohmann::json FoldedSystem::to_json() const {
  nlohmann::json j;
  nlohmann::json gens = nlohmann::json::array();
  const CoxeterGraph& g = fixed.parent.graph;
  for (const FoldedGenerator& gen : generators) {
    nlohmann::json item;
    item["name"] = gen.name;
    nlohmann::json members = nlohmann::json::array();
    for (int s : gen.orbit) members.push_back(g.vertex(s));
    item["members"] = std::move(members);
    item["type"] = gen.type.str();
    item["a"] = vector_to_json(gen.a);
    item["norm_a"] = gen.norm_a;
    item["eps_tilde"] = vector_to_json(gen.eps_tilde);
    nlohmann::json word = nlohmann::json::array();
    for (int s : gen.word) word.push_back(g.vertex(s));
    item["w_word"] = std::move(word);
    gens.push_back(std::move(item));
  }
  j["generators"] = std::move(gens);

  nlohmann::json m = nlohmann::json::array();
  for (int i = 0; i < count(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < count(); ++k) row.push_back(label_to_json(m_tilde_at(i, k)));
    m.push_back(std::move(row));
  }
  j["m_tilde"] = std::move(m);
  j["folded_graph"] = folded_graph.to_json();

  nlohmann::json basis = nlohmann::json::array();
  for (Eigen::Index r = 0; r < fixed.basis.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < fixed.basis.cols(); ++c) row.push_back(fixed.basis(r, c));
    basis.push_back(std::move(row));
  }
  j["fixed_basis"] = std::move(basis);
  j["folded_root_basis"] = root_basis_to_json(folded_root_basis);
  return j;
}

}  // namespace coxfold
