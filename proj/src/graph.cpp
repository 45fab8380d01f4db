#include "coxfold/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

namespace coxfold {

double CoxeterLabel::cos_pi_over() const {
  if (is_infinite()) return 1.0;
  return std::cos(std::numbers::pi / *m_);
}

CoxeterGraph::CoxeterGraph(std::vector<std::string> vertices, const std::vector<Edge>& edges) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw parse_error("duplicate vertex in graph");
  names_ = std::move(vertices);
  const int n = size();
  labels_.assign(static_cast<std::size_t>(n) * n, CoxeterLabel::finite(2));
  for (int i = 0; i < n; ++i) at(i, i) = CoxeterLabel::finite(1);

  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges) {
    const int i = index_of(e.u);
    const int j = index_of(e.v);
    if (i == j) throw parse_error("self-loop label on vertex '" + e.u + "'");
    if (e.m.is_finite() && e.m.value() < 2)
      throw parse_error("label < 2 on pair (" + e.u + "," + e.v + ")");
    auto key = std::minmax(i, j);
    if (!seen.insert(key).second)
      throw parse_error("duplicate edge (" + e.u + "," + e.v + ")");
    at(i, j) = e.m;
    at(j, i) = e.m;
  }
}

int CoxeterGraph::index_of(const std::string& name) const {
  auto idx = find_index(name);
  if (!idx) throw parse_error("unknown vertex '" + name + "'");
  return *idx;
}

std::optional<int> CoxeterGraph::find_index(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

CoxeterLabel CoxeterGraph::label(int i, int j) const {
  if (i == j) throw error("label(i,i) requested; the diagonal is not a pair label");
  return at(i, j);
}

bool CoxeterGraph::adjacent(int i, int j) const {
  if (i == j) return false;
  const CoxeterLabel& m = at(i, j);
  return m.is_infinite() || m.value() >= 3;
}

CoxeterGraph CoxeterGraph::parse(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  return from_json(j);
}

static CoxeterLabel label_from_json(const nlohmann::json& m) {
  if (m.is_string()) {
    if (m.get<std::string>() == "inf") return CoxeterLabel::infinity();
    throw parse_error("edge label must be an integer or \"inf\", got \"" +
                      m.get<std::string>() + "\"");
  }
  if (!m.is_number_integer()) throw parse_error("edge label must be an integer or \"inf\"");
  const auto v = m.get<long long>();
  if (v < 2) throw parse_error("label < 2: " + std::to_string(v));
  if (v > 1000000) throw parse_error("label too large: " + std::to_string(v));
  return CoxeterLabel::finite(static_cast<int>(v));
}

CoxeterGraph CoxeterGraph::from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
      throw parse_error("graph document must be an object with a \"vertices\" array");
    std::vector<std::string> vertices;
    for (const auto& v : j["vertices"]) {
      if (!v.is_string()) throw parse_error("vertex names must be strings");
      vertices.push_back(v.get<std::string>());
    }
    std::vector<Edge> edges;
    if (j.contains("edges")) {
      for (const auto& e : j["edges"]) {
        if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e.contains("m"))
          throw parse_error("edge must be an object {\"u\",\"v\",\"m\"}");
        edges.push_back({e["u"].get<std::string>(), e["v"].get<std::string>(),
                         label_from_json(e["m"])});
      }
    }
    return CoxeterGraph(std::move(vertices), edges);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("malformed graph document: ") + e.what());
  }
}

nlohmann::json CoxeterGraph::to_json() const {
  nlohmann::json j;
  j["vertices"] = names_;
  nlohmann::json edges = nlohmann::json::array();
  for (int i = 0; i < size(); ++i)
    for (int k = i + 1; k < size(); ++k) {
      if (!adjacent(i, k)) continue;
      nlohmann::json e;
      e["u"] = names_[i];
      e["v"] = names_[k];
      const CoxeterLabel m = at(i, k);
      if (m.is_infinite())
        e["m"] = "inf";
      else
        e["m"] = m.value();
      edges.push_back(e);
    }
  j["edges"] = std::move(edges);
  return j;
}

CoxeterGraph full_subgraph(const CoxeterGraph& g, const std::vector<int>& X) {
  std::vector<std::string> vertices;
  for (int i : X) {
    if (i < 0 || i >= g.size()) throw parse_error("subset index out of range");
    vertices.push_back(g.vertex(i));
  }
  std::vector<CoxeterGraph::Edge> edges;
  for (std::size_t a = 0; a < X.size(); ++a)
    for (std::size_t b = a + 1; b < X.size(); ++b) {
      const CoxeterLabel m = g.label(X[a], X[b]);
      if (m.is_infinite() || m.value() >= 3)
        edges.push_back({g.vertex(X[a]), g.vertex(X[b]), m});
    }
  return CoxeterGraph(std::move(vertices), edges);
}

std::vector<std::vector<int>> connected_components(const CoxeterGraph& g) {
  const int n = g.size();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    std::vector<int> stack{start};
    comp[start] = ncomp;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w)
        if (comp[w] < 0 && g.adjacent(v, w)) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }
  std::vector<std::vector<int>> out(ncomp);
  for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
  // components are discovered from their least vertex, so `out` is already
  // sorted by least member and each component is sorted
  return out;
}

namespace {

// Sorted multiset of all labels from v to the other vertices, as a vertex
// invariant for isomorphism pruning. Infinite labels sort last.
std::vector<std::pair<int, int>> vertex_signature(const CoxeterGraph& g, int v) {
  std::vector<std::pair<int, int>> sig;
  for (int w = 0; w < g.size(); ++w) {
    if (w == v) continue;
    const CoxeterLabel m = g.label(v, w);
    sig.emplace_back(m.is_infinite() ? 1 : 0, m.is_finite() ? m.value() : 0);
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

bool extend_mapping(const CoxeterGraph& a, const CoxeterGraph& b, std::vector<int>& map,
                    std::vector<bool>& used, int v) {
  const int n = a.size();
  if (v == n) return true;
  for (int w = 0; w < n; ++w) {
    if (used[w]) continue;
    bool ok = true;
    for (int u = 0; u < v; ++u)
      if (!(a.label(u, v) == b.label(map[u], w))) {
        ok = false;
        break;
      }
    if (!ok) continue;
    map[v] = w;
    used[w] = true;
    if (extend_mapping(a, b, map, used, v + 1)) return true;
    used[w] = false;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const CoxeterGraph& a, const CoxeterGraph& b) {
  const int n = a.size();
  if (n != b.size()) return false;
  std::vector<std::vector<std::pair<int, int>>> sa, sb;
  for (int v = 0; v < n; ++v) {
    sa.push_back(vertex_signature(a, v));
    sb.push_back(vertex_signature(b, v));
  }
  auto sorted = [](std::vector<std::vector<std::pair<int, int>>> s) {
    std::sort(s.begin(), s.end());
    return s;
  };
  if (sorted(sa) != sorted(sb)) return false;
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  return extend_mapping(a, b, map, used, 0);
}

namespace {

CoxeterGraph make_path(int n, const std::vector<int>& labels) {
  std::vector<std::string> vertices;
  for (int i = 1; i <= n; ++i) vertices.push_back("v" + std::to_string(i));
  std::vector<CoxeterGraph::Edge> edges;
  for (int i = 0; i + 1 < n; ++i)
    edges.push_back({"v" + std::to_string(i + 1), "v" + std::to_string(i + 2),
                     CoxeterLabel::finite(labels[i])});
  return CoxeterGraph(std::move(vertices), edges);
}

// Path v1..v_{n-1} with an extra vertex vn attached to chain position `fork`.
CoxeterGraph make_forked(int n, int fork) {
  std::vector<std::string> vertices;
  for (int i = 1; i <= n; ++i) vertices.push_back("v" + std::to_string(i));
  std::vector<CoxeterGraph::Edge> edges;
  for (int i = 0; i + 2 < n; ++i)
    edges.push_back({"v" + std::to_string(i + 1), "v" + std::to_string(i + 2),
                     CoxeterLabel::finite(3)});
  edges.push_back({"v" + std::to_string(fork), "v" + std::to_string(n), CoxeterLabel::finite(3)});
  return CoxeterGraph(std::move(vertices), edges);
}

}  // namespace

CoxeterGraph make_type_a(int n) { return make_path(n, std::vector<int>(std::max(0, n - 1), 3)); }

CoxeterGraph make_type_b(int n) {
  std::vector<int> labels(n - 1, 3);
  labels[0] = 4;
  return make_path(n, labels);
}

CoxeterGraph make_type_d(int n) { return make_forked(n, 2); }

CoxeterGraph make_type_e(int n) {
  if (n < 6 || n > 8) throw error("E_n only defined for n in {6,7,8}");
  return make_forked(n, 3);
}

CoxeterGraph make_type_f4() { return make_path(4, {3, 4, 3}); }

CoxeterGraph make_type_h(int n) {
  if (n == 3) return make_path(3, {5, 3});
  if (n == 4) return make_path(4, {5, 3, 3});
  throw error("H_n only defined for n in {3,4}");
}

CoxeterGraph make_type_i2(CoxeterLabel m) {
  return CoxeterGraph({"v1", "v2"}, {{"v1", "v2", m}});
}

namespace {

std::string match_catalog(const CoxeterGraph& comp) {
  const int n = comp.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (comp.label(i, j).is_infinite()) return "not finite";

  if (n == 1) return "A1";
  if (n == 2) {
    // connected, so the single label is finite and >= 3
    const int m = comp.label(0, 1).value();
    if (m == 3) return "A2";
    if (m == 4) return "B2";
    return "I2(" + std::to_string(m) + ")";
  }
  std::vector<std::pair<std::string, CoxeterGraph>> candidates;
  candidates.emplace_back("A" + std::to_string(n), make_type_a(n));
  if (n >= 3) candidates.emplace_back("B" + std::to_string(n), make_type_b(n));
  if (n >= 4) candidates.emplace_back("D" + std::to_string(n), make_type_d(n));
  if (n >= 6 && n <= 8) candidates.emplace_back("E" + std::to_string(n), make_type_e(n));
  if (n == 4) candidates.emplace_back("F4", make_type_f4());
  if (n == 3 || n == 4) candidates.emplace_back("H" + std::to_string(n), make_type_h(n));
  for (const auto& [tag, graph] : candidates)
    if (is_isomorphic(comp, graph)) return tag;
  return "not finite";
}

}  // namespace

FiniteTypeReport classify_finite_type(const CoxeterGraph& g) {
  FiniteTypeReport report;
  report.is_finite = true;
  for (const auto& comp : connected_components(g)) {
    std::string tag = match_catalog(full_subgraph(g, comp));
    if (tag == "not finite") report.is_finite = false;
    report.components.emplace_back(comp, std::move(tag));
  }
  return report;
}

}  // namespace coxfold
