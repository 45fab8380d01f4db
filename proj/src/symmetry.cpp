#include "coxfold/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace coxfold {

bool Symmetry::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (perm[i] != i) return false;
  return true;
}

Symmetry Symmetry::identity(int n) {
  Symmetry s;
  s.perm.resize(n);
  std::iota(s.perm.begin(), s.perm.end(), 0);
  return s;
}

Symmetry compose(const Symmetry& a, const Symmetry& b) {
  Symmetry c;
  c.perm.resize(a.perm.size());
  for (int s = 0; s < a.size(); ++s) c.perm[s] = a.perm[b.perm[s]];
  return c;
}

Symmetry inverse(const Symmetry& a) {
  Symmetry c;
  c.perm.resize(a.perm.size());
  for (int s = 0; s < a.size(); ++s) c.perm[a.perm[s]] = s;
  return c;
}

Symmetry validate_symmetry(const CoxeterGraph& g, const std::vector<int>& perm) {
  const int n = g.size();
  if (static_cast<int>(perm.size()) != n)
    throw parse_error("symmetry must map all " + std::to_string(n) + " vertices");
  std::vector<bool> hit(n, false);
  for (int s = 0; s < n; ++s) {
    if (perm[s] < 0 || perm[s] >= n || hit[perm[s]])
      throw parse_error("symmetry is not a bijection on the vertex set");
    hit[perm[s]] = true;
  }
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (!(g.label(perm[s], perm[t]) == g.label(s, t)))
        throw parse_error("symmetry does not preserve labels: pair (" + g.vertex(s) + "," +
                          g.vertex(t) + ") has m=" + g.label(s, t).str() + " but its image has m=" +
                          g.label(perm[s], perm[t]).str());
  Symmetry out;
  out.perm = perm;
  return out;
}

Symmetry symmetry_from_json(const CoxeterGraph& g, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("map") || !j["map"].is_object())
    throw parse_error("symmetry generator must be an object {\"map\": {...}}");
  std::vector<int> perm(g.size());
  std::iota(perm.begin(), perm.end(), 0);
  for (const auto& [from, to] : j["map"].items()) {
    if (!to.is_string()) throw parse_error("symmetry map values must be vertex names");
    perm[g.index_of(from)] = g.index_of(to.get<std::string>());
  }
  return validate_symmetry(g, perm);
}

nlohmann::json symmetry_to_json(const CoxeterGraph& g, const Symmetry& s) {
  nlohmann::json map = nlohmann::json::object();
  for (int i = 0; i < s.size(); ++i)
    if (s.perm[i] != i) map[g.vertex(i)] = g.vertex(s.perm[i]);
  nlohmann::json j;
  j["map"] = std::move(map);
  return j;
}

SymmetryGroup generate_group(const CoxeterGraph& g, const std::vector<Symmetry>& generators,
                             std::size_t cap) {
  for (const Symmetry& s : generators) validate_symmetry(g, s.perm);

  SymmetryGroup group;
  group.graph = g;
  group.elements.push_back(Symmetry::identity(g.size()));
  std::set<std::vector<int>> seen{group.elements[0].perm};
  for (std::size_t head = 0; head < group.elements.size(); ++head) {
    const Symmetry current = group.elements[head];
    for (const Symmetry& gen : generators) {
      Symmetry next = compose(current, gen);
      if (seen.insert(next.perm).second) {
        if (group.elements.size() >= cap)
          throw error("symmetry group closure exceeded cap " + std::to_string(cap));
        group.elements.push_back(std::move(next));
      }
    }
  }
  return group;
}

SymmetryGroup group_from_json(const CoxeterGraph& g, const nlohmann::json& j, std::size_t cap) {
  if (!j.is_array()) throw parse_error("symmetry document must be an array of generators");
  std::vector<Symmetry> generators;
  for (const auto& item : j) generators.push_back(symmetry_from_json(g, item));
  return generate_group(g, generators, cap);
}

OrbitPartition orbits(const SymmetryGroup& group) {
  const int n = group.graph.size();
  std::vector<int> root(n, -1);
  OrbitPartition part;
  for (int s = 0; s < n; ++s) {
    if (root[s] >= 0) continue;
    std::vector<int> orbit;
    for (const Symmetry& g : group.elements) {
      const int t = g(s);
      if (root[t] < 0) {
        root[t] = s;
        orbit.push_back(t);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    part.orbits.push_back(std::move(orbit));
  }
  return part;
}

namespace {

void search_automorphisms(const CoxeterGraph& g, std::vector<int>& map, std::vector<bool>& used,
                          int v, std::vector<Symmetry>& out) {
  const int n = g.size();
  if (v == n) {
    Symmetry s;
    s.perm = map;
    out.push_back(std::move(s));
    return;
  }
  for (int w = 0; w < n; ++w) {
    if (used[w]) continue;
    bool ok = true;
    for (int u = 0; u < v; ++u)
      if (!(g.label(u, v) == g.label(map[u], w))) {
        ok = false;
        break;
      }
    if (!ok) continue;
    map[v] = w;
    used[w] = true;
    search_automorphisms(g, map, used, v + 1, out);
    used[w] = false;
  }
}

}  // namespace

SymmetryGroup automorphism_group(const CoxeterGraph& g, int max_vertices) {
  if (g.size() > max_vertices)
    throw error("automorphism search capped at " + std::to_string(max_vertices) + " vertices");
  std::vector<Symmetry> all;
  std::vector<int> map(g.size(), -1);
  std::vector<bool> used(g.size(), false);
  search_automorphisms(g, map, used, 0, all);
  // backtracking emits images in lexicographic order, and the identity is
  // the lexicographically least permutation
  SymmetryGroup group;
  group.graph = g;
  group.elements = std::move(all);
  return group;
}

}  // namespace coxfold
