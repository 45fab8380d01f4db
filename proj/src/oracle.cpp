#include "coxfold/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace coxfold {

std::uint64_t fingerprint(const Eigen::MatrixXd& m) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^
                    (static_cast<std::uint64_t>(m.rows()) << 32 |
                     static_cast<std::uint64_t>(m.cols()));
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      const long long q = std::llround(m(r, c) * 1e6);
      std::uint64_t x = static_cast<std::uint64_t>(q);
      x ^= x >> 30;
      x *= 0xbf58476d1ce4e5b9ULL;
      x ^= x >> 27;
      h = (h ^ x) * 0x94d049bb133111ebULL;
    }
  return h;
}

int EnumerationResult::find(std::uint64_t key) const {
  auto it = index.find(key);
  return it == index.end() ? -1 : it->second;
}

namespace {

// Insert if absent. Returns the element index, or -1 when the cap blocked
// the insert. Audits fingerprint collisions.
int insert_element(EnumerationResult& res, Eigen::MatrixXd matrix, std::vector<int> word,
                   std::size_t cap) {
  const std::uint64_t key = fingerprint(matrix);
  if (const int existing = res.find(key); existing >= 0) {
    const double dist =
        matrix.size() == 0
            ? 0.0
            : (matrix - res.elements[existing].matrix).cwiseAbs().maxCoeff();
    if (dist >= 1e-5)
      throw error("fingerprint collision between distinct elements (distance " +
                  std::to_string(dist) + "): tolerance collapse");
    return existing;
  }
  if (res.elements.size() >= cap) {
    res.truncated = true;
    return -1;
  }
  const int id = static_cast<int>(res.elements.size());
  res.elements.push_back({std::move(matrix), key});
  res.words.push_back(std::move(word));
  res.index.emplace(key, id);
  return id;
}

}  // namespace

EnumerationResult enumerate_matrix_group(const std::vector<Eigen::MatrixXd>& generators, int dim,
                                         std::size_t cap) {
  EnumerationResult res;
  insert_element(res, Eigen::MatrixXd::Identity(dim, dim), {}, cap);
  for (std::size_t head = 0; head < res.elements.size() && !res.truncated; ++head) {
    for (std::size_t k = 0; k < generators.size(); ++k) {
      Eigen::MatrixXd next = res.elements[head].matrix * generators[k];
      std::vector<int> word = res.words[head];
      word.push_back(static_cast<int>(k));
      insert_element(res, std::move(next), std::move(word), cap);
      if (res.truncated) break;
    }
  }
  return res;
}

EnumerationResult enumerate_group(const ReflectionRep& rep, std::size_t cap) {
  return enumerate_matrix_group(rep.gens, rep.dim(), cap);
}

EnumerationResult fixed_subgroup(const EnumerationResult& enumeration, const SymmetryGroup& G,
                                 const ReflectionRep& rep) {
  if (enumeration.truncated) throw error("fixed_subgroup requires a complete enumeration");

  // Action matrices of the non-identity symmetries. Permutation matrices get
  // an exact reindexing path so canonical-basis conjugation is float-exact.
  struct Action {
    bool permutation = false;
    std::vector<int> perm;  // conj(i,j) = m(perm[i], perm[j]) with perm = g^{-1}
    Eigen::MatrixXd matrix, inverse;
  };
  std::vector<Action> actions;
  const int d = rep.dim();
  for (std::size_t e = 1; e < G.elements.size(); ++e) {
    const Eigen::MatrixXd p = symmetry_action(rep.basis, G.elements[e]);
    Action act;
    act.permutation = true;
    act.perm.assign(d, -1);
    for (int c = 0; c < d && act.permutation; ++c) {
      int one = -1;
      for (int r = 0; r < d; ++r) {
        if (p(r, c) == 1.0 && one < 0)
          one = r;
        else if (p(r, c) != 0.0) {
          act.permutation = false;
          break;
        }
      }
      if (one < 0)
        act.permutation = false;
      else
        act.perm[one] = c;  // g^{-1}(one) = c
    }
    if (!act.permutation) {
      act.matrix = p;
      act.inverse = p.inverse();
    }
    actions.push_back(std::move(act));
  }

  EnumerationResult out;
  for (std::size_t i = 0; i < enumeration.elements.size(); ++i) {
    const Eigen::MatrixXd& m = enumeration.elements[i].matrix;
    bool fixed = true;
    for (const Action& act : actions) {
      Eigen::MatrixXd conj(d, d);
      if (act.permutation) {
        for (int r = 0; r < d; ++r)
          for (int c = 0; c < d; ++c) conj(r, c) = m(act.perm[r], act.perm[c]);
      } else {
        conj = act.matrix * m * act.inverse;
      }
      const int j = enumeration.find(fingerprint(conj));
      if (j < 0)
        throw error("conjugate of element #" + std::to_string(i) +
                    " missing from the enumeration: tolerance collapse");
      if (j != static_cast<int>(i)) {
        fixed = false;
        break;
      }
    }
    if (fixed) {
      const int id = static_cast<int>(out.elements.size());
      out.elements.push_back(enumeration.elements[i]);
      out.words.push_back(enumeration.words[i]);
      out.index.emplace(enumeration.elements[i].key, id);
    }
  }
  return out;
}

void audit_separation(const EnumerationResult& enumeration, double min_gap) {
  const auto& els = enumeration.elements;
  if (els.size() < 2 || els[0].matrix.size() == 0) return;
  std::vector<int> order(els.size());
  for (std::size_t i = 0; i < els.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return els[a].matrix(0, 0) < els[b].matrix(0, 0); });
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const auto& a = els[order[i]].matrix;
      const auto& b = els[order[j]].matrix;
      if (b(0, 0) - a(0, 0) > min_gap) break;
      if ((a - b).cwiseAbs().maxCoeff() <= min_gap)
        throw error("tolerance collapse: elements #" + std::to_string(order[i]) + " and #" +
                    std::to_string(order[j]) + " are within " + std::to_string(min_gap));
    }
  }
}

namespace {

std::string word_str(const CoxeterGraph& g, const std::vector<int>& word) {
  if (word.empty()) return "(empty)";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += g.vertex(word[i]);
  }
  return out;
}

}  // namespace

TheoremReport verify_theorem(const CoxeterGraph& g, const SymmetryGroup& G, std::size_t cap,
                             double tol, int k_max, std::uint64_t seed, int samples) {
  TheoremReport report;
  const RootBasis rb = canonical_root_basis(g);
  const FoldedSystem sys = fold(g, G, rb, tol, k_max);
  const ReflectionRep rep = build_rep(rb);

  report.folded_basis_ok = validate_root_basis(sys.folded_root_basis, tol).valid;
  if (!report.folded_basis_ok) report.failures.push_back("folded root basis invalid");

  const FiniteTypeReport folded_type = classify_finite_type(sys.folded_graph);
  for (std::size_t c = 0; c < folded_type.components.size(); ++c) {
    if (c) report.folded_type += " + ";
    report.folded_type += folded_type.components[c].second;
  }
  if (sys.count() == 0) report.folded_type = "empty";

  report.relations_ok = true;
  for (int i = 0; i < sys.count(); ++i)
    for (int j = i; j < sys.count(); ++j) {
      const CoxeterLabel label = sys.m_tilde_at(i, j);
      if (label.is_infinite()) continue;
      if (!check_relation(rep, sys.generators[i], sys.generators[j], label)) {
        report.relations_ok = false;
        report.failures.push_back("(w_X w_Y)^" + label.str() + " != 1 for " +
                                  sys.generators[i].name + ", " + sys.generators[j].name);
      }
    }

  report.lemma34_ok = true;
  for (const FoldedGenerator& gen : sys.generators)
    if (!check_lemma_3_4(rep, sys.fixed, gen, samples, seed)) {
      report.lemma34_ok = false;
      report.failures.push_back("w_X does not act as the reflection in eps~ on " + gen.name);
    }

  EnumerationResult whole = enumerate_group(rep, cap);
  if (whole.truncated) {
    report.oracle_mode = false;
    return report;
  }
  report.oracle_mode = true;
  report.order_w = whole.order();

  const EnumerationResult fixed = fixed_subgroup(whole, G, rep);
  report.order_fixed = fixed.order();

  // (i) generation: the closure of the w_X matrices must equal the fixed set
  std::vector<Eigen::MatrixXd> folded_gens;
  for (const FoldedGenerator& gen : sys.generators)
    folded_gens.push_back(evaluate_word(rep, gen.word));
  const EnumerationResult closure = enumerate_matrix_group(folded_gens, rb.dim, cap);
  report.generation_ok = !closure.truncated && closure.order() == fixed.order();
  if (report.generation_ok) {
    for (const MatrixGroupElement& el : closure.elements)
      if (fixed.find(el.key) < 0) report.generation_ok = false;
  }
  if (!report.generation_ok) {
    for (std::size_t i = 0; i < closure.elements.size(); ++i)
      if (fixed.find(closure.elements[i].key) < 0)
        report.failures.push_back("closure element outside W^G, witness word over {w_X}: " +
                                  word_str(sys.folded_graph, closure.words[i]));
    for (std::size_t i = 0; i < fixed.elements.size(); ++i)
      if (closure.find(fixed.elements[i].key) < 0)
        report.failures.push_back("fixed element not generated by {w_X}, witness word: " +
                                  word_str(g, fixed.words[i]));
    if (closure.truncated) report.failures.push_back("closure of {w_X} exceeded the cap");
  }

  // (ii) |W(folded graph)| == |W^G| by independent enumeration
  const EnumerationResult abstract_folded =
      enumerate_group(build_rep(canonical_root_basis(sys.folded_graph)), cap);
  report.order_folded = abstract_folded.order();
  report.order_ok = !abstract_folded.truncated && abstract_folded.order() == fixed.order();
  if (!report.order_ok)
    report.failures.push_back("|W(folded)| = " + std::to_string(report.order_folded) +
                              " != |W^G| = " + std::to_string(report.order_fixed));
  return report;
}

nlohmann::json TheoremReport::to_json() const {
  nlohmann::json j;
  j["mode"] = oracle_mode ? "oracle" : "property";
  j["folded_type"] = folded_type;
  j["checks"]["relations"] = relations_ok;
  j["checks"]["lemma_3_4"] = lemma34_ok;
  j["checks"]["folded_basis"] = folded_basis_ok;
  if (oracle_mode) {
    j["orders"]["W"] = order_w;
    j["orders"]["W_fixed"] = order_fixed;
    j["orders"]["W_folded"] = order_folded;
    j["checks"]["generation"] = generation_ok;
    j["checks"]["order_match"] = order_ok;
  }
  j["pass"] = all_ok();
  j["failures"] = failures;
  return j;
}

}  // namespace coxfold
