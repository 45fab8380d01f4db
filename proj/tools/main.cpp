#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "coxfold/folding.hpp"
#include "coxfold/graph.hpp"
#include "coxfold/oracle.hpp"
#include "coxfold/repr.hpp"
#include "coxfold/root_basis.hpp"
#include "coxfold/symmetry.hpp"

namespace {

using coxfold::CoxeterGraph;
using coxfold::CoxeterLabel;
using coxfold::RootBasis;
using coxfold::SymmetryGroup;

struct Options {
  std::string graph_path;
  std::string symmetry_path;
  std::string basis_path;
  double tolerance = 1e-9;
  int k_max = 360;
  std::uint64_t cap = 200000;
  std::uint64_t seed = 42;
  int samples = 100;
  std::string format = "text";
};

// Shortest round-trip formatting for all human-readable float output.
std::string fmt_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw coxfold::parse_error("cannot open file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return nlohmann::json::parse(buffer.str());
  } catch (const nlohmann::json::exception& e) {
    throw coxfold::parse_error("invalid JSON in '" + path + "': " + e.what());
  }
}

CoxeterGraph load_graph(const Options& opt) {
  return CoxeterGraph::from_json(load_json(opt.graph_path));
}

SymmetryGroup load_group(const CoxeterGraph& g, const Options& opt) {
  return coxfold::group_from_json(g, load_json(opt.symmetry_path));
}

RootBasis load_basis(const CoxeterGraph& g, const Options& opt) {
  if (opt.basis_path.empty()) return coxfold::canonical_root_basis(g);
  return coxfold::root_basis_from_json(g, load_json(opt.basis_path));
}

std::string word_names(const CoxeterGraph& g, const std::vector<int>& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += g.vertex(word[i]);
  }
  return out;
}

std::string members_names(const CoxeterGraph& g, const std::vector<int>& members) {
  std::string out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ',';
    out += g.vertex(members[i]);
  }
  return out;
}

int run_orbits(const Options& opt) {
  const CoxeterGraph g = load_graph(opt);
  const SymmetryGroup group = load_group(g, opt);
  const coxfold::OrbitPartition part = coxfold::orbits(group);

  nlohmann::json out = nlohmann::json::array();
  for (const std::vector<int>& orbit : part.orbits) {
    const bool finite = coxfold::classify_finite_type(coxfold::full_subgraph(g, orbit)).is_finite;
    nlohmann::json item;
    item["name"] = "O_" + g.vertex(orbit.front());
    nlohmann::json members = nlohmann::json::array();
    for (int s : orbit) members.push_back(g.vertex(s));
    item["members"] = std::move(members);
    item["finite"] = finite;
    if (finite) item["type"] = coxfold::classify_orbit(g, orbit).str();
    out.push_back(std::move(item));
  }

  if (opt.format == "json") {
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  for (const auto& item : out) {
    std::cout << item["name"].get<std::string>() << ": members="
              << members_names(g, [&] {
                   std::vector<int> idx;
                   for (const auto& m : item["members"]) idx.push_back(g.index_of(m));
                   return idx;
                 }())
              << " W_X=" << (item["finite"].get<bool>() ? "finite" : "infinite");
    if (item.contains("type")) std::cout << " type=" << item["type"].get<std::string>();
    std::cout << '\n';
  }
  return 0;
}

void print_fold_dot(const coxfold::FoldedSystem& sys, std::ostream& out) {
  const CoxeterGraph& g = sys.fixed.parent.graph;
  out << "graph folded {\n";
  for (const coxfold::FoldedGenerator& gen : sys.generators) {
    out << "  // " << gen.name << ": type " << gen.type.str() << ", w = "
        << word_names(g, gen.word) << ", eps~ = [";
    for (Eigen::Index i = 0; i < gen.eps_tilde.size(); ++i) {
      if (i) out << ", ";
      out << fmt_double(gen.eps_tilde(i));
    }
    out << "]\n";
  }
  for (const coxfold::FoldedGenerator& gen : sys.generators) out << "  \"" << gen.name << "\";\n";
  for (int i = 0; i < sys.count(); ++i)
    for (int j = i + 1; j < sys.count(); ++j) {
      const CoxeterLabel label = sys.m_tilde_at(i, j);
      if (label.is_infinite() || label.value() >= 3)
        out << "  \"" << sys.generators[i].name << "\" -- \"" << sys.generators[j].name
            << "\" [label=\"" << label.str() << "\"];\n";
    }
  out << "}\n";
}

void print_fold_text(const coxfold::FoldedSystem& sys, std::ostream& out) {
  const CoxeterGraph& g = sys.fixed.parent.graph;
  out << "folded graph on " << sys.count() << " orbit(s); dim V^G = " << sys.fixed.subdim()
      << '\n';
  for (const coxfold::FoldedGenerator& gen : sys.generators) {
    out << gen.name << ": members=" << members_names(g, gen.orbit) << " type=" << gen.type.str()
        << " |a|=" << fmt_double(gen.norm_a) << " w=" << word_names(g, gen.word) << '\n';
  }
  for (int i = 0; i < sys.count(); ++i)
    for (int j = i + 1; j < sys.count(); ++j)
      out << "m~(" << sys.generators[i].name << "," << sys.generators[j].name
          << ") = " << sys.m_tilde_at(i, j).str() << '\n';
}

int run_fold(const Options& opt) {
  const CoxeterGraph g = load_graph(opt);
  const SymmetryGroup group = load_group(g, opt);
  const RootBasis rb = load_basis(g, opt);
  coxfold::require_valid_root_basis(rb, opt.tolerance);
  const coxfold::FoldedSystem sys = coxfold::fold(g, group, rb, opt.tolerance, opt.k_max);
  if (sys.count() == 0)
    std::cerr << "warning: no orbit has finite W_X; the folded graph is empty\n";
  if (opt.format == "json")
    std::cout << sys.to_json().dump(2) << '\n';
  else if (opt.format == "dot")
    print_fold_dot(sys, std::cout);
  else
    print_fold_text(sys, std::cout);
  return 0;
}

int run_verify(const Options& opt) {
  const CoxeterGraph g = load_graph(opt);
  const SymmetryGroup group = load_group(g, opt);
  const coxfold::TheoremReport report = coxfold::verify_theorem(
      g, group, opt.cap, opt.tolerance, opt.k_max, opt.seed, opt.samples);
  if (opt.format == "json") {
    std::cout << report.to_json().dump(2) << '\n';
  } else {
    std::cout << "mode: " << (report.oracle_mode ? "oracle" : "property") << '\n';
    std::cout << "folded type: " << report.folded_type << '\n';
    if (report.oracle_mode) {
      std::cout << "|W| = " << report.order_w << ", |W^G| = " << report.order_fixed
                << ", |W(folded)| = " << report.order_folded << '\n';
      std::cout << "generation: " << (report.generation_ok ? "pass" : "FAIL") << '\n';
      std::cout << "order match: " << (report.order_ok ? "pass" : "FAIL") << '\n';
    }
    std::cout << "relations: " << (report.relations_ok ? "pass" : "FAIL") << '\n';
    std::cout << "lemma 3.4: " << (report.lemma34_ok ? "pass" : "FAIL") << '\n';
    std::cout << "folded basis: " << (report.folded_basis_ok ? "pass" : "FAIL") << '\n';
    for (const std::string& f : report.failures) std::cout << "failure: " << f << '\n';
    std::cout << (report.all_ok() ? "all checks passed" : "verification FAILED") << '\n';
  }
  return report.all_ok() ? 0 : 5;
}

int run_repr(const Options& opt) {
  const CoxeterGraph g = load_graph(opt);
  const RootBasis rb = load_basis(g, opt);
  coxfold::require_valid_root_basis(rb, opt.tolerance);
  const coxfold::ReflectionRep rep = coxfold::build_rep(rb);
  if (opt.format == "json") {
    nlohmann::json out;
    for (int s = 0; s < g.size(); ++s) out[g.vertex(s)] = coxfold::matrix_to_json(rep.gens[s]);
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  for (int s = 0; s < g.size(); ++s) {
    std::cout << "f_" << g.vertex(s) << ":\n";
    for (int r = 0; r < rb.dim; ++r) {
      std::cout << "  ";
      for (int c = 0; c < rb.dim; ++c) {
        if (c) std::cout << ' ';
        std::cout << fmt_double(rep.gens[s](r, c));
      }
      std::cout << '\n';
    }
  }
  return 0;
}

int run_automorphisms(const Options& opt) {
  const CoxeterGraph g = load_graph(opt);
  const SymmetryGroup group = coxfold::automorphism_group(g);
  if (opt.format == "json") {
    nlohmann::json out;
    out["order"] = group.order();
    nlohmann::json els = nlohmann::json::array();
    for (const coxfold::Symmetry& s : group.elements)
      els.push_back(coxfold::symmetry_to_json(g, s));
    out["elements"] = std::move(els);
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  std::cout << "order " << group.order() << '\n';
  for (const coxfold::Symmetry& s : group.elements) {
    if (s.is_identity()) {
      std::cout << "(identity)\n";
      continue;
    }
    bool first = true;
    for (int v = 0; v < s.size(); ++v) {
      if (s(v) == v) continue;
      if (!first) std::cout << ' ';
      std::cout << g.vertex(v) << "->" << g.vertex(s(v));
      first = false;
    }
    std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"folded Coxeter graphs, root bases and reflection representations of fixed "
               "subgroups"};
  app.require_subcommand(1);

  Options opt;

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", opt.graph_path, "Coxeter graph JSON file")->required();
  };
  auto add_symmetry = [&](CLI::App* sub) {
    sub->add_option("--symmetry", opt.symmetry_path, "symmetry generators JSON file")->required();
  };
  auto add_basis = [&](CLI::App* sub) {
    sub->add_option("--root-basis", opt.basis_path,
                    "root basis JSON file (canonical basis when omitted)");
  };
  auto add_tolerance = [&](CLI::App* sub) {
    sub->add_option("--tolerance", opt.tolerance, "numeric comparison tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--k-max", opt.k_max, "largest finite folded label recognized")
        ->check(CLI::Range(3, 1000000));
  };
  auto add_format = [&](CLI::App* sub, bool with_dot) {
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember(with_dot ? std::vector<std::string>{"json", "dot", "text"}
                                       : std::vector<std::string>{"json", "text"}));
  };

  CLI::App* orbits_cmd = app.add_subcommand("orbits", "list the orbits of G with types");
  add_graph(orbits_cmd);
  add_symmetry(orbits_cmd);
  add_format(orbits_cmd, false);

  CLI::App* fold_cmd =
      app.add_subcommand("fold", "construct the folded Coxeter graph and root basis");
  add_graph(fold_cmd);
  add_symmetry(fold_cmd);
  add_basis(fold_cmd);
  add_tolerance(fold_cmd);
  add_format(fold_cmd, true);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "verify the fixed-subgroup theorem by enumeration");
  add_graph(verify_cmd);
  add_symmetry(verify_cmd);
  add_tolerance(verify_cmd);
  verify_cmd->add_option("--cap", opt.cap, "largest group order enumerated")
      ->envname("COXFOLD_CAP")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", opt.seed, "seed for the sampled reflection checks");
  verify_cmd->add_option("--samples", opt.samples, "sample count per orbit")
      ->check(CLI::PositiveNumber);
  add_format(verify_cmd, false);

  CLI::App* repr_cmd = app.add_subcommand("repr", "emit the rooted representation matrices");
  add_graph(repr_cmd);
  add_basis(repr_cmd);
  add_tolerance(repr_cmd);
  add_format(repr_cmd, false);

  CLI::App* auto_cmd = app.add_subcommand("automorphisms", "print the full symmetry group");
  add_graph(auto_cmd);
  add_format(auto_cmd, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (orbits_cmd->parsed()) return run_orbits(opt);
    if (fold_cmd->parsed()) return run_fold(opt);
    if (verify_cmd->parsed()) return run_verify(opt);
    if (repr_cmd->parsed()) return run_repr(opt);
    if (auto_cmd->parsed()) return run_automorphisms(opt);
  } catch (const coxfold::parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const coxfold::equivariance_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const coxfold::classification_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const coxfold::root_basis_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 6;
  } catch (const coxfold::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
