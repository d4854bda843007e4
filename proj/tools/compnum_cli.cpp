// compnum: build generalized line graphs, realize them as competition graphs,
// compute exact competition numbers, verify digraphs and classify instances.
//
// Exit codes: 0 ok, 1 verification mismatch, 2 input error, 3 hypothesis not
// met, 4 internal invariant violated, 5 budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "compnum/io.hpp"

using namespace compnum;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kInput = 2, kHypothesis = 3, kInternal = 4, kBudget = 5 };

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CompetitionMismatch:
    case ErrorKind::CyclicDigraph:
      return kMismatch;
    case ErrorKind::HypothesisNotMet:
    case ErrorKind::PreconditionViolated:
    case ErrorKind::NotConnected:
      return kHypothesis;
    case ErrorKind::InternalInvariant:
      return kInternal;
    case ErrorKind::BudgetExceeded:
    case ErrorKind::SizeGuardExceeded:
      return kBudget;
    default:
      return kInput;
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write '" + path + "'");
  out << text;
}

Instance read_instance(const std::string& path) { return instance_from_json(read_json_file(path)); }

std::optional<Edge> parse_edge(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto comma = s.find(',');
  if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos)
    throw Error(ErrorKind::InvalidInput, "--edge expects two labels separated by a comma, got '" + s + "'");
  return Edge{s.substr(0, comma), s.substr(comma + 1)};
}

struct Common {
  std::string out;
  std::string dot;
  bool json = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("-o,--out", c.out, "Write the JSON result here");
  cmd->add_option("--dot", c.dot, "Also write Graphviz DOT here");
  cmd->add_flag("--json", c.json, "Print machine-readable JSON on stdout");
}

// JSON goes to --out; stdout gets the summary, or the JSON with --json.
void emit(const Common& c, const Json& j, const std::string& summary) {
  if (!c.out.empty()) write_text(c.out, dump(j));
  if (c.json)
    std::cout << dump(j);
  else
    std::cout << summary << "\n";
}

SearchBudget make_budget(int max_total, int max_k, std::uint64_t node_limit) {
  SearchBudget b;
  b.max_total_vertices = max_total;
  b.max_k = max_k;
  if (node_limit) b.node_limit = node_limit;
  return b;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Competition numbers of generalized line graphs"};
  app.require_subcommand(1);

  // build
  std::string build_kind, build_input;
  int build_m = 0;
  Common build_io;
  auto* build = app.add_subcommand("build", "Build L(H), CP(m) or L(H,f)");
  build->add_option("kind", build_kind, "line | cp | glg")->required()->check(CLI::IsMember({"line", "cp", "glg"}));
  build->add_option("input", build_input, "Graph or weighted_graph JSON (not used for cp)");
  build->add_option("--m", build_m, "Number of pairs for cp");
  add_common(build, build_io);

  // realize
  std::string realize_mode, realize_input, realize_edge;
  Common realize_io;
  auto* realize = app.add_subcommand("realize", "Construct a realization and its certificate");
  realize->add_option("mode", realize_mode, "thm25 | k1-i | k1-ii")
      ->required()
      ->check(CLI::IsMember({"thm25", "k1-i", "k1-ii"}));
  realize->add_option("input", realize_input, "weighted_graph (or graph) JSON")->required();
  realize->add_option("--edge", realize_edge, "Edge u,v of H (first edge if omitted for thm25)");
  add_common(realize, realize_io);

  // compnum
  std::string cn_input;
  int cn_max_k = 4, cn_budget = 16;
  std::uint64_t cn_nodes = 0;
  Common cn_io;
  auto* compnum = app.add_subcommand("compnum", "Exact competition number by search");
  compnum->add_option("input", cn_input, "graph JSON, or weighted_graph JSON for L(H,f)")->required();
  compnum->add_option("--max-k", cn_max_k, "Largest k to try")->capture_default_str();
  compnum->add_option("--budget", cn_budget, "Largest |V| + k searched")->capture_default_str();
  compnum->add_option("--node-limit", cn_nodes, "Stop after this many search nodes (0 = none)");
  add_common(compnum, cn_io);

  // verify
  std::string vf_digraph, vf_graph;
  int vf_k = 0;
  Common vf_io;
  auto* verify = app.add_subcommand("verify", "Check C(D) = G plus k isolated vertices");
  verify->add_option("digraph", vf_digraph, "digraph JSON")->required();
  verify->add_option("graph", vf_graph, "graph JSON")->required();
  verify->add_option("--k", vf_k, "Number of added vertices")->required();
  add_common(verify, vf_io);

  // classify
  std::string cl_input;
  int cl_budget = 16;
  std::uint64_t cl_nodes = 2'000'000;
  Common cl_io;
  auto* classify_cmd = app.add_subcommand("classify", "Decide k(L(H,f)) in {1,2} where certifiable");
  classify_cmd->add_option("input", cl_input, "weighted_graph JSON")->required();
  classify_cmd->add_option("--budget", cl_budget, "Largest |V| + k searched")->capture_default_str();
  classify_cmd->add_option("--node-limit", cl_nodes, "Search node limit (0 = none)")->capture_default_str();
  add_common(classify_cmd, cl_io);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (*build) {
      Graph g;
      if (build_kind == "cp") {
        g = cocktail_party(build_m).graph;
      } else {
        if (build_input.empty()) throw Error(ErrorKind::InvalidInput, "build " + build_kind + " needs an input file");
        Instance inst = read_instance(build_input);
        g = build_kind == "line" ? line_graph(as_graph(inst)).graph
                                 : generalized_line_graph(as_weighted(inst)).graph;
      }
      if (!build_io.dot.empty()) write_text(build_io.dot, to_dot(g));
      emit(build_io, to_json(g),
           std::to_string(g.num_vertices()) + " vertices, " + std::to_string(g.num_edges()) + " edges");
      return kOk;
    }

    if (*realize) {
      VertexWeightedGraph w = as_weighted(read_instance(realize_input));
      std::optional<Edge> edge = parse_edge(realize_edge);
      RealizationCertificate cert;
      std::string note;
      if (realize_mode == "thm25") {
        if (!edge) {
          if (w.graph().num_edges() == 0) throw Error(ErrorKind::HypothesisNotMet, "H has no edge");
          edge = *w.graph().edges().begin();
        }
        DesignatedRealization r = glg_realization(w, edge->first, edge->second);
        cert = r.certificate;
        note = "; N-(" + r.z1 + ") = K_H(" + edge->first + "), N-(" + r.z2 + ") = K_H(" + edge->second + ")";
      } else if (realize_mode == "k1-i") {
        cert = k1_realization_case_i(w, edge);
      } else {
        cert = k1_realization_case_ii(w);
      }
      if (!realize_io.dot.empty()) write_text(realize_io.dot, to_dot(cert));
      emit(realize_io, to_json(cert),
           "verified: k = " + std::to_string(cert.k) + ", " + std::to_string(cert.digraph.num_arcs()) +
               " arcs" + note);
      return kOk;
    }

    if (*compnum) {
      Instance inst = read_instance(cn_input);
      const bool weighted = std::holds_alternative<VertexWeightedGraph>(inst);
      Graph g = weighted ? generalized_line_graph(std::get<VertexWeightedGraph>(inst)).graph : as_graph(inst);
      const SearchBudget budget = make_budget(cn_budget, cn_max_k, cn_nodes);
      try {
        CompetitionNumber r = competition_number(g, budget);
        RealizationCertificate cert = verify_realization(r.witness, g, r.k);
        cert.ordering = AcyclicOrdering(r.ordering);
        if (!cn_io.dot.empty()) write_text(cn_io.dot, to_dot(cert));
        Json j{{"k", r.k}, {"lower_bound", r.lower_bound}, {"certificate", to_json(cert)},
               {"search", to_json(r.stats)}};
        if (!cn_io.out.empty()) write_text(cn_io.out, dump(j));
        if (cn_io.json) std::cout << dump(j);
        else std::cout << r.k << "\n";
        return kOk;
      } catch (const BudgetExceededError& e) {
        int lower = g.num_vertices() ? opsut_lower_bound(g, g.num_vertices()) : 0;
        lower = std::max(lower, e.lower_bound());
        Json j{{"error", e.what()}, {"lower_bound", lower},
               {"upper_bound", weighted ? Json(2) : Json(nullptr)}};
        if (cn_io.json) std::cout << dump(j);
        std::cerr << "budget exceeded: " << e.what() << "; " << lower << " <= k"
                  << (weighted ? " <= 2" : "") << "\n";
        return kBudget;
      }
    }

    if (*verify) {
      Digraph d = std::visit(
          [](const auto& x) -> Digraph {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Digraph>) return x;
            throw Error(ErrorKind::InvalidInput, "first argument must be a digraph");
          },
          read_instance(vf_digraph));
      Graph g = as_graph(read_instance(vf_graph));
      try {
        RealizationCertificate cert = verify_realization(d, g, vf_k);
        if (!vf_io.dot.empty()) write_text(vf_io.dot, to_dot(cert));
        emit(vf_io, to_json(cert), "ok: C(D) = G plus " + std::to_string(vf_k) + " isolated vertices");
        return kOk;
      } catch (const CompetitionMismatchError& e) {
        std::cout << "mismatch: " << e.what() << "\n";
        for (const auto& [a, b] : e.missing()) std::cout << "  missing edge " << a << " -- " << b << "\n";
        for (const auto& [a, b] : e.extra()) std::cout << "  extra edge " << a << " -- " << b << "\n";
        for (const auto& v : e.non_isolated()) std::cout << "  added vertex not isolated: " << v << "\n";
        return kMismatch;
      } catch (const CyclicDigraphError& e) {
        std::cout << "mismatch: " << e.what() << "\n";
        return kMismatch;
      }
    }

    if (*classify_cmd) {
      VertexWeightedGraph w = as_weighted(read_instance(cl_input));
      Verdict v = classify(w, make_budget(cl_budget, 2, cl_nodes));
      std::string summary = to_string(v.k_value);
      for (const auto& e : v.evidence) summary += "\n  " + std::string(to_string(e.source)) + ": " + e.claim;
      emit(cl_io, to_json(v), summary);
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
