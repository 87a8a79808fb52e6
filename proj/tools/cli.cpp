#include "rcorona/cli.hpp"

#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rcorona/closed_form.hpp"
#include "rcorona/cospectral.hpp"
#include "rcorona/eigensolver.hpp"
#include "rcorona/error.hpp"
#include "rcorona/generators.hpp"
#include "rcorona/graph_io.hpp"
#include "rcorona/invariants.hpp"
#include "rcorona/laplacian.hpp"
#include "rcorona/ops.hpp"

namespace rcorona::cli {

namespace {

struct UsageError : Error {
  using Error::Error;
};

// Graph arguments: a file path, the literal "null", or "gen:family[:p1:p2...]".
Graph resolve_graph(const std::string& arg) {
  if (arg == "null") return Graph{};
  if (arg.rfind("gen:", 0) == 0) {
    std::vector<std::string> parts;
    std::stringstream ss(arg.substr(4));
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.empty() || parts[0].empty()) throw UsageError("graph spec '" + arg + "' names no family");
    std::vector<long long> params;
    for (std::size_t k = 1; k < parts.size(); ++k) {
      try {
        params.push_back(std::stoll(parts[k]));
      } catch (const std::exception&) {
        throw UsageError("graph spec '" + arg + "': parameter '" + parts[k] + "' is not an integer");
      }
    }
    return gen::generate(parts[0], params);
  }
  return io::read_graph_file(arg);
}

CoronaKind parse_kind(const std::string& kind) {
  if (kind == "double") return CoronaKind::Double;
  if (kind == "vertex") return CoronaKind::Vertex;
  if (kind == "edge") return CoronaKind::Edge;
  throw UsageError("corona kind must be double, vertex or edge");
}

std::size_t expected_operands(CoronaKind kind) { return kind == CoronaKind::Double ? 3 : 2; }

struct CoronaInputs {
  Graph g;
  Graph g1;
  Graph g2;
};

CoronaInputs corona_inputs(CoronaKind kind, const std::vector<std::string>& operands) {
  if (operands.size() != expected_operands(kind))
    throw UsageError("corona kind takes " + std::to_string(expected_operands(kind)) + " graph operands, got " +
                     std::to_string(operands.size()));
  CoronaInputs in;
  in.g = resolve_graph(operands[0]);
  if (kind == CoronaKind::Double) {
    in.g1 = resolve_graph(operands[1]);
    in.g2 = resolve_graph(operands[2]);
  } else if (kind == CoronaKind::Vertex) {
    in.g1 = resolve_graph(operands[1]);
  } else {
    in.g2 = resolve_graph(operands[1]);
  }
  return in;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

io::GraphFormat parse_format(const std::string& f) {
  if (f == "edgelist") return io::GraphFormat::EdgeList;
  if (f == "json") return io::GraphFormat::Json;
  throw UsageError("format must be edgelist or json");
}

std::string summary_table(const Spectrum& s, double tol) {
  std::ostringstream t;
  t << std::left << std::setw(26) << "value" << "mult\n";
  for (const auto& g : summarize(s, tol)) t << std::left << std::setw(26) << format_real(g.value) << g.multiplicity << '\n';
  t << "count " << s.size() << ", sum " << format_real(s.sum()) << '\n';
  return t.str();
}

void check_tol(double tol) {
  if (!(tol > 0.0)) throw UsageError("--tol must be positive");
}

struct Options {
  // generate
  std::string family;
  std::vector<long long> params;
  std::string out;
  std::string format = "edgelist";
  // corona / spectrum
  std::string kind;
  std::vector<std::string> operands;
  std::string layout_out;
  bool allow_disconnected = false;
  std::string method = "numeric";
  double tol = kDefaultTolerance;
  bool json = false;
  bool csv = false;
};

int cmd_generate(const Options& o, std::ostream& out) {
  const auto g = gen::generate(o.family, o.params);
  write_output(o.out, io::serialize(g, parse_format(o.format)), out);
  return kOk;
}

int cmd_corona(const Options& o, std::ostream& out) {
  const auto kind = parse_kind(o.kind);
  const auto in = corona_inputs(kind, o.operands);
  const auto c = double_corona(in.g, in.g1, in.g2, o.allow_disconnected);
  write_output(o.out, io::serialize(c.graph, parse_format(o.format)), out);
  if (!o.layout_out.empty()) {
    const auto layout = layout_to_json(c.layout).dump(2) + "\n";
    if (o.layout_out == "-" && (o.out.empty() || o.out == "-"))
      throw UsageError("--emit-layout and the graph cannot both go to stdout");
    write_output(o.layout_out, layout, out);
  }
  return kOk;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  check_tol(o.tol);
  if (o.method != "numeric" && o.method != "closed-form" && o.method != "both")
    throw UsageError("--method must be numeric, closed-form or both");
  const bool want_numeric = o.method != "closed-form";
  const bool want_closed = o.method != "numeric";
  if (o.csv && o.method == "both") throw UsageError("--csv takes a single method");

  std::optional<Spectrum> numeric;
  std::optional<ClosedFormSpectrum> closed;
  if (o.kind.empty()) {
    if (o.operands.size() != 1) throw UsageError("spectrum takes one graph unless --corona is given");
    if (want_closed) throw UsageError("--method closed-form needs --corona");
    numeric = numeric_spectrum(normalized_laplacian(resolve_graph(o.operands[0])));
  } else {
    const auto in = corona_inputs(parse_kind(o.kind), o.operands);
    // hypotheses first, so a refused closed form never depends on the numeric path
    if (want_closed) closed = closed_form_spectrum(in.g, in.g1, in.g2, o.tol);
    if (want_numeric)
      numeric = numeric_spectrum(normalized_laplacian(double_corona(in.g, in.g1, in.g2, o.allow_disconnected).graph));
  }
  std::optional<Spectrum> flat;
  if (closed) flat = flatten(*closed);

  std::optional<ComparisonReport> report;
  if (numeric && flat) report = compare_spectra(*numeric, *flat, o.tol);

  if (o.csv) {
    out << spectrum_to_csv(numeric ? *numeric : *flat);
  } else if (o.json) {
    nlohmann::json j;
    if (numeric) j["numeric"] = spectrum_to_json(*numeric);
    if (closed) {
      j["closed_form"] = closed_form_to_json(*closed);
      j["closed_form"]["values"] = spectrum_to_json(*flat);
    }
    if (report) {
      j["match"] = report->match;
      j["max_deviation"] = report->max_deviation;
      j["worst_index"] = report->worst_index;
    }
    j["tol"] = o.tol;
    out << j.dump(2) << '\n';
  } else {
    if (numeric) out << "numeric spectrum\n" << summary_table(*numeric, o.tol);
    if (closed) out << (numeric ? "\n" : "") << "closed-form spectrum\n" << summary_table(*flat, o.tol);
    if (report) {
      out << "\nverdict: " << (report->match ? "match" : "MISMATCH") << '\n';
      out << "max deviation: "
          << (report->length_mismatch ? std::string("length mismatch") : format_real(report->max_deviation))
          << " (tol " << format_real(o.tol) << ")\n";
    }
  }
  return report && !report->match ? kMismatch : kOk;
}

int cmd_cospectral(const Options& o, std::ostream& out) {
  check_tol(o.tol);
  if (o.operands.size() != 6) throw UsageError("cospectral takes six graphs: G H G1 H1 G2 H2");
  std::array<Graph, 6> g;
  std::array<std::string, 6> names;
  for (std::size_t k = 0; k < 6; ++k) {
    g[k] = resolve_graph(o.operands[k]);
    names[k] = o.operands[k];
  }
  const auto cert = theorem28_build(g[0], g[1], g[2], g[3], g[4], g[5], o.tol, names);
  const auto j = certificate_to_json(cert);
  if (!o.out.empty()) write_output(o.out, j.dump(2) + "\n", out);
  if (o.json) {
    if (o.out.empty() || o.out != "-") out << j.dump(2) << '\n';
  } else {
    out << "verdict: " << (cert.cospectral() ? "cospectral" : "not cospectral") << '\n';
    out << "vertices: " << cert.first.vertex_count() << " / " << cert.second.vertex_count() << '\n';
    out << "max deviation (numeric): " << format_real(cert.numeric.max_deviation) << '\n';
    out << "max deviation (closed form): " << format_real(cert.closed_form.max_deviation) << '\n';
    out << "non-regular: " << (cert.non_regular() ? "yes" : "no") << '\n';
    out << "degree profiles equal: " << (cert.degree_profiles_equal ? "yes" : "no") << '\n';
    out << "edge sets differ: " << (cert.edge_sets_differ ? "yes" : "no") << '\n';
  }
  return cert.cospectral() ? kOk : kMismatch;
}

int cmd_invariants(const Options& o, std::ostream& out) {
  if (o.operands.size() != 1) throw UsageError("invariants takes one graph");
  const auto g = resolve_graph(o.operands[0]);
  if (g.is_null() || !is_connected(g)) throw HypothesisError("invariants require a connected graph");
  const auto trees = spanning_trees_matrix_tree(g);
  nlohmann::json j;
  // counts beyond 64 bits are emitted as decimal strings
  if (trees <= static_cast<WideInt>(std::numeric_limits<std::uint64_t>::max()))
    j["spanning_trees"] = static_cast<std::uint64_t>(trees);
  else
    j["spanning_trees"] = to_string(trees);
  j["spanning_trees_spectral"] = spanning_trees_spectral(g);
  j["degree_kirchhoff"] = degree_kirchhoff(g);
  write_output(o.out, j.dump(2) + "\n", out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"R-graph corona constructions and their normalized Laplacian spectra", "rcorona"};
  app.require_subcommand(1);
  Options o;

  auto* generate = app.add_subcommand("generate", "Write a catalog graph");
  generate->add_option("family", o.family, "Graph family")->required();
  generate->add_option("params", o.params, "Integer parameters");
  generate->add_option("--out", o.out, "Output file (default stdout)");
  generate->add_option("--format", o.format, "edgelist or json");

  auto* corona = app.add_subcommand("corona", "Build a double, vertex or edge corona");
  corona->add_option("kind", o.kind, "double | vertex | edge")->required();
  corona->add_option("graphs", o.operands, "G G1 G2 (double), G G1 (vertex), G G2 (edge)")->required();
  corona->add_option("--out", o.out, "Output file (default stdout)");
  corona->add_option("--format", o.format, "edgelist or json");
  corona->add_option("--emit-layout", o.layout_out, "Write the vertex block layout as JSON");
  corona->add_flag("--allow-disconnected", o.allow_disconnected, "Skip the connectivity check on G");

  auto* spectrum = app.add_subcommand("spectrum", "Normalized Laplacian spectrum of a graph or corona");
  spectrum->add_option("graphs", o.operands, "Graph, or the corona operands with --corona")->required();
  spectrum->add_option("--corona", o.kind, "double | vertex | edge");
  spectrum->add_option("--method", o.method, "numeric | closed-form | both");
  spectrum->add_option("--tol", o.tol, "Comparison and grouping tolerance");
  spectrum->add_flag("--json", o.json, "Emit JSON");
  spectrum->add_flag("--csv", o.csv, "One eigenvalue per line");
  spectrum->add_flag("--allow-disconnected", o.allow_disconnected, "Skip the connectivity check on G");

  auto* cospectral = app.add_subcommand("cospectral", "Certify a normalized-Laplacian-cospectral corona pair");
  cospectral->add_option("graphs", o.operands, "G H G1 H1 G2 H2")->required();
  cospectral->add_option("--tol", o.tol, "Comparison tolerance");
  cospectral->add_option("--out", o.out, "Write the certificate JSON here");
  cospectral->add_flag("--json", o.json, "Print the certificate JSON");

  auto* invariants = app.add_subcommand("invariants", "Spanning trees and degree-Kirchhoff index");
  invariants->add_option("graph", o.operands, "Graph")->required()->expected(1);
  invariants->add_option("--out", o.out, "Output file (default stdout)");

  std::vector<std::string> argv_storage{"rcorona"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*generate) return cmd_generate(o, out);
    if (*corona) return cmd_corona(o, out);
    if (*spectrum) return cmd_spectrum(o, out);
    if (*cospectral) return cmd_cospectral(o, out);
    if (*invariants) return cmd_invariants(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const HypothesisError& e) {
    err << "error: " << e.what() << '\n';
    return kHypothesis;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kHypothesis;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return kMismatch;
  }
  return kUsage;
}

}  // namespace rcorona::cli
