#include "spectral_kit/commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "spectral_kit/extremal.hpp"
#include "spectral_kit/graph_io.hpp"
#include "spectral_kit/oracle.hpp"
#include "spectral_kit/report.hpp"

namespace spectral_kit {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double verdict_tolerance() {
  // Testing-only override of the bound-attainment tolerance.
  if (const char* env = std::getenv("SPECTRAL_KIT_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v >= 0.0)) throw UsageError("SPECTRAL_KIT_TOL is not a valid tolerance");
    return v;
  }
  return kVerdictTolerance;
}

std::pair<int, int> parse_range(const std::string& s) {
  auto to_int = [&](const std::string& t) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      return v;
    } catch (const std::exception&) {
      throw UsageError("invalid range '" + s + "' (expected A..B or A)");
    }
  };
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const int v = to_int(s);
    return {v, v};
  }
  const int a = to_int(s.substr(0, dots));
  const int b = to_int(s.substr(dots + 2));
  if (a > b) throw UsageError("empty range '" + s + "'");
  return {a, b};
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(output);
  if (!f) throw UsageError("cannot write '" + output + "'");
  f << text;
}

struct ConstructArgs {
  std::string family;
  int n1 = 0, n2 = 0, kappa = 0;
  std::string format = "edgelist";
  std::string output;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
  const ExtremalParams p{a.n1, a.n2, a.kappa, parse_family(a.family)};
  if (auto problem = validate(p)) throw UsageError(*problem);
  const GraphFormat fmt = parse_format(a.format);
  const Graph g = build_extremal(p);
  const int measured = vertex_connectivity(g).kappa;
  std::ostringstream summary;
  summary << "# " << to_string(p.family) << '(' << p.n1 << ',' << p.n2 << ',' << p.kappa << ") n=" << g.order()
          << " edges=" << g.edge_count() << " connectivity=" << measured << '\n';
  std::string text = format_graph(g, fmt);
  if (fmt == GraphFormat::EdgeList) {
    text += summary.str();
  } else {
    err << summary.str();
  }
  emit(text, a.output, out);
  return kExitOk;
}

struct SpectrumArgs {
  std::string input = "-";
  bool complement = false;
  std::string output;
};

int cmd_spectrum(const SpectrumArgs& a, std::istream& in, std::ostream& out) {
  Stopwatch total;
  Report r;
  r.command = "spectrum";
  r.params["input"] = a.input;
  r.params["complement"] = a.complement;
  Graph g = parse_graph_text(read_input(a.input, in));
  if (g.order() < 1) throw UsageError("graph has no vertices");
  if (a.complement) g = complement(g);
  Stopwatch solve;
  const SpectralResult sr = least_eigenpair(g);
  r.timings["eigensolve_ms"] = solve.ms();
  r.results.push_back(spectrum_json(g, sr));
  r.timings["total_ms"] = total.ms();
  emit(r.dump(), a.output, out);
  return kExitOk;
}

struct VerifyArgs {
  std::string n_range;
  std::optional<int> kappa;
  bool all_kappa = false;
  int jobs = 1;
  bool extended = false;
  bool dedup = false;
  std::string output;
  std::string csv;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  Stopwatch total;
  const auto [n_min, n_max] = parse_range(a.n_range);
  const int limit = a.extended ? kMaxExtendedOrder : kMaxLabeledOrder;
  if (n_min < 3) throw UsageError("n must be at least 3");
  if (n_max > limit) {
    throw UsageError("n = " + std::to_string(n_max) + " exceeds the enumeration limit of " +
                     std::to_string(limit) + (a.extended ? "" : "; pass --extended for n = 8"));
  }
  if (a.kappa && a.all_kappa) throw UsageError("--kappa and --all-kappa are exclusive");
  SearchOptions opts;
  opts.jobs = a.jobs;
  opts.extended = a.extended;
  opts.tolerance = verdict_tolerance();

  Report r;
  r.command = "verify";
  r.params["n_min"] = n_min;
  r.params["n_max"] = n_max;
  if (a.kappa) {
    r.params["kappa"] = *a.kappa;
  } else {
    r.params["kappa"] = "all";
  }
  r.params["jobs"] = a.jobs;
  r.params["extended"] = a.extended;
  r.params["dedup"] = a.dedup;
  r.params["tolerance"] = opts.tolerance;

  Stopwatch search;
  const auto results = verify_theorems(n_min, n_max, a.kappa, opts);
  r.timings["search_ms"] = search.ms();
  if (results.empty()) throw UsageError("no valid (n, kappa) pair in the requested range");

  bool violation = false;
  std::ostringstream csv;
  csv << "n,kappa,class_size,min_value,predicted,verdict,witness_count,isomorphism_classes\n";
  for (const auto& s : results) {
    violation = violation || s.verdict == Verdict::Violation;
    auto j = search_json(s, a.dedup);
    csv << s.n << ',' << s.kappa << ',' << s.class_size << ',' << j["min_value"].dump() << ','
        << j["predicted"].dump() << ',' << to_string(s.verdict) << ',' << s.witness_masks.size() << ','
        << s.canonical_masks.size() << '\n';
    r.results.push_back(std::move(j));
  }
  if (!a.csv.empty()) emit(csv.str(), a.csv, out);
  r.timings["total_ms"] = total.ms();
  emit(r.dump(), a.output, out);
  return violation ? kExitViolation : kExitOk;
}

struct ClaimsArgs {
  std::string input;
  std::optional<int> n;
  std::optional<int> kappa;
  int jobs = 1;
  bool extended = false;
  std::string output;
};

int cmd_claims(const ClaimsArgs& a, std::istream& in, std::ostream& out) {
  Stopwatch total;
  Report r;
  r.command = "claims";
  std::vector<Graph> graphs;
  if (!a.input.empty()) {
    if (a.n || a.kappa) throw UsageError("give either an input graph or --n/--kappa, not both");
    r.params["input"] = a.input;
    graphs.push_back(parse_graph_text(read_input(a.input, in)));
    if (!is_connected(graphs.back())) throw UsageError("claims require a connected graph");
  } else {
    if (!a.n || !a.kappa) throw UsageError("claims needs an input graph or both --n and --kappa");
    r.params["n"] = *a.n;
    r.params["kappa"] = *a.kappa;
    SearchOptions opts;
    opts.jobs = a.jobs;
    opts.extended = a.extended;
    opts.tolerance = verdict_tolerance();
    try {
      check_search_params(*a.n, *a.kappa, a.extended);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    Stopwatch search;
    const SearchResult s = find_minimizer(*a.n, *a.kappa, opts);
    r.timings["search_ms"] = search.ms();
    for (EdgeMask m : s.canonical_masks) graphs.push_back(graph_from_mask(s.n, m));
  }
  bool failure = false;
  for (const Graph& g : graphs) {
    const ClaimReport c = check_structural_claims(g);
    failure = failure || c.any_failure();
    r.results.push_back(claims_json(g, c));
  }
  r.timings["total_ms"] = total.ms();
  emit(r.dump(), a.output, out);
  return failure ? kExitViolation : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Least eigenvalues of complements of graphs with given vertex connectivity"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build an extremal graph B1, B2 or B3");
  construct->add_option("family", ca.family, "b1, b2 or b3")->required();
  construct->add_option("n1", ca.n1, "size of the first clique")->required();
  construct->add_option("n2", ca.n2, "size of the second clique")->required();
  construct->add_option("kappa", ca.kappa, "target connectivity")->required();
  construct->add_option("--format", ca.format, "edgelist or graph6")->check(CLI::IsMember({"edgelist", "graph6"}));
  construct->add_option("--output", ca.output, "write to PATH instead of stdout");

  SpectrumArgs sa;
  auto* spectrum = app.add_subcommand("spectrum", "Adjacency spectrum and least eigenpair of a graph");
  spectrum->add_option("input", sa.input, "edge list or graph6 file, '-' for stdin");
  spectrum->add_flag("--complement", sa.complement, "analyse the complement instead");
  spectrum->add_option("--output", sa.output, "write the report to PATH");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Exhaustive search for the least lambda_n(G^c) per (n, kappa)");
  verify->add_option("--n", va.n_range, "vertex count or range A..B")->required();
  auto* kappa_opt = verify->add_option("--kappa", va.kappa, "single connectivity value");
  auto* all_opt = verify->add_flag("--all-kappa", va.all_kappa, "every kappa in 1..n-2 (default)");
  kappa_opt->excludes(all_opt);
  verify->add_option("--jobs", va.jobs, "worker threads")->check(CLI::Range(1, 256));
  verify->add_flag("--extended", va.extended, "allow n = 8");
  verify->add_flag("--dedup", va.dedup, "list one witness per isomorphism class");
  verify->add_option("--output", va.output, "write the report to PATH");
  verify->add_option("--csv", va.csv, "also write the grid table as CSV");

  ClaimsArgs la;
  auto* claims = app.add_subcommand("claims", "Check the minimizer structure claims");
  claims->add_option("input", la.input, "edge list or graph6 file, '-' for stdin");
  claims->add_option("--n", la.n, "vertex count of the class to search");
  claims->add_option("--kappa", la.kappa, "connectivity of the class to search");
  claims->add_option("--jobs", la.jobs, "worker threads")->check(CLI::Range(1, 256));
  claims->add_flag("--extended", la.extended, "allow n = 8");
  claims->add_option("--output", la.output, "write the report to PATH");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(ca, out, err);
    if (spectrum->parsed()) return cmd_spectrum(sa, in, out);
    if (verify->parsed()) return cmd_verify(va, out);
    if (claims->parsed()) return cmd_claims(la, in, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace spectral_kit
