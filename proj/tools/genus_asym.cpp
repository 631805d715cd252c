// genus-asym: asymptotic counts of maps and graphs on orientable surfaces.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mapasym/census.hpp"
#include "mapasym/checks.hpp"
#include "mapasym/errors.hpp"
#include "mapasym/graph_counts.hpp"
#include "mapasym/map_constants.hpp"
#include "mapasym/map_counts.hpp"
#include "mapasym/parametric.hpp"
#include "output.hpp"

namespace {

using namespace mapasym;
using cli::Format;
using cli::OutputRecord;

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2, kDomain = 3, kResource = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  long prec_bits = 256;
  std::string format = "json";

  Precision precision() const { return Precision{static_cast<mpfr_prec_t>(prec_bits)}; }
  Format output_format() const { return *cli::parse_format(format); }
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--prec", opts.prec_bits, "Working precision in bits")
      ->check(CLI::Range(64L, 1L << 20));
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
}

OutputRecord new_record(const std::string& command, const CommonOptions& opts) {
  OutputRecord r;
  r.command = command;
  r.precision_bits = opts.prec_bits;
  return r;
}

void emit(const OutputRecord& record, const CommonOptions& opts) {
  std::cout << cli::render(record, opts.output_format());
}

// ---- constants ----

struct ConstantsArgs {
  std::optional<int> tg;
  std::optional<int> pg;
  std::optional<std::string> v0;
  bool graph_constants = false;
};

int run_constants(const ConstantsArgs& a, const CommonOptions& opts) {
  if (!a.tg && !a.pg && !a.graph_constants) {
    throw UsageError("constants: give at least one of --tg, --pg, --graph-constants");
  }
  const Precision prec = opts.precision();
  OutputRecord rec = new_record("constants", opts);
  if (a.tg) {
    rec.inputs["tg"] = *a.tg;
    if (*a.tg < 0) throw DomainError("--tg requires g >= 0");
    const AgSequence seq = compute_a(*a.tg);
    rec.outputs.push_back(cli::exact_output("a_" + std::to_string(*a.tg), seq[*a.tg].get_str(),
                                            Provenance::kExactRecursion));
    rec.outputs.push_back(cli::real_output("t_" + std::to_string(*a.tg),
                                           compute_t(seq, *a.tg, prec),
                                           Provenance::kExactRecursion));
  }
  if (a.pg) {
    rec.inputs["pg"] = *a.pg;
    if (!a.v0) throw UsageError("--pg needs --v0: the base value v_0 has no default");
    rec.inputs["v0"] = *a.v0;
    Real v0(prec);
    try {
      v0 = Real::parse(*a.v0, prec);
    } catch (const std::invalid_argument&) {
      throw UsageError("--v0: not a number: " + *a.v0);
    }
    auto out = cli::real_output("p_" + std::to_string(*a.pg), compute_p(*a.pg, v0),
                                Provenance::kConjectured);
    out.conjectured = true;
    rec.outputs.push_back(std::move(out));
    rec.notes.push_back("p_g is a conjectured constant; v_0 is a user-supplied input");
  }
  if (a.graph_constants) {
    rec.inputs["graph_constants"] = true;
    const GraphConstants c = constants_chain(prec);
    const ConstantsTable table = c.table();
    for (const auto& e : table.entries()) {
      rec.outputs.push_back(cli::real_output(e.name, e.value, e.provenance));
    }
    rec.notes.push_back("beta1, alpha1, beta0, alpha0 inherit the 4-5 significant digits of the "
                        "printed inputs G02_0, G02_2, P1");
    rec.details["diagnostics"] = {
        {"beta3_formula_at_r_hat", c.beta3_at_r_hat.to_string(12)},
        {"r_hat", c.r_hat.to_string(12)},
        {"P1_derived", c.p1_derived.to_string(12)},
        {"beta1_P1_band", {c.beta1_band_lo.to_string(9), c.beta1_band_hi.to_string(9)}},
    };
  }
  emit(rec, opts);
  return kOk;
}

// ---- maps ----

struct CountArgs {
  int genus = 0;
  int connectivity = 0;
  long n = 0;
  std::optional<long> m;
  bool mean_edges = false;
  bool variance = false;
  bool vertices_only = false;
};

int run_maps(const CountArgs& a, const CommonOptions& opts) {
  if (!a.m && !a.mean_edges && !a.variance) {
    throw UsageError("maps: give -m, or ask for --mean-edges / --variance");
  }
  const Precision prec = opts.precision();
  const MapConnectivity k = map_connectivity(a.connectivity);
  OutputRecord rec = new_record("maps", opts);
  rec.inputs["genus"] = a.genus;
  rec.inputs["connectivity"] = a.connectivity;
  rec.inputs["n"] = a.n;
  if (a.m) rec.inputs["m"] = *a.m;

  if (a.m) {
    const MapEstimate est = map_estimate(CountQuery{a.genus, k, a.n, *a.m}, prec);
    const Provenance p =
        k == MapConnectivity::kConnected ? Provenance::kRootSolve : Provenance::kClosedForm;
    const AsymptoticEstimate& e = est.estimate;
    rec.outputs.push_back(cli::count_output("count", est.value, p));
    rec.outputs.push_back(cli::real_output("r", e.r, p));
    rec.outputs.push_back(cli::real_output("rho", rho(e.r), p));
    rec.outputs.push_back(cli::real_output("eta", eta(k, e.r), p));
    rec.outputs.push_back(cli::real_output("C", amplitude_c(k, e.r), p));
    rec.outputs.push_back(cli::real_output("amplitude", e.amplitude, p));
    rec.outputs.push_back(cli::real_output("n_exponent", e.n_exponent, Provenance::kClosedForm));
    rec.outputs.push_back(cli::real_output("per_vertex_base", e.per_vertex_base, p));
    rec.outputs.push_back(cli::real_output("per_edge_base", e.per_edge_base, p));
    rec.outputs.push_back(cli::real_output("extra_factor", e.extra_factor, p));
  }
  if (a.mean_edges) {
    rec.outputs.push_back(cli::real_output("mean_edges", mean_edges(a.genus, k, a.n, prec),
                                           Provenance::kRootSolve));
  }
  if (a.variance) {
    rec.outputs.push_back(cli::real_output("edge_variance", edge_variance(a.genus, k, a.n, prec),
                                           Provenance::kRootSolve));
  }
  emit(rec, opts);
  return kOk;
}

// ---- graphs ----

int run_graphs(const CountArgs& a, const CommonOptions& opts) {
  if (a.connectivity < 0 || a.connectivity > 3) {
    throw DomainError("graph connectivity must be 0..3");
  }
  if (!a.vertices_only && !a.m && !a.mean_edges && !a.variance) {
    throw UsageError("graphs: give -m or --vertices-only, or ask for --mean-edges / --variance");
  }
  const Precision prec = opts.precision();
  OutputRecord rec = new_record("graphs", opts);
  rec.inputs["genus"] = a.genus;
  rec.inputs["connectivity"] = a.connectivity;
  rec.inputs["n"] = a.n;
  if (a.m) rec.inputs["m"] = *a.m;
  rec.inputs["vertices_only"] = a.vertices_only;

  if (a.vertices_only) {
    const GraphConstants c = constants_chain(prec);
    const VertexEstimate est = graphs_by_vertices(a.genus, a.connectivity, a.n, c);
    const Provenance p = a.connectivity == 3   ? Provenance::kClosedForm
                         : a.connectivity == 2 ? Provenance::kRootSolve
                                               : Provenance::kPaperNumeric;
    rec.outputs.push_back(cli::count_output("count_over_n_factorial", est.value, p));
    const std::string k = std::to_string(a.connectivity);
    rec.outputs.push_back(cli::real_output("x" + k, c.x[a.connectivity], p));
    rec.outputs.push_back(cli::real_output("alpha" + k, c.alpha[a.connectivity], p));
    rec.outputs.push_back(cli::real_output("beta" + k, c.beta[a.connectivity], p));
    rec.outputs.push_back(cli::real_output("t_" + std::to_string(a.genus),
                                           compute_t(a.genus, prec), Provenance::kExactRecursion));
    if (est.externally_sourced) {
      rec.notes.push_back("genus 0 with k <= 1 relies on externally sourced constants");
    }
  } else if (a.m) {
    if (a.connectivity == 3) {
      const Graph3Estimate est = graphs_3conn(a.genus, a.n, *a.m, prec);
      rec.outputs.push_back(cli::count_output("count_over_n_factorial", est.value,
                                              Provenance::kClosedForm));
      rec.outputs.push_back(cli::count_output("rooted_map_count", est.map.value,
                                              Provenance::kClosedForm));
      rec.outputs.push_back(cli::real_output("divisor_4m", est.divisor, Provenance::kClosedForm));
      rec.outputs.push_back(cli::real_output("r", est.map.estimate.r, Provenance::kClosedForm));
    } else if (a.connectivity == 2) {
      const Graph2Estimate est = graphs_2conn(a.genus, a.n, *a.m, prec);
      rec.outputs.push_back(cli::count_output("count_over_n_factorial", est.value,
                                              Provenance::kRootSolve));
      rec.outputs.push_back(cli::real_output("t", est.t, Provenance::kRootSolve));
      rec.outputs.push_back(cli::real_output("B_g", est.b_g, Provenance::kRootSolve));
      rec.outputs.push_back(cli::real_output("sigma", est.sigma, Provenance::kRootSolve));
      rec.outputs.push_back(cli::real_output("amplitude", est.amplitude, Provenance::kRootSolve));
      rec.outputs.push_back(cli::real_output("n_exponent", est.n_exponent, Provenance::kClosedForm));
      rec.outputs.push_back(cli::real_output("rho2", est.rho2, Provenance::kRootSolve));
      rec.outputs.push_back(cli::real_output("lambda2", est.lambda2, Provenance::kRootSolve));
    } else {
      throw NotCoveredError("graphs by vertices and edges are implemented for k = 2, 3; use "
                            "--vertices-only for k = 0, 1");
    }
  }
  if (a.mean_edges || a.variance) {
    const EdgeConcentration ec = graph_edge_concentration(a.connectivity, a.n, prec);
    if (a.mean_edges) {
      rec.outputs.push_back(cli::real_output("mean_edges", ec.mean, Provenance::kRootSolve));
    }
    if (a.variance) {
      rec.outputs.push_back(cli::real_output("edge_variance", ec.variance, Provenance::kRootSolve));
    }
  }
  emit(rec, opts);
  return kOk;
}

// ---- oracle ----

struct OracleArgs {
  int edges = 0;
  bool allow_large = false;
  std::string out;
  int workers = 1;
};

int run_oracle(const OracleArgs& a, const CommonOptions& opts) {
  const auto entries = census(a.edges, CensusOptions{a.workers, a.allow_large});
  const std::string csv = census_csv(entries);
  if (!a.out.empty()) {
    std::ofstream f(a.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + a.out);
    f << csv;
  }
  if (opts.output_format() == Format::kCsv) {
    if (a.out.empty()) std::cout << csv;
    return kOk;
  }
  OutputRecord rec = new_record("oracle", opts);
  rec.inputs["edges"] = a.edges;
  rec.inputs["workers"] = a.workers;
  if (!a.out.empty()) rec.inputs["out"] = a.out;
  nlohmann::ordered_json totals = nlohmann::ordered_json::array();
  for (int m = 1; m <= a.edges; ++m) {
    const mpz_class total = census_total(entries, m);
    rec.outputs.push_back(cli::exact_output("total_m" + std::to_string(m), total.get_str(),
                                            Provenance::kCensus));
    for (int g = 0; 2 * g <= m; ++g) {
      const mpz_class t = census_total(entries, m, g);
      if (t == 0) continue;
      totals.push_back({{"edges", m}, {"genus", g}, {"count", t.get_str()}});
    }
  }
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    rows.push_back({{"edges", e.edges},
                    {"vertices", e.vertices},
                    {"faces", e.faces},
                    {"genus", e.genus},
                    {"connectivity", e.connectivity},
                    {"count", e.count.get_str()}});
  }
  rec.details["totals_by_genus"] = std::move(totals);
  rec.details["entries"] = std::move(rows);
  emit(rec, opts);
  return kOk;
}

// ---- check ----

int run_check(const std::string& suite_name, const CommonOptions& opts) {
  const Suite suite = *parse_suite(suite_name);
  const auto results = run_suite(suite, opts.precision());
  bool all = true;
  for (const auto& r : results) all = all && r.passed;

  if (opts.output_format() == Format::kText) {
    for (const auto& r : results) std::cout << format_line(r) << '\n';
    return all ? kOk : kCheckFailed;
  }
  OutputRecord rec = new_record("check", opts);
  rec.inputs["suite"] = suite_name;
  nlohmann::ordered_json criteria = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json m = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.measurements) m[k] = v;
    criteria.push_back({{"id", r.id},
                        {"title", r.title},
                        {"passed", r.passed},
                        {"summary", r.summary},
                        {"measurements", std::move(m)},
                        {"seconds", r.seconds},
                        {"budget_seconds", r.budget_seconds}});
    rec.outputs.push_back(cli::exact_output("C" + std::to_string(r.id),
                                            r.passed ? "pass" : "fail", Provenance::kClosedForm));
  }
  rec.details["criteria"] = std::move(criteria);
  rec.details["passed"] = all;
  emit(rec, opts);
  return all ? kOk : kCheckFailed;
}

long default_precision() {
  const char* env = std::getenv("GENUS_ASYM_PREC");
  if (env == nullptr || *env == '\0') return 256;
  char* end = nullptr;
  const long bits = std::strtol(env, &end, 10);
  if (*end != '\0' || bits < 64 || bits > (1L << 20)) {
    throw UsageError(std::string("GENUS_ASYM_PREC must be an integer in [64, 1048576], got '") +
                     env + "'");
  }
  return bits;
}

}  // namespace

int main(int argc, char** argv) {
  CommonOptions opts;
  try {
    opts.prec_bits = default_precision();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  CLI::App app{"Asymptotic counts of maps and graphs on orientable surfaces"};
  app.set_version_flag("--version", GENUS_ASYM_VERSION);
  app.require_subcommand(1);

  ConstantsArgs constants_args;
  auto* constants = app.add_subcommand("constants", "Map and graph asymptotics constants");
  constants->add_option("--tg", constants_args.tg, "Map asymptotics constant t_g");
  constants->add_option("--pg", constants_args.pg, "Conjectured nonorientable constant p_g");
  constants->add_option("--v0", constants_args.v0, "Base value v_0 of the p_g recursion");
  constants->add_flag("--graph-constants", constants_args.graph_constants,
                      "x_k, alpha_k, beta_k for k = 0..3");
  add_common(constants, opts);

  CountArgs maps_args;
  auto* maps = app.add_subcommand("maps", "Rooted k-connected maps by vertices and edges");
  maps->add_option("-g,--genus", maps_args.genus, "Genus")->check(CLI::NonNegativeNumber);
  maps->add_option("-k,--connectivity", maps_args.connectivity, "1, 2 or 3")->required();
  maps->add_option("-n", maps_args.n, "Vertices")->required()->check(CLI::PositiveNumber);
  maps->add_option("-m", maps_args.m, "Edges")->check(CLI::PositiveNumber);
  maps->add_flag("--mean-edges", maps_args.mean_edges, "Asymptotic mean edge count at n");
  maps->add_flag("--variance", maps_args.variance, "Asymptotic edge-count variance at n");
  add_common(maps, opts);

  CountArgs graphs_args;
  auto* graphs = app.add_subcommand("graphs", "Labelled k-connected graphs");
  graphs->add_option("-g,--genus", graphs_args.genus, "Genus")->check(CLI::NonNegativeNumber);
  graphs->add_option("-k,--connectivity", graphs_args.connectivity, "0..3")->required();
  graphs->add_option("-n", graphs_args.n, "Vertices")->required()->check(CLI::PositiveNumber);
  graphs->add_option("-m", graphs_args.m, "Edges")->check(CLI::PositiveNumber);
  graphs->add_flag("--vertices-only", graphs_args.vertices_only, "Count by vertices only");
  graphs->add_flag("--mean-edges", graphs_args.mean_edges, "Asymptotic mean edge count at n");
  graphs->add_flag("--variance", graphs_args.variance, "Asymptotic edge-count variance at n");
  add_common(graphs, opts);

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive census of small rooted maps");
  oracle->add_option("--edges", oracle_args.edges, "Largest edge count")
      ->required()
      ->check(CLI::PositiveNumber);
  oracle->add_flag("--allow-large", oracle_args.allow_large, "Permit 6 edges");
  oracle->add_option("--out", oracle_args.out, "Write the census CSV here");
  oracle->add_option("--workers", oracle_args.workers, "Worker threads")
      ->check(CLI::Range(1, 256));
  add_common(oracle, opts);

  std::string suite = "all";
  auto* check = app.add_subcommand("check", "Run the acceptance suites");
  check->add_option("--suite", suite, "all, constants, identities, oracle or convergence")
      ->check(CLI::IsMember({"all", "constants", "identities", "oracle", "convergence"}));
  add_common(check, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*constants) return run_constants(constants_args, opts);
    if (*maps) return run_maps(maps_args, opts);
    if (*graphs) return run_graphs(graphs_args, opts);
    if (*oracle) return run_oracle(oracle_args, opts);
    if (*check) return run_check(suite, opts);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResource;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const BracketError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}
