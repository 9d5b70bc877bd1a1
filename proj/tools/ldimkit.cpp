// Command-line front end for ldimkit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ldimkit/bounds.hpp"
#include "ldimkit/error.hpp"
#include "ldimkit/orders_io.hpp"
#include "ldimkit/poset.hpp"
#include "ldimkit/realizer.hpp"
#include "ldimkit/sat.hpp"
#include "ldimkit/singleton.hpp"

using namespace ldimkit;
using nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kRejected = 1, kUsage = 2, kEnvironment = 3 };

struct Options {
  std::string format = "text";
  std::string output;
  std::string poset;
  std::string orders;
  std::string model;
  std::string map_output;
  std::optional<std::string> solver;
  std::string which;
  unsigned n = 0;
  unsigned long long m = 0;
  unsigned d = 0;
  unsigned k = 0;
  std::size_t size = 0;
  std::size_t cap = 100;
  bool verify = false;
};

bool json_output(const Options& o) { return o.format == "json"; }

void emit_json(const json& value) { std::cout << value.dump(2) << '\n'; }

// Writes `text` to -o when given, stdout otherwise.
void emit_payload(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw Error(ErrorCategory::Io, "cannot write '" + o.output + "'");
  out << text;
  if (!out) throw Error(ErrorCategory::Io, "write failed for '" + o.output + "'");
}

// Summary goes to stdout unless the payload already occupies it.
std::ostream& summary_stream(const Options& o) { return o.output.empty() ? std::cerr : std::cout; }

void print_report_text(std::ostream& out, const VerificationReport& report) {
  out << (report.accepted ? "accepted" : "rejected") << " frequency=" << report.frequency << " size=" << report.size
      << '\n';
  for (std::size_t k = 0; k < kViolationKindCount; ++k) {
    if (report.totals[k]) out << "  " << violation_name(static_cast<ViolationKind>(k)) << ": " << report.totals[k] << '\n';
  }
  for (const auto& v : report.violations) {
    out << "  " << violation_name(v.kind) << ' ' << v.a << ' ' << v.b;
    if (v.ple) out << " ple=" << *v.ple;
    out << '\n';
  }
}

int run_verify(const Options& o) {
  const Poset poset = Poset::parse(o.poset);
  const RealizerFamily family = read_orders_file(o.orders);
  VerifyOptions options;
  options.violation_cap = o.cap;
  const auto report = verify_local_realizer(poset, family, options);
  if (json_output(o)) {
    json out = report.to_json();
    out["poset"] = poset.spec();
    emit_json(out);
  } else {
    print_report_text(std::cout, report);
  }
  return report.accepted ? kOk : kRejected;
}

int finish_build(const Options& o, const Poset& poset, const RealizerFamily& family, json summary) {
  summary["poset"] = poset.spec();
  summary["frequency"] = family.frequency();
  summary["size"] = family.size();
  bool accepted = true;
  if (o.verify) {
    accepted = verify_local_realizer(poset, family).accepted;
    summary["verified"] = accepted;
  }
  emit_payload(o, format_orders(family));
  auto& out = summary_stream(o);
  if (json_output(o)) {
    out << summary.dump(2) << '\n';
  } else {
    for (const auto& [key, value] : summary.items()) out << key << ": " << value.dump() << '\n';
  }
  return accepted ? kOk : kRejected;
}

int run_build_bn(const Options& o) {
  const auto family = build_bn_realizer(o.n);
  const auto parts = decompose_bn(o.n);
  json summary{{"n", o.n},
               {"sevens", parts.sevens},
               {"fours", parts.fours},
               {"rest", parts.rest},
               {"predicted_bound", (5 * o.n + 6) / 7}};
  return finish_build(o, Poset::boolean(o.n), family, summary);
}

int run_build_standard(const Options& o) {
  return finish_build(o, Poset::boolean(o.n), build_standard_realizer(o.n), json{{"n", o.n}});
}

int run_build_singleton(const Options& o) {
  const unsigned d = o.d ? o.d : default_block_width(o.n);
  const auto plan = plan_singleton_realizer(o.n, d);
  const auto bound = singleton_frequency_bound(o.n, d);
  json summary{{"n", o.n},
               {"d", d},
               {"r", plan.partition.count},
               {"predicted_bound", bound.max()},
               {"block_bound", bound.block_bound},
               {"big_set_bound", bound.big_set_bound}};
  return finish_build(o, Poset::singleton(o.n), plan.family(), summary);
}

int run_encode(const Options& o) {
  const Poset poset = Poset::parse(o.poset);
  const auto enc = encode(poset, o.k, o.d);
  std::ostringstream cnf;
  write_dimacs(cnf, enc.formula);
  emit_payload(o, cnf.str());
  if (!o.map_output.empty()) {
    std::ofstream map(o.map_output);
    if (!map) throw Error(ErrorCategory::Io, "cannot write '" + o.map_output + "'");
    write_var_map(map, enc.map);
  }
  json summary{{"poset", poset.spec()},
               {"k", o.k},
               {"d", o.d},
               {"variables", enc.formula.variable_count},
               {"clauses", enc.formula.clauses.size()}};
  auto& out = summary_stream(o);
  if (json_output(o)) out << summary.dump(2) << '\n';
  else out << "variables: " << enc.formula.variable_count << "\nclauses: " << enc.formula.clauses.size() << '\n';
  return kOk;
}

int run_solve(const Options& o) {
  const Poset poset = Poset::parse(o.poset);
  const auto enc = encode(poset, o.k, o.d);
  SolverResult result;
  if (!o.model.empty()) {
    std::ifstream in(o.model);
    if (!in) throw Error(ErrorCategory::Io, "cannot open model file '" + o.model + "'");
    result = parse_solver_output(in);
  } else {
    result = ExternalSolver(resolve_solver_command(o.solver)).solve(enc.formula);
  }

  json summary{{"poset", poset.spec()}, {"k", o.k}, {"d", o.d}, {"status", status_name(result.status)}};
  if (result.status != SolverStatus::Sat) {
    if (json_output(o)) emit_json(summary);
    else std::cout << "status: " << status_name(result.status) << '\n';
    return result.status == SolverStatus::Unsat ? kRejected : kEnvironment;
  }
  const auto family = decode_realizer(*result.model, enc.map, poset, o.k);
  const auto report = verify_local_realizer(poset, family);
  summary["verification"] = report.to_json();
  emit_payload(o, format_orders(family));
  auto& out = summary_stream(o);
  if (json_output(o)) {
    out << summary.dump(2) << '\n';
  } else {
    out << "status: sat\n";
    print_report_text(out, report);
  }
  return report.accepted ? kOk : kRejected;
}

int run_ldim(const Options& o) {
  const Poset poset = Poset::parse(o.poset);
  const ExternalSolver solver(resolve_solver_command(o.solver));
  const auto result = ldim_exact(poset, solver, o.d ? std::optional<unsigned>(o.d) : std::nullopt);
  json steps = json::array();
  for (const auto& s : result.steps) {
    steps.push_back({{"d", s.d}, {"k", s.k}, {"variables", s.variables}, {"clauses", s.clauses},
                     {"status", status_name(s.status)}});
  }
  json summary{{"poset", poset.spec()},
               {"ldim", result.ldim},
               {"steps", steps},
               {"certificate_frequency", result.certificate.frequency()},
               {"certificate_size", result.certificate.size()}};
  if (!o.output.empty()) emit_payload(o, format_orders(result.certificate));
  if (json_output(o)) {
    emit_json(summary);
  } else {
    for (const auto& s : result.steps) {
      std::cout << "d=" << s.d << " k=" << s.k << " vars=" << s.variables << " clauses=" << s.clauses << ' '
                << status_name(s.status) << '\n';
    }
    std::cout << "ldim: " << result.ldim << '\n';
  }
  return kOk;
}

void print_bound(const Options& o, const BoundReport& report) {
  if (json_output(o)) {
    emit_json(report.to_json());
    return;
  }
  const json fields = report.to_json();
  for (const auto& [key, value] : fields.items()) std::cout << key << ": " << value.dump() << '\n';
}

int run_multiset_bound(const Options& o) {
  print_bound(o, multiset_lower_bound(o.n, o.m));
  return kOk;
}

int run_min_m(const Options& o) {
  const auto m = min_m_certifying(o.n);
  json out{{"n", o.n}, {"min_m", m}, {"bound", multiset_lower_bound(o.n, m).bound}};
  if (json_output(o)) emit_json(out);
  else std::cout << "min_m: " << m << '\n';
  return kOk;
}

int run_turan(const Options& o) {
  print_bound(o, turan_independence_floor(o.n, o.size));
  return kOk;
}

int run_conflict(const Options& o) {
  const RealizerFamily family = read_orders_file(o.orders);
  const auto graph = conflict_graph(family, o.n);
  const auto independent = independent_set(graph);
  json edges = json::array();
  for (const auto& [i, j] : graph.edges) edges.push_back({i, j});
  json out{{"n", o.n}, {"size", family.size()}, {"frequency", family.frequency()}, {"edges", edges},
           {"independent_set", independent}};
  bool ok = true;
  if (independent.size() + 2 <= o.n) {
    ok = check_ind_freq_claim(o.n, family, independent);
    out["claim_holds"] = ok;
  }
  const auto turan = turan_independence_floor(o.n, family.size());
  out["turan"] = turan.to_json();
  if (json_output(o)) {
    emit_json(out);
  } else {
    for (const auto& [key, value] : out.items()) std::cout << key << ": " << value.dump() << '\n';
  }
  return ok ? kOk : kRejected;
}

int run_signature(const Options& o) {
  const RealizerFamily family = read_orders_file(o.orders);
  const auto audit = audit_signatures(o.n, static_cast<unsigned>(o.m), family);
  if (json_output(o)) {
    emit_json(audit.to_json());
  } else {
    const json fields = audit.to_json();
    for (const auto& [key, value] : fields.items()) std::cout << key << ": " << value.dump() << '\n';
  }
  return audit.passed() ? kOk : kRejected;
}

int run_tables(const Options& o) {
  emit_payload(o, format_orders(published_table(parse_table_name(o.which))));
  return kOk;
}

int exit_code_for(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::Io:
    case ErrorCategory::Environment:
    case ErrorCategory::Protocol:
    case ErrorCategory::Decode: return kEnvironment;
    case ErrorCategory::BoundExceeded: return kRejected;
    default: return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local dimension toolkit: realizer verification, constructions, SAT search and bounds"};
  app.require_subcommand(1);
  Options o;
  int (*action)(const Options&) = nullptr;

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* verify = app.add_subcommand("verify", "Verify an orders file as a local realizer");
  verify->add_option("--poset", o.poset, "Poset spec, e.g. boolean:4")->required();
  verify->add_option("--orders", o.orders, "Orders file")->required();
  verify->add_option("--cap", o.cap, "Violations listed per kind");
  add_format(verify);
  verify->callback([&] { action = run_verify; });

  auto* build = app.add_subcommand("build", "Construct a local realizer");
  build->require_subcommand(1);
  const auto add_build = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    auto* cmd = build->add_subcommand(name, help);
    cmd->add_option("--n", o.n, "Order of the lattice")->required();
    cmd->add_option("-o,--output", o.output, "Orders file to write (stdout when omitted)");
    cmd->add_flag("--verify", o.verify, "Verify the result before writing");
    add_format(cmd);
    cmd->callback([&, fn] { action = fn; });
    return cmd;
  };
  add_build("bn", "Boolean lattice realizer of frequency ceil(5n/7)", run_build_bn);
  add_build("standard", "The n coordinate linear extensions of the Boolean lattice", run_build_standard);
  add_build("singleton", "Block realizer of the singleton poset", run_build_singleton)
      ->add_option("--d", o.d, "Block width (default ceil(log n - log log n))");

  auto* enc = app.add_subcommand("encode", "Write the DIMACS encoding of 'frequency <= d with k orders'");
  enc->add_option("--poset", o.poset, "Poset spec")->required();
  enc->add_option("--k", o.k, "Number of orders")->required();
  enc->add_option("--d", o.d, "Frequency bound")->required();
  enc->add_option("-o,--output", o.output, "CNF file (stdout when omitted)");
  enc->add_option("--map", o.map_output, "Variable map file");
  add_format(enc);
  enc->callback([&] { action = run_encode; });

  auto* solve = app.add_subcommand("solve", "Encode, solve and decode one (k, d) instance");
  solve->add_option("--poset", o.poset, "Poset spec")->required();
  solve->add_option("--k", o.k, "Number of orders")->required();
  solve->add_option("--d", o.d, "Frequency bound")->required();
  solve->add_option("--solver", o.solver, "Solver command (default $LDIMKIT_SAT_SOLVER)");
  solve->add_option("--model", o.model, "Decode an existing solver output instead of running a solver");
  solve->add_option("-o,--output", o.output, "Orders file for the decoded realizer");
  add_format(solve);
  solve->callback([&] { action = run_solve; });

  auto* ldim = app.add_subcommand("ldim", "Exact local dimension by repeated SAT queries");
  ldim->add_option("--poset", o.poset, "Poset spec")->required();
  ldim->add_option("--d", o.d, "Largest d to try");
  ldim->add_option("--solver", o.solver, "Solver command (default $LDIMKIT_SAT_SOLVER)");
  ldim->add_option("-o,--output", o.output, "Orders file for the certificate");
  add_format(ldim);
  ldim->callback([&] { action = run_ldim; });

  auto* analyze = app.add_subcommand("analyze", "Lower-bound formulas and certificate audits");
  analyze->require_subcommand(1);
  auto* mb = analyze->add_subcommand("multiset-bound", "Lower bound for the bounded multiset singleton poset");
  mb->add_option("--n", o.n)->required();
  mb->add_option("--m", o.m)->required();
  add_format(mb);
  mb->callback([&] { action = run_multiset_bound; });
  auto* mm = analyze->add_subcommand("min-m", "Least m whose multiset bound certifies ldim = n");
  mm->add_option("--n", o.n)->required();
  add_format(mm);
  mm->callback([&] { action = run_min_m; });
  auto* tu = analyze->add_subcommand("turan", "Frequency floor for short realizers of the singleton poset");
  tu->add_option("--n", o.n)->required();
  tu->add_option("--size", o.size, "Realizer size")->required();
  add_format(tu);
  tu->callback([&] { action = run_turan; });
  auto* cg = analyze->add_subcommand("conflict", "Conflict graph and independent-set claim for a singleton realizer");
  cg->add_option("--n", o.n)->required();
  cg->add_option("--orders", o.orders)->required();
  add_format(cg);
  cg->callback([&] { action = run_conflict; });
  auto* sg = analyze->add_subcommand("signature", "Interval-signature audit for a multiset singleton realizer");
  sg->add_option("--n", o.n)->required();
  sg->add_option("--m", o.m)->required();
  sg->add_option("--orders", o.orders)->required();
  add_format(sg);
  sg->callback([&] { action = run_signature; });

  auto* tables = app.add_subcommand("tables", "Print an embedded certificate (b4 or b7)");
  tables->add_option("which", o.which, "b4 or b7")->required()->check(CLI::IsMember({"b4", "b7"}));
  tables->add_option("-o,--output", o.output, "Output file");
  tables->callback([&] { action = run_tables; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "ERROR:usage: " << e.what() << '\n';
    return kUsage;
  }

  try {
    return action ? action(o) : kUsage;
  } catch (const Error& e) {
    std::cerr << "ERROR:" << category_name(e.category()) << ": " << e.what() << '\n';
    return exit_code_for(e.category());
  } catch (const std::exception& e) {
    std::cerr << "ERROR:internal: " << e.what() << '\n';
    return kEnvironment;
  }
}
