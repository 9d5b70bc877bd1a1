#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "ldimkit/error.hpp"
#include "ldimkit/sat.hpp"

namespace ldimkit {

std::string_view status_name(SolverStatus status) {
  switch (status) {
    case SolverStatus::Sat: return "sat";
    case SolverStatus::Unsat: return "unsat";
    case SolverStatus::Unknown: return "unknown";
  }
  return "unknown";
}

SolverResult parse_solver_output(std::istream& in, std::optional<int> exit_code) {
  std::optional<SolverStatus> status;
  std::vector<Literal> true_vars;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.starts_with("s ")) {
      const auto word = line.substr(2);
      if (word == "SATISFIABLE") status = SolverStatus::Sat;
      else if (word == "UNSATISFIABLE") status = SolverStatus::Unsat;
      else if (word == "UNKNOWN" || word == "INDETERMINATE") status = SolverStatus::Unknown;
      else throw Error(ErrorCategory::Protocol, "unrecognized status line '" + line + "'");
    } else if (line.starts_with("v ") || line == "v") {
      std::istringstream tokens(line.substr(1));
      long long lit = 0;
      while (tokens >> lit) {
        if (lit > 0) true_vars.push_back(static_cast<Literal>(lit));
      }
      if (!tokens.eof()) throw Error(ErrorCategory::Protocol, "bad value line '" + line + "'");
    }
  }
  if (!status) {
    if (exit_code == 10) status = SolverStatus::Sat;
    else if (exit_code == 20) status = SolverStatus::Unsat;
    else throw Error(ErrorCategory::Protocol, "solver output has no status line and no 10/20 exit code");
  }

  SolverResult result;
  result.status = *status;
  if (result.status == SolverStatus::Sat) {
    std::sort(true_vars.begin(), true_vars.end());
    true_vars.erase(std::unique(true_vars.begin(), true_vars.end()), true_vars.end());
    result.model = std::move(true_vars);
  }
  return result;
}

namespace {

std::string shell_quote(const std::string& text) {
  std::string quoted = "'";
  for (const char c : text) {
    if (c == '\'') quoted += "'\\''";
    else quoted += c;
  }
  return quoted + "'";
}

}  // namespace

SolverResult run_solver(const std::string& cnf_path, const std::string& command) {
  if (command.empty()) throw Error(ErrorCategory::Environment, "empty solver command");
  const std::string full = command + " " + shell_quote(cnf_path);
  FILE* pipe = ::popen(full.c_str(), "r");
  if (!pipe) throw Error(ErrorCategory::Environment, "cannot launch solver '" + command + "'");

  std::string output;
  char buffer[1 << 16];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
  const int raw = ::pclose(pipe);
  if (raw == -1) throw Error(ErrorCategory::Environment, "lost track of solver process");

  std::optional<int> exit_code;
  if (WIFEXITED(raw)) exit_code = WEXITSTATUS(raw);
  if (exit_code == 126 || exit_code == 127) {
    throw Error(ErrorCategory::Environment, "solver command '" + command + "' could not be executed");
  }
  // the shell reports a child killed by signal n as 128 + n
  if (!exit_code || *exit_code > 128) {
    throw Error(ErrorCategory::Environment, "solver '" + command + "' terminated abnormally");
  }

  std::istringstream in(output);
  return parse_solver_output(in, exit_code);
}

std::string resolve_solver_command(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("LDIMKIT_SAT_SOLVER"); env && *env) return env;
  throw Error(ErrorCategory::Environment, "no SAT solver configured (use --solver or LDIMKIT_SAT_SOLVER)");
}

RealizerFamily decode_realizer(const std::vector<Literal>& model, const VarMap& map, const Poset& poset, unsigned k) {
  if (k != map.orders()) throw Error(ErrorCategory::Contract, "k does not match the variable map");
  if (map.element_count() != poset.ground_size()) {
    throw Error(ErrorCategory::Contract, "variable map was built for a different poset");
  }
  std::vector<char> value(map.variable_count() + 1, 0);
  for (const auto lit : model) {
    if (lit < 1 || static_cast<std::size_t>(lit) > map.variable_count()) {
      throw Error(ErrorCategory::Decode, "model variable " + std::to_string(lit) + " outside the encoding");
    }
    value[lit] = 1;
  }
  const auto truth = [&](Literal v) { return value[v] != 0; };

  const std::size_t n = map.element_count();
  const auto& ids = map.ids();
  std::vector<PartialLinearExtension> members;
  for (unsigned i = 0; i < k; ++i) {
    std::vector<std::size_t> used;
    for (std::size_t a = 0; a < n; ++a) {
      if (truth(map.z(a, i))) used.push_back(a);
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        const bool xv = truth(map.x(a, b, i));
        const bool yv = truth(map.y(a, b, i));
        const bool both_used = truth(map.z(a, i)) && truth(map.z(b, i));
        if ((xv || yv) && !both_used) {
          throw Error(ErrorCategory::Decode, "order " + std::to_string(i + 1) + " relates an unused element");
        }
        if (both_used && xv == yv) {
          throw Error(ErrorCategory::Decode, "order " + std::to_string(i + 1) + " is not antisymmetric and total on " +
                                                 std::to_string(ids[a]) + ", " + std::to_string(ids[b]));
        }
      }
    }
    if (used.empty()) continue;

    // position = number of predecessors; a strict total order yields a permutation
    std::vector<std::pair<std::size_t, std::size_t>> ranked;
    for (const auto a : used) {
      std::size_t preds = 0;
      for (const auto b : used) {
        if (b != a && truth(map.before(b, a, i))) ++preds;
      }
      ranked.emplace_back(preds, a);
    }
    std::sort(ranked.begin(), ranked.end());
    PartialLinearExtension order;
    for (std::size_t r = 0; r < ranked.size(); ++r) {
      if (ranked[r].first != r) {
        throw Error(ErrorCategory::Decode, "order " + std::to_string(i + 1) + " is not transitive");
      }
      order.elements.push_back(ids[ranked[r].second]);
    }
    members.push_back(std::move(order));
  }
  return RealizerFamily(std::move(members));
}

SolverResult ExternalSolver::solve(const CnfFormula& formula) const {
  static std::atomic<unsigned> counter{0};
  const auto path = std::filesystem::temp_directory_path() /
                    ("ldimkit-" + std::to_string(::getpid()) + "-" + std::to_string(counter++) + ".cnf");
  write_dimacs_file(path.string(), formula);
  try {
    auto result = run_solver(path.string(), command_);
    std::filesystem::remove(path);
    return result;
  } catch (...) {
    std::error_code ignored;
    std::filesystem::remove(path, ignored);
    throw;
  }
}

LdimResult ldim_exact(const Poset& poset, const ExternalSolver& solver, std::optional<unsigned> d_max) {
  const auto n = static_cast<unsigned>(poset.ground_size());
  const unsigned limit = d_max ? *d_max : std::max(1u, n);
  LdimResult result;
  for (unsigned d = 1; d <= limit; ++d) {
    const unsigned k = d * n;
    const Encoding enc = encode(poset, k, d);
    const SolverResult answer = solver.solve(enc.formula);
    result.steps.push_back({d, k, enc.formula.variable_count, enc.formula.clauses.size(), answer.status});
    if (answer.status == SolverStatus::Unknown) {
      throw Error(ErrorCategory::Protocol, "solver returned unknown for d = " + std::to_string(d));
    }
    if (answer.status == SolverStatus::Unsat) continue;

    RealizerFamily family = decode_realizer(*answer.model, enc.map, poset, k);
    const auto report = verify_local_realizer(poset, family);
    if (!report.accepted || family.frequency() > d) {
      throw Error(ErrorCategory::Decode, "decoded family for d = " + std::to_string(d) + " fails verification");
    }
    result.ldim = d;
    result.certificate = std::move(family);
    return result;
  }
  throw Error(ErrorCategory::BoundExceeded, "no local realizer with frequency <= " + std::to_string(limit));
}

}  // namespace ldimkit
