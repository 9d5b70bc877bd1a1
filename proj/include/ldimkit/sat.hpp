#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ldimkit/realizer.hpp"

namespace ldimkit {

using Literal = std::int32_t;
using Clause = std::vector<Literal>;

struct CnfFormula {
  std::size_t variable_count = 0;
  std::vector<Clause> clauses;

  bool operator==(const CnfFormula&) const = default;
};

// Variables of the "frequency <= d with k orders" encoding. Pairs are stored
// once with the lower element index first: x(a, b, i) means a precedes b in
// order i and y(a, b, i) means b precedes a. z(a, i) means a is used in order
// i. Indices are dense element indices of the poset; orders are 0-based here
// and 1-based in the map file.
class VarMap {
public:
  VarMap(const Poset& poset, unsigned orders);

  std::size_t element_count() const noexcept { return ids_.size(); }
  unsigned orders() const noexcept { return orders_; }
  std::size_t variable_count() const noexcept { return 2 * pair_count_ * orders_ + ids_.size() * orders_; }
  const std::vector<ElementId>& ids() const noexcept { return ids_; }

  Literal x(std::size_t a, std::size_t b, unsigned order) const;
  Literal y(std::size_t a, std::size_t b, unsigned order) const;
  Literal z(std::size_t a, unsigned order) const;
  // "a precedes b in order i" for any two distinct indices.
  Literal before(std::size_t a, std::size_t b, unsigned order) const;

  struct Role {
    char kind;  // 'x', 'y' or 'z'
    std::size_t a;
    std::size_t b;  // unused for 'z'
    unsigned order;
  };
  Role role(Literal variable) const;

private:
  std::size_t pair_index(std::size_t a, std::size_t b) const;

  std::vector<ElementId> ids_;
  std::size_t pair_count_ = 0;
  unsigned orders_ = 0;
};

// Clause totals per family. `coverage` is the single clause that forces the
// element of a one-element poset into some order (0 otherwise).
struct ClauseCounts {
  std::size_t transitivity = 0;
  std::size_t comparable = 0;
  std::size_t incomparable = 0;
  std::size_t coupling = 0;
  std::size_t frequency = 0;
  std::size_t coverage = 0;

  std::size_t total() const { return transitivity + comparable + incomparable + coupling + frequency + coverage; }
  bool operator==(const ClauseCounts&) const = default;
};

// Closed form for N elements, `comparable_pairs` strictly comparable pairs,
// k orders and frequency bound d.
ClauseCounts expected_clause_counts(std::size_t elements, std::size_t comparable_pairs, unsigned k, unsigned d);

struct Encoding {
  CnfFormula formula;
  VarMap map;
  ClauseCounts counts;
};

// Satisfiable iff P has a local realizer with at most k members and
// frequency at most d.
Encoding encode(const Poset& poset, unsigned k, unsigned d);

void write_dimacs(std::ostream& out, const CnfFormula& formula);
void write_dimacs_file(const std::string& path, const CnfFormula& formula);
// One line per variable: `x|y <A> <B> <i> <var>` or `z <A> - <i> <var>`.
void write_var_map(std::ostream& out, const VarMap& map);
CnfFormula parse_dimacs(std::istream& in);

enum class SolverStatus { Sat, Unsat, Unknown };
std::string_view status_name(SolverStatus status);

struct SolverResult {
  SolverStatus status = SolverStatus::Unknown;
  // Variables assigned true, ascending; present iff status is Sat.
  std::optional<std::vector<Literal>> model;
};

// Parses `s ...` status lines and `v ...` literal lines. Without a status
// line the exit code decides (10 sat, 20 unsat); otherwise the output is a
// protocol error.
SolverResult parse_solver_output(std::istream& in, std::optional<int> exit_code = std::nullopt);

// Runs `<command> <cnf_path>` through the shell and parses its stdout.
SolverResult run_solver(const std::string& cnf_path, const std::string& command);

// --solver flag, else $LDIMKIT_SAT_SOLVER; environment error when neither is set.
std::string resolve_solver_command(const std::optional<std::string>& flag);

// Members are the used elements of each order sorted by the decoded
// precedence; orders with no used element are dropped.
RealizerFamily decode_realizer(const std::vector<Literal>& model, const VarMap& map, const Poset& poset, unsigned k);

class ExternalSolver {
public:
  explicit ExternalSolver(std::string command) : command_(std::move(command)) {}

  const std::string& command() const noexcept { return command_; }
  // Writes the formula to a temporary DIMACS file and runs the solver on it.
  SolverResult solve(const CnfFormula& formula) const;

private:
  std::string command_;
};

struct LdimStep {
  unsigned d = 0;
  unsigned k = 0;
  std::size_t variables = 0;
  std::size_t clauses = 0;
  SolverStatus status = SolverStatus::Unknown;
};

struct LdimResult {
  unsigned ldim = 0;
  RealizerFamily certificate;
  std::vector<LdimStep> steps;
};

// Least d for which encode(P, d * |P|, d) is satisfiable, trying d = 1, 2, ...
// up to d_max (default |P|). The certificate is decoded and re-verified.
LdimResult ldim_exact(const Poset& poset, const ExternalSolver& solver, std::optional<unsigned> d_max = std::nullopt);

}  // namespace ldimkit
