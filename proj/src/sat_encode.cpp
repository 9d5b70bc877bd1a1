#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "ldimkit/error.hpp"
#include "ldimkit/sat.hpp"

namespace ldimkit {

namespace {

constexpr std::size_t kMaxClauses = 200'000'000;

std::size_t binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::size_t value = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    if (value > std::numeric_limits<std::size_t>::max() / (n - r + i)) return std::numeric_limits<std::size_t>::max();
    value = value * (n - r + i) / i;
  }
  return value;
}

}  // namespace

VarMap::VarMap(const Poset& poset, unsigned orders)
    : ids_(poset.elements()), pair_count_(ids_.size() * (ids_.size() - 1) / 2), orders_(orders) {
  if (orders == 0) throw Error(ErrorCategory::Parameter, "encoding needs k >= 1");
  if (variable_count() > static_cast<std::size_t>(std::numeric_limits<Literal>::max())) {
    throw Error(ErrorCategory::Parameter, "encoding has too many variables for DIMACS literals");
  }
}

std::size_t VarMap::pair_index(std::size_t a, std::size_t b) const {
  const std::size_t n = ids_.size();
  return a * (2 * n - a - 1) / 2 + (b - a - 1);
}

Literal VarMap::x(std::size_t a, std::size_t b, unsigned order) const {
  return static_cast<Literal>(1 + 2 * (pair_index(a, b) * orders_ + order));
}

Literal VarMap::y(std::size_t a, std::size_t b, unsigned order) const { return x(a, b, order) + 1; }

Literal VarMap::z(std::size_t a, unsigned order) const {
  return static_cast<Literal>(1 + 2 * pair_count_ * orders_ + a * orders_ + order);
}

Literal VarMap::before(std::size_t a, std::size_t b, unsigned order) const {
  return a < b ? x(a, b, order) : y(b, a, order);
}

VarMap::Role VarMap::role(Literal variable) const {
  if (variable < 1 || static_cast<std::size_t>(variable) > variable_count()) {
    throw Error(ErrorCategory::Range, "variable " + std::to_string(variable) + " outside the encoding");
  }
  std::size_t v = static_cast<std::size_t>(variable) - 1;
  const std::size_t pair_vars = 2 * pair_count_ * orders_;
  if (v >= pair_vars) {
    v -= pair_vars;
    return {'z', v / orders_, 0, static_cast<unsigned>(v % orders_)};
  }
  const char kind = (v % 2 == 0) ? 'x' : 'y';
  v /= 2;
  const unsigned order = static_cast<unsigned>(v % orders_);
  std::size_t pair = v / orders_;
  // walk rows of the upper triangle
  const std::size_t n = ids_.size();
  std::size_t a = 0;
  while (pair >= n - 1 - a) {
    pair -= n - 1 - a;
    ++a;
  }
  return {kind, a, a + 1 + pair, order};
}

ClauseCounts expected_clause_counts(std::size_t elements, std::size_t comparable_pairs, unsigned k, unsigned d) {
  const std::size_t n = elements;
  const std::size_t pairs = n * (n - 1) / 2;
  ClauseCounts c;
  c.transitivity = n < 3 ? 0 : n * (n - 1) * (n - 2) * k;
  c.comparable = comparable_pairs * (1 + k);
  c.incomparable = 2 * (pairs - comparable_pairs);
  c.coupling = 6 * pairs * k;
  c.frequency = n * binomial(k, d + 1);
  c.coverage = n == 1 ? 1 : 0;
  return c;
}

Encoding encode(const Poset& poset, unsigned k, unsigned d) {
  if (d == 0) throw Error(ErrorCategory::Parameter, "encoding needs d >= 1");
  Encoding enc{CnfFormula{}, VarMap(poset, k), ClauseCounts{}};
  const VarMap& map = enc.map;
  const auto& ids = map.ids();
  const std::size_t n = ids.size();

  std::size_t comparable_pairs = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) comparable_pairs += poset.comparable(ids[a], ids[b]);
  }
  const ClauseCounts expected = expected_clause_counts(n, comparable_pairs, k, d);
  if (expected.total() > kMaxClauses) {
    throw Error(ErrorCategory::Parameter, "encoding would emit " + std::to_string(expected.total()) + " clauses");
  }

  auto& clauses = enc.formula.clauses;
  clauses.reserve(expected.total());
  enc.formula.variable_count = map.variable_count();
  ClauseCounts& counts = enc.counts;

  // (1) each order is transitive on its used elements. Over ordered triples a
  // single "before" chain covers both the x and the y chains, since
  // y(A,B) = before(B,A).
  for (unsigned i = 0; i < k; ++i) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (b == a) continue;
        for (std::size_t c = 0; c < n; ++c) {
          if (c == a || c == b) continue;
          clauses.push_back({-map.z(a, i), -map.z(b, i), -map.z(c, i), -map.before(a, b, i), -map.before(b, c, i),
                             map.before(a, c, i)});
          ++counts.transitivity;
        }
      }
    }
  }

  // (2) comparable pairs: witnessed at least once, never reversed.
  // (3) incomparable pairs: witnessed in both directions.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const bool a_le_b = poset.leq(ids[a], ids[b]);
      const bool b_le_a = poset.leq(ids[b], ids[a]);
      if (a_le_b || b_le_a) {
        Clause some;
        for (unsigned i = 0; i < k; ++i) some.push_back(a_le_b ? map.x(a, b, i) : map.y(a, b, i));
        clauses.push_back(std::move(some));
        for (unsigned i = 0; i < k; ++i) clauses.push_back({a_le_b ? -map.y(a, b, i) : -map.x(a, b, i)});
        counts.comparable += 1 + k;
      } else {
        Clause forward;
        Clause backward;
        for (unsigned i = 0; i < k; ++i) {
          forward.push_back(map.x(a, b, i));
          backward.push_back(map.y(a, b, i));
        }
        clauses.push_back(std::move(forward));
        clauses.push_back(std::move(backward));
        counts.incomparable += 2;
      }
    }
  }

  // a lone element has no pair clause to pull it into an order
  if (n == 1) {
    Clause some;
    for (unsigned i = 0; i < k; ++i) some.push_back(map.z(0, i));
    clauses.push_back(std::move(some));
    ++counts.coverage;
  }

  // (4) x, y and z agree.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (unsigned i = 0; i < k; ++i) {
        const Literal x = map.x(a, b, i);
        const Literal y = map.y(a, b, i);
        const Literal za = map.z(a, i);
        const Literal zb = map.z(b, i);
        clauses.push_back({-x, za});
        clauses.push_back({-x, zb});
        clauses.push_back({-y, za});
        clauses.push_back({-y, zb});
        clauses.push_back({-za, -zb, x, y});
        clauses.push_back({-x, -y});
        counts.coupling += 6;
      }
    }
  }

  // (5) every element is used in at most d orders: no d+1 of its z's are
  // simultaneously true.
  if (d + 1 <= k) {
    std::vector<unsigned> pick(d + 1);
    for (std::size_t a = 0; a < n; ++a) {
      for (unsigned j = 0; j <= d; ++j) pick[j] = j;
      while (true) {
        Clause clause;
        clause.reserve(pick.size());
        for (const auto i : pick) clause.push_back(-map.z(a, i));
        clauses.push_back(std::move(clause));
        ++counts.frequency;
        // next combination in lexicographic order
        int j = static_cast<int>(d);
        while (j >= 0 && pick[j] == k - (d + 1) + static_cast<unsigned>(j)) --j;
        if (j < 0) break;
        ++pick[j];
        for (unsigned t = static_cast<unsigned>(j) + 1; t <= d; ++t) pick[t] = pick[t - 1] + 1;
      }
    }
  }
  return enc;
}

void write_dimacs(std::ostream& out, const CnfFormula& formula) {
  out << "p cnf " << formula.variable_count << ' ' << formula.clauses.size() << '\n';
  std::string line;
  for (const auto& clause : formula.clauses) {
    line.clear();
    for (const auto lit : clause) {
      line += std::to_string(lit);
      line += ' ';
    }
    line += "0\n";
    out << line;
  }
  if (!out) throw Error(ErrorCategory::Io, "failed to write DIMACS output");
}

void write_dimacs_file(const std::string& path, const CnfFormula& formula) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCategory::Io, "cannot write '" + path + "'");
  write_dimacs(out, formula);
}

void write_var_map(std::ostream& out, const VarMap& map) {
  const auto& ids = map.ids();
  for (std::size_t v = 1; v <= map.variable_count(); ++v) {
    const auto role = map.role(static_cast<Literal>(v));
    out << role.kind << ' ' << ids[role.a] << ' ';
    if (role.kind == 'z') out << '-';
    else out << ids[role.b];
    out << ' ' << role.order + 1 << ' ' << v << '\n';
  }
  if (!out) throw Error(ErrorCategory::Io, "failed to write variable map");
}

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula formula;
  std::string line;
  bool header = false;
  std::size_t declared = 0;
  Clause current;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream tokens(line);
    if (line[0] == 'p') {
      std::string p;
      std::string cnf;
      if (!(tokens >> p >> cnf >> formula.variable_count >> declared) || cnf != "cnf") {
        throw Error(ErrorCategory::Parse, "bad DIMACS header '" + line + "'");
      }
      header = true;
      continue;
    }
    if (!header) throw Error(ErrorCategory::Parse, "DIMACS clause before header");
    long long lit = 0;
    while (tokens >> lit) {
      if (lit == 0) {
        formula.clauses.push_back(std::move(current));
        current.clear();
      } else {
        if (static_cast<std::size_t>(std::llabs(lit)) > formula.variable_count) {
          throw Error(ErrorCategory::Parse, "literal " + std::to_string(lit) + " exceeds declared variables");
        }
        current.push_back(static_cast<Literal>(lit));
      }
    }
    if (!tokens.eof()) throw Error(ErrorCategory::Parse, "bad DIMACS clause line '" + line + "'");
  }
  if (!header) throw Error(ErrorCategory::Parse, "missing DIMACS header");
  if (!current.empty()) throw Error(ErrorCategory::Parse, "unterminated final clause");
  if (formula.clauses.size() != declared) {
    throw Error(ErrorCategory::Parse, "header declares " + std::to_string(declared) + " clauses, found " +
                                          std::to_string(formula.clauses.size()));
  }
  return formula;
}

}  // namespace ldimkit
