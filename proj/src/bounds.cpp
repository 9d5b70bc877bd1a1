#include "ldimkit/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "ldimkit/error.hpp"

namespace ldimkit {

namespace {

constexpr double kSlack = 1e-9;

long long slack_ceiling(double value) { return static_cast<long long>(std::ceil(value - kSlack)); }

}  // namespace

bool ConflictGraph::adjacent(unsigned i, unsigned j) const {
  if (i > j) std::swap(i, j);
  return edges.count({i, j}) != 0;
}

std::size_t ConflictGraph::degree(unsigned v) const {
  std::size_t d = 0;
  for (const auto& [i, j] : edges) d += (i == v || j == v);
  return d;
}

ConflictGraph conflict_graph(const RealizerFamily& family, unsigned n) {
  if (n == 0 || n > 62) throw Error(ErrorCategory::Parameter, "conflict graph needs 1 <= n <= 62");
  const ElementId bound = ElementId{1} << n;
  ConflictGraph graph;
  graph.n = n;
  for (const auto& member : family.members()) {
    unsigned last = 0;
    unsigned second = 0;
    for (const auto id : member.elements) {
      if (id == 0 || id >= bound) {
        throw Error(ErrorCategory::Range, "element " + std::to_string(id) + " is not in singleton:" + std::to_string(n));
      }
      if (std::has_single_bit(id)) {
        second = last;
        last = static_cast<unsigned>(std::countr_zero(id)) + 1;
      }
    }
    if (second != 0) graph.edges.insert({std::min(last, second), std::max(last, second)});
  }
  return graph;
}

bool is_independent(const ConflictGraph& graph, const std::vector<unsigned>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (graph.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

namespace {

struct ExactSearch {
  std::vector<std::uint32_t> adjacency;
  std::uint32_t best = 0;
  int best_size = -1;

  void expand(std::uint32_t candidates, std::uint32_t current, int size) {
    if (candidates == 0) {
      if (size > best_size) {
        best_size = size;
        best = current;
      }
      return;
    }
    if (size + std::popcount(candidates) <= best_size) return;
    const int v = std::countr_zero(candidates);
    const std::uint32_t bit = std::uint32_t{1} << v;
    expand(candidates & ~adjacency[v] & ~bit, current | bit, size + 1);
    // excluding v only helps when v has a neighbour left among the candidates
    if (adjacency[v] & candidates) expand(candidates & ~bit, current, size);
  }
};

}  // namespace

std::vector<unsigned> independent_set(const ConflictGraph& graph) {
  const unsigned n = graph.n;
  std::vector<unsigned> result;
  if (n <= 20) {
    ExactSearch search;
    search.adjacency.assign(n, 0);
    for (const auto& [i, j] : graph.edges) {
      search.adjacency[i - 1] |= std::uint32_t{1} << (j - 1);
      search.adjacency[j - 1] |= std::uint32_t{1} << (i - 1);
    }
    const std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    search.expand(all, 0, 0);
    for (unsigned v = 0; v < n; ++v) {
      if (search.best & (std::uint32_t{1} << v)) result.push_back(v + 1);
    }
    return result;
  }

  std::vector<std::vector<unsigned>> neighbours(n + 1);
  for (const auto& [i, j] : graph.edges) {
    neighbours[i].push_back(j);
    neighbours[j].push_back(i);
  }
  std::vector<char> alive(n + 1, 1);
  alive[0] = 0;
  while (true) {
    unsigned pick = 0;
    std::size_t pick_degree = 0;
    for (unsigned v = 1; v <= n; ++v) {
      if (!alive[v]) continue;
      std::size_t d = 0;
      for (const auto u : neighbours[v]) d += alive[u];
      if (pick == 0 || d < pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    if (pick == 0) break;
    result.push_back(pick);
    alive[pick] = 0;
    for (const auto u : neighbours[pick]) alive[u] = 0;
  }
  std::sort(result.begin(), result.end());
  return result;
}

nlohmann::json BoundReport::to_json() const {
  nlohmann::json out{{"n", n}, {"bound", bound}, {"ceiling", ceiling}, {"certifying", certifying}};
  if (m) out["m"] = *m;
  if (c) out["c"] = *c;
  if (size) out["size"] = *size;
  if (independence) out["independence"] = *independence;
  return out;
}

BoundReport turan_independence_floor(unsigned n, std::size_t realizer_size) {
  if (n < 2) throw Error(ErrorCategory::Parameter, "Turan floor needs n >= 2");
  const double nn = n;
  const double c = static_cast<double>(realizer_size) / nn;
  BoundReport r;
  r.n = n;
  r.c = c;
  r.size = realizer_size;
  r.independence = nn * nn / ((2 * c + 1) * nn + 2) + 1;
  r.bound = nn / (2 * (c + 1));
  r.ceiling = slack_ceiling(r.bound);
  r.certifying = *r.independence > r.bound;
  return r;
}

bool check_ind_freq_claim(unsigned n, const RealizerFamily& family, const std::vector<unsigned>& independent) {
  if (n < 2 || n > 20) throw Error(ErrorCategory::Parameter, "claim check needs 2 <= n <= 20");
  if (independent.size() + 2 > n) throw Error(ErrorCategory::Contract, "claim check needs |I| <= n - 2");
  const Poset poset = Poset::singleton(n);
  if (!verify_local_realizer(poset, family).accepted) {
    throw Error(ErrorCategory::Contract, "family is not a local realizer of singleton:" + std::to_string(n));
  }
  ElementId removed = 0;
  for (const auto v : independent) {
    if (v < 1 || v > n) throw Error(ErrorCategory::Range, "vertex " + std::to_string(v) + " outside [n]");
    removed |= ElementId{1} << (v - 1);
  }
  if (static_cast<std::size_t>(std::popcount(removed)) != independent.size()) {
    throw Error(ErrorCategory::Contract, "independent set has repeated vertices");
  }
  if (!is_independent(conflict_graph(family, n), independent)) {
    throw Error(ErrorCategory::Contract, "vertex set is not independent in the conflict graph");
  }
  const ElementId complement = ((ElementId{1} << n) - 1) & ~removed;
  return family.occurrence_count(complement) >= independent.size();
}

namespace {

using Wide = unsigned __int128;

// n (3 n^2)^(n-1), or nullopt past 2^127.
std::optional<Wide> certifying_threshold(unsigned n) {
  const Wide limit = Wide{1} << 127;
  const Wide base = Wide{3} * n * n;
  Wide value = n;
  for (unsigned i = 1; i < n; ++i) {
    if (value > limit / base) return std::nullopt;
    value *= base;
  }
  return value;
}

bool certifies(unsigned n, unsigned long long m) {
  if (n < 2) return false;
  const auto threshold = certifying_threshold(n);
  return threshold && Wide{m} > *threshold;
}

}  // namespace

BoundReport multiset_lower_bound(unsigned n, unsigned long long m) {
  if (n < 1) throw Error(ErrorCategory::Parameter, "multiset bound needs n >= 1");
  if (m < 2) throw Error(ErrorCategory::Parameter, "multiset bound needs m >= 2");
  const double nn = n;
  const double log_m = std::log2(static_cast<double>(m));
  BoundReport r;
  r.n = n;
  r.m = m;
  r.bound = (nn * log_m - std::log2(nn)) / (std::log2(3 * nn * nn) + log_m);
  r.ceiling = slack_ceiling(r.bound);
  r.certifying = certifies(n, m);
  return r;
}

unsigned long long min_m_certifying(unsigned n) {
  if (n < 2) throw Error(ErrorCategory::Parameter, "min_m_certifying needs n >= 2");
  const auto threshold = certifying_threshold(n);
  if (!threshold || *threshold >= Wide{~0ULL}) {
    throw Error(ErrorCategory::Range, "certifying m for n = " + std::to_string(n) + " exceeds 64 bits");
  }
  unsigned long long hi = 2;
  while (!certifies(n, hi)) {
    if (hi > (~0ULL) / 2) throw Error(ErrorCategory::Range, "doubling overflowed");
    hi *= 2;
  }
  unsigned long long lo = hi / 2;  // not certifying (or below 2)
  if (lo < 2) return hi;
  while (hi - lo > 1) {
    const unsigned long long mid = lo + (hi - lo) / 2;
    (certifies(n, mid) ? hi : lo) = mid;
  }
  // bracketing guard: the answer certifies and its predecessor does not
  if (!multiset_lower_bound(n, hi).certifying || (hi > 2 && multiset_lower_bound(n, hi - 1).certifying)) {
    throw Error(ErrorCategory::Contract, "bisection failed to bracket the certifying threshold");
  }
  return hi;
}

nlohmann::json SignatureAudit::to_json() const {
  return {{"members_with_singletons", members_with_singletons},
          {"singleton_occurrences", singleton_occurrences},
          {"intervals", intervals},
          {"interval_limit", interval_limit},
          {"plus_elements", plus_elements},
          {"plus_elements_published", plus_elements_published},
          {"distinct_signatures", distinct_signatures},
          {"injective", injective},
          {"passed", passed()}};
}

SignatureAudit audit_signatures(unsigned n, unsigned m, const RealizerFamily& family) {
  const Poset poset = Poset::multiset_singleton(n, m);
  if (poset.id_bound() > 256) throw Error(ErrorCategory::Parameter, "signature audit limited to m^n <= 256");
  const auto report = verify_local_realizer(poset, family);
  if (!report.accepted) throw Error(ErrorCategory::Contract, "family is not a local realizer of " + poset.spec());

  std::size_t singles = 0;
  for (const auto id : poset.elements()) singles += poset.support_size(id) == 1;

  SignatureAudit audit;
  // intervals of consecutive non-singleton entries; single-support entries
  // and the separator after each member end the current run
  std::map<ElementId, std::vector<std::size_t>> signature;
  bool open = false;
  const auto close = [&] {
    if (open) ++audit.intervals;
    open = false;
  };
  for (const auto& member : family.members()) {
    const bool has_single = std::any_of(member.elements.begin(), member.elements.end(),
                                        [&](ElementId id) { return poset.support_size(id) == 1; });
    if (!has_single) continue;
    ++audit.members_with_singletons;
    for (const auto id : member.elements) {
      if (poset.support_size(id) == 1) {
        ++audit.singleton_occurrences;
        close();
      } else {
        open = true;
        signature[id].push_back(audit.intervals);
      }
    }
    close();
  }

  std::set<std::vector<std::size_t>> distinct;
  for (const auto id : poset.elements()) {
    if (poset.support_size(id) < 2) continue;
    ++audit.plus_elements;
    distinct.insert(signature[id]);
  }
  audit.distinct_signatures = distinct.size();
  audit.injective = audit.distinct_signatures == audit.plus_elements;
  audit.interval_limit = 2 * report.frequency * singles;
  audit.plus_elements_published = static_cast<std::size_t>(poset.id_bound()) - std::size_t{n} * (m - 1);
  return audit;
}

bool signature_audit(unsigned n, unsigned m, const RealizerFamily& family) {
  return audit_signatures(n, m, family).passed();
}

}  // namespace ldimkit
