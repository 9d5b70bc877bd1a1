#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ldimkit/realizer.hpp"

namespace ldimkit {

// Graph on [n] (vertices 1..n) with an edge for the two last singletons of
// each member of a family over singleton(n).
struct ConflictGraph {
  unsigned n = 0;
  std::set<std::pair<unsigned, unsigned>> edges;  // (i, j) with i < j

  bool adjacent(unsigned i, unsigned j) const;
  std::size_t degree(unsigned v) const;
};

ConflictGraph conflict_graph(const RealizerFamily& family, unsigned n);

bool is_independent(const ConflictGraph& graph, const std::vector<unsigned>& vertices);

// Maximum independent set for n <= 20 (branch and bound), greedy min-degree
// maximal independent set beyond. Sorted ascending.
std::vector<unsigned> independent_set(const ConflictGraph& graph);

struct BoundReport {
  unsigned n = 0;
  std::optional<unsigned long long> m;
  std::optional<double> c;
  std::optional<std::size_t> size;
  double bound = 0;
  long long ceiling = 0;
  bool certifying = false;
  // Independence number guaranteed by Turan (turan_independence_floor only).
  std::optional<double> independence;

  nlohmann::json to_json() const;
};

// Short realizers of singleton(n): with c = size / n, the complement of the
// conflict graph forces an independent set of
//   l = n^2 / ((2c + 1) n + 2) + 1
// vertices, hence frequency >= l > n / (2 (c + 1)). `bound` is the latter
// floor; `certifying` records l > floor.
BoundReport turan_independence_floor(unsigned n, std::size_t realizer_size);

// Occurrences of [n] \ I in the family are at least |I|. Requires a verified
// realizer of singleton(n) and an independent I with |I| <= n - 2.
bool check_ind_freq_claim(unsigned n, const RealizerFamily& family, const std::vector<unsigned>& independent);

// (n log m - log n) / log(3 n^2 m), base 2. Certifying iff the value exceeds
// n - 1 (never for n = 1); decided exactly as m > n (3 n^2)^(n-1).
BoundReport multiset_lower_bound(unsigned n, unsigned long long m);

// Least m >= 2 whose bound certifies; doubling then bisection.
unsigned long long min_m_certifying(unsigned n);

struct SignatureAudit {
  std::size_t members_with_singletons = 0;  // t
  std::size_t singleton_occurrences = 0;    // occurrences of single-support elements in those members
  std::size_t intervals = 0;                // k
  std::size_t interval_limit = 0;           // 2 * frequency * |S|
  std::size_t plus_elements = 0;            // m^n - n(m-1) - 1
  std::size_t plus_elements_published = 0;  // m^n - n(m-1), as printed in the original count
  std::size_t distinct_signatures = 0;
  bool injective = false;

  bool interval_bound_holds() const { return intervals <= interval_limit; }
  bool passed() const { return injective && interval_bound_holds(); }
  nlohmann::json to_json() const;
};

// Recomputes the interval signatures of the elements with at least two
// positive multiplicities from a verified realizer of
// multiset-singleton(n, m) (m^n <= 256).
SignatureAudit audit_signatures(unsigned n, unsigned m, const RealizerFamily& family);
bool signature_audit(unsigned n, unsigned m, const RealizerFamily& family);

}  // namespace ldimkit
