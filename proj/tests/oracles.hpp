#pragma once

// Independent reference checks used by the test suites. None of these call
// into the verifier or the builders they are compared against.

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "ldimkit/poset.hpp"

namespace oracle {

using ldimkit::ElementId;
using Orders = std::vector<std::vector<ElementId>>;

inline long index_in_ple(ElementId element, const std::vector<ElementId>& ple) {
  for (std::size_t i = 0; i < ple.size(); ++i) {
    if (ple[i] == element) return static_cast<long>(i);
  }
  return -1;
}

// Straight transcription of the published quadratic check: for every ordered
// pair of distinct elements, scan every order with a linear search. The
// comparability test is supplied by the caller.
template <class Leq>
bool quadratic_local_realizer(const std::vector<ElementId>& ground, const Orders& orders, Leq leq) {
  for (const auto a : ground) {
    for (const auto b : ground) {
      if (a == b) continue;
      bool a_less_b = false;
      bool b_less_a = false;
      for (const auto& ple : orders) {
        const long ai = index_in_ple(a, ple);
        const long bi = index_in_ple(b, ple);
        if (ai < 0 || bi < 0) continue;
        if (ai == bi) return false;
        if (ai < bi) a_less_b = true;
        else b_less_a = true;
      }
      const bool le = leq(a, b);
      const bool ge = leq(b, a);
      if (le && (!a_less_b || b_less_a)) return false;
      if (!le && !ge && !(a_less_b && b_less_a)) return false;
      // comparable pair seen from the other side is handled when (b, a) is visited
    }
  }
  // duplicates inside one order are invisible to the pair scan above
  for (const auto& ple : orders) {
    for (std::size_t i = 0; i < ple.size(); ++i) {
      for (std::size_t j = i + 1; j < ple.size(); ++j) {
        if (ple[i] == ple[j]) return false;
      }
    }
  }
  if (ground.size() == 1) {
    for (const auto& ple : orders) {
      if (index_in_ple(ground[0], ple) >= 0) return true;
    }
    return false;
  }
  return true;
}

inline bool subset(ElementId a, ElementId b) { return (a | b) == b; }

inline Orders to_orders(const std::vector<ldimkit::PartialLinearExtension>& members) {
  Orders out;
  for (const auto& m : members) out.push_back(m.elements);
  return out;
}

// Largest independent set size by enumerating all vertex subsets.
inline std::size_t brute_independence_number(unsigned n, const std::vector<std::pair<unsigned, unsigned>>& edges) {
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    bool ok = true;
    for (const auto& [i, j] : edges) {
      if ((mask >> (i - 1) & 1) && (mask >> (j - 1) & 1)) ok = false;
    }
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
  }
  return best;
}

// Unbounded unsigned integer, little-endian 64-bit limbs. Only what the
// oracle below needs: multiplication by a machine word and comparison.
struct BigNat {
  std::vector<std::uint64_t> limbs{1};

  void mul(std::uint64_t factor) {
    unsigned __int128 carry = 0;
    for (auto& limb : limbs) {
      const unsigned __int128 v = static_cast<unsigned __int128>(limb) * factor + carry;
      limb = static_cast<std::uint64_t>(v);
      carry = v >> 64;
    }
    if (carry) limbs.push_back(static_cast<std::uint64_t>(carry));
    while (limbs.size() > 1 && limbs.back() == 0) limbs.pop_back();
  }

  friend bool operator>(const BigNat& a, const BigNat& b) {
    if (a.limbs.size() != b.limbs.size()) return a.limbs.size() > b.limbs.size();
    for (std::size_t i = a.limbs.size(); i-- > 0;) {
      if (a.limbs[i] != b.limbs[i]) return a.limbs[i] > b.limbs[i];
    }
    return false;
  }
};

// m^n > n (3 n^2 m)^(n-1), evaluated exactly (no logarithms, no simplification).
inline bool multiset_bound_exceeds(unsigned n, unsigned long long m) {
  BigNat lhs;
  for (unsigned i = 0; i < n; ++i) lhs.mul(m);
  BigNat rhs;
  rhs.mul(n);
  for (unsigned i = 1; i < n; ++i) {
    rhs.mul(3ULL * n * n);
    rhs.mul(m);
  }
  return lhs > rhs;
}

inline std::string solver_command() {
  const char* env = std::getenv("LDIMKIT_SAT_SOLVER");
  return env ? env : "";
}

}  // namespace oracle
