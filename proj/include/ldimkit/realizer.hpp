#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "ldimkit/poset.hpp"

namespace ldimkit {

struct Occurrence {
  std::size_t ple;
  std::size_t position;
};

// A list of partial linear extensions together with an index from each
// element to the members (and positions) it occurs in.
class RealizerFamily {
public:
  RealizerFamily() = default;
  explicit RealizerFamily(std::vector<PartialLinearExtension> members);

  const std::vector<PartialLinearExtension>& members() const noexcept { return members_; }
  const PartialLinearExtension& operator[](std::size_t i) const { return members_.at(i); }

  // Number of members.
  std::size_t size() const noexcept { return members_.size(); }
  // Largest number of members containing one element; 0 for an empty family.
  std::size_t frequency() const noexcept { return frequency_; }

  std::span<const Occurrence> occurrences(ElementId id) const;
  std::size_t occurrence_count(ElementId id) const;

  bool operator==(const RealizerFamily& other) const { return members_ == other.members_; }

private:
  std::vector<PartialLinearExtension> members_;
  std::unordered_map<ElementId, std::vector<Occurrence>> index_;
  std::size_t frequency_ = 0;
};

inline std::size_t frequency(const RealizerFamily& family) { return family.frequency(); }
inline std::size_t size(const RealizerFamily& family) { return family.size(); }

enum class ViolationKind {
  DuplicateInPle,
  OrderViolationInPle,
  PairNeverCoOccurs,
  ComparablePairReversed,
  ComparablePairNeverWitnessed,
  IncomparablePairOneSided,
};
inline constexpr std::size_t kViolationKindCount = 6;

std::string_view violation_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  ElementId a;
  ElementId b;
  std::optional<std::size_t> ple;

  auto operator<=>(const Violation&) const = default;
};

struct VerificationReport {
  bool accepted = true;
  std::size_t frequency = 0;
  std::size_t size = 0;
  // At most `cap` entries per kind, sorted by (kind, a, b, ple).
  std::vector<Violation> violations;
  // Uncapped number of violations found per kind.
  std::array<std::size_t, kViolationKindCount> totals{};

  std::size_t total(ViolationKind kind) const { return totals[static_cast<std::size_t>(kind)]; }
  bool has(ViolationKind kind) const { return total(kind) > 0; }
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  std::size_t violation_cap = 100;
  // 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

// Checks that `order` has no repeated element and never places b before a
// when a <_P b.
VerificationReport validate_ple(const Poset& poset, const PartialLinearExtension& order,
                                const VerifyOptions& options = {});

// Checks the local-realizer property: every member is a partial linear
// extension, every pair of elements co-occurs in some member, and every
// incomparable pair appears in both orders across the family.
VerificationReport verify_local_realizer(const Poset& poset, const RealizerFamily& family,
                                         const VerifyOptions& options = {});

// Local realizer of P x Q from local realizers of the factors. Each member of
// `fp` is expanded to all (x, y), x in the member and y in Q, ordered by the
// position of x and then by the canonical linear extension of Q; members of
// `fq` are expanded symmetrically. Element ids follow Poset::product.
RealizerFamily lift_product(const Poset& p, const Poset& q, const RealizerFamily& fp, const RealizerFamily& fq);

// The n coordinate linear extensions of the Boolean lattice: order i puts the
// sets avoiding i below the sets containing i, each block in canonical order.
RealizerFamily build_standard_realizer(unsigned n);

// Realizer of the Boolean lattice of order n = 7a + 4b + c (a maximal, then b)
// assembled from a copies of the B7 table, b copies of the B4 table and a
// standard realizer of order c. Frequency is at most ceil(5n/7).
RealizerFamily build_bn_realizer(unsigned n);

struct BnDecomposition {
  unsigned sevens = 0;
  unsigned fours = 0;
  unsigned rest = 0;
};
BnDecomposition decompose_bn(unsigned n);

}  // namespace ldimkit
