#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ldimkit {

// Integer code of a poset element.
//  - subsets of [n]: bit (i-1) is set iff i belongs to the set (13 <-> {1,3,4})
//  - multisets over [n] with multiplicities < m: digit (i-1) in base m is the
//    multiplicity of i
//  - chains and antichains: the plain index
//  - products: id(p, q) = id(p) + id_bound(P) * id(q)
using ElementId = std::uint64_t;

enum class PosetKind {
  Boolean,
  Singleton,
  Multiset,
  MultisetSingleton,
  Chain,
  Antichain,
  Product,
};

// A finite poset with an implicit comparability oracle. Immutable once built;
// copies share the factors of a product.
class Poset {
public:
  static Poset boolean(unsigned n);
  // Nonempty subsets of [n]; A < B iff |A| = 1 and A is a proper subset of B.
  static Poset singleton(unsigned n);
  static Poset multiset(unsigned n, unsigned m);
  // Nonempty multisets; A < B iff A has exactly one positive multiplicity,
  // B has at least two, and A is contained in B.
  static Poset multiset_singleton(unsigned n, unsigned m);
  static Poset chain(std::size_t k);
  static Poset antichain(std::size_t k);
  static Poset product(const Poset& p, const Poset& q);

  // Accepts `boolean:<n>`, `singleton:<n>`, `multiset:<n>:<m>`,
  // `multiset-singleton:<n>:<m>`, `chain:<k>`, `antichain:<k>` and
  // `product(<spec>,<spec>)`.
  static Poset parse(std::string_view spec);

  PosetKind kind() const noexcept { return kind_; }
  std::string spec() const;

  // Number of elements.
  std::size_t ground_size() const noexcept { return size_; }
  // Every valid id is strictly below this value.
  ElementId id_bound() const noexcept { return bound_; }
  bool contains(ElementId id) const noexcept;

  // Dense position of an element in [0, ground_size), ascending by id.
  std::size_t index_of(ElementId id) const;
  ElementId id_at(std::size_t index) const;
  std::vector<ElementId> elements() const;

  bool leq(ElementId a, ElementId b) const;
  bool less(ElementId a, ElementId b) const { return a != b && leq(a, b); }
  bool comparable(ElementId a, ElementId b) const { return leq(a, b) || leq(b, a); }

  // No range checks; callers guarantee both ids are elements.
  bool leq_unchecked(ElementId a, ElementId b) const noexcept;
  std::size_t index_unchecked(ElementId id) const noexcept;

  // Strictly monotone along the order: cardinality for subsets, total
  // multiplicity for multisets, id for chains and antichains, sum over
  // product factors.
  std::uint64_t rank_key(ElementId id) const;

  // Parameters of the lattice kinds (0 where not applicable).
  unsigned order() const noexcept { return n_; }
  unsigned radix() const noexcept { return m_; }

  const Poset& left() const;
  const Poset& right() const;

  // Multiset helpers for the Multiset and MultisetSingleton kinds.
  std::vector<unsigned> multiplicities(ElementId id) const;
  ElementId encode_multiplicities(std::span<const unsigned> multiplicities) const;
  // Number of positive multiplicities (cardinality for subsets).
  unsigned support_size(ElementId id) const;

private:
  Poset() = default;
  void check(ElementId id) const;

  PosetKind kind_ = PosetKind::Boolean;
  unsigned n_ = 0;
  unsigned m_ = 0;
  std::size_t size_ = 0;
  ElementId bound_ = 0;
  std::shared_ptr<const Poset> left_;
  std::shared_ptr<const Poset> right_;
};

// An ordered sequence of distinct elements; it is a partial linear extension
// of P when it never places b before a for a <_P b.
struct PartialLinearExtension {
  std::vector<ElementId> elements;

  std::size_t size() const noexcept { return elements.size(); }
  bool empty() const noexcept { return elements.empty(); }
  bool operator==(const PartialLinearExtension&) const = default;
};

// Total order on the whole ground set sorted by (rank_key, id).
PartialLinearExtension canonical_linear_extension(const Poset& poset);

}  // namespace ldimkit
