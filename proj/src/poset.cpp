#include "ldimkit/poset.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>

#include "ldimkit/error.hpp"

namespace ldimkit {

std::string_view category_name(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::Parameter: return "parameter";
    case ErrorCategory::Range: return "range";
    case ErrorCategory::Contract: return "contract";
    case ErrorCategory::Io: return "io";
    case ErrorCategory::Environment: return "environment";
    case ErrorCategory::Protocol: return "protocol";
    case ErrorCategory::Decode: return "decode";
    case ErrorCategory::BoundExceeded: return "bound-exceeded";
    case ErrorCategory::Parse: return "parse";
  }
  return "unknown";
}

namespace {

constexpr ElementId kMaxBound = ElementId{1} << 32;

[[noreturn]] void parameter_error(const std::string& what) {
  throw Error(ErrorCategory::Parameter, what);
}

ElementId checked_power(unsigned base, unsigned exponent) {
  ElementId value = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    value *= base;
    if (value > kMaxBound) parameter_error("poset too large: " + std::to_string(base) + "^" + std::to_string(exponent));
  }
  return value;
}

bool is_singleton_set(ElementId id) { return id != 0 && std::has_single_bit(id); }

unsigned digit_sum(ElementId id, unsigned n, unsigned m) {
  unsigned sum = 0;
  for (unsigned i = 0; i < n; ++i, id /= m) sum += static_cast<unsigned>(id % m);
  return sum;
}

unsigned positive_digits(ElementId id, unsigned n, unsigned m) {
  unsigned count = 0;
  for (unsigned i = 0; i < n; ++i, id /= m) count += (id % m) != 0;
  return count;
}

bool digits_leq(ElementId a, ElementId b, unsigned n, unsigned m) {
  for (unsigned i = 0; i < n; ++i, a /= m, b /= m) {
    if (a % m > b % m) return false;
  }
  return true;
}

}  // namespace

Poset Poset::boolean(unsigned n) {
  if (n == 0) parameter_error("boolean lattice needs n >= 1");
  Poset p;
  p.kind_ = PosetKind::Boolean;
  p.n_ = n;
  p.m_ = 2;
  p.bound_ = checked_power(2, n);
  p.size_ = p.bound_;
  return p;
}

Poset Poset::singleton(unsigned n) {
  if (n == 0) parameter_error("singleton poset needs n >= 1");
  Poset p;
  p.kind_ = PosetKind::Singleton;
  p.n_ = n;
  p.m_ = 2;
  p.bound_ = checked_power(2, n);
  p.size_ = p.bound_ - 1;
  return p;
}

Poset Poset::multiset(unsigned n, unsigned m) {
  if (n == 0) parameter_error("multiset lattice needs n >= 1");
  if (m < 2) parameter_error("multiset lattice needs m >= 2");
  Poset p;
  p.kind_ = PosetKind::Multiset;
  p.n_ = n;
  p.m_ = m;
  p.bound_ = checked_power(m, n);
  p.size_ = p.bound_;
  return p;
}

Poset Poset::multiset_singleton(unsigned n, unsigned m) {
  Poset p = multiset(n, m);
  p.kind_ = PosetKind::MultisetSingleton;
  p.size_ = p.bound_ - 1;
  return p;
}

Poset Poset::chain(std::size_t k) {
  if (k == 0) parameter_error("chain needs k >= 1");
  if (k > kMaxBound) parameter_error("chain too large");
  Poset p;
  p.kind_ = PosetKind::Chain;
  p.bound_ = k;
  p.size_ = k;
  return p;
}

Poset Poset::antichain(std::size_t k) {
  Poset p = chain(k);
  p.kind_ = PosetKind::Antichain;
  return p;
}

Poset Poset::product(const Poset& p, const Poset& q) {
  if (p.bound_ > kMaxBound / q.bound_) parameter_error("product too large");
  Poset r;
  r.kind_ = PosetKind::Product;
  r.bound_ = p.bound_ * q.bound_;
  r.size_ = p.size_ * q.size_;
  r.left_ = std::make_shared<const Poset>(p);
  r.right_ = std::make_shared<const Poset>(q);
  return r;
}

namespace {

unsigned parse_natural(std::string_view text, std::string_view spec) {
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCategory::Parse, "bad number '" + std::string(text) + "' in poset spec '" + std::string(spec) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

Poset Poset::parse(std::string_view spec) {
  const auto bad = [&] { return Error(ErrorCategory::Parse, "unrecognized poset spec '" + std::string(spec) + "'"); };

  if (spec.starts_with("product(") && spec.ends_with(")")) {
    const auto inner = spec.substr(8, spec.size() - 9);
    // split at the top-level comma
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (inner[i] == ',' && depth == 0) return product(parse(inner.substr(0, i)), parse(inner.substr(i + 1)));
    }
    throw bad();
  }

  const auto parts = split(spec, ':');
  const auto kind = parts.front();
  if (parts.size() == 2) {
    const unsigned value = parse_natural(parts[1], spec);
    if (kind == "boolean") return boolean(value);
    if (kind == "singleton") return singleton(value);
    if (kind == "chain") return chain(value);
    if (kind == "antichain") return antichain(value);
  } else if (parts.size() == 3) {
    const unsigned n = parse_natural(parts[1], spec);
    const unsigned m = parse_natural(parts[2], spec);
    if (kind == "multiset") return multiset(n, m);
    if (kind == "multiset-singleton") return multiset_singleton(n, m);
  }
  throw bad();
}

std::string Poset::spec() const {
  switch (kind_) {
    case PosetKind::Boolean: return "boolean:" + std::to_string(n_);
    case PosetKind::Singleton: return "singleton:" + std::to_string(n_);
    case PosetKind::Multiset: return "multiset:" + std::to_string(n_) + ":" + std::to_string(m_);
    case PosetKind::MultisetSingleton:
      return "multiset-singleton:" + std::to_string(n_) + ":" + std::to_string(m_);
    case PosetKind::Chain: return "chain:" + std::to_string(size_);
    case PosetKind::Antichain: return "antichain:" + std::to_string(size_);
    case PosetKind::Product: return "product(" + left_->spec() + "," + right_->spec() + ")";
  }
  return {};
}

bool Poset::contains(ElementId id) const noexcept {
  if (id >= bound_) return false;
  switch (kind_) {
    case PosetKind::Singleton:
    case PosetKind::MultisetSingleton: return id != 0;
    case PosetKind::Product: return left_->contains(id % left_->bound_) && right_->contains(id / left_->bound_);
    default: return true;
  }
}

void Poset::check(ElementId id) const {
  if (!contains(id)) {
    throw Error(ErrorCategory::Range, "element " + std::to_string(id) + " is not in " + spec());
  }
}

std::size_t Poset::index_unchecked(ElementId id) const noexcept {
  switch (kind_) {
    case PosetKind::Singleton:
    case PosetKind::MultisetSingleton: return static_cast<std::size_t>(id - 1);
    case PosetKind::Product:
      return left_->index_unchecked(id % left_->bound_) + left_->size_ * right_->index_unchecked(id / left_->bound_);
    default: return static_cast<std::size_t>(id);
  }
}

std::size_t Poset::index_of(ElementId id) const {
  check(id);
  return index_unchecked(id);
}

ElementId Poset::id_at(std::size_t index) const {
  if (index >= size_) throw Error(ErrorCategory::Range, "element index " + std::to_string(index) + " out of range");
  switch (kind_) {
    case PosetKind::Singleton:
    case PosetKind::MultisetSingleton: return index + 1;
    case PosetKind::Product:
      return left_->id_at(index % left_->size_) + left_->bound_ * right_->id_at(index / left_->size_);
    default: return index;
  }
}

std::vector<ElementId> Poset::elements() const {
  std::vector<ElementId> ids;
  ids.reserve(size_);
  for (ElementId id = 0; id < bound_; ++id) {
    if (contains(id)) ids.push_back(id);
  }
  return ids;
}

bool Poset::leq_unchecked(ElementId a, ElementId b) const noexcept {
  switch (kind_) {
    case PosetKind::Boolean: return (a & ~b) == 0;
    case PosetKind::Singleton: return a == b || (is_singleton_set(a) && (a & b) == a && !is_singleton_set(b));
    case PosetKind::Multiset: return digits_leq(a, b, n_, m_);
    case PosetKind::MultisetSingleton:
      return a == b || (positive_digits(a, n_, m_) == 1 && positive_digits(b, n_, m_) >= 2 && digits_leq(a, b, n_, m_));
    case PosetKind::Chain: return a <= b;
    case PosetKind::Antichain: return a == b;
    case PosetKind::Product: {
      const ElementId base = left_->bound_;
      return left_->leq_unchecked(a % base, b % base) && right_->leq_unchecked(a / base, b / base);
    }
  }
  return false;
}

bool Poset::leq(ElementId a, ElementId b) const {
  check(a);
  check(b);
  return leq_unchecked(a, b);
}

std::uint64_t Poset::rank_key(ElementId id) const {
  switch (kind_) {
    case PosetKind::Boolean:
    case PosetKind::Singleton: return static_cast<std::uint64_t>(std::popcount(id));
    case PosetKind::Multiset:
    case PosetKind::MultisetSingleton: return digit_sum(id, n_, m_);
    case PosetKind::Chain:
    case PosetKind::Antichain: return id;
    case PosetKind::Product: return left_->rank_key(id % left_->bound_) + right_->rank_key(id / left_->bound_);
  }
  return 0;
}

const Poset& Poset::left() const {
  if (!left_) throw Error(ErrorCategory::Contract, spec() + " is not a product");
  return *left_;
}

const Poset& Poset::right() const {
  if (!right_) throw Error(ErrorCategory::Contract, spec() + " is not a product");
  return *right_;
}

std::vector<unsigned> Poset::multiplicities(ElementId id) const {
  if (n_ == 0) throw Error(ErrorCategory::Contract, spec() + " has no multiplicity encoding");
  check(id);
  std::vector<unsigned> digits(n_);
  for (unsigned i = 0; i < n_; ++i, id /= m_) digits[i] = static_cast<unsigned>(id % m_);
  return digits;
}

ElementId Poset::encode_multiplicities(std::span<const unsigned> multiplicities) const {
  if (n_ == 0 || multiplicities.size() != n_) {
    throw Error(ErrorCategory::Contract, "multiplicity vector does not match " + spec());
  }
  ElementId id = 0;
  for (std::size_t i = multiplicities.size(); i-- > 0;) {
    if (multiplicities[i] >= m_) throw Error(ErrorCategory::Range, "multiplicity exceeds m - 1");
    id = id * m_ + multiplicities[i];
  }
  check(id);
  return id;
}

unsigned Poset::support_size(ElementId id) const {
  if (n_ == 0) throw Error(ErrorCategory::Contract, spec() + " has no multiplicity encoding");
  return positive_digits(id, n_, m_);
}

PartialLinearExtension canonical_linear_extension(const Poset& poset) {
  PartialLinearExtension order{poset.elements()};
  std::vector<std::pair<std::uint64_t, ElementId>> keyed;
  keyed.reserve(order.size());
  for (const auto id : order.elements) keyed.emplace_back(poset.rank_key(id), id);
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 0; i < keyed.size(); ++i) order.elements[i] = keyed[i].second;
  return order;
}

}  // namespace ldimkit
