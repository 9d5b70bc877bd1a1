#include "ldimkit/realizer.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_set>

#include "ldimkit/error.hpp"
#include "ldimkit/orders_io.hpp"

namespace ldimkit {

RealizerFamily::RealizerFamily(std::vector<PartialLinearExtension> members) : members_(std::move(members)) {
  for (std::size_t m = 0; m < members_.size(); ++m) {
    const auto& elements = members_[m].elements;
    for (std::size_t pos = 0; pos < elements.size(); ++pos) index_[elements[pos]].push_back({m, pos});
  }
  for (const auto& [id, occurrences] : index_) {
    std::size_t distinct = 0;
    for (std::size_t i = 0; i < occurrences.size(); ++i) {
      if (i == 0 || occurrences[i].ple != occurrences[i - 1].ple) ++distinct;
    }
    frequency_ = std::max(frequency_, distinct);
  }
}

std::span<const Occurrence> RealizerFamily::occurrences(ElementId id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) return {};
  return it->second;
}

std::size_t RealizerFamily::occurrence_count(ElementId id) const {
  const auto occ = occurrences(id);
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < occ.size(); ++i) {
    if (i == 0 || occ[i].ple != occ[i - 1].ple) ++distinct;
  }
  return distinct;
}

std::string_view violation_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::DuplicateInPle: return "duplicate-in-ple";
    case ViolationKind::OrderViolationInPle: return "order-violation-in-ple";
    case ViolationKind::PairNeverCoOccurs: return "pair-never-co-occurs";
    case ViolationKind::ComparablePairReversed: return "comparable-pair-reversed";
    case ViolationKind::ComparablePairNeverWitnessed: return "comparable-pair-never-witnessed";
    case ViolationKind::IncomparablePairOneSided: return "incomparable-pair-one-sided";
  }
  return "unknown";
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& v : violations) {
    list.push_back({{"kind", violation_name(v.kind)},
                    {"a", v.a},
                    {"b", v.b},
                    {"ple", v.ple ? nlohmann::json(*v.ple) : nlohmann::json(nullptr)}});
  }
  nlohmann::json counts = nlohmann::json::object();
  for (std::size_t k = 0; k < kViolationKindCount; ++k) {
    if (totals[k]) counts[std::string(violation_name(static_cast<ViolationKind>(k)))] = totals[k];
  }
  return {{"accepted", accepted}, {"frequency", frequency}, {"size", size}, {"violations", list}, {"totals", counts}};
}

namespace {

// Keeps the first `cap` violations of each kind plus uncapped totals.
class ViolationSink {
public:
  explicit ViolationSink(std::size_t cap) : cap_(cap) {}

  void add(ViolationKind kind, ElementId a, ElementId b, std::optional<std::size_t> ple = std::nullopt) {
    const auto k = static_cast<std::size_t>(kind);
    if (totals_[k]++ < cap_) kept_[k].push_back({kind, a, b, ple});
  }

  void absorb(const ViolationSink& other) {
    for (std::size_t k = 0; k < kViolationKindCount; ++k) {
      totals_[k] += other.totals_[k];
      for (const auto& v : other.kept_[k]) {
        if (kept_[k].size() < cap_) kept_[k].push_back(v);
      }
    }
  }

  void finish(VerificationReport& report) const {
    report.totals = totals_;
    for (const auto& kept : kept_) report.violations.insert(report.violations.end(), kept.begin(), kept.end());
    std::sort(report.violations.begin(), report.violations.end());
    report.accepted = std::all_of(totals_.begin(), totals_.end(), [](std::size_t t) { return t == 0; });
  }

private:
  std::size_t cap_;
  std::array<std::size_t, kViolationKindCount> totals_{};
  std::array<std::vector<Violation>, kViolationKindCount> kept_;
};

void check_ids(const Poset& poset, const PartialLinearExtension& order) {
  for (const auto id : order.elements) {
    if (!poset.contains(id)) {
      throw Error(ErrorCategory::Range, "element " + std::to_string(id) + " is not in " + poset.spec());
    }
  }
}

// Row ranges [begin, end) of the upper-triangular pair loop with roughly equal
// pair counts. Fixed independently of the thread count so that capped
// violation lists are reproducible.
std::vector<std::size_t> pair_chunks(std::size_t n, std::size_t chunks) {
  std::vector<std::size_t> bounds{0};
  if (n < 2) {
    bounds.push_back(n);
    return bounds;
  }
  const std::size_t total = n * (n - 1) / 2;
  const std::size_t target = std::max<std::size_t>(1, total / chunks);
  std::size_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += n - 1 - i;
    if (acc >= target && i + 1 < n) {
      bounds.push_back(i + 1);
      acc = 0;
    }
  }
  bounds.push_back(n);
  return bounds;
}

}  // namespace

VerificationReport validate_ple(const Poset& poset, const PartialLinearExtension& order, const VerifyOptions& options) {
  check_ids(poset, order);
  ViolationSink sink(options.violation_cap);
  const auto& e = order.elements;

  std::unordered_set<ElementId> seen;
  for (const auto id : e) {
    if (!seen.insert(id).second) sink.add(ViolationKind::DuplicateInPle, id, id);
  }
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (e[i] != e[j] && poset.leq_unchecked(e[j], e[i])) sink.add(ViolationKind::OrderViolationInPle, e[j], e[i]);
    }
  }

  VerificationReport report;
  report.size = 1;
  report.frequency = e.empty() ? 0 : 1;
  sink.finish(report);
  return report;
}

VerificationReport verify_local_realizer(const Poset& poset, const RealizerFamily& family,
                                         const VerifyOptions& options) {
  for (const auto& member : family.members()) check_ids(poset, member);

  const std::size_t n = poset.ground_size();
  const std::vector<ElementId> ids = poset.elements();

  // Occurrences in compressed rows keyed by dense element index, ordered by
  // member index within each row.
  std::vector<std::size_t> offsets(n + 1, 0);
  for (const auto& member : family.members()) {
    for (const auto id : member.elements) ++offsets[poset.index_unchecked(id) + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  std::vector<Occurrence> entries(offsets[n]);
  {
    std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
    const auto& members = family.members();
    for (std::size_t m = 0; m < members.size(); ++m) {
      for (std::size_t pos = 0; pos < members[m].elements.size(); ++pos) {
        entries[fill[poset.index_unchecked(members[m].elements[pos])]++] = {m, pos};
      }
    }
  }

  ViolationSink sink(options.violation_cap);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t e = offsets[i] + 1; e < offsets[i + 1]; ++e) {
      if (entries[e].ple == entries[e - 1].ple) sink.add(ViolationKind::DuplicateInPle, ids[i], ids[i], entries[e].ple);
    }
  }
  if (n == 1 && offsets[1] == 0) sink.add(ViolationKind::PairNeverCoOccurs, ids[0], ids[0]);

  const auto bounds = pair_chunks(n, 64);
  const std::size_t chunk_count = bounds.size() - 1;
  std::vector<ViolationSink> chunk_sinks(chunk_count, ViolationSink(options.violation_cap));

  const auto run_chunk = [&](std::size_t c) {
    auto& out = chunk_sinks[c];
    for (std::size_t i = bounds[c]; i < bounds[c + 1]; ++i) {
      const ElementId a = ids[i];
      const std::size_t a_begin = offsets[i];
      const std::size_t a_end = offsets[i + 1];
      for (std::size_t j = i + 1; j < n; ++j) {
        const ElementId b = ids[j];
        bool co = false;
        bool a_first = false;
        bool b_first = false;
        std::size_t p = a_begin;
        std::size_t q = offsets[j];
        const std::size_t q_end = offsets[j + 1];
        while (p < a_end && q < q_end) {
          if (entries[p].ple < entries[q].ple) {
            ++p;
          } else if (entries[q].ple < entries[p].ple) {
            ++q;
          } else {
            co = true;
            (entries[p].position < entries[q].position ? a_first : b_first) = true;
            ++p;
            ++q;
          }
        }

        const bool a_le_b = poset.leq_unchecked(a, b);
        const bool b_le_a = !a_le_b && poset.leq_unchecked(b, a);
        if (!co) {
          if (a_le_b) out.add(ViolationKind::ComparablePairNeverWitnessed, a, b);
          else if (b_le_a) out.add(ViolationKind::ComparablePairNeverWitnessed, b, a);
          else out.add(ViolationKind::PairNeverCoOccurs, a, b);
          continue;
        }
        if ((a_le_b && b_first) || (b_le_a && a_first)) {
          const ElementId lo = a_le_b ? a : b;
          const ElementId hi = a_le_b ? b : a;
          out.add(ViolationKind::ComparablePairReversed, lo, hi);
          // rescan to name the offending members
          p = a_begin;
          q = offsets[j];
          while (p < a_end && q < q_end) {
            if (entries[p].ple < entries[q].ple) {
              ++p;
            } else if (entries[q].ple < entries[p].ple) {
              ++q;
            } else {
              const bool reversed = a_le_b ? entries[q].position < entries[p].position
                                           : entries[p].position < entries[q].position;
              if (reversed) out.add(ViolationKind::OrderViolationInPle, lo, hi, entries[p].ple);
              ++p;
              ++q;
            }
          }
        } else if (!a_le_b && !b_le_a && !(a_first && b_first)) {
          out.add(ViolationKind::IncomparablePairOneSided, a, b);
        }
      }
    }
  };

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, chunk_count));
  if (threads <= 1) {
    for (std::size_t c = 0; c < chunk_count; ++c) run_chunk(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t c = next++; c < chunk_count; c = next++) run_chunk(c);
      });
    }
  }
  for (const auto& chunk : chunk_sinks) sink.absorb(chunk);

  VerificationReport report;
  report.size = family.size();
  report.frequency = family.frequency();
  sink.finish(report);
  return report;
}

namespace {

RealizerFamily lift_unchecked(const Poset& p, const Poset& q, const RealizerFamily& fp, const RealizerFamily& fq) {
  const ElementId base = p.id_bound();
  const auto p_order = canonical_linear_extension(p).elements;
  const auto q_order = canonical_linear_extension(q).elements;

  std::vector<PartialLinearExtension> members;
  members.reserve(fp.size() + fq.size());
  for (const auto& member : fp.members()) {
    PartialLinearExtension lifted;
    lifted.elements.reserve(member.size() * q_order.size());
    for (const auto x : member.elements) {
      for (const auto y : q_order) lifted.elements.push_back(x + base * y);
    }
    members.push_back(std::move(lifted));
  }
  for (const auto& member : fq.members()) {
    PartialLinearExtension lifted;
    lifted.elements.reserve(member.size() * p_order.size());
    for (const auto y : member.elements) {
      for (const auto x : p_order) lifted.elements.push_back(x + base * y);
    }
    members.push_back(std::move(lifted));
  }
  return RealizerFamily(std::move(members));
}

}  // namespace

RealizerFamily lift_product(const Poset& p, const Poset& q, const RealizerFamily& fp, const RealizerFamily& fq) {
  if (!verify_local_realizer(p, fp).accepted) {
    throw Error(ErrorCategory::Contract, "first factor family is not a local realizer of " + p.spec());
  }
  if (!verify_local_realizer(q, fq).accepted) {
    throw Error(ErrorCategory::Contract, "second factor family is not a local realizer of " + q.spec());
  }
  return lift_unchecked(p, q, fp, fq);
}

RealizerFamily build_standard_realizer(unsigned n) {
  const Poset lattice = Poset::boolean(n);
  const auto canonical = canonical_linear_extension(lattice).elements;
  std::vector<PartialLinearExtension> members;
  for (unsigned i = 0; i < n; ++i) {
    const ElementId bit = ElementId{1} << i;
    PartialLinearExtension order;
    order.elements.reserve(canonical.size());
    for (const auto id : canonical) {
      if (!(id & bit)) order.elements.push_back(id);
    }
    for (const auto id : canonical) {
      if (id & bit) order.elements.push_back(id);
    }
    members.push_back(std::move(order));
  }
  return RealizerFamily(std::move(members));
}

BnDecomposition decompose_bn(unsigned n) {
  BnDecomposition d;
  d.sevens = n / 7;
  const unsigned rest = n % 7;
  d.fours = rest >= 4 ? 1 : 0;
  d.rest = rest - 4 * d.fours;
  return d;
}

RealizerFamily build_bn_realizer(unsigned n) {
  if (n == 0) throw Error(ErrorCategory::Parameter, "boolean lattice needs n >= 1");
  const auto parts = decompose_bn(n);

  // Products of Boolean lattices are Boolean lattices under bitmask
  // concatenation, so the accumulated factor is tracked as boolean(bits).
  unsigned bits = 0;
  RealizerFamily family;
  const auto append = [&](unsigned order, const RealizerFamily& block) {
    if (bits == 0) {
      family = block;
    } else {
      family = lift_unchecked(Poset::boolean(bits), Poset::boolean(order), family, block);
    }
    bits += order;
  };

  if (parts.sevens) {
    const auto b7 = published_table(PublishedTable::B7);
    for (unsigned i = 0; i < parts.sevens; ++i) append(7, b7);
  }
  if (parts.fours) append(4, published_table(PublishedTable::B4));
  if (parts.rest) append(parts.rest, build_standard_realizer(parts.rest));
  return family;
}

}  // namespace ldimkit
