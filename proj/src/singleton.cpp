#include "ldimkit/singleton.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "ldimkit/error.hpp"

namespace ldimkit {

namespace {

void check_parameters(unsigned n, unsigned width) {
  if (n < 2) throw Error(ErrorCategory::Parameter, "singleton construction needs n >= 2");
  if (n > 30) throw Error(ErrorCategory::Parameter, "singleton construction limited to n <= 30");
  if (width < 1 || width > n) throw Error(ErrorCategory::Parameter, "block width must lie in [1, n]");
}

}  // namespace

BlockPartition BlockPartition::make(unsigned n, unsigned width) {
  check_parameters(n, width);
  BlockPartition p;
  p.n = n;
  p.width = width;
  p.count = (n + width - 1) / width;
  for (unsigned i = 0; i < p.count; ++i) {
    ElementId mask = 0;
    for (unsigned j = 1; j <= width; ++j) {
      const unsigned x = width * i + j;
      if (x <= n) mask |= ElementId{1} << (x - 1);
    }
    p.blocks.push_back(mask);
  }
  return p;
}

unsigned default_block_width(unsigned n) {
  if (n < 2) throw Error(ErrorCategory::Parameter, "default block width needs n >= 2");
  const double log_n = std::log2(static_cast<double>(n));
  const double value = log_n - std::log2(log_n);
  // values that are integers up to rounding (n = 2, 4, 16, ...) stay put
  const auto width = static_cast<long>(std::ceil(value - 1e-9));
  return static_cast<unsigned>(std::max(1L, width));
}

SingletonRealizerPlan plan_singleton_realizer(unsigned n, std::optional<unsigned> width) {
  const unsigned d = width ? *width : default_block_width(n);
  SingletonRealizerPlan plan;
  plan.partition = BlockPartition::make(n, d);

  const ElementId bound = ElementId{1} << n;
  std::vector<ElementId> singletons;
  std::vector<ElementId> big;
  for (unsigned x = 0; x < n; ++x) singletons.push_back(ElementId{1} << x);
  for (ElementId id = 1; id < bound; ++id) {
    if (std::popcount(id) > 1) big.push_back(id);
  }
  std::stable_sort(big.begin(), big.end(), [](ElementId a, ElementId b) { return std::popcount(a) < std::popcount(b); });

  plan.low.elements = singletons;
  plan.low.elements.insert(plan.low.elements.end(), big.begin(), big.end());
  plan.low_reversed.elements.assign(singletons.rbegin(), singletons.rend());
  plan.low_reversed.elements.insert(plan.low_reversed.elements.end(), big.rbegin(), big.rend());

  for (unsigned i = 0; i < plan.partition.count; ++i) {
    const ElementId block = plan.partition.blocks[i];
    // nonempty submasks of the block, ascending
    for (ElementId missing = 1; missing <= block; ++missing) {
      if ((missing & ~block) != 0) continue;
      BlockOrder entry{i, missing, {}};
      for (ElementId id = 1; id < bound; ++id) {
        if (std::popcount(id) > 1 && (block & ~id) == missing) entry.order.elements.push_back(id);
      }
      for (unsigned x = 0; x < n; ++x) {
        const ElementId s = ElementId{1} << x;
        if (missing & s) entry.order.elements.push_back(s);
      }
      plan.block_orders.push_back(std::move(entry));
    }
  }
  return plan;
}

RealizerFamily SingletonRealizerPlan::family() const {
  std::vector<PartialLinearExtension> members{low, low_reversed};
  for (const auto& entry : block_orders) members.push_back(entry.order);
  return RealizerFamily(std::move(members));
}

RealizerFamily build_singleton_realizer(unsigned n, std::optional<unsigned> width) {
  return plan_singleton_realizer(n, width).family();
}

SingletonFrequencyBound singleton_frequency_bound(unsigned n, unsigned width) {
  check_parameters(n, width);
  return {(std::uint64_t{1} << width) + 1, (n + width - 1) / width + std::uint64_t{2}};
}

}  // namespace ldimkit
