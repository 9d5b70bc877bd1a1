#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ldimkit/realizer.hpp"

namespace ldimkit {

// [n] cut into consecutive blocks of width d; only the last block may be
// shorter. Blocks are stored as bitmasks over [n].
struct BlockPartition {
  unsigned n = 0;
  unsigned width = 0;
  unsigned count = 0;
  std::vector<ElementId> blocks;

  static BlockPartition make(unsigned n, unsigned width);
  // Index of the block containing item x (1-based item, 0-based block).
  unsigned block_of(unsigned x) const { return (x - 1) / width; }
};

// For block i and a nonempty J inside it: every set A with |A| > 1 whose
// trace on the block is exactly block \ J (ascending id), followed by the
// singletons {x}, x in J (ascending id).
struct BlockOrder {
  unsigned block = 0;
  ElementId missing = 0;  // J as a bitmask
  PartialLinearExtension order;
};

struct SingletonRealizerPlan {
  BlockPartition partition;
  // Singletons ascending, then the larger sets in canonical order.
  PartialLinearExtension low;
  // Singletons descending, then the larger sets in reversed canonical order.
  PartialLinearExtension low_reversed;
  std::vector<BlockOrder> block_orders;

  // [low, low_reversed, block orders by (block, J)].
  RealizerFamily family() const;
};

// max(1, ceil(log2 n - log2 log2 n)); requires n >= 2.
unsigned default_block_width(unsigned n);

SingletonRealizerPlan plan_singleton_realizer(unsigned n, std::optional<unsigned> width = std::nullopt);
RealizerFamily build_singleton_realizer(unsigned n, std::optional<unsigned> width = std::nullopt);

struct SingletonFrequencyBound {
  std::uint64_t block_bound = 0;    // 2^d + 1, covers the singletons
  std::uint64_t big_set_bound = 0;  // ceil(n/d) + 2, covers sets of size > 1
  std::uint64_t max() const { return block_bound > big_set_bound ? block_bound : big_set_bound; }
};

SingletonFrequencyBound singleton_frequency_bound(unsigned n, unsigned width);

}  // namespace ldimkit
