#ifndef SETPAT_FASTPATHS_HPP
#define SETPAT_FASTPATHS_HPP

#include "setpat/set_partition.hpp"
#include "setpat/witness.hpp"

namespace setpat {

enum class ShapeTag {
  AllSingletons, // {{1},{2},...,{k}}: the pattern avoids {{1,2}}
  SingleBlock,   // {{1,...,k}}: the pattern avoids {{1},{2}}
  General,
};

struct PatternShape {
  ShapeTag tag = ShapeTag::General;
  int size = 0;

  friend bool operator==(const PatternShape &, const PatternShape &) = default;
};

/// {{1}} and the empty pattern classify as AllSingletons.
PatternShape classify_pattern(const SetPartition &pattern);

/// sigma contains {{1},...,{k}} iff it has at least k blocks. O(1).
bool contains_all_singletons(const SetPartition &sigma, int k);

/// sigma contains {{1,...,k}} iff some block has at least k elements. O(n).
bool contains_single_block(const SetPartition &sigma, int k);

/// Same answer and witness as partition_contains, answered in linear time
/// whenever the pattern has one of the two special shapes.
PartitionMatch dispatch_contains(const SetPartition &text,
                                 const SetPartition &pattern);

} // namespace setpat

#endif
