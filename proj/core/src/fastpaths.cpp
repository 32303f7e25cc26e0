#include "setpat/fastpaths.hpp"

#include <string>

#include "setpat/errors.hpp"
#include "setpat/matchers.hpp"

namespace setpat {

namespace {

void check_size(int k) {
  if (k < 0)
    throw DomainError("negative pattern size " + std::to_string(k));
}

} // namespace

PatternShape classify_pattern(const SetPartition &pattern) {
  const int k = pattern.ground_size();
  if (pattern.block_count() == k)
    return {ShapeTag::AllSingletons, k};
  if (pattern.block_count() == 1)
    return {ShapeTag::SingleBlock, k};
  return {ShapeTag::General, k};
}

bool contains_all_singletons(const SetPartition &sigma, int k) {
  check_size(k);
  return sigma.block_count() >= k;
}

bool contains_single_block(const SetPartition &sigma, int k) {
  check_size(k);
  return k == 0 || sigma.max_block_size() >= k;
}

PartitionMatch dispatch_contains(const SetPartition &text,
                                 const SetPartition &pattern) {
  const PatternShape shape = classify_pattern(pattern);
  const int k = shape.size;
  switch (shape.tag) {
  case ShapeTag::AllSingletons: {
    if (!contains_all_singletons(text, k))
      return PartitionMatch::absent();
    // The k smallest block minima.
    std::vector<int> t;
    t.reserve(k);
    for (int b = 0; b < k; ++b)
      t.push_back(text.block(b).front());
    return PartitionMatch::found(SubsetWitness(std::move(t)));
  }
  case ShapeTag::SingleBlock: {
    for (const Block &b : text.blocks())
      if (static_cast<int>(b.size()) >= k)
        return PartitionMatch::found(
            SubsetWitness(std::vector<int>(b.begin(), b.begin() + k)));
    return PartitionMatch::absent();
  }
  case ShapeTag::General:
    break;
  }
  return partition_contains(text, pattern);
}

} // namespace setpat
