#ifndef SETPAT_SET_PARTITION_HPP
#define SETPAT_SET_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace setpat {

using Block = std::vector<int>;

/// A set partition of [n] in canonical form.
///
/// Blocks are ordered by their minimum element and each block is sorted
/// ascending, so two partitions are equal exactly when their canonical forms
/// are. The ordering operators compare the canonical block lists
/// lexicographically; this is the order used by the partition enumerator.
class SetPartition {
public:
  SetPartition() = default;

  /// Builds the partition of [n] whose blocks are `blocks`, in any order.
  /// The ground size n is the total number of elements. Throws DomainError
  /// if a block is empty, an element repeats, or the union is not [n].
  explicit SetPartition(std::vector<Block> blocks);

  /// As above, but also checks that the union is exactly [ground_size].
  SetPartition(int ground_size, std::vector<Block> blocks);

  /// {{1},{2},...,{n}}
  static SetPartition singletons(int n);
  /// {{1,2,...,n}}; the empty partition when n = 0.
  static SetPartition single_block(int n);

  int ground_size() const { return static_cast<int>(block_of_.size()); }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  bool empty() const { return blocks_.empty(); }

  const std::vector<Block> &blocks() const { return blocks_; }
  const Block &block(int index) const { return blocks_[index]; }

  /// 0-based index (in canonical order) of the block holding `element`.
  int block_index(int element) const;

  /// Size of the largest block, 0 for the empty partition.
  int max_block_size() const;

  friend bool operator==(const SetPartition &a, const SetPartition &b) {
    return a.blocks_ == b.blocks_;
  }
  friend auto operator<=>(const SetPartition &a, const SetPartition &b) {
    return a.blocks_ <=> b.blocks_;
  }

private:
  void canonicalize(int expected_size);

  std::vector<Block> blocks_;
  std::vector<int> block_of_;
};

} // namespace setpat

template <> struct std::hash<setpat::SetPartition> {
  std::size_t operator()(const setpat::SetPartition &p) const noexcept;
};

#endif
