#include "setpat/matchers.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "setpat/errors.hpp"

namespace setpat {

namespace {

constexpr unsigned kStopCheckInterval = 1u << 12;

int compare(int a, int b) { return (a > b) - (a < b); }

class StopPoller {
public:
  explicit StopPoller(std::stop_token stop) : stop_(std::move(stop)) {}

  void tick() {
    if (++ticks_ % kStopCheckInterval == 0 && stop_.stop_requested())
      throw Cancelled();
  }

private:
  std::stop_token stop_;
  unsigned ticks_ = 0;
};

// Chooses text positions for pattern entries left to right. A position is
// admissible when it compares with every earlier choice exactly as the
// pattern entries do, which is order isomorphism for permutations and
// value-rank standardization for words with repeated letters.
class SubsequenceSearch {
public:
  using Visitor = std::function<bool(std::span<const int>)>;

  SubsequenceSearch(std::span<const int> text, std::span<const int> pattern,
                    std::stop_token stop)
      : text_(text), pattern_(pattern), chosen_(pattern.size()),
        poller_(std::move(stop)) {}

  /// Visits admissible position sets (0-based) in lexicographic order until
  /// the visitor returns true. Returns whether it did.
  bool run(const Visitor &visit) { return extend(0, 0, visit); }

private:
  bool extend(int depth, int from, const Visitor &visit) {
    const int n = static_cast<int>(text_.size());
    const int k = static_cast<int>(pattern_.size());
    if (depth == k)
      return visit(chosen_);
    for (int p = from; p <= n - (k - depth); ++p) {
      poller_.tick();
      if (!admissible(depth, p))
        continue;
      chosen_[depth] = p;
      if (extend(depth + 1, p + 1, visit))
        return true;
    }
    return false;
  }

  bool admissible(int depth, int p) const {
    for (int j = 0; j < depth; ++j)
      if (compare(text_[p], text_[chosen_[j]]) !=
          compare(pattern_[depth], pattern_[j]))
        return false;
    return true;
  }

  std::span<const int> text_;
  std::span<const int> pattern_;
  std::vector<int> chosen_;
  StopPoller poller_;
};

OccurrenceIndices to_indices(std::span<const int> zero_based) {
  std::vector<int> out(zero_based.begin(), zero_based.end());
  for (int &i : out)
    ++i;
  return OccurrenceIndices(std::move(out));
}

MatchResult<OccurrenceIndices> first_subsequence(std::span<const int> text,
                                                 std::span<const int> pattern) {
  std::optional<OccurrenceIndices> found;
  SubsequenceSearch search(text, pattern, {});
  search.run([&](std::span<const int> chosen) {
    found = to_indices(chosen);
    return true;
  });
  if (!found)
    return MatchResult<OccurrenceIndices>::absent();
  return MatchResult<OccurrenceIndices>::found(std::move(*found));
}

std::uint64_t count_subsequences(std::span<const int> text,
                                 std::span<const int> pattern,
                                 std::stop_token stop) {
  std::uint64_t count = 0;
  SubsequenceSearch search(text, pattern, std::move(stop));
  search.run([&](std::span<const int>) {
    ++count;
    return false;
  });
  return count;
}

// Selects the elements t_1 < ... < t_k of T left to right. Element t_j must
// fall in the text block already paired with the pattern block of j, or open
// a fresh text block when j is the minimum of its pattern block. Pattern
// blocks therefore get paired in canonical order, injectively.
//
// Pruning after each choice:
//  - every paired pattern block still has room: its remaining elements fit
//    among the elements of its text block beyond the current position;
//  - the unpaired pattern blocks can be placed injectively into unused text
//    blocks without shrinking (greedy check on sorted sizes, which is exact
//    for threshold bipartite matching).
class PartitionSearch {
public:
  using Visitor = std::function<bool(std::span<const int>)>;

  PartitionSearch(const SetPartition &text, const SetPartition &pattern,
                  std::stop_token stop)
      : text_(text), n_(text.ground_size()), k_(pattern.ground_size()),
        pattern_block_(k_), pattern_is_first_(k_, false),
        pattern_remaining_(k_ + 1,
                           std::vector<int>(pattern.block_count(), 0)),
        pairing_(pattern.block_count(), -1),
        used_(text.block_count(), false), chosen_(k_),
        poller_(std::move(stop)) {
    for (int b = 0; b < pattern.block_count(); ++b) {
      pattern_is_first_[pattern.block(b).front() - 1] = true;
      for (int e : pattern.block(b))
        pattern_block_[e - 1] = b;
    }
    for (int j = k_ - 1; j >= 0; --j) {
      pattern_remaining_[j] = pattern_remaining_[j + 1];
      ++pattern_remaining_[j][pattern_block_[j]];
    }
  }

  bool run(const Visitor &visit) { return extend(0, 1, visit); }

private:
  // Elements of text block b strictly greater than `position`.
  int room_after(int b, int position) const {
    const Block &block = text_.block(b);
    return static_cast<int>(block.end() -
                            std::upper_bound(block.begin(), block.end(), position));
  }

  bool feasible(int depth, int position) {
    const auto &remaining = pattern_remaining_[depth + 1];
    needs_.clear();
    for (std::size_t b = 0; b < pairing_.size(); ++b) {
      if (pairing_[b] >= 0) {
        if (remaining[b] > room_after(pairing_[b], position))
          return false;
      } else {
        needs_.push_back(remaining[b]);
      }
    }
    if (needs_.empty())
      return true;
    room_.clear();
    for (int b = 0; b < text_.block_count(); ++b)
      if (!used_[b]) {
        const int r = room_after(b, position);
        if (r > 0)
          room_.push_back(r);
      }
    if (room_.size() < needs_.size())
      return false;
    std::sort(needs_.begin(), needs_.end(), std::greater<>());
    std::sort(room_.begin(), room_.end(), std::greater<>());
    for (std::size_t i = 0; i < needs_.size(); ++i)
      if (needs_[i] > room_[i])
        return false;
    return true;
  }

  bool extend(int depth, int from, const Visitor &visit) {
    if (depth == k_)
      return visit(chosen_);
    const int pb = pattern_block_[depth];
    for (int e = from; e <= n_ - (k_ - depth) + 1; ++e) {
      poller_.tick();
      const int tb = text_.block_index(e);
      const bool opens = pattern_is_first_[depth];
      if (opens ? used_[tb] : pairing_[pb] != tb)
        continue;
      if (opens) {
        pairing_[pb] = tb;
        used_[tb] = true;
      }
      chosen_[depth] = e;
      const bool stop = feasible(depth, e) && extend(depth + 1, e + 1, visit);
      if (opens) {
        pairing_[pb] = -1;
        used_[tb] = false;
      }
      if (stop)
        return true;
    }
    return false;
  }

  const SetPartition &text_;
  int n_;
  int k_;
  std::vector<int> pattern_block_;
  std::vector<bool> pattern_is_first_;
  // pattern_remaining_[j][b]: elements of pattern block b at positions >= j.
  std::vector<std::vector<int>> pattern_remaining_;
  std::vector<int> pairing_;
  std::vector<bool> used_;
  std::vector<int> chosen_;
  std::vector<int> needs_;
  std::vector<int> room_;
  StopPoller poller_;
};

} // namespace

bool same_relative_order(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size())
    return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (compare(a[i], a[j]) != compare(b[i], b[j]))
        return false;
  return true;
}

PermMatch perm_contains(const Permutation &text, const Permutation &pattern) {
  return first_subsequence(text.values(), pattern.values());
}

std::uint64_t perm_count(const Permutation &text, const Permutation &pattern,
                         std::stop_token stop) {
  return count_subsequences(text.values(), pattern.values(), std::move(stop));
}

PartitionMatch partition_contains(const SetPartition &text,
                                  const SetPartition &pattern) {
  std::optional<SubsetWitness> found;
  PartitionSearch search(text, pattern, {});
  search.run([&](std::span<const int> chosen) {
    found = SubsetWitness(std::vector<int>(chosen.begin(), chosen.end()));
    return true;
  });
  if (!found)
    return PartitionMatch::absent();
  return PartitionMatch::found(std::move(*found));
}

std::uint64_t partition_count(const SetPartition &text,
                              const SetPartition &pattern,
                              std::stop_token stop) {
  std::uint64_t count = 0;
  PartitionSearch search(text, pattern, std::move(stop));
  search.run([&](std::span<const int>) {
    ++count;
    return false;
  });
  return count;
}

RgfMatch rgf_contains(const RgfWord &text, const RgfWord &pattern) {
  return first_subsequence(text.letters(), pattern.letters());
}

std::uint64_t rgf_count(const RgfWord &text, const RgfWord &pattern,
                        std::stop_token stop) {
  return count_subsequences(text.letters(), pattern.letters(), std::move(stop));
}

} // namespace setpat
