#ifndef SETPAT_RGF_HPP
#define SETPAT_RGF_HPP

#include <compare>
#include <span>
#include <vector>

#include "setpat/set_partition.hpp"

namespace setpat {

/// True iff w_1 = 1 and w_{i+1} <= 1 + max(w_1..w_i) (the empty word counts).
bool is_restricted_growth(std::span<const int> letters);

/// A restricted growth function word w_1 ... w_n.
class RgfWord {
public:
  RgfWord() = default;

  /// Throws FormatError if `letters` is not restricted growth.
  explicit RgfWord(std::vector<int> letters);

  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  /// Letter at 1-based position i.
  int at(int i) const { return letters_.at(i - 1); }

  std::span<const int> letters() const { return letters_; }

  /// Number of distinct letters, i.e. the number of blocks encoded.
  int max_letter() const;

  friend bool operator==(const RgfWord &, const RgfWord &) = default;
  friend auto operator<=>(const RgfWord &, const RgfWord &) = default;

private:
  std::vector<int> letters_;
};

/// w_i is the 1-based index of the block containing i, blocks numbered in
/// order of their minima.
RgfWord rgf_of(const SetPartition &sigma);

/// Inverse of rgf_of: block j is { i : w_i = j }.
SetPartition partition_of_rgf(const RgfWord &word);

/// Relabels letters by order of first occurrence. Always yields an RGF.
RgfWord flatten(std::span<const int> word);

/// Relabels letters by value rank (smallest distinct letter becomes 1).
/// The result need not be an RGF: 3,1,3 maps to 2,1,2.
std::vector<int> value_standardize(std::span<const int> word);

} // namespace setpat

#endif
