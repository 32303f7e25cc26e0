#ifndef SETPAT_WITNESS_HPP
#define SETPAT_WITNESS_HPP

#include <compare>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace setpat {

/// Strictly increasing 1-based positions i_1 < ... < i_k certifying a
/// subsequence occurrence (permutations and RGF words).
class OccurrenceIndices {
public:
  OccurrenceIndices() = default;
  /// Throws DomainError unless strictly increasing and positive.
  explicit OccurrenceIndices(std::vector<int> indices);

  int size() const { return static_cast<int>(indices_.size()); }
  std::span<const int> indices() const { return indices_; }

  friend bool operator==(const OccurrenceIndices &,
                         const OccurrenceIndices &) = default;
  friend auto operator<=>(const OccurrenceIndices &,
                          const OccurrenceIndices &) = default;

private:
  std::vector<int> indices_;
};

/// A subset T of [n], kept ascending, certifying sigma cap T = sigma'.
class SubsetWitness {
public:
  SubsetWitness() = default;
  /// Accepts any order; throws DomainError on repeats or non-positive values.
  explicit SubsetWitness(std::vector<int> elements);

  int size() const { return static_cast<int>(elements_.size()); }
  std::span<const int> elements() const { return elements_; }

  friend bool operator==(const SubsetWitness &, const SubsetWitness &) = default;
  friend auto operator<=>(const SubsetWitness &,
                          const SubsetWitness &) = default;

private:
  std::vector<int> elements_;
};

/// Outcome of a containment query. A present witness implies `contains`.
template <class Witness> struct MatchResult {
  bool contains = false;
  std::optional<Witness> witness;

  static MatchResult found(Witness w) { return {true, std::move(w)}; }
  static MatchResult absent() { return {}; }

  friend bool operator==(const MatchResult &, const MatchResult &) = default;
};

using PermMatch = MatchResult<OccurrenceIndices>;
using PartitionMatch = MatchResult<SubsetWitness>;
using RgfMatch = MatchResult<OccurrenceIndices>;

} // namespace setpat

#endif
