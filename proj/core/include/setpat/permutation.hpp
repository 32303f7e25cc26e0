#ifndef SETPAT_PERMUTATION_HPP
#define SETPAT_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace setpat {

/// A permutation pi_1 ... pi_n of [n], stored in one-line notation.
///
/// Positions and values are 1-based. The empty permutation (n = 0) is legal.
class Permutation {
public:
  Permutation() = default;

  /// Throws DomainError unless `values` contains every integer of [n]
  /// exactly once, where n is its length.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }

  /// Value at 1-based position i.
  int at(int i) const;

  std::span<const int> values() const { return values_; }

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  std::vector<int> values_;
};

} // namespace setpat

template <> struct std::hash<setpat::Permutation> {
  std::size_t operator()(const setpat::Permutation &p) const noexcept;
};

#endif
