#ifndef SETPAT_STANDARDIZE_HPP
#define SETPAT_STANDARDIZE_HPP

#include <span>
#include <vector>

#include "setpat/set_partition.hpp"

namespace setpat {

/// The order-preserving bijection st : T -> [#T] sending the i-th smallest
/// element of T to i.
class StandardizationMap {
public:
  StandardizationMap() = default;
  explicit StandardizationMap(std::vector<int> domain);

  int size() const { return static_cast<int>(domain_.size()); }

  /// Sorted ascending, duplicate free.
  std::span<const int> domain() const { return domain_; }

  bool contains(int x) const;

  /// Rank of x in T. Throws DomainError if x is not in T.
  int operator()(int x) const;

  /// Image st(U) of a subset U of T, ascending.
  std::vector<int> image(std::span<const int> subset) const;

private:
  std::vector<int> domain_;
};

/// Throws DomainError on a non-positive element. Duplicates are ignored.
StandardizationMap standardize(std::span<const int> elements);

/// sigma restricted to T: the partition of [#T] whose blocks are the
/// nonempty sets st(B cap T). T may be given in any order; repeats are
/// ignored. Throws DomainError if T is not a subset of [n].
SetPartition restrict(const SetPartition &sigma, std::span<const int> subset);

} // namespace setpat

#endif
