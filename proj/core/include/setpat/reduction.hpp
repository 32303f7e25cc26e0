#ifndef SETPAT_REDUCTION_HPP
#define SETPAT_REDUCTION_HPP

#include <utility>

#include "setpat/permutation.hpp"
#include "setpat/set_partition.hpp"
#include "setpat/witness.hpp"

namespace setpat {

/// A partition of [2n] made of n two-element blocks {i, pi_i + n}, one per
/// position i of a permutation pi of [n].
class MatchstickPartition {
public:
  MatchstickPartition() = default;

  /// Throws DomainError unless `partition` is a matchstick partition.
  explicit MatchstickPartition(SetPartition partition);

  const SetPartition &partition() const & { return partition_; }
  SetPartition partition() && { return std::move(partition_); }

  /// n, half the ground size.
  int half() const { return partition_.ground_size() / 2; }

  /// The permutation whose image this is.
  Permutation permutation() const;

  friend bool operator==(const MatchstickPartition &,
                         const MatchstickPartition &) = default;

private:
  SetPartition partition_;
};

/// s(pi) = {{1, pi_1 + n}, ..., {n, pi_n + n}}.
MatchstickPartition reduce_perm(const Permutation &pi);

bool is_matchstick(const SetPartition &sigma);

/// Inverse of reduce_perm. Throws DomainError on non-matchstick input.
Permutation perm_of_matchstick(const SetPartition &sigma);

/// Sends an occurrence i_1 < ... < i_k in pi to
/// T = {i_1, ..., i_k, pi_{i_1} + n, ..., pi_{i_k} + n}, a witness for
/// s(tau) in s(pi). Throws DomainError if an index exceeds n.
SubsetWitness transport_occurrence(const Permutation &pi,
                                   const OccurrenceIndices &occurrence);

/// Splits a witness T = S1 u S2 and returns S1. Throws InvalidWitness if
/// s(pi) cap T is not a matchstick partition or T is not a union of whole
/// blocks of s(pi).
OccurrenceIndices recover_occurrence(const Permutation &pi,
                                     const SubsetWitness &witness);

/// The facts that make a transported set a witness: the indices increase,
/// and max(indices) < n + min(values at those indices).
bool transport_facts_hold(const Permutation &pi,
                          const OccurrenceIndices &occurrence);

} // namespace setpat

#endif
