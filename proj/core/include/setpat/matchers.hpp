#ifndef SETPAT_MATCHERS_HPP
#define SETPAT_MATCHERS_HPP

#include <cstdint>
#include <span>
#include <stop_token>

#include "setpat/permutation.hpp"
#include "setpat/rgf.hpp"
#include "setpat/set_partition.hpp"
#include "setpat/witness.hpp"

namespace setpat {

// Backtracking containment engines. Every `contains` query reports the
// lexicographically least witness; every `count` query explores the same
// search tree exhaustively and throws Cancelled once `stop` is requested.
// A pattern longer than the text is simply not contained.

/// True iff a and b have the same length and compare identically
/// (<, =, >) at every pair of positions.
bool same_relative_order(std::span<const int> a, std::span<const int> b);

PermMatch perm_contains(const Permutation &text, const Permutation &pattern);
std::uint64_t perm_count(const Permutation &text, const Permutation &pattern,
                         std::stop_token stop = {});

/// Searches for T subset of [n] with text cap T = pattern.
PartitionMatch partition_contains(const SetPartition &text,
                                  const SetPartition &pattern);
std::uint64_t partition_count(const SetPartition &text,
                              const SetPartition &pattern,
                              std::stop_token stop = {});

/// RGF containment: some subsequence of `text` value-standardizes to
/// `pattern`. The witness lists the chosen positions.
RgfMatch rgf_contains(const RgfWord &text, const RgfWord &pattern);
std::uint64_t rgf_count(const RgfWord &text, const RgfWord &pattern,
                        std::stop_token stop = {});

} // namespace setpat

#endif
