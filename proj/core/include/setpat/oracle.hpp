#ifndef SETPAT_ORACLE_HPP
#define SETPAT_ORACLE_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "setpat/permutation.hpp"
#include "setpat/rgf.hpp"
#include "setpat/set_partition.hpp"
#include "setpat/witness.hpp"

namespace setpat {

// Enumerators and brute-force references. The brute_* functions transcribe
// the definitions literally (every k-subset, restrict, compare) and never
// call the backtracking engines, so they can be used to judge them. The
// verify_* harnesses and census run the engines against them.

/// Visits the n! permutations of [n] in lexicographic order. The visitor
/// returns false to stop early.
void for_each_permutation(int n,
                          const std::function<bool(const Permutation &)> &visit);
std::vector<Permutation> enumerate_permutations(int n);

/// Visits the Bell(n) set partitions of [n] in increasing canonical order
/// (lexicographic on the canonical block lists).
void for_each_partition(int n,
                        const std::function<bool(const SetPartition &)> &visit);
std::vector<SetPartition> enumerate_partitions(int n);

/// The RGF words of length n, lexicographic.
std::vector<RgfWord> enumerate_rgfs(int n);

/// Bell number by the Bell triangle. Throws DomainError past n = 25.
std::uint64_t bell_number(int n);

/// Visits every k-subset of [n] as an ascending list, lexicographic.
void for_each_subset(int n, int k,
                     const std::function<bool(std::span<const int>)> &visit);

bool brute_perm_contains(const Permutation &text, const Permutation &pattern);
std::vector<OccurrenceIndices> brute_perm_occurrences(const Permutation &text,
                                                      const Permutation &pattern);

bool brute_partition_contains(const SetPartition &text,
                              const SetPartition &pattern);
std::uint64_t brute_partition_count(const SetPartition &text,
                                    const SetPartition &pattern);
/// All witnesses T, lexicographic.
std::vector<SubsetWitness> brute_partition_witnesses(const SetPartition &text,
                                                     const SetPartition &pattern);

bool brute_rgf_contains(const RgfWord &text, const RgfWord &pattern);
std::uint64_t brute_rgf_count(const RgfWord &text, const RgfWord &pattern);

struct RunOptions {
  /// Worker threads; values below 1 are treated as 1.
  int jobs = 1;
  /// Bypass the safety bound on n.
  bool force = false;
};

struct Mismatch {
  std::string check; // "containment", "count", "separation", ...
  std::string text;
  std::string pattern;
  std::string engine;
  std::string oracle;

  friend bool operator==(const Mismatch &, const Mismatch &) = default;
  friend auto operator<=>(const Mismatch &, const Mismatch &) = default;
};

struct VerificationReport {
  std::string gate;
  int max_n = 0;
  int max_k = 0;
  std::uint64_t pairs_checked = 0;
  /// Sorted, so the report does not depend on the thread schedule.
  std::vector<Mismatch> mismatches;
  std::chrono::milliseconds elapsed{0};

  bool passed() const { return mismatches.empty(); }
};

inline constexpr int kVerifySafetyBound = 6;
inline constexpr int kCensusSafetyBound = 10;
/// Counting checks run only up to these bounds.
inline constexpr int kParsimonyMaxN = 5;
inline constexpr int kParsimonyMaxK = 3;

/// For every pi of [n], 1 <= n <= max_n, and tau of [k], 1 <= k <= max_k:
/// perm_contains(pi, tau) against brute-force containment of s(tau) in
/// s(pi), and for n <= 5, k <= 3 also perm_count against the brute-force
/// witness count. Throws BoundExceeded if max_n > 6 without `force`.
VerificationReport verify_reduction(int max_n, int max_k,
                                    const RunOptions &options = {});

/// RGF containment of rgf_of(s(tau)) in rgf_of(s(pi)) against brute-force
/// partition containment over the same ranges, plus the separation pair
/// 1,2,2,1 / 1,1,2 on which the two notions must differ.
VerificationReport verify_rgf_coincidence(int max_n, int max_k,
                                          const RunOptions &options = {});

enum class Notion { Partition, Rgf };

struct CensusRow {
  int n = 0;
  SetPartition pattern;
  Notion notion = Notion::Partition;
  std::uint64_t avoiders = 0;
  std::uint64_t containers = 0;
};

/// Counts the partitions of [n] (or RGF words of length n, matched against
/// rgf_of(pattern)) that avoid and contain `pattern`. Throws BoundExceeded
/// if n > 10 without `force`.
CensusRow census(int n, const SetPartition &pattern, Notion notion,
                 const RunOptions &options = {});

} // namespace setpat

#endif
