#include "setpat/reduction.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "setpat/errors.hpp"
#include "setpat/standardize.hpp"

namespace setpat {

namespace {

// Partner word of a matchstick partition: word[i-1] = partner(i) - n.
std::optional<std::vector<int>> partner_word(const SetPartition &sigma) {
  const int size = sigma.ground_size();
  if (size % 2 != 0)
    return std::nullopt;
  const int n = size / 2;
  if (sigma.block_count() != n)
    return std::nullopt;
  std::vector<int> word(n, 0);
  for (const Block &b : sigma.blocks()) {
    if (b.size() != 2 || !(b[0] <= n && b[1] > n))
      return std::nullopt;
    word[b[0] - 1] = b[1] - n;
  }
  return word;
}

} // namespace

MatchstickPartition::MatchstickPartition(SetPartition partition)
    : partition_(std::move(partition)) {
  if (!is_matchstick(partition_))
    throw DomainError("not a matchstick partition");
}

Permutation MatchstickPartition::permutation() const {
  return Permutation(*partner_word(partition_));
}

MatchstickPartition reduce_perm(const Permutation &pi) {
  const int n = pi.size();
  std::vector<Block> blocks;
  blocks.reserve(n);
  for (int i = 1; i <= n; ++i)
    blocks.push_back({i, pi.at(i) + n});
  return MatchstickPartition(SetPartition(2 * n, std::move(blocks)));
}

bool is_matchstick(const SetPartition &sigma) {
  const auto word = partner_word(sigma);
  if (!word)
    return false;
  std::vector<bool> seen(word->size() + 1, false);
  for (int v : *word) {
    if (v < 1 || v > static_cast<int>(word->size()) || seen[v])
      return false;
    seen[v] = true;
  }
  return true;
}

Permutation perm_of_matchstick(const SetPartition &sigma) {
  return MatchstickPartition(sigma).permutation();
}

bool transport_facts_hold(const Permutation &pi,
                          const OccurrenceIndices &occurrence) {
  const auto idx = occurrence.indices();
  if (idx.empty())
    return true;
  if (!std::is_sorted(idx.begin(), idx.end()) ||
      std::adjacent_find(idx.begin(), idx.end()) != idx.end())
    return false;
  int min_value = pi.size() + 1;
  for (int i : idx)
    min_value = std::min(min_value, pi.at(i));
  return idx.back() < pi.size() + min_value;
}

SubsetWitness transport_occurrence(const Permutation &pi,
                                   const OccurrenceIndices &occurrence) {
  const int n = pi.size();
  std::vector<int> elements;
  elements.reserve(2 * occurrence.size());
  for (int i : occurrence.indices()) {
    if (i > n)
      throw DomainError("occurrence index " + std::to_string(i) +
                        " outside [1," + std::to_string(n) + "]");
    elements.push_back(i);
  }
  for (int i : occurrence.indices())
    elements.push_back(pi.at(i) + n);
#ifdef SETPAT_CHECK_PROOF_FACTS
  if (!transport_facts_hold(pi, occurrence))
    throw std::logic_error("transport facts violated");
#endif
  return SubsetWitness(std::move(elements));
}

OccurrenceIndices recover_occurrence(const Permutation &pi,
                                     const SubsetWitness &witness) {
  const int n = pi.size();
  const auto t = witness.elements();
  if (!t.empty() && t.back() > 2 * n)
    throw InvalidWitness("element " + std::to_string(t.back()) + " outside [1," +
                         std::to_string(2 * n) + "]");

  const MatchstickPartition image = reduce_perm(pi);
  if (!is_matchstick(restrict(image.partition(), t)))
    throw InvalidWitness("restriction of s(pi) to the witness is not a "
                         "matchstick partition");

  std::vector<int> s1;
  std::vector<int> s2;
  for (int x : t)
    (x <= n ? s1 : s2).push_back(x);
  std::vector<int> expected;
  for (int i : s1)
    expected.push_back(pi.at(i) + n);
  std::sort(expected.begin(), expected.end());
  if (expected != s2)
    throw InvalidWitness("witness is not a union of blocks {i, pi_i + n}");
  return OccurrenceIndices(std::move(s1));
}

} // namespace setpat
