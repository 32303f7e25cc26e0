#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <stop_token>

#include "reference.hpp"
#include "setpat/errors.hpp"
#include "setpat/matchers.hpp"
#include "setpat/oracle.hpp"
#include "setpat/rgf.hpp"
#include "setpat/standardize.hpp"

using namespace setpat;

namespace {

std::vector<int> v(std::initializer_list<int> xs) { return xs; }

std::vector<int> indices(const PermMatch &m) {
  REQUIRE(m.witness);
  return {m.witness->indices().begin(), m.witness->indices().end()};
}

std::vector<int> elements(const PartitionMatch &m) {
  REQUIRE(m.witness);
  return {m.witness->elements().begin(), m.witness->elements().end()};
}

std::vector<SetPartition> partitions_up_to(int max_n, int min_n = 0) {
  std::vector<SetPartition> out;
  for (int n = min_n; n <= max_n; ++n)
    for (auto &p : enumerate_partitions(n))
      out.push_back(std::move(p));
  return out;
}

std::vector<Permutation> permutations_up_to(int max_n, int min_n = 0) {
  std::vector<Permutation> out;
  for (int n = min_n; n <= max_n; ++n)
    for (auto &p : enumerate_permutations(n))
      out.push_back(std::move(p));
  return out;
}

std::vector<RgfWord> rgfs_up_to(int max_n) {
  std::vector<RgfWord> out;
  for (int n = 0; n <= max_n; ++n)
    for (auto &w : enumerate_rgfs(n))
      out.push_back(std::move(w));
  return out;
}

std::vector<int> values(const Permutation &p) {
  return {p.values().begin(), p.values().end()};
}

// Is there an injection from pattern blocks to text blocks that never
// decreases the block size? Tries every assignment.
bool size_injection_exists(const SetPartition &text, const SetPartition &pattern) {
  if (pattern.block_count() > text.block_count())
    return false;
  std::vector<int> order(text.block_count());
  std::iota(order.begin(), order.end(), 0);
  do {
    bool ok = true;
    for (int b = 0; b < pattern.block_count() && ok; ++b)
      ok = pattern.block(b).size() <= text.block(order[b]).size();
    if (ok)
      return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

} // namespace

TEST_SUITE("matchers") {

TEST_CASE("the reference transcription reproduces the frozen example values") {
  CHECK(reference::word_occurrences({1, 3, 2}, {2, 1}) ==
        std::vector<std::vector<int>>{{2, 3}});
  CHECK(reference::word_occurrences({1, 2, 3}, {2, 1}).empty());
  CHECK(reference::word_occurrences({1, 2, 3}, {1, 2}).size() == 3);
  CHECK(reference::word_occurrences({2, 3, 1}, {2, 1}).size() == 2);
  CHECK(reference::partition_witnesses({{1, 3}, {2, 4}}, 4, {{1, 2}}, 2) ==
        std::vector<std::vector<int>>{{1, 3}, {2, 4}});
  CHECK(reference::partition_witnesses({{1, 4}, {2, 6}, {3, 5}}, 6,
                                       {{1, 4}, {2, 3}}, 4) ==
        std::vector<std::vector<int>>{{2, 3, 5, 6}});
  CHECK(reference::word_occurrences({1, 3, 2}, {2, 1}).size() == 1);
  CHECK(reference::word_occurrences({1, 2, 1, 2}, {1, 1}) ==
        std::vector<std::vector<int>>{{1, 3}, {2, 4}});
  CHECK(reference::word_occurrences({1, 2, 2, 1}, {1, 1, 2}).empty());
  CHECK(reference::word_occurrences({1, 1, 1}, {1, 1}).size() == 3);
}

TEST_CASE("perm_contains examples") {
  const auto m = perm_contains(Permutation({1, 3, 2}), Permutation({2, 1}));
  CHECK(m.contains);
  CHECK(indices(m) == v({2, 3}));

  const Permutation tau({3, 1, 4, 2});
  CHECK(indices(perm_contains(tau, tau)) == v({1, 2, 3, 4}));

  const auto none = perm_contains(Permutation({1, 2, 3}), Permutation({2, 1}));
  CHECK_FALSE(none.contains);
  CHECK_FALSE(none.witness);

  CHECK_FALSE(perm_contains(Permutation({1, 2}), Permutation({1, 2, 3})).contains);
  CHECK(indices(perm_contains(Permutation({2, 1}), Permutation())).empty());
}

TEST_CASE("perm_count examples") {
  CHECK(perm_count(Permutation({1, 2, 3}), Permutation({1, 2})) == 3);
  CHECK(perm_count(Permutation({2, 3, 1}), Permutation({2, 1})) == 2);
  CHECK(perm_count(Permutation({2, 3, 1}), Permutation()) == 1);
  CHECK(perm_count(Permutation(), Permutation()) == 1);
  CHECK(perm_count(Permutation({1}), Permutation({1, 2})) == 0);
}

TEST_CASE("partition_contains examples") {
  const SetPartition sigma({{1, 3}, {2, 4}});
  const auto m = partition_contains(sigma, SetPartition({{1, 2}}));
  CHECK(m.contains);
  CHECK(elements(m) == v({1, 3}));

  CHECK_FALSE(partition_contains(SetPartition::singletons(5), SetPartition({{1, 2}}))
                  .contains);

  const SetPartition s132({{1, 4}, {2, 6}, {3, 5}});
  const auto r = partition_contains(s132, SetPartition({{1, 4}, {2, 3}}));
  CHECK(r.contains);
  CHECK(elements(r) == v({2, 3, 5, 6}));

  CHECK(elements(partition_contains(sigma, SetPartition())).empty());
  CHECK_FALSE(partition_contains(sigma, SetPartition::singletons(5)).contains);
}

TEST_CASE("partition_count examples") {
  const SetPartition sigma({{1, 3}, {2, 4}});
  CHECK(partition_count(sigma, SetPartition({{1, 2}})) == 2);
  CHECK(partition_count(sigma, sigma) == 1);
  // 132 holds 21 once, at (2,3), so s(132) holds s(21) once.
  CHECK(partition_count(SetPartition({{1, 4}, {2, 6}, {3, 5}}),
                        SetPartition({{1, 4}, {2, 3}})) == 1);
  CHECK(perm_count(Permutation({1, 3, 2}), Permutation({2, 1})) == 1);
  CHECK(partition_count(sigma, SetPartition()) == 1);
}

TEST_CASE("rgf_contains and rgf_count examples") {
  const auto m = rgf_contains(RgfWord({1, 2, 1, 2}), RgfWord({1, 1}));
  CHECK(m.contains);
  CHECK(indices(m) == v({1, 3}));

  CHECK_FALSE(rgf_contains(RgfWord({1, 2, 2, 1}), RgfWord({1, 1, 2})).contains);
  CHECK(partition_contains(partition_of_rgf(RgfWord({1, 2, 2, 1})),
                           partition_of_rgf(RgfWord({1, 1, 2})))
            .contains);

  const RgfWord w({1, 2, 1, 3, 2});
  CHECK(indices(rgf_contains(w, w)) == v({1, 2, 3, 4, 5}));

  CHECK(rgf_count(RgfWord({1, 2, 1, 2}), RgfWord({1, 1})) == 2);
  CHECK(rgf_count(RgfWord({1, 1, 1}), RgfWord({1, 1})) == 3);
  CHECK(rgf_count(w, RgfWord()) == 1);
}

TEST_CASE("same_relative_order") {
  CHECK(same_relative_order(v({5, 9, 7}), v({1, 3, 2})));
  CHECK(same_relative_order(v({4, 4, 1}), v({2, 2, 1})));
  CHECK_FALSE(same_relative_order(v({4, 4, 1}), v({2, 3, 1})));
  CHECK_FALSE(same_relative_order(v({1}), v({1, 2})));
}

TEST_CASE("reported witnesses re-verify") {
  const auto parts = partitions_up_to(5);
  for (const auto &text : parts)
    for (const auto &pattern : parts) {
      const auto m = partition_contains(text, pattern);
      if (m.contains)
        CHECK(restrict(text, m.witness->elements()) == pattern);
    }

  const auto perms = permutations_up_to(5);
  for (const auto &text : perms)
    for (const auto &pattern : perms) {
      const auto m = perm_contains(text, pattern);
      if (!m.contains)
        continue;
      std::vector<int> sub;
      for (int i : m.witness->indices())
        sub.push_back(text.at(i));
      CHECK(same_relative_order(sub, pattern.values()));
    }

  const auto words = rgfs_up_to(5);
  for (const auto &text : words)
    for (const auto &pattern : words) {
      const auto m = rgf_contains(text, pattern);
      if (!m.contains)
        continue;
      std::vector<int> sub;
      for (int i : m.witness->indices())
        sub.push_back(text.at(i));
      CHECK(value_standardize(sub) ==
            std::vector<int>(pattern.letters().begin(), pattern.letters().end()));
    }
}

TEST_CASE("containment is reflexive and transitive, n <= 5") {
  auto check_order = [](const auto &items, auto contains) {
    const std::size_t m = items.size();
    std::vector<std::vector<char>> rel(m, std::vector<char>(m));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        rel[a][b] = contains(items[a], items[b]);
    for (std::size_t a = 0; a < m; ++a) {
      CHECK(rel[a][a]);
      for (std::size_t b = 0; b < m; ++b) {
        if (!rel[a][b])
          continue;
        for (std::size_t c = 0; c < m; ++c)
          if (rel[b][c])
            CHECK(rel[a][c]);
      }
    }
  };
  check_order(partitions_up_to(5), [](const auto &a, const auto &b) {
    return partition_contains(a, b).contains;
  });
  check_order(permutations_up_to(5), [](const auto &a, const auto &b) {
    return perm_contains(a, b).contains;
  });
  check_order(rgfs_up_to(5), [](const auto &a, const auto &b) {
    return rgf_contains(a, b).contains;
  });
}

TEST_CASE("containment implies a size-preserving block injection, n <= 5") {
  const auto parts = partitions_up_to(5);
  for (const auto &text : parts)
    for (const auto &pattern : parts)
      if (partition_contains(text, pattern).contains)
        CHECK(size_injection_exists(text, pattern));
}

TEST_CASE("contains agrees with count >= 1, n <= 5") {
  const auto parts = partitions_up_to(5);
  for (const auto &text : parts)
    for (const auto &pattern : parts)
      CHECK(partition_contains(text, pattern).contains ==
            (partition_count(text, pattern) >= 1));
  const auto perms = permutations_up_to(5);
  for (const auto &text : perms)
    for (const auto &pattern : perms)
      CHECK(perm_contains(text, pattern).contains == (perm_count(text, pattern) >= 1));
  const auto words = rgfs_up_to(5);
  for (const auto &text : words)
    for (const auto &pattern : words)
      CHECK(rgf_contains(text, pattern).contains == (rgf_count(text, pattern) >= 1));
}

TEST_CASE("RGF containment implies partition containment, n <= 5") {
  const auto parts = partitions_up_to(5);
  int strict = 0;
  for (const auto &text : parts)
    for (const auto &pattern : parts) {
      const bool by_word = rgf_contains(rgf_of(text), rgf_of(pattern)).contains;
      const bool by_partition = partition_contains(text, pattern).contains;
      if (by_word)
        CHECK(by_partition);
      strict += by_partition && !by_word;
    }
  CHECK(strict > 0);
}

TEST_CASE("partition engine agrees with subset enumeration") {
  const auto parts = partitions_up_to(6);
  for (const auto &text : parts)
    for (const auto &pattern : parts) {
      const auto m = partition_contains(text, pattern);
      const auto all = brute_partition_witnesses(text, pattern);
      REQUIRE(m.contains == !all.empty());
      if (m.contains)
        CHECK(*m.witness == all.front());
      if (text.ground_size() <= 5)
        CHECK(partition_count(text, pattern) == all.size());
    }
}

TEST_CASE("permutation and RGF engines agree with subset enumeration") {
  const auto texts = permutations_up_to(6);
  const auto patterns = permutations_up_to(4);
  for (const auto &text : texts)
    for (const auto &pattern : patterns) {
      const auto all = brute_perm_occurrences(text, pattern);
      const auto m = perm_contains(text, pattern);
      REQUIRE(m.contains == !all.empty());
      if (m.contains)
        CHECK(*m.witness == all.front());
      CHECK(perm_count(text, pattern) == all.size());
    }

  const auto words = rgfs_up_to(5);
  for (const auto &text : words)
    for (const auto &pattern : words) {
      CHECK(rgf_contains(text, pattern).contains == brute_rgf_contains(text, pattern));
      CHECK(rgf_count(text, pattern) == brute_rgf_count(text, pattern));
    }
}

TEST_CASE("counts observe a stop request") {
  std::stop_source source;
  source.request_stop();
  const Permutation text = Permutation::identity(40);
  CHECK_THROWS_AS(perm_count(text, Permutation({1, 2, 3, 4}), source.get_token()),
                  Cancelled);
  CHECK_THROWS_AS(partition_count(SetPartition::singletons(30),
                                  SetPartition::singletons(6), source.get_token()),
                  Cancelled);
  CHECK_THROWS_AS(rgf_count(rgf_of(SetPartition::single_block(40)),
                            RgfWord({1, 1, 1, 1}), source.get_token()),
                  Cancelled);
  // Without a request the same search runs to completion.
  CHECK(perm_count(Permutation::identity(12), Permutation({1, 2, 3})) == 220);
}

} // TEST_SUITE
