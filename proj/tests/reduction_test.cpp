#include <doctest.h>

#include <set>

#include "reference.hpp"
#include "setpat/errors.hpp"
#include "setpat/matchers.hpp"
#include "setpat/oracle.hpp"
#include "setpat/reduction.hpp"
#include "setpat/standardize.hpp"

using namespace setpat;

namespace {

std::vector<int> v(std::initializer_list<int> xs) { return xs; }

std::vector<int> elements(const SubsetWitness &w) {
  return {w.elements().begin(), w.elements().end()};
}
std::vector<int> indices(const OccurrenceIndices &o) {
  return {o.indices().begin(), o.indices().end()};
}

} // namespace

TEST_SUITE("reduction") {

TEST_CASE("reduce_perm examples") {
  CHECK(reduce_perm(Permutation({2, 3, 1})).partition() ==
        SetPartition({{1, 5}, {2, 6}, {3, 4}}));
  CHECK(reduce_perm(Permutation({1})).partition() == SetPartition({{1, 2}}));
  CHECK(reduce_perm(Permutation({2, 1})).partition() == SetPartition({{1, 4}, {2, 3}}));
  CHECK(reduce_perm(Permutation()).partition() == SetPartition());
  CHECK(reduce_perm(Permutation({2, 3, 1})).half() == 3);
}

TEST_CASE("is_matchstick examples") {
  CHECK(is_matchstick(SetPartition({{1, 5}, {2, 6}, {3, 4}})));
  CHECK_FALSE(is_matchstick(SetPartition({{1, 2}, {3, 4}})));
  CHECK_FALSE(is_matchstick(SetPartition({{1, 2, 3}})));
  CHECK_FALSE(is_matchstick(SetPartition::singletons(2)));
  CHECK_FALSE(is_matchstick(SetPartition({{1, 3}, {2}})));
  CHECK(is_matchstick(SetPartition()));
  CHECK_THROWS_AS(MatchstickPartition(SetPartition({{1, 2}, {3, 4}})), DomainError);
}

TEST_CASE("perm_of_matchstick examples") {
  CHECK(perm_of_matchstick(SetPartition({{1, 5}, {2, 6}, {3, 4}})) ==
        Permutation({2, 3, 1}));
  CHECK(perm_of_matchstick(SetPartition({{1, 2}})) == Permutation({1}));
  CHECK(perm_of_matchstick(SetPartition({{1, 4}, {2, 3}})) == Permutation({2, 1}));
  CHECK_THROWS_AS(perm_of_matchstick(SetPartition({{1, 2}, {3, 4}})), DomainError);
}

TEST_CASE("transport_occurrence examples") {
  CHECK(elements(transport_occurrence(Permutation({1, 3, 2}),
                                      OccurrenceIndices({2, 3}))) == v({2, 3, 5, 6}));
  const Permutation tau({3, 1, 2});
  CHECK(elements(transport_occurrence(tau, OccurrenceIndices({1, 2, 3}))) ==
        v({1, 2, 3, 4, 5, 6}));
  CHECK(elements(transport_occurrence(Permutation({2, 3, 1}),
                                      OccurrenceIndices({1, 3}))) == v({1, 3, 4, 5}));
  CHECK_THROWS_AS(transport_occurrence(tau, OccurrenceIndices({2, 4})), DomainError);
  CHECK(transport_occurrence(tau, OccurrenceIndices()).size() == 0);
}

TEST_CASE("recover_occurrence examples") {
  const Permutation p132({1, 3, 2});
  const SubsetWitness t({2, 3, 5, 6});
  // Re-check the witness by the reference restriction first.
  CHECK(reference::restrict({{1, 4}, {2, 6}, {3, 5}}, {2, 3, 5, 6}) ==
        reference::Blocks{{1, 4}, {2, 3}});
  CHECK(indices(recover_occurrence(p132, t)) == v({2, 3}));

  const Permutation tau({4, 1, 3, 2});
  CHECK(indices(recover_occurrence(tau, SubsetWitness({1, 2, 3, 4, 5, 6, 7, 8}))) ==
        v({1, 2, 3, 4}));

  const Permutation p231({2, 3, 1});
  CHECK(reference::restrict({{1, 5}, {2, 6}, {3, 4}}, {1, 3, 4, 5}) ==
        reference::Blocks{{1, 4}, {2, 3}});
  CHECK(indices(recover_occurrence(p231, SubsetWitness({1, 3, 4, 5}))) == v({1, 3}));
}

TEST_CASE("recover_occurrence rejects non-witnesses") {
  const Permutation p132({1, 3, 2});
  // {2,5}: 2 is paired with 6, not 5.
  CHECK_THROWS_AS(recover_occurrence(p132, SubsetWitness({2, 5})), InvalidWitness);
  CHECK_THROWS_AS(recover_occurrence(p132, SubsetWitness({1, 2, 4})), InvalidWitness);
  CHECK_THROWS_AS(recover_occurrence(p132, SubsetWitness({1, 7})), InvalidWitness);
  CHECK_THROWS_AS(recover_occurrence(p132, SubsetWitness({4, 5})), InvalidWitness);
}

TEST_CASE("s(pi) is a partition of [2n] into n pairs, n <= 8") {
  for (int n = 0; n <= 8; ++n)
    for_each_permutation(n, [&](const Permutation &pi) {
      const SetPartition &s = reduce_perm(pi).partition();
      CHECK(s.ground_size() == 2 * n);
      CHECK(s.block_count() == n);
      CHECK(s.max_block_size() == (n == 0 ? 0 : 2));
      return true;
    });
}

TEST_CASE("perm_of_matchstick inverts reduce_perm, n <= 6") {
  int total = 0;
  for (int n = 1; n <= 6; ++n)
    for_each_permutation(n, [&](const Permutation &pi) {
      CHECK(perm_of_matchstick(reduce_perm(pi).partition()) == pi);
      ++total;
      return true;
    });
  CHECK(total == 873);
}

TEST_CASE("matchstick partitions are exactly the images of s") {
  std::set<SetPartition> images;
  for (int n = 0; n <= 4; ++n)
    for (const auto &pi : enumerate_permutations(n))
      images.insert(reduce_perm(pi).partition());
  for (int m = 0; m <= 8; ++m)
    for (const auto &sigma : enumerate_partitions(m))
      CHECK(is_matchstick(sigma) == (images.count(sigma) == 1));
}

TEST_CASE("containment is preserved by s, n <= 6, k <= 4") {
  for (int n = 1; n <= 6; ++n)
    for (const auto &pi : enumerate_permutations(n)) {
      const auto s_pi = reduce_perm(pi).partition();
      for (int k = 1; k <= 4; ++k)
        for (const auto &tau : enumerate_permutations(k))
          CHECK(perm_contains(pi, tau).contains ==
                partition_contains(s_pi, reduce_perm(tau).partition()).contains);
    }
}

TEST_CASE("transport and recover are inverse bijections, n <= 5, k <= 3") {
  for (int n = 1; n <= 5; ++n)
    for (const auto &pi : enumerate_permutations(n)) {
      const auto s_pi = reduce_perm(pi).partition();
      for (int k = 1; k <= 3; ++k)
        for (const auto &tau : enumerate_permutations(k)) {
          const auto s_tau = reduce_perm(tau).partition();
          const auto occurrences = brute_perm_occurrences(pi, tau);
          const auto witnesses = brute_partition_witnesses(s_pi, s_tau);

          std::set<SubsetWitness> transported;
          for (const auto &occ : occurrences) {
            CHECK(transport_facts_hold(pi, occ));
            const auto t = transport_occurrence(pi, occ);
            CHECK(restrict(s_pi, t.elements()) == s_tau);
            CHECK(recover_occurrence(pi, t) == occ);
            transported.insert(t);
          }
          CHECK(transported.size() == occurrences.size());
          CHECK(transported == std::set<SubsetWitness>(witnesses.begin(), witnesses.end()));

          for (const auto &t : witnesses)
            CHECK(transport_occurrence(pi, recover_occurrence(pi, t)) == t);

          CHECK(perm_count(pi, tau) == partition_count(s_pi, s_tau));
        }
    }
}

TEST_CASE("transport facts on the worked examples") {
  const Permutation pi({2, 3, 1});
  CHECK(transport_facts_hold(pi, OccurrenceIndices({1, 3})));
  CHECK(transport_facts_hold(pi, OccurrenceIndices()));
}

} // TEST_SUITE
