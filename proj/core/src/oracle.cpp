#include "setpat/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>

#include "setpat/errors.hpp"
#include "setpat/fastpaths.hpp"
#include "setpat/matchers.hpp"
#include "setpat/reduction.hpp"
#include "setpat/standardize.hpp"
#include "setpat/text_format.hpp"

namespace setpat {

namespace {

void check_bound(int n, int bound, const RunOptions &options, const char *what) {
  if (n < 0)
    throw DomainError(std::string(what) + ": negative size");
  if (n > bound && !options.force)
    throw BoundExceeded(std::string(what) + ": n = " + std::to_string(n) +
                        " exceeds the safety bound " + std::to_string(bound) +
                        " (the search space grows like n! and Bell(n)); "
                        "pass force to run it anyway");
}

int worker_count(const RunOptions &options, std::size_t tasks) {
  const int jobs = std::max(options.jobs, 1);
  return static_cast<int>(std::min<std::size_t>(jobs, std::max<std::size_t>(tasks, 1)));
}

// Runs task(i, sink) for i in [0, count) over `workers` threads, each with
// its own sink, and merges the sinks in worker order.
template <class Sink, class Task>
std::vector<Sink> run_striped(std::size_t count, int workers, Task task) {
  std::vector<Sink> sinks(workers);
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i)
      task(i, sinks[0]);
    return sinks;
  }
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w)
      threads.emplace_back([&, w] {
        for (std::size_t i = w; i < count; i += workers)
          task(i, sinks[w]);
      });
  }
  return sinks;
}

std::vector<Mismatch> merge_sorted(std::vector<std::vector<Mismatch>> parts) {
  std::vector<Mismatch> all;
  for (auto &p : parts)
    all.insert(all.end(), std::make_move_iterator(p.begin()),
               std::make_move_iterator(p.end()));
  std::sort(all.begin(), all.end());
  return all;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::vector<Permutation> permutations_up_to(int max_n) {
  std::vector<Permutation> out;
  for (int n = 1; n <= max_n; ++n)
    for_each_permutation(n, [&](const Permutation &p) {
      out.push_back(p);
      return true;
    });
  return out;
}

// Ranks of the entries of a sequence of distinct values.
std::vector<int> ranks_of(std::vector<int> values) {
  std::vector<int> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  for (int &v : values)
    v = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                         sorted.begin()) + 1;
  return values;
}

template <class Visit>
void for_each_perm_occurrence(const Permutation &text, const Permutation &pattern,
                              Visit visit) {
  const std::vector<int> target(pattern.values().begin(), pattern.values().end());
  for_each_subset(text.size(), pattern.size(), [&](std::span<const int> positions) {
    std::vector<int> sub;
    for (int i : positions)
      sub.push_back(text.at(i));
    if (ranks_of(std::move(sub)) == target)
      return visit(positions);
    return true;
  });
}

template <class Visit>
void for_each_partition_witness(const SetPartition &text,
                                const SetPartition &pattern, Visit visit) {
  for_each_subset(text.ground_size(), pattern.ground_size(),
                  [&](std::span<const int> t) {
                    if (restrict(text, t) == pattern)
                      return visit(t);
                    return true;
                  });
}

template <class Visit>
void for_each_rgf_occurrence(const RgfWord &text, const RgfWord &pattern,
                             Visit visit) {
  const std::vector<int> target(pattern.letters().begin(), pattern.letters().end());
  for_each_subset(text.size(), pattern.size(), [&](std::span<const int> positions) {
    std::vector<int> sub;
    for (int i : positions)
      sub.push_back(text.at(i));
    if (value_standardize(sub) == target)
      return visit(positions);
    return true;
  });
}

} // namespace

void for_each_permutation(int n,
                          const std::function<bool(const Permutation &)> &visit) {
  if (n < 0)
    throw DomainError("negative permutation length");
  std::vector<int> values(n);
  std::iota(values.begin(), values.end(), 1);
  do {
    if (!visit(Permutation(values)))
      return;
  } while (std::next_permutation(values.begin(), values.end()));
}

std::vector<Permutation> enumerate_permutations(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation &p) {
    out.push_back(p);
    return true;
  });
  return out;
}

namespace {

// Builds canonical block lists in lexicographic order: the current block
// either closes (a shorter block sorts first) or grows by a larger unplaced
// element, smallest first. The next block always starts at the least
// unplaced element.
class PartitionGenerator {
public:
  PartitionGenerator(int n, const std::function<bool(const SetPartition &)> &visit)
      : n_(n), visit_(visit), placed_(n + 1, false) {}

  void run() { open_block(); }

private:
  bool open_block() {
    int m = 1;
    while (m <= n_ && placed_[m])
      ++m;
    if (m > n_)
      return visit_(SetPartition(n_, blocks_));
    placed_[m] = true;
    blocks_.push_back({m});
    const bool go_on = grow_block(m);
    blocks_.pop_back();
    placed_[m] = false;
    return go_on;
  }

  bool grow_block(int last) {
    if (!open_block())
      return false;
    for (int e = last + 1; e <= n_; ++e) {
      if (placed_[e])
        continue;
      placed_[e] = true;
      blocks_.back().push_back(e);
      const bool go_on = grow_block(e);
      blocks_.back().pop_back();
      placed_[e] = false;
      if (!go_on)
        return false;
    }
    return true;
  }

  int n_;
  const std::function<bool(const SetPartition &)> &visit_;
  std::vector<bool> placed_;
  std::vector<Block> blocks_;
};

} // namespace

void for_each_partition(int n,
                        const std::function<bool(const SetPartition &)> &visit) {
  if (n < 0)
    throw DomainError("negative ground size");
  PartitionGenerator(n, visit).run();
}

std::vector<SetPartition> enumerate_partitions(int n) {
  std::vector<SetPartition> out;
  for_each_partition(n, [&](const SetPartition &p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::vector<RgfWord> enumerate_rgfs(int n) {
  if (n < 0)
    throw DomainError("negative word length");
  std::vector<RgfWord> out;
  std::vector<int> word;
  std::function<void(int)> extend = [&](int running_max) {
    if (static_cast<int>(word.size()) == n) {
      out.emplace_back(word);
      return;
    }
    for (int letter = 1; letter <= running_max + 1; ++letter) {
      word.push_back(letter);
      extend(std::max(running_max, letter));
      word.pop_back();
    }
  };
  extend(0);
  return out;
}

std::uint64_t bell_number(int n) {
  if (n < 0 || n > 25)
    throw DomainError("bell_number: n = " + std::to_string(n) +
                      " outside [0,25]");
  std::vector<std::uint64_t> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t x : row)
      next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

void for_each_subset(int n, int k,
                     const std::function<bool(std::span<const int>)> &visit) {
  if (k < 0 || k > n)
    return;
  std::vector<int> subset(k);
  std::iota(subset.begin(), subset.end(), 1);
  while (true) {
    if (!visit(subset))
      return;
    int i = k - 1;
    while (i >= 0 && subset[i] == n - k + i + 1)
      --i;
    if (i < 0)
      return;
    ++subset[i];
    for (int j = i + 1; j < k; ++j)
      subset[j] = subset[j - 1] + 1;
  }
}

bool brute_perm_contains(const Permutation &text, const Permutation &pattern) {
  bool found = false;
  for_each_perm_occurrence(text, pattern, [&](std::span<const int>) {
    found = true;
    return false;
  });
  return found;
}

std::vector<OccurrenceIndices> brute_perm_occurrences(const Permutation &text,
                                                      const Permutation &pattern) {
  std::vector<OccurrenceIndices> out;
  for_each_perm_occurrence(text, pattern, [&](std::span<const int> positions) {
    out.emplace_back(std::vector<int>(positions.begin(), positions.end()));
    return true;
  });
  return out;
}

bool brute_partition_contains(const SetPartition &text,
                              const SetPartition &pattern) {
  bool found = false;
  for_each_partition_witness(text, pattern, [&](std::span<const int>) {
    found = true;
    return false;
  });
  return found;
}

std::uint64_t brute_partition_count(const SetPartition &text,
                                    const SetPartition &pattern) {
  std::uint64_t count = 0;
  for_each_partition_witness(text, pattern, [&](std::span<const int>) {
    ++count;
    return true;
  });
  return count;
}

std::vector<SubsetWitness> brute_partition_witnesses(const SetPartition &text,
                                                     const SetPartition &pattern) {
  std::vector<SubsetWitness> out;
  for_each_partition_witness(text, pattern, [&](std::span<const int> t) {
    out.emplace_back(std::vector<int>(t.begin(), t.end()));
    return true;
  });
  return out;
}

bool brute_rgf_contains(const RgfWord &text, const RgfWord &pattern) {
  bool found = false;
  for_each_rgf_occurrence(text, pattern, [&](std::span<const int>) {
    found = true;
    return false;
  });
  return found;
}

std::uint64_t brute_rgf_count(const RgfWord &text, const RgfWord &pattern) {
  std::uint64_t count = 0;
  for_each_rgf_occurrence(text, pattern, [&](std::span<const int>) {
    ++count;
    return true;
  });
  return count;
}

VerificationReport verify_reduction(int max_n, int max_k,
                                    const RunOptions &options) {
  check_bound(max_n, kVerifySafetyBound, options, "verify_reduction");
  check_bound(max_k, kVerifySafetyBound, options, "verify_reduction");
  const auto start = std::chrono::steady_clock::now();

  const auto texts = permutations_up_to(max_n);
  const auto patterns = permutations_up_to(max_k);
  std::vector<SetPartition> text_images;
  std::vector<SetPartition> pattern_images;
  for (const auto &p : texts)
    text_images.push_back(reduce_perm(p).partition());
  for (const auto &p : patterns)
    pattern_images.push_back(reduce_perm(p).partition());

  const std::size_t total = texts.size() * patterns.size();
  auto parts = run_striped<std::vector<Mismatch>>(
      total, worker_count(options, total),
      [&](std::size_t index, std::vector<Mismatch> &sink) {
        const std::size_t ti = index / patterns.size();
        const std::size_t pi = index % patterns.size();
        const Permutation &text = texts[ti];
        const Permutation &pattern = patterns[pi];

        const bool engine = perm_contains(text, pattern).contains;
        const bool oracle =
            brute_partition_contains(text_images[ti], pattern_images[pi]);
        if (engine != oracle)
          sink.push_back({"containment", to_string(text), to_string(pattern),
                          yes_no(engine), yes_no(oracle)});

        if (text.size() <= kParsimonyMaxN && pattern.size() <= kParsimonyMaxK) {
          const auto occurrences = perm_count(text, pattern);
          const auto witnesses =
              brute_partition_count(text_images[ti], pattern_images[pi]);
          if (occurrences != witnesses)
            sink.push_back({"count", to_string(text), to_string(pattern),
                            std::to_string(occurrences), std::to_string(witnesses)});
        }
      });

  VerificationReport report;
  report.gate = "reduction";
  report.max_n = max_n;
  report.max_k = max_k;
  report.pairs_checked = total;
  report.mismatches = merge_sorted(std::move(parts));
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

VerificationReport verify_rgf_coincidence(int max_n, int max_k,
                                          const RunOptions &options) {
  check_bound(max_n, kVerifySafetyBound, options, "verify_rgf_coincidence");
  check_bound(max_k, kVerifySafetyBound, options, "verify_rgf_coincidence");
  const auto start = std::chrono::steady_clock::now();

  const auto texts = permutations_up_to(max_n);
  const auto patterns = permutations_up_to(max_k);
  std::vector<SetPartition> text_images;
  std::vector<SetPartition> pattern_images;
  for (const auto &p : texts)
    text_images.push_back(reduce_perm(p).partition());
  for (const auto &p : patterns)
    pattern_images.push_back(reduce_perm(p).partition());

  const std::size_t total = texts.size() * patterns.size();
  auto parts = run_striped<std::vector<Mismatch>>(
      total, worker_count(options, total),
      [&](std::size_t index, std::vector<Mismatch> &sink) {
        const std::size_t ti = index / patterns.size();
        const std::size_t pi = index % patterns.size();
        const bool engine =
            rgf_contains(rgf_of(text_images[ti]), rgf_of(pattern_images[pi]))
                .contains;
        const bool oracle =
            brute_partition_contains(text_images[ti], pattern_images[pi]);
        if (engine != oracle)
          sink.push_back({"coincidence", to_string(text_images[ti]),
                          to_string(pattern_images[pi]), yes_no(engine),
                          yes_no(oracle)});
      });

  VerificationReport report;
  report.gate = "rgf";
  report.max_n = max_n;
  report.max_k = max_k;
  report.pairs_checked = total + 1;
  report.mismatches = merge_sorted(std::move(parts));

  // On general partitions the word-level notion is strictly weaker.
  const RgfWord sep_text({1, 2, 2, 1});
  const RgfWord sep_pattern({1, 1, 2});
  const bool by_word = rgf_contains(sep_text, sep_pattern).contains;
  const bool by_partition = brute_partition_contains(partition_of_rgf(sep_text),
                                                     partition_of_rgf(sep_pattern));
  if (by_word || !by_partition)
    report.mismatches.push_back({"separation", to_string(sep_text),
                                 to_string(sep_pattern),
                                 "rgf=" + yes_no(by_word),
                                 "partition=" + yes_no(by_partition)});
  std::sort(report.mismatches.begin(), report.mismatches.end());

  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

CensusRow census(int n, const SetPartition &pattern, Notion notion,
                 const RunOptions &options) {
  check_bound(n, kCensusSafetyBound, options, "census");

  CensusRow row;
  row.n = n;
  row.pattern = pattern;
  row.notion = notion;

  struct Tally {
    std::uint64_t avoiders = 0;
    std::uint64_t containers = 0;
  };
  auto add = [](Tally &t, bool contains) {
    (contains ? t.containers : t.avoiders) += 1;
  };

  std::vector<Tally> tallies;
  if (notion == Notion::Partition) {
    const auto texts = enumerate_partitions(n);
    tallies = run_striped<Tally>(
        texts.size(), worker_count(options, texts.size()),
        [&](std::size_t i, Tally &t) {
          add(t, dispatch_contains(texts[i], pattern).contains);
        });
  } else {
    const auto texts = enumerate_rgfs(n);
    const RgfWord word = rgf_of(pattern);
    tallies = run_striped<Tally>(
        texts.size(), worker_count(options, texts.size()),
        [&](std::size_t i, Tally &t) {
          add(t, rgf_contains(texts[i], word).contains);
        });
  }
  for (const auto &t : tallies) {
    row.avoiders += t.avoiders;
    row.containers += t.containers;
  }
  return row;
}

} // namespace setpat
