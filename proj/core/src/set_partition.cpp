#include "setpat/set_partition.hpp"

#include <algorithm>
#include <string>

#include "setpat/errors.hpp"

namespace setpat {

SetPartition::SetPartition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  canonicalize(-1);
}

SetPartition::SetPartition(int ground_size, std::vector<Block> blocks)
    : blocks_(std::move(blocks)) {
  if (ground_size < 0)
    throw DomainError("negative ground size");
  canonicalize(ground_size);
}

void SetPartition::canonicalize(int expected_size) {
  std::size_t total = 0;
  for (auto &b : blocks_) {
    if (b.empty())
      throw DomainError("empty block");
    std::sort(b.begin(), b.end());
    total += b.size();
  }
  const int n = expected_size < 0 ? static_cast<int>(total) : expected_size;

  block_of_.assign(n, -1);
  for (const auto &b : blocks_) {
    for (int e : b) {
      if (e < 1 || e > n)
        throw DomainError("element " + std::to_string(e) + " outside [1," +
                          std::to_string(n) + "]");
      if (block_of_[e - 1] != -1)
        throw DomainError("repeated element " + std::to_string(e));
      block_of_[e - 1] = 0;
    }
  }
  for (int e = 1; e <= n; ++e)
    if (block_of_[e - 1] == -1)
      throw DomainError("missing element " + std::to_string(e));

  std::sort(blocks_.begin(), blocks_.end(),
            [](const Block &a, const Block &b) { return a.front() < b.front(); });
  for (int i = 0; i < block_count(); ++i)
    for (int e : blocks_[i])
      block_of_[e - 1] = i;
}

SetPartition SetPartition::singletons(int n) {
  std::vector<Block> blocks;
  for (int i = 1; i <= n; ++i)
    blocks.push_back({i});
  return SetPartition(std::max(n, 0), std::move(blocks));
}

SetPartition SetPartition::single_block(int n) {
  if (n <= 0)
    return {};
  Block b(n);
  for (int i = 0; i < n; ++i)
    b[i] = i + 1;
  return SetPartition(n, {std::move(b)});
}

int SetPartition::block_index(int element) const {
  if (element < 1 || element > ground_size())
    throw DomainError("element " + std::to_string(element) + " outside [1," +
                      std::to_string(ground_size()) + "]");
  return block_of_[element - 1];
}

int SetPartition::max_block_size() const {
  std::size_t best = 0;
  for (const auto &b : blocks_)
    best = std::max(best, b.size());
  return static_cast<int>(best);
}

} // namespace setpat

std::size_t std::hash<setpat::SetPartition>::operator()(
    const setpat::SetPartition &p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (const auto &b : p.blocks()) {
    for (int e : b)
      h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ull;
    h = (h ^ 0xffu) * 0x100000001b3ull;
  }
  return h;
}
