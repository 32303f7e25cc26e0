#include "setpat/standardize.hpp"

#include <algorithm>
#include <string>

#include "setpat/errors.hpp"

namespace setpat {

StandardizationMap::StandardizationMap(std::vector<int> domain)
    : domain_(std::move(domain)) {
  std::sort(domain_.begin(), domain_.end());
  domain_.erase(std::unique(domain_.begin(), domain_.end()), domain_.end());
  if (!domain_.empty() && domain_.front() < 1)
    throw DomainError("non-positive element " + std::to_string(domain_.front()));
}

bool StandardizationMap::contains(int x) const {
  return std::binary_search(domain_.begin(), domain_.end(), x);
}

int StandardizationMap::operator()(int x) const {
  auto it = std::lower_bound(domain_.begin(), domain_.end(), x);
  if (it == domain_.end() || *it != x)
    throw DomainError("element " + std::to_string(x) +
                      " is not in the standardized set");
  return static_cast<int>(it - domain_.begin()) + 1;
}

std::vector<int> StandardizationMap::image(std::span<const int> subset) const {
  std::vector<int> out;
  out.reserve(subset.size());
  for (int x : subset)
    out.push_back((*this)(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

StandardizationMap standardize(std::span<const int> elements) {
  return StandardizationMap(std::vector<int>(elements.begin(), elements.end()));
}

SetPartition restrict(const SetPartition &sigma, std::span<const int> subset) {
  const StandardizationMap st = standardize(subset);
  const int n = sigma.ground_size();
  if (!st.domain().empty() && st.domain().back() > n)
    throw DomainError("element " + std::to_string(st.domain().back()) +
                      " outside [1," + std::to_string(n) + "]");

  // Walking T in ascending order meets the blocks in order of their new
  // minima, so the output is already canonical.
  std::vector<int> slot(sigma.block_count(), -1);
  std::vector<Block> blocks;
  int rank = 0;
  for (int x : st.domain()) {
    ++rank;
    const int b = sigma.block_index(x);
    if (slot[b] < 0) {
      slot[b] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[slot[b]].push_back(rank);
  }
  return SetPartition(st.size(), std::move(blocks));
}

} // namespace setpat
