#include "setpat/permutation.hpp"

#include <string>

#include "setpat/errors.hpp"

namespace setpat {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int i = 0; i < n; ++i) {
    const int v = values_[i];
    if (v < 1 || v > n)
      throw DomainError("value " + std::to_string(v) + " at position " +
                        std::to_string(i + 1) + " is outside [1," +
                        std::to_string(n) + "]");
    if (seen[v])
      throw DomainError("duplicate value " + std::to_string(v) +
                        " at position " + std::to_string(i + 1));
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0)
    throw DomainError("negative permutation length");
  std::vector<int> values(n);
  for (int i = 0; i < n; ++i)
    values[i] = i + 1;
  return Permutation(std::move(values));
}

int Permutation::at(int i) const {
  if (i < 1 || i > size())
    throw DomainError("position " + std::to_string(i) + " outside [1," +
                      std::to_string(size()) + "]");
  return values_[i - 1];
}

} // namespace setpat

std::size_t
std::hash<setpat::Permutation>::operator()(const setpat::Permutation &p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int v : p.values())
    h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ull;
  return h;
}
