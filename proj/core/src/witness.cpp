#include "setpat/witness.hpp"

#include <algorithm>
#include <string>

#include "setpat/errors.hpp"

namespace setpat {

OccurrenceIndices::OccurrenceIndices(std::vector<int> indices)
    : indices_(std::move(indices)) {
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 1)
      throw DomainError("non-positive index " + std::to_string(indices_[i]));
    if (i > 0 && indices_[i] <= indices_[i - 1])
      throw DomainError("occurrence indices must strictly increase");
  }
}

SubsetWitness::SubsetWitness(std::vector<int> elements)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
    throw DomainError("repeated element in witness");
  if (!elements_.empty() && elements_.front() < 1)
    throw DomainError("non-positive element " + std::to_string(elements_.front()));
}

} // namespace setpat
