#include "setpat/rgf.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "setpat/errors.hpp"

namespace setpat {

bool is_restricted_growth(std::span<const int> letters) {
  int running_max = 0;
  for (int w : letters) {
    if (w < 1 || w > running_max + 1)
      return false;
    running_max = std::max(running_max, w);
  }
  return true;
}

RgfWord::RgfWord(std::vector<int> letters) : letters_(std::move(letters)) {
  int running_max = 0;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const int w = letters_[i];
    if (w < 1 || w > running_max + 1)
      throw FormatError("letter " + std::to_string(w) + " at position " +
                        std::to_string(i + 1) +
                        " violates the restricted growth condition");
    running_max = std::max(running_max, w);
  }
}

int RgfWord::max_letter() const {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

RgfWord rgf_of(const SetPartition &sigma) {
  std::vector<int> letters(sigma.ground_size());
  for (int i = 1; i <= sigma.ground_size(); ++i)
    letters[i - 1] = sigma.block_index(i) + 1;
  return RgfWord(std::move(letters));
}

SetPartition partition_of_rgf(const RgfWord &word) {
  std::vector<Block> blocks(word.max_letter());
  for (int i = 1; i <= word.size(); ++i)
    blocks[word.at(i) - 1].push_back(i);
  return SetPartition(word.size(), std::move(blocks));
}

RgfWord flatten(std::span<const int> word) {
  std::map<int, int> label;
  std::vector<int> out;
  out.reserve(word.size());
  for (int w : word) {
    auto [it, inserted] = label.try_emplace(w, static_cast<int>(label.size()) + 1);
    out.push_back(it->second);
  }
  return RgfWord(std::move(out));
}

std::vector<int> value_standardize(std::span<const int> word) {
  std::vector<int> distinct(word.begin(), word.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<int> out;
  out.reserve(word.size());
  for (int w : word)
    out.push_back(static_cast<int>(
        std::lower_bound(distinct.begin(), distinct.end(), w) - distinct.begin()) + 1);
  return out;
}

} // namespace setpat
