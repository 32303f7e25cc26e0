#include "setpat/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <vector>

#include "setpat/errors.hpp"

namespace setpat {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front()))
    s.remove_prefix(1);
  while (!s.empty() && is_space(s.back()))
    s.remove_suffix(1);
  return s;
}

bool compact(std::string_view text) {
  return std::none_of(text.begin(), text.end(),
                      [](char c) { return c == ',' || is_space(c); });
}

struct Token {
  std::string_view text;
  int position; // 1-based
};

int to_positive(const Token &token) {
  int value = 0;
  const char *first = token.text.data();
  const char *last = first + token.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value < 1)
    throw ParseError("invalid token '" + std::string(token.text) +
                     "' at position " + std::to_string(token.position));
  return value;
}

// Splits an element list on commas and whitespace, or into single
// characters in the compact digit form. A comma with nothing
// before it (leading, trailing, doubled) is an empty token. `first_position`
// offsets the numbering so positions stay global across blocks.
std::vector<Token> tokenize(std::string_view text, int first_position,
                            bool digits) {
  std::vector<Token> tokens;
  int position = first_position;
  if (digits) {
    for (std::size_t i = 0; i < text.size(); ++i)
      tokens.push_back({text.substr(i, 1), position++});
    return tokens;
  }
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view piece = trim(text.substr(start, comma - start));
    if (piece.empty())
      throw ParseError("empty token at position " + std::to_string(position));
    std::size_t i = 0;
    while (i < piece.size()) {
      std::size_t j = i;
      while (j < piece.size() && !is_space(piece[j]))
        ++j;
      tokens.push_back({piece.substr(i, j - i), position++});
      while (j < piece.size() && is_space(piece[j]))
        ++j;
      i = j;
    }
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return tokens;
}

std::vector<int> parse_word(std::string_view text) {
  text = trim(text);
  std::vector<int> values;
  if (text.empty())
    return values;
  for (const Token &t : tokenize(text, 1, compact(text)))
    values.push_back(to_positive(t));
  return values;
}

} // namespace

Permutation parse_permutation(std::string_view text) {
  const std::vector<int> values = parse_word(text);
  const int n = static_cast<int>(values.size());
  std::vector<bool> seen(n + 1, false);
  for (int i = 0; i < n; ++i) {
    const int v = values[i];
    if (v > n)
      throw ParseError("value " + std::to_string(v) + " at position " +
                       std::to_string(i + 1) + " exceeds the length " +
                       std::to_string(n));
    if (seen[v])
      throw ParseError("duplicate value " + std::to_string(v) + " at position " +
                       std::to_string(i + 1));
    seen[v] = true;
  }
  return Permutation(values);
}

SetPartition parse_partition(std::string_view text) {
  text = trim(text);
  if (text.empty())
    return {};
  const bool digits = compact(text);
  std::vector<Block> blocks;
  std::set<int> seen;
  int position = 1;
  std::size_t start = 0;
  while (true) {
    const std::size_t slash = text.find('/', start);
    const std::string_view piece = trim(text.substr(start, slash - start));
    if (piece.empty())
      throw ParseError("empty block " + std::to_string(blocks.size() + 1));
    const std::vector<Token> tokens = tokenize(piece, position, digits);
    position += static_cast<int>(tokens.size());
    Block block;
    for (const Token &t : tokens) {
      const int e = to_positive(t);
      if (!seen.insert(e).second)
        throw ParseError("repeated element " + std::to_string(e) +
                         " at position " + std::to_string(t.position));
      block.push_back(e);
    }
    blocks.push_back(std::move(block));
    if (slash == std::string_view::npos)
      break;
    start = slash + 1;
  }
  const int n = *seen.rbegin();
  for (int e = 1; e <= n; ++e)
    if (!seen.contains(e))
      throw ParseError("missing element " + std::to_string(e));
  return SetPartition(n, std::move(blocks));
}

RgfWord parse_rgf(std::string_view text) {
  std::vector<int> letters = parse_word(text);
  try {
    return RgfWord(std::move(letters));
  } catch (const FormatError &e) {
    throw ParseError(e.what());
  }
}

std::string join(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0)
      out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string to_string(const Permutation &pi) { return join(pi.values()); }

std::string to_string(const SetPartition &sigma) {
  std::string out;
  for (int b = 0; b < sigma.block_count(); ++b) {
    if (b > 0)
      out += '/';
    out += join(sigma.block(b));
  }
  return out;
}

std::string to_string(const RgfWord &word) { return join(word.letters()); }

} // namespace setpat
