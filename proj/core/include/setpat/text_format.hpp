#ifndef SETPAT_TEXT_FORMAT_HPP
#define SETPAT_TEXT_FORMAT_HPP

#include <span>
#include <string>
#include <string_view>

#include "setpat/permutation.hpp"
#include "setpat/rgf.hpp"
#include "setpat/set_partition.hpp"

namespace setpat {

// Text grammar shared by the CLI and the reports.
//
//   permutation / RGF word:  elements separated by commas and/or whitespace,
//                            "2,3,1" or "2 3 1"
//   set partition:           blocks separated by '/', elements by commas,
//                            "1,3/2,4"
//
// When the text holds no comma and no whitespace, every token is read as a
// string of single digits ("231", "13/24"). Blank text is the empty
// structure. Output always uses the comma form.
//
// Parse failures throw ParseError naming the offending token and its
// 1-based position.

Permutation parse_permutation(std::string_view text);
SetPartition parse_partition(std::string_view text);
RgfWord parse_rgf(std::string_view text);

std::string join(std::span<const int> values);
std::string to_string(const Permutation &pi);
std::string to_string(const SetPartition &sigma);
std::string to_string(const RgfWord &word);

} // namespace setpat

#endif
