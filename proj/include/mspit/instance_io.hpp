#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mspit/rooted_tree.hpp"

namespace mspit {

// Instance text format:
//
//   n root
//   child parent w u        (n - 1 lines)
//
// Blank lines and lines whose first non-space character is '#' are ignored.
// Node ids are positive integers. Lengths are non-negative integers; with
// `scale_digits` > 0 they may carry up to that many fractional digits and are
// stored multiplied by 10^scale_digits.
struct Instance {
  std::size_t node_count = 0;
  Label root = 0;
  std::vector<EdgeRecord> edges;
};

// Throws ParseError naming the offending line.
Instance parse_instance(std::istream& in, int scale_digits = 0);

// Parses and validates. Structural errors from RootedTree::build propagate
// unchanged; a node count that disagrees with the header is a ParseError.
RootedTree read_tree(std::istream& in, int scale_digits = 0);
RootedTree load_tree(const std::filesystem::path& path, int scale_digits = 0);

// Canonical form: header, then one line per edge ascending by child id, no
// comments. Parsing this output and writing it again is byte-identical.
void write_instance(std::ostream& out, const RootedTree& tree);
std::string format_instance(const RootedTree& tree);

// Parses one length in the same notation the instance format uses. Throws
// mspit::Error(kParse).
Length parse_length(std::string_view text, int scale_digits = 0);

// Renders a scaled length back as a decimal string ("12.50" for 1250 at 2
// digits). With zero digits this is just the integer.
std::string format_length(Length value, int scale_digits);

}  // namespace mspit
