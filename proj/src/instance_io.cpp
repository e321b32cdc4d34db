#include "mspit/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string_view>

#include "mspit/error.hpp"

namespace mspit {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

std::int64_t parse_integer(std::string_view text, std::size_t line, std::string_view what) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(line, std::string(what) + " '" + std::string(text) + "' is out of range");
  }
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError(line, std::string(what) + " '" + std::string(text) + "' is not an integer");
  }
  return value;
}

Label parse_node(std::string_view text, std::size_t line, std::string_view what) {
  const std::int64_t id = parse_integer(text, line, what);
  if (id <= 0) {
    throw ParseError(line, std::string(what) + " must be a positive integer, got " + std::string(text));
  }
  return id;
}

Length parse_field_length(std::string_view text, std::size_t line, std::string_view what,
                          int scale_digits) {
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) {
    Length value = parse_integer(text, line, what);
    for (int i = 0; i < scale_digits; ++i) {
      if (value > std::numeric_limits<Length>::max() / 10 ||
          value < std::numeric_limits<Length>::min() / 10) {
        throw ParseError(line, std::string(what) + " '" + std::string(text) + "' is out of range");
      }
      value *= 10;
    }
    return value;
  }
  if (scale_digits == 0) {
    throw ParseError(line, std::string(what) + " '" + std::string(text) +
                               "' is not an integer (decimals need a scale)");
  }
  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac = text.substr(dot + 1);
  if (frac.size() > static_cast<std::size_t>(scale_digits) || frac.empty() ||
      frac.find_first_not_of("0123456789") != std::string_view::npos ||
      (whole.size() != 0 && whole.find_first_not_of("+-0123456789") != std::string_view::npos)) {
    throw ParseError(line, std::string(what) + " '" + std::string(text) + "' has more than " +
                               std::to_string(scale_digits) + " fractional digits or is malformed");
  }
  std::string digits(whole.empty() ? "0" : whole);
  digits.append(frac);
  digits.append(static_cast<std::size_t>(scale_digits) - frac.size(), '0');
  return parse_integer(digits, line, what);
}

}  // namespace

Instance parse_instance(std::istream& in, int scale_digits) {
  if (scale_digits < 0 || scale_digits > 12) {
    throw Error(ErrorCode::kParse, "scale digits must lie in [0, 12]");
  }
  Instance inst;
  bool have_header = false;
  std::string raw;
  std::size_t line_no = 0;
  std::size_t header_line = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto fields = split_fields(raw);
    if (fields.empty() || fields.front().front() == '#') continue;
    if (!have_header) {
      if (fields.size() != 2) {
        throw ParseError(line_no, "expected header 'n root', got " + std::to_string(fields.size()) +
                                      " fields");
      }
      const std::int64_t n = parse_integer(fields[0], line_no, "node count");
      if (n < 1) throw ParseError(line_no, "node count must be positive");
      inst.node_count = static_cast<std::size_t>(n);
      inst.root = parse_node(fields[1], line_no, "root id");
      have_header = true;
      header_line = line_no;
      continue;
    }
    if (fields.size() != 4) {
      throw ParseError(line_no, "expected 'child parent w u', got " +
                                    std::to_string(fields.size()) + " fields");
    }
    if (inst.edges.size() + 1 >= inst.node_count) {
      throw ParseError(line_no, "more edge lines than the header's n - 1 = " +
                                    std::to_string(inst.node_count - 1));
    }
    EdgeRecord r;
    r.child = parse_node(fields[0], line_no, "child id");
    r.parent = parse_node(fields[1], line_no, "parent id");
    r.base = parse_field_length(fields[2], line_no, "w", scale_digits);
    r.upgraded = parse_field_length(fields[3], line_no, "u", scale_digits);
    if (r.base < 0 || r.upgraded < 0) throw ParseError(line_no, "lengths must be non-negative");
    if (r.base > r.upgraded) throw ParseError(line_no, "w exceeds u");
    inst.edges.push_back(r);
  }
  if (!have_header) throw ParseError(line_no + 1, "missing header 'n root'");
  if (inst.edges.size() + 1 != inst.node_count) {
    throw ParseError(line_no + 1, "expected " + std::to_string(inst.node_count - 1) +
                                      " edge lines after header on line " +
                                      std::to_string(header_line) + ", found " +
                                      std::to_string(inst.edges.size()));
  }
  return inst;
}

RootedTree read_tree(std::istream& in, int scale_digits) {
  const Instance inst = parse_instance(in, scale_digits);
  RootedTree tree = RootedTree::build(inst.edges, inst.root);
  if (tree.size() != inst.node_count) {
    throw ParseError(1, "header declares " + std::to_string(inst.node_count) +
                            " nodes but the edges mention " + std::to_string(tree.size()));
  }
  return tree;
}

RootedTree load_tree(const std::filesystem::path& path, int scale_digits) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path.string());
  return read_tree(in, scale_digits);
}

void write_instance(std::ostream& out, const RootedTree& tree) {
  out << tree.size() << ' ' << tree.label(tree.root()) << '\n';
  for (const EdgeRecord& r : tree.records()) {
    out << r.child << ' ' << r.parent << ' ' << r.base << ' ' << r.upgraded << '\n';
  }
}

std::string format_instance(const RootedTree& tree) {
  std::ostringstream out;
  write_instance(out, tree);
  return out.str();
}

Length parse_length(std::string_view text, int scale_digits) {
  try {
    return parse_field_length(text, 0, "length", scale_digits);
  } catch (const ParseError& e) {
    const std::string what = e.what();
    throw Error(ErrorCode::kParse, what.substr(what.find(": ") + 2));
  }
}

std::string format_length(Length value, int scale_digits) {
  if (scale_digits <= 0) return std::to_string(value);
  const bool negative = value < 0;
  std::string digits = std::to_string(negative ? -value : value);
  if (digits.size() <= static_cast<std::size_t>(scale_digits)) {
    digits.insert(0, static_cast<std::size_t>(scale_digits) + 1 - digits.size(), '0');
  }
  digits.insert(digits.size() - static_cast<std::size_t>(scale_digits), 1, '.');
  return negative ? "-" + digits : digits;
}

}  // namespace mspit
