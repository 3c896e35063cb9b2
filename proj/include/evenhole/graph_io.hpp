#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "evenhole/graph.hpp"

namespace evenhole {

/// Malformed graph6 or edge-list input. `offset` is a byte offset into the
/// graph6 line, `line` a 1-based line number in the edge-list text (0 when not
/// applicable).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line = 0)
      : std::runtime_error(what), offset_(offset), line_(line) {}
  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }

 private:
  std::size_t offset_;
  std::size_t line_;
};

/// Decodes one graph6 string (optionally prefixed by ">>graph6<<"; a
/// trailing newline is ignored).
Graph parse_graph6(std::string_view line);

/// Canonical graph6 encoding: upper-triangle bits column by column, 6 bits
/// per character, zero padding.
std::string write_graph6(const Graph& g);

/// "n m" header followed by m lines "u v", 0-based. Blank lines and lines
/// starting with '#' are skipped.
Graph parse_edge_list(std::string_view text);

std::string write_edge_list(const Graph& g);

enum class GraphFormat { Graph6, EdgeList };

std::optional<GraphFormat> format_from_string(const std::string& s);

/// Reads graphs one at a time from a stream in file order. graph6 streams
/// recover after a bad line; edge-list streams recover after a bad block when
/// its header was readable.
class GraphStream {
 public:
  struct Item {
    std::size_t index = 0;  // 0-based position in the stream
    std::size_t line = 0;   // first line of the record
    std::variant<Graph, ParseError> value;
  };

  GraphStream(std::istream& in, GraphFormat format, std::string source = "-")
      : in_(in), format_(format), source_(std::move(source)) {}

  std::optional<Item> next();
  const std::string& source() const { return source_; }
  GraphFormat format() const { return format_; }

 private:
  bool read_line(std::string& line);
  std::optional<Item> next_graph6();
  std::optional<Item> next_edge_list();

  std::istream& in_;
  GraphFormat format_;
  std::string source_;
  std::size_t line_no_ = 0;
  std::size_t index_ = 0;
  bool failed_ = false;
};

/// Guesses the format from the first non-blank line of a buffer: two integers
/// mean an edge list.
GraphFormat sniff_format(std::string_view text);

}  // namespace evenhole
