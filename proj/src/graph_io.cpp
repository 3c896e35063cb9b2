#include "evenhole/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace evenhole {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::size_t kMaxOrder = 1u << 15;

std::string_view trim_newline(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' ||
                        s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

bool skippable(std::string_view line) {
  line = trim(line);
  return line.empty() || line.front() == '#';
}

// Parses whitespace-separated non-negative integers; nullopt on any other token.
std::optional<std::vector<long long>> integers(std::string_view line) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc() || ptr != line.data() + j) return std::nullopt;
    out.push_back(value);
    i = j;
  }
  return out;
}

struct NumberedLine {
  std::size_t number;
  std::string text;
};

Graph parse_edge_block(const NumberedLine& header, const std::vector<NumberedLine>& body) {
  auto head = integers(header.text);
  if (!head || head->size() != 2 || (*head)[0] < 0 || (*head)[1] < 0) {
    throw ParseError("expected header \"n m\"", 0, header.number);
  }
  const long long n = (*head)[0], m = (*head)[1];
  if (static_cast<std::size_t>(n) > kMaxOrder) {
    throw ParseError("vertex count " + std::to_string(n) + " too large", 0, header.number);
  }
  if (static_cast<long long>(body.size()) != m) {
    const std::size_t where = body.empty() ? header.number : body.back().number;
    throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(body.size()),
                     0, where);
  }
  std::vector<Edge> edges;
  edges.reserve(body.size());
  for (const auto& line : body) {
    auto pair = integers(line.text);
    if (!pair || pair->size() != 2) {
      throw ParseError("expected edge \"u v\"", 0, line.number);
    }
    const long long u = (*pair)[0], v = (*pair)[1];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("edge endpoint out of range 0.." + std::to_string(n - 1), 0,
                       line.number);
    }
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), 0, line.number);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  line = trim_newline(line);
  std::size_t base = 0;
  if (line.substr(0, kGraph6Header.size()) == kGraph6Header) {
    line.remove_prefix(kGraph6Header.size());
    base = kGraph6Header.size();
  }
  for (std::size_t i = 0; i < line.size(); ++i) {
    const unsigned char ch = static_cast<unsigned char>(line[i]);
    if (ch < 63 || ch > 126) {
      throw ParseError("character " + std::to_string(ch) + " outside graph6 range 63..126",
                       base + i);
    }
  }
  if (line.empty()) throw ParseError("empty graph6 string", base);

  auto value = [&](std::size_t from, std::size_t count) {
    std::size_t v = 0;
    for (std::size_t k = 0; k < count; ++k) v = (v << 6) | (line[from + k] - 63);
    return v;
  };
  std::size_t n = 0, pos = 0;
  if (line[0] != 126) {
    n = value(0, 1);
    pos = 1;
  } else if (line.size() >= 2 && line[1] != 126) {
    if (line.size() < 4) throw ParseError("truncated 4-byte size prefix", base);
    n = value(1, 3);
    pos = 4;
    if (n < 63) throw ParseError("non-canonical 4-byte size prefix", base);
  } else {
    if (line.size() < 8) throw ParseError("truncated 8-byte size prefix", base);
    n = value(2, 6);
    pos = 8;
    if (n < 258048) throw ParseError("non-canonical 8-byte size prefix", base);
  }
  if (n > kMaxOrder) throw ParseError("graph order " + std::to_string(n) + " too large", base);

  const std::size_t bits = n * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() - pos != bytes) {
    throw ParseError("expected " + std::to_string(bytes) + " data bytes for n=" +
                         std::to_string(n) + ", found " + std::to_string(line.size() - pos),
                     base + std::min(line.size(), pos + bytes));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int chunk = line[pos + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  if (bytes > 0 && bits % 6 != 0) {
    const int last = line[pos + bytes - 1] - 63;
    const int pad = static_cast<int>(6 - bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) {
      throw ParseError("nonzero padding bits", base + pos + bytes - 1);
    }
  }
  return Graph::from_edges(n, edges);
}

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n < 258048) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
  }
  int chunk = 0, filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<NumberedLine> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(start, end - start);
    if (!skippable(line)) lines.push_back({number, std::string(trim(line))});
    start = end + 1;
  }
  if (lines.empty()) throw ParseError("missing \"n m\" header", 0, 1);
  return parse_edge_block(lines.front(), {lines.begin() + 1, lines.end()});
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::optional<GraphFormat> format_from_string(const std::string& s) {
  if (s == "g6" || s == "graph6") return GraphFormat::Graph6;
  if (s == "edges" || s == "edge-list" || s == "el") return GraphFormat::EdgeList;
  return std::nullopt;
}

GraphFormat sniff_format(std::string_view text) {
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!skippable(line)) {
      auto nums = integers(trim(line));
      return nums && nums->size() == 2 ? GraphFormat::EdgeList : GraphFormat::Graph6;
    }
    start = end + 1;
  }
  return GraphFormat::Graph6;
}

bool GraphStream::read_line(std::string& line) {
  if (!std::getline(in_, line)) return false;
  ++line_no_;
  return true;
}

std::optional<GraphStream::Item> GraphStream::next() {
  if (failed_) return std::nullopt;
  return format_ == GraphFormat::Graph6 ? next_graph6() : next_edge_list();
}

std::optional<GraphStream::Item> GraphStream::next_graph6() {
  std::string line;
  while (read_line(line)) {
    if (trim(line).empty()) continue;
    Item item{index_++, line_no_, ParseError("", 0)};
    try {
      item.value = parse_graph6(trim(line));
    } catch (const ParseError& e) {
      item.value = ParseError(e.what(), e.offset(), line_no_);
    } catch (const GraphError& e) {
      item.value = ParseError(e.what(), 0, line_no_);
    }
    return item;
  }
  return std::nullopt;
}

std::optional<GraphStream::Item> GraphStream::next_edge_list() {
  std::string line;
  NumberedLine header{0, {}};
  while (read_line(line)) {
    if (skippable(line)) continue;
    header = {line_no_, std::string(trim(line))};
    break;
  }
  if (header.number == 0) return std::nullopt;
  Item item{index_++, header.number, ParseError("", 0)};
  auto head = integers(header.text);
  if (!head || head->size() != 2 || (*head)[1] < 0) {
    // Without a header the block boundary is unknown.
    failed_ = true;
    item.value = ParseError("expected header \"n m\"", 0, header.number);
    return item;
  }
  std::vector<NumberedLine> body;
  while (static_cast<long long>(body.size()) < (*head)[1] && read_line(line)) {
    if (skippable(line)) continue;
    body.push_back({line_no_, std::string(trim(line))});
  }
  try {
    item.value = parse_edge_block(header, body);
  } catch (const ParseError& e) {
    item.value = e;
  } catch (const GraphError& e) {
    item.value = ParseError(e.what(), 0, header.number);
  }
  return item;
}

}  // namespace evenhole
