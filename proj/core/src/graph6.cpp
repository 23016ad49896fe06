#include "sombor/graph6.hpp"

#include <cctype>
#include <vector>

namespace sombor {

ParseError::ParseError(const std::string& message, std::size_t offset_in)
    : std::runtime_error(message + " at byte " + std::to_string(offset_in)),
      offset(offset_in) {}

std::string write_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int bit_count = n * (n - 1) / 2;
  int accumulator = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      accumulator = (accumulator << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(accumulator + 63));
        accumulator = 0;
        filled = 0;
      }
    }
  }
  if (bit_count % 6 != 0) {
    accumulator <<= 6 - bit_count % 6;
    out.push_back(static_cast<char>(accumulator + 63));
  }
  return out;
}

Graph parse_graph6(std::string_view text) {
  std::size_t offset = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) offset = header.size();
  if (offset >= text.size()) {
    throw ParseError("missing graph6 header byte", offset);
  }
  unsigned char first = static_cast<unsigned char>(text[offset]);
  if (first == 126) {
    throw ParseError("long-form graph6 order exceeds the supported 32", offset);
  }
  if (first < 63 || first > 125) {
    throw ParseError("invalid graph6 order byte", offset);
  }
  int n = first - 63;
  if (n > max_order) {
    throw ParseError("graph6 order " + std::to_string(n) +
                         " exceeds the supported " + std::to_string(max_order),
                     offset);
  }
  ++offset;
  int bit_count = n * (n - 1) / 2;
  std::size_t payload_size = static_cast<std::size_t>((bit_count + 5) / 6);
  if (text.size() - offset < payload_size) {
    throw ParseError("truncated graph6 payload", text.size());
  }
  if (text.size() - offset > payload_size) {
    throw ParseError("trailing bytes after graph6 payload",
                     offset + payload_size);
  }
  std::vector<Edge> edges;
  int bit_index = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit_index) {
      std::size_t byte_offset = offset + static_cast<std::size_t>(bit_index / 6);
      unsigned char byte = static_cast<unsigned char>(text[byte_offset]);
      if (byte < 63 || byte > 126) {
        throw ParseError("invalid graph6 payload byte", byte_offset);
      }
      if (((byte - 63) >> (5 - bit_index % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  // Padding bits beyond the triangle must be zero.
  for (int bit = bit_count; bit < static_cast<int>(payload_size) * 6; ++bit) {
    std::size_t byte_offset = offset + static_cast<std::size_t>(bit / 6);
    unsigned char byte = static_cast<unsigned char>(text[byte_offset]);
    if (byte < 63 || byte > 126) {
      throw ParseError("invalid graph6 payload byte", byte_offset);
    }
    if (((byte - 63) >> (5 - bit % 6)) & 1) {
      throw ParseError("nonzero graph6 padding bit", byte_offset);
    }
  }
  return Graph(n, edges);
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order());
  for (auto [u, v] : g.edges()) {
    out += "; " + std::to_string(u) + " " + std::to_string(v);
  }
  return out;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t position = 0;

  void skip_spaces() {
    while (position < text.size() &&
           std::isspace(static_cast<unsigned char>(text[position]))) {
      ++position;
    }
  }

  bool at_end() {
    skip_spaces();
    return position == text.size();
  }

  int read_int() {
    skip_spaces();
    std::size_t start = position;
    while (position < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[position]))) {
      ++position;
    }
    if (position == start) {
      throw ParseError("expected an integer", start);
    }
    int value = 0;
    for (std::size_t i = start; i < position; ++i) {
      value = value * 10 + (text[i] - '0');
      if (value > 1000000) throw ParseError("integer too large", start);
    }
    return value;
  }

  void expect_semicolon() {
    skip_spaces();
    if (position == text.size() || text[position] != ';') {
      throw ParseError("expected ';'", position);
    }
    ++position;
  }
};

}  // namespace

Graph parse_edge_list(std::string_view text) {
  Cursor cursor{text};
  int n = cursor.read_int();
  if (n > max_order) {
    throw ParseError("order exceeds the supported " + std::to_string(max_order),
                     0);
  }
  std::vector<Edge> edges;
  while (!cursor.at_end()) {
    cursor.expect_semicolon();
    if (cursor.at_end()) break;  // allow a trailing semicolon
    std::size_t edge_start = cursor.position;
    int u = cursor.read_int();
    int v = cursor.read_int();
    if (u >= n || v >= n || u == v) {
      throw ParseError("invalid edge " + std::to_string(u) + " " +
                           std::to_string(v),
                       edge_start);
    }
    edges.emplace_back(u, v);
  }
  try {
    return Graph(n, edges);
  } catch (const std::invalid_argument& error) {
    throw ParseError(error.what(), 0);
  }
}

}  // namespace sombor
