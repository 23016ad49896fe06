#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sombor/graph.hpp"

namespace sombor {

// Malformed textual graph input; offset is the byte position of the fault.
struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t offset);

  std::size_t offset;
};

// Standard graph6 short form (printable 6-bit packed upper triangle). Orders
// above 62 need the long form, which always exceeds the supported order 32
// and is rejected.
[[nodiscard]] std::string write_graph6(const Graph& g);
[[nodiscard]] Graph parse_graph6(std::string_view text);

// Plain text alternative: "n; u v; u v; ...".
[[nodiscard]] std::string write_edge_list(const Graph& g);
[[nodiscard]] Graph parse_edge_list(std::string_view text);

}  // namespace sombor
