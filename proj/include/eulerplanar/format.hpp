#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "eulerplanar/graph.hpp"

namespace eulerplanar {

struct Graph6ParseError : std::runtime_error {
    Graph6ParseError(const std::string& msg, std::size_t offset_)
        : std::runtime_error(msg + " (byte offset " + std::to_string(offset_) + ")"),
          offset(offset_) {}
    std::size_t offset;
};

// Standard graph6 ASCII encoding (sizes up to 258047). Bit-exact round trip.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// Plain edge-list text: first line "n m", then m lines "u v" (0-based).
Graph parse_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace eulerplanar
