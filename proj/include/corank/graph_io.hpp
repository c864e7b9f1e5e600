#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "corank/graph.hpp"

namespace corank {

/// Malformed input. `offset()` is the byte offset inside the record (or the
/// 1-based line number for the text formats, see `line()`).
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& message, std::size_t offset, std::size_t line = 0);
    const std::string& detail() const { return detail_; }
    std::size_t offset() const { return offset_; }
    std::size_t line() const { return line_; }

private:
    std::string detail_;
    std::size_t offset_;
    std::size_t line_;
};

inline constexpr std::size_t kMaxGraph6Order = 258047;

Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

Digraph parse_digraph6(std::string_view text);
std::string write_digraph6(const Digraph& d);

/// "n m" header then m lines "u v".
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// "n <count>" header then one "u v" arc per line.
Digraph parse_arc_list(std::string_view text);
std::string write_arc_list(const Digraph& d);

using AnyGraph = std::variant<Graph, Digraph>;

struct InputRecord {
    AnyGraph graph;
    std::size_t line = 0;  // first line of the record
};

/// Reads a stream holding any mix of graph6 lines, digraph6 lines ('&'
/// prefix), edge-list blocks ("n m" header) and arc-list blocks ("n <count>"
/// header). Blank lines and '#' comments are skipped. Errors carry the line.
std::vector<InputRecord> read_graphs(std::istream& in);

}  // namespace corank
