#ifndef KAPPATREE_IO_HPP
#define KAPPATREE_IO_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kappatree/decomposition.hpp"
#include "kappatree/oracle.hpp"

namespace kappatree {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

enum class InputFormat { kEdgeList, kDot };

/// Edge list: two tokens per line, `#` comments. DOT: undirected `graph` with node ids and `--` edges.
/// Throws ParseError, or DisconnectedGraphError when the parsed graph is not connected.
Graph parse_graph(std::string_view text, InputFormat format);

std::string emit_edgelist(const Graph& g);

/// Separator nodes are white circles, block nodes black; edges point from separator to block.
std::string emit_dot(const StructureTree& t);

// JSON reports. Output is byte-stable for a fixed input.
std::string analysis_json(const Analysis& a);
std::string tree_json(const Analysis& a);
std::string decomposition_json(const DecompositionReport& r);
std::string certificate_json(const oracle::Certificate& c);

}  // namespace kappatree

#endif  // KAPPATREE_IO_HPP
