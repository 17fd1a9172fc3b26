#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "spectral_kit/graph.hpp"

namespace spectral_kit {

enum class GraphFormat { EdgeList, Graph6 };

GraphFormat parse_format(const std::string& s);

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "n <count>" header, then one "u v" line per edge (u < v, ascending).
std::string to_edgelist(const Graph& g);

/// Accepts '#' comments, blank lines and any whitespace between tokens.
Graph parse_edgelist(std::string_view text);

/// Standard graph6 (no trailing newline). Optional ">>graph6<<" header
/// and surrounding whitespace are accepted on input.
std::string to_graph6(const Graph& g);
Graph parse_graph6(std::string_view text);

/// Edge list if the first token is "n", graph6 otherwise.
Graph parse_graph_text(std::string_view text);

std::string format_graph(const Graph& g, GraphFormat f);

}  // namespace spectral_kit
