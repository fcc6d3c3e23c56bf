#pragma once

#include <string>
#include <string_view>

#include "pcc/graph.hpp"

namespace pcc {

// Edge-list text: "n m" then m lines "u v" (0-indexed, u < v), LF separated.
// A trailing newline is accepted on input and not emitted on output.
Graph read_graph(std::string_view text);
std::string write_graph(const Graph& g);

// Coloring text: one line "u v c" per edge, in the graph's edge order, c >= 1.
// The coloring's t is the largest color read.
EdgeColoring read_coloring(std::string_view text, const Graph& g);
std::string write_coloring(const Graph& g, const EdgeColoring& coloring);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace pcc
