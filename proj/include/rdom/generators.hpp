#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rdom/graph.hpp"

namespace rdom::gen {

// All generators number vertices with external ids 1..n.

Graph path(std::size_t n);
Graph cycle(std::size_t n);
/// Center has id 1, leaves 2..n.
Graph star(std::size_t n);
Graph complete(std::size_t n);
/// Vertex (row, col) gets id row * cols + col + 1.
Graph grid(std::size_t rows, std::size_t cols);
/// Uniform random recursive tree: vertex i attaches to a uniform earlier vertex.
Graph random_tree(std::size_t n, std::uint64_t seed);
/// Random k-tree on n vertices with each edge kept independently with
/// probability `keep`. The result is k-degenerate.
Graph partial_ktree(std::size_t n, std::size_t k, double keep, std::uint64_t seed);
Graph edgeless(std::size_t n);

/// Dispatch by family name ("path", "cycle", "star", "complete", "grid",
/// "random_tree", "partial_ktree", "edgeless") with positional numeric params.
Graph by_name(const std::string& family, const std::vector<double>& params, std::uint64_t seed);

}  // namespace rdom::gen
