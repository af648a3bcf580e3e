#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace seg {

enum class GraphKind { path, cycle, general };

std::string to_string(GraphKind kind);

/// Simple undirected graph with a fixed edge order. Vertices are 1-based.
/// Paths and cycles carry their canonical edge order: (x_i, x_{i+1}) for
/// i = 1..n-1, plus (x_n, x_1) as the last edge of a cycle.
struct GraphSpec {
  GraphKind kind = GraphKind::general;
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  static GraphSpec path(int n);
  static GraphSpec cycle(int n);
  static GraphSpec general(int n, std::vector<std::pair<int, int>> edges);

  int order() const { return n; }
  int size() const { return static_cast<int>(edges.size()); }

  bool operator==(const GraphSpec&) const = default;
};

}  // namespace seg
