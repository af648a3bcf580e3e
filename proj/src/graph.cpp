#include "seg/graph.hpp"

#include <algorithm>
#include <set>

namespace seg {

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::path: return "path";
    case GraphKind::cycle: return "cycle";
    case GraphKind::general: return "general";
  }
  return "?";
}

GraphSpec GraphSpec::path(int n) {
  if (n < 1) throw std::invalid_argument("path: n must be >= 1");
  GraphSpec g;
  g.kind = GraphKind::path;
  g.n = n;
  g.edges.reserve(static_cast<size_t>(n) - 1);
  for (int i = 1; i < n; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

GraphSpec GraphSpec::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be >= 3 for a simple graph");
  GraphSpec g;
  g.kind = GraphKind::cycle;
  g.n = n;
  g.edges.reserve(static_cast<size_t>(n));
  for (int i = 1; i < n; ++i) g.edges.emplace_back(i, i + 1);
  g.edges.emplace_back(n, 1);
  return g;
}

GraphSpec GraphSpec::general(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) throw std::invalid_argument("general: n must be >= 1");
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw std::invalid_argument("general: vertex index out of range [1, n]");
    if (u == v) throw std::invalid_argument("general: loops are not allowed");
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second)
      throw std::invalid_argument("general: repeated edge");
  }
  GraphSpec g;
  g.kind = GraphKind::general;
  g.n = n;
  g.edges = std::move(edges);
  return g;
}

}  // namespace seg
