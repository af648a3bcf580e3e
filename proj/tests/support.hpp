#pragma once

#include <algorithm>
#include <vector>

#include "seg/labeling.hpp"

// Independent ground truth for the search oracle: try every permutation of
// the edge alphabet and keep the assignments the definitional verifier
// accepts. Only usable for small edge counts.
inline std::vector<seg::EdgeLabeling> brute_force_solutions(const seg::GraphSpec& g) {
  std::vector<seg::Label> labels = seg::edge_alphabet(g.size()).members();
  std::sort(labels.begin(), labels.end());
  std::vector<seg::EdgeLabeling> out;
  do {
    if (seg::verify(g, labels).passed) out.push_back(labels);
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}
