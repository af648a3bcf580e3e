#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "seg/labeling.hpp"

namespace seg {

enum class CaseId {
  odd_path,
  base6,
  base10,
  mod8_0,
  mod8_6,
  mod8_4,
  mod16_2,
  mod16_10,
  unsupported,
};

/// "Odd", "Base6", "Base10", "Mod8_0", "Mod8_6", "Mod8_4", "Mod16_2",
/// "Mod16_10", "Unsupported".
std::string to_string(CaseId id);
std::optional<CaseId> case_from_string(const std::string& s);

struct ConstructionPlan {
  CaseId case_id = CaseId::unsupported;
  std::optional<int> k;             // case parameter, mod8_*/mod16_* cases only
  std::vector<int> segment_orders;  // vertex counts of the glued pieces

  bool operator==(const ConstructionPlan&) const = default;
};

/// Thrown for n in {2,4}: no super edge-graceful labeling exists.
struct UnsupportedPath : std::invalid_argument {
  int n;
  explicit UnsupportedPath(int n_);
};

/// Picks the construction case for P_n. The branches partition all n >= 1:
/// Unsupported for n in {2,4}, Odd for odd n, Base6/Base10, and the five
/// residue cases (k >= 1) for the remaining even n.
ConstructionPlan classify(int n);

/// (m, -1, m-1, -2, ..., 1, -m) over P_{2m+1}; induced sums are m, m-1, ..., -m.
EdgeLabeling zigzag_odd(int m);

/// Half labeling for n = 8k: labels P_{4k}; glued with its negation it covers
/// edge_alphabet(8k-1) \ {0}.
EdgeLabeling half_mod8_0(int k);

/// Half labeling for n = 8k+6: labels P_{4k+3}.
EdgeLabeling half_mod8_6(int k);

/// Segment pair for n = 8k+4: P_{4k+3} and P_{4k+1} with disjoint label sets
/// whose union with {0} is edge_alphabet(8k+3).
std::pair<EdgeLabeling, EdgeLabeling> segments_mod8_4(int k);

/// Segment pair for n = 16k+2: P_{8k+2} and P_{8k}.
std::pair<EdgeLabeling, EdgeLabeling> segments_mod16_2(int k);

/// Segment pair for n = 16k+10: P_{8k+6} and P_{8k+4}.
std::pair<EdgeLabeling, EdgeLabeling> segments_mod16_10(int k);

/// A super edge-graceful labeling of P_n for any n >= 1 except 2 and 4
/// (throws UnsupportedPath for those).
EdgeLabeling construct_path(int n);

/// A super edge-graceful labeling of C_n for odd n >= 3: the P_n labeling
/// closed by a 0-labeled edge.
std::pair<GraphSpec, EdgeLabeling> construct_cycle(int n);

}  // namespace seg
