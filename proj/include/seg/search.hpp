#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "seg/labeling.hpp"

namespace seg {

enum class SearchMode { first, all, count };
enum class SearchOutcome { exists, impossible, inconclusive };

std::string to_string(SearchOutcome o);

/// Default upper bound on the edge count for exhaustive search.
inline constexpr int kDefaultHardCap = 15;

struct SearchOptions {
  SearchMode mode = SearchMode::first;
  /// Explore only labelings whose first nonzero label (in assignment order)
  /// is positive; sound because negation maps solutions to solutions.
  bool use_negation_reduction = true;
  /// Keep one representative per reversal pair. Effective on paths only;
  /// ignored for other kinds.
  bool use_reversal_reduction = true;
  std::optional<std::uint64_t> node_limit;
  std::optional<std::chrono::milliseconds> time_limit;
  /// Fan out over first-edge label choices. Any value produces byte-identical
  /// certificates; limits force sequential execution.
  int threads = 1;
  /// Overrides kDefaultHardCap.
  std::optional<int> hard_cap;
};

/// Thrown when the instance exceeds the exhaustive-search cap.
struct InstanceTooLarge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SearchCertificate {
  SearchOutcome outcome = SearchOutcome::impossible;
  /// First mode: the lexicographically least solution under the canonical
  /// label order 0 < 1 < -1 < 2 < -2 < ..., in assignment order.
  std::optional<EdgeLabeling> witness;
  /// All mode: one representative per orbit of the enabled reductions, in
  /// lexicographic order (the full solution set when reductions are off).
  std::vector<EdgeLabeling> solutions;
  std::uint64_t nodes_explored = 0;
  /// Representatives emitted (mode-dependent; 0 or 1 in first mode).
  std::uint64_t solutions_found = 0;
  /// Count/all modes: total solutions, recovered as the sum of orbit sizes.
  std::uint64_t raw_count = 0;
  /// Count/all modes: solutions up to the enabled reductions.
  std::uint64_t orbit_count = 0;
  /// Which symmetry quotient the counts refer to, with the multiplicity
  /// recovery spelled out.
  std::string orbit_note;
};

/// Exhaustive backtracking over bijective assignments of edge_alphabet(q) to
/// the edges of g. A branch is cut as soon as a fully-assigned vertex's sum
/// leaves vertex_alphabet(p) or duplicates another completed sum.
SearchCertificate search(const GraphSpec& g, const SearchOptions& opts = {});

/// Full enumeration; certificate carries raw_count and orbit_count.
SearchCertificate count_all(const GraphSpec& g, SearchOptions opts = {});

/// First-mode search with no limits: Exists or Impossible, never Inconclusive.
SearchCertificate certify(const GraphSpec& g);

}  // namespace seg
