#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "seg/graph.hpp"

namespace seg {

using Label = std::int32_t;
using Sum = std::int64_t;

/// Edge labels aligned with a GraphSpec's edge order.
using EdgeLabeling = std::vector<Label>;

/// Induced vertex sums; element i belongs to vertex i+1.
using VertexSumMap = std::vector<Sum>;

/// The signed label set {0} u {+-1..+-h} (zero_included) or {+-1..+-h}.
struct LabelAlphabet {
  bool zero_included = false;
  Label half_range = 0;

  std::int64_t count() const {
    return 2 * static_cast<std::int64_t>(half_range) + (zero_included ? 1 : 0);
  }
  bool contains(Sum value) const {
    if (value == 0) return zero_included;
    return value >= -static_cast<Sum>(half_range) && value <= static_cast<Sum>(half_range);
  }
  /// Members in canonical label order 0, 1, -1, 2, -2, ...
  std::vector<Label> members() const;

  bool operator==(const LabelAlphabet&) const = default;
};

/// {0,+-1..+-(q-1)/2} for odd q, {+-1..+-q/2} for even q. |result| = q.
LabelAlphabet edge_alphabet(std::int64_t q);
/// {0,+-1..+-(p-1)/2} for odd p, {+-1..+-p/2} for even p. |result| = p.
LabelAlphabet vertex_alphabet(std::int64_t p);

/// Canonical label order 0 < 1 < -1 < 2 < -2 < ...
bool label_less(Label a, Label b);
bool labeling_lex_less(const EdgeLabeling& a, const EdgeLabeling& b);

enum class CheckResult { ok, wrong_multiset, duplicate };

std::string to_string(CheckResult r);

struct VerificationReport {
  bool passed = false;
  CheckResult edge_check = CheckResult::ok;
  CheckResult vertex_check = CheckResult::ok;
  /// First failure in check order: the offending edge label when the edge
  /// stage fails, otherwise the offending 1-based vertex index.
  std::optional<Sum> witness;
  VertexSumMap vertex_sums;
};

/// Sum of incident edge labels per vertex.
VertexSumMap induced_sums(const GraphSpec& g, const EdgeLabeling& labels);

/// Checks both bijection conditions: labels realize edge_alphabet(q) and
/// induced sums realize vertex_alphabet(p), each without duplicates.
VerificationReport verify(const GraphSpec& g, const EdgeLabeling& labels);

/// Element-wise negation (the inverse labeling).
EdgeLabeling negated(const EdgeLabeling& labels);

/// Label sequence of a path traversed from the other end. Paths only.
EdgeLabeling reversed(const GraphSpec& g, const EdgeLabeling& labels);

/// a ++ (0) ++ b; the joining 0 edge changes no vertex sum. Inputs must not
/// contain 0.
EdgeLabeling concat_with_zero(const EdgeLabeling& a, const EdgeLabeling& b);

/// Closes a zero-free path labeling of P_n (n odd, n >= 3) into C_n by
/// appending a 0-labeled edge between x_n and x_1.
std::pair<GraphSpec, EdgeLabeling> close_cycle_with_zero(const EdgeLabeling& path_labels);

}  // namespace seg
