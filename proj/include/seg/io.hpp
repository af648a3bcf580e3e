#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "seg/construct.hpp"
#include "seg/labeling.hpp"

namespace seg {

inline constexpr const char* kFormatVersion = "1";

struct DocumentMeta {
  CaseId case_id = CaseId::unsupported;
  std::optional<int> k;
  std::string version = kFormatVersion;

  bool operator==(const DocumentMeta&) const = default;
};

/// A labeled graph as persisted in .seg.json files. Edge labels follow the
/// graph's canonical edge order; general graphs persist their edge list.
struct LabeledGraphDocument {
  GraphSpec graph;
  EdgeLabeling edge_labels;
  std::optional<VertexSumMap> vertex_sums;
  std::optional<DocumentMeta> meta;

  bool operator==(const LabeledGraphDocument&) const = default;
};

struct DecodeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Canonical UTF-8 serialization: fixed key order, integers only, 2-space
/// indent, newline-terminated. Byte-stable across runs.
std::string encode(const LabeledGraphDocument& doc);

/// Parses canonical and non-canonical key orders. Rejects unknown kinds,
/// non-integer labels, length mismatches, and (when present) vertex_sums
/// that disagree with the induced sums.
LabeledGraphDocument decode(const std::string& text);

/// Undirected DOT with vertices labeled "v<i> : <sum>" and edges labeled
/// with their signed label. Deterministic node and edge order.
std::string to_dot(const LabeledGraphDocument& doc);

enum class SweepStatus { supported, unsupported };

struct SweepRow {
  int n = 0;
  SweepStatus status = SweepStatus::unsupported;
  CaseId case_id = CaseId::unsupported;
  std::optional<int> k;
  int q = 0;
  std::optional<bool> verified;  // empty for unsupported rows
};

/// Header "n,status,case,k,q,verified" plus one row per entry, RFC-4180
/// style quoting, LF line endings.
std::string to_csv_table(const std::vector<SweepRow>& rows);

}  // namespace seg
