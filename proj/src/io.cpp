#include "seg/io.hpp"

#include <limits>
#include <sstream>

#include "json.hpp"

namespace seg {

namespace {

using ordered_json = nlohmann::ordered_json;

int canonical_edge_count(const GraphSpec& g) {
  switch (g.kind) {
    case GraphKind::path: return g.n - 1;
    case GraphKind::cycle: return g.n;
    case GraphKind::general: return g.size();
  }
  return 0;
}

void check_consistent(const LabeledGraphDocument& doc) {
  if (doc.graph.n < 1) throw std::invalid_argument("document: graph.n must be >= 1");
  if (static_cast<int>(doc.edge_labels.size()) != canonical_edge_count(doc.graph))
    throw std::invalid_argument("document: edge_labels length does not match the edge count");
  if (doc.vertex_sums) {
    if (static_cast<int>(doc.vertex_sums->size()) != doc.graph.n)
      throw std::invalid_argument("document: vertex_sums length does not match n");
    if (*doc.vertex_sums != induced_sums(doc.graph, doc.edge_labels))
      throw std::invalid_argument("document: vertex_sums disagree with the induced sums");
  }
}

}  // namespace

std::string encode(const LabeledGraphDocument& doc) {
  check_consistent(doc);
  ordered_json j;
  ordered_json graph;
  graph["kind"] = to_string(doc.graph.kind);
  graph["n"] = doc.graph.n;
  if (doc.graph.kind == GraphKind::general) {
    ordered_json edges = ordered_json::array();
    for (const auto& [u, v] : doc.graph.edges) edges.push_back(ordered_json::array({u, v}));
    graph["edges"] = std::move(edges);
  }
  j["graph"] = std::move(graph);
  j["edge_labels"] = doc.edge_labels;
  if (doc.vertex_sums) j["vertex_sums"] = *doc.vertex_sums;
  if (doc.meta) {
    ordered_json meta;
    meta["case_id"] = to_string(doc.meta->case_id);
    if (doc.meta->k) meta["k"] = *doc.meta->k;
    meta["version"] = doc.meta->version;
    j["meta"] = std::move(meta);
  }
  return j.dump(2) + "\n";
}

namespace {

const ordered_json& require_field(const ordered_json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) throw DecodeError(path + ": missing required field '" + key + "'");
  return *it;
}

std::int64_t require_int(const ordered_json& j, const std::string& path) {
  if (!j.is_number_integer())
    throw DecodeError(path + ": expected an integer, got " + std::string(j.type_name()));
  return j.get<std::int64_t>();
}

Label require_label(const ordered_json& j, const std::string& path) {
  std::int64_t v = require_int(j, path);
  if (v < std::numeric_limits<Label>::min() || v > std::numeric_limits<Label>::max())
    throw DecodeError(path + ": label out of range");
  return static_cast<Label>(v);
}

}  // namespace

LabeledGraphDocument decode(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DecodeError(std::string("parse error at byte ") + std::to_string(e.byte) + ": " +
                      e.what());
  }
  if (!j.is_object()) throw DecodeError("document: expected a JSON object");

  LabeledGraphDocument doc;
  const auto& graph = require_field(j, "graph", "document");
  if (!graph.is_object()) throw DecodeError("graph: expected an object");

  const auto& kind = require_field(graph, "kind", "graph");
  if (!kind.is_string()) throw DecodeError("graph.kind: expected a string");
  std::string kind_s = kind.get<std::string>();

  std::int64_t n = require_int(require_field(graph, "n", "graph"), "graph.n");
  if (n < 1 || n > std::numeric_limits<int>::max())
    throw DecodeError("graph.n: out of range");

  if (kind_s == "path" || kind_s == "cycle") {
    if (graph.contains("edges"))
      throw DecodeError("graph.edges: only allowed for kind 'general'");
    try {
      doc.graph = kind_s == "path" ? GraphSpec::path(static_cast<int>(n))
                                   : GraphSpec::cycle(static_cast<int>(n));
    } catch (const std::invalid_argument& e) {
      throw DecodeError(std::string("graph: ") + e.what());
    }
  } else if (kind_s == "general") {
    const auto& edges = require_field(graph, "edges", "graph");
    if (!edges.is_array()) throw DecodeError("graph.edges: expected an array");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(edges.size());
    for (size_t i = 0; i < edges.size(); ++i) {
      std::string path = "graph.edges[" + std::to_string(i) + "]";
      const auto& e = edges[i];
      if (!e.is_array() || e.size() != 2)
        throw DecodeError(path + ": expected a [u, v] pair");
      std::int64_t u = require_int(e[0], path + "[0]");
      std::int64_t v = require_int(e[1], path + "[1]");
      pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    try {
      doc.graph = GraphSpec::general(static_cast<int>(n), std::move(pairs));
    } catch (const std::invalid_argument& e) {
      throw DecodeError(std::string("graph.edges: ") + e.what());
    }
  } else {
    throw DecodeError("graph.kind: unknown kind '" + kind_s + "'");
  }

  const auto& labels = require_field(j, "edge_labels", "document");
  if (!labels.is_array()) throw DecodeError("edge_labels: expected an array");
  if (static_cast<int>(labels.size()) != canonical_edge_count(doc.graph))
    throw DecodeError("edge_labels: expected " + std::to_string(canonical_edge_count(doc.graph)) +
                      " labels for this graph, got " + std::to_string(labels.size()));
  doc.edge_labels.reserve(labels.size());
  for (size_t i = 0; i < labels.size(); ++i)
    doc.edge_labels.push_back(require_label(labels[i], "edge_labels[" + std::to_string(i) + "]"));

  if (j.contains("vertex_sums")) {
    const auto& sums = j["vertex_sums"];
    if (!sums.is_array()) throw DecodeError("vertex_sums: expected an array");
    if (static_cast<int>(sums.size()) != doc.graph.n)
      throw DecodeError("vertex_sums: expected " + std::to_string(doc.graph.n) +
                        " entries, got " + std::to_string(sums.size()));
    VertexSumMap vs;
    vs.reserve(sums.size());
    for (size_t i = 0; i < sums.size(); ++i)
      vs.push_back(require_int(sums[i], "vertex_sums[" + std::to_string(i) + "]"));
    if (vs != induced_sums(doc.graph, doc.edge_labels))
      throw DecodeError("vertex_sums: disagree with the induced sums");
    doc.vertex_sums = std::move(vs);
  }

  if (j.contains("meta")) {
    const auto& meta = j["meta"];
    if (!meta.is_object()) throw DecodeError("meta: expected an object");
    DocumentMeta m;
    const auto& case_id = require_field(meta, "case_id", "meta");
    if (!case_id.is_string()) throw DecodeError("meta.case_id: expected a string");
    auto parsed = case_from_string(case_id.get<std::string>());
    if (!parsed)
      throw DecodeError("meta.case_id: unknown case '" + case_id.get<std::string>() + "'");
    m.case_id = *parsed;
    if (meta.contains("k")) {
      std::int64_t k = require_int(meta["k"], "meta.k");
      if (k < 1) throw DecodeError("meta.k: must be >= 1");
      m.k = static_cast<int>(k);
    }
    const auto& version = require_field(meta, "version", "meta");
    if (!version.is_string()) throw DecodeError("meta.version: expected a string");
    m.version = version.get<std::string>();
    doc.meta = std::move(m);
  }
  return doc;
}

std::string to_dot(const LabeledGraphDocument& doc) {
  check_consistent(doc);
  VertexSumMap sums = induced_sums(doc.graph, doc.edge_labels);
  char prefix = doc.graph.kind == GraphKind::path    ? 'P'
                : doc.graph.kind == GraphKind::cycle ? 'C'
                                                     : 'G';
  std::ostringstream out;
  out << "graph " << prefix << doc.graph.n << " {\n";
  for (int v = 1; v <= doc.graph.n; ++v)
    out << "  v" << v << " [label=\"v" << v << " : " << sums[static_cast<size_t>(v) - 1]
        << "\"];\n";
  for (size_t i = 0; i < doc.graph.edges.size(); ++i) {
    const auto& [u, v] = doc.graph.edges[i];
    out << "  v" << u << " -- v" << v << " [label=\"" << doc.edge_labels[i] << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += "\"\"";
    else quoted += c;
  }
  quoted += "\"";
  return quoted;
}

}  // namespace

std::string to_csv_table(const std::vector<SweepRow>& rows) {
  std::string out = "n,status,case,k,q,verified\n";
  for (const auto& row : rows) {
    out += std::to_string(row.n);
    out += ',';
    out += row.status == SweepStatus::supported ? "supported" : "unsupported";
    out += ',';
    out += csv_field(to_string(row.case_id));
    out += ',';
    if (row.k) out += std::to_string(*row.k);
    out += ',';
    out += std::to_string(row.q);
    out += ',';
    if (row.verified) out += *row.verified ? "true" : "false";
    out += '\n';
  }
  return out;
}

}  // namespace seg
