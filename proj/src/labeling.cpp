#include "seg/labeling.hpp"

#include <algorithm>
#include <limits>

namespace seg {

namespace {

LabelAlphabet make_alphabet(std::int64_t count) {
  LabelAlphabet a;
  a.zero_included = (count % 2) != 0;
  std::int64_t half = count / 2;
  if (half > std::numeric_limits<Label>::max())
    throw std::invalid_argument("alphabet half-range exceeds the label bound");
  a.half_range = static_cast<Label>(half);
  return a;
}

}  // namespace

std::vector<Label> LabelAlphabet::members() const {
  std::vector<Label> out;
  out.reserve(static_cast<size_t>(count()));
  if (zero_included) out.push_back(0);
  for (Label v = 1; v <= half_range; ++v) {
    out.push_back(v);
    out.push_back(-v);
  }
  return out;
}

LabelAlphabet edge_alphabet(std::int64_t q) {
  if (q < 0) throw std::invalid_argument("edge_alphabet: q must be >= 0");
  return make_alphabet(q);
}

LabelAlphabet vertex_alphabet(std::int64_t p) {
  if (p < 1) throw std::invalid_argument("vertex_alphabet: p must be >= 1");
  return make_alphabet(p);
}

bool label_less(Label a, Label b) {
  auto key = [](Label v) {
    return std::pair<std::int64_t, int>(v < 0 ? -static_cast<std::int64_t>(v)
                                              : static_cast<std::int64_t>(v),
                                        v < 0 ? 1 : 0);
  };
  return key(a) < key(b);
}

bool labeling_lex_less(const EdgeLabeling& a, const EdgeLabeling& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), label_less);
}

std::string to_string(CheckResult r) {
  switch (r) {
    case CheckResult::ok: return "ok";
    case CheckResult::wrong_multiset: return "wrong_multiset";
    case CheckResult::duplicate: return "duplicate";
  }
  return "?";
}

VertexSumMap induced_sums(const GraphSpec& g, const EdgeLabeling& labels) {
  if (labels.size() != g.edges.size())
    throw std::invalid_argument("induced_sums: labeling length does not match edge count");
  VertexSumMap sums(static_cast<size_t>(g.n), 0);
  for (size_t i = 0; i < g.edges.size(); ++i) {
    sums[static_cast<size_t>(g.edges[i].first) - 1] += labels[i];
    sums[static_cast<size_t>(g.edges[i].second) - 1] += labels[i];
  }
  return sums;
}

namespace {

// Scans values against an alphabet with a direct-addressed occupancy table.
// Returns the first failure and its offending value/index.
template <typename Seq, typename Witness>
CheckResult realizes_alphabet(const Seq& values, const LabelAlphabet& alpha,
                              Witness witness_of, std::optional<Sum>& witness) {
  std::vector<char> used(2 * static_cast<size_t>(alpha.half_range) + 1, 0);
  for (size_t i = 0; i < values.size(); ++i) {
    Sum v = values[i];
    if (!alpha.contains(v)) {
      witness = witness_of(i, v);
      return CheckResult::wrong_multiset;
    }
    size_t slot = static_cast<size_t>(v + alpha.half_range);
    if (used[slot]) {
      witness = witness_of(i, v);
      return CheckResult::duplicate;
    }
    used[slot] = 1;
  }
  return CheckResult::ok;
}

}  // namespace

VerificationReport verify(const GraphSpec& g, const EdgeLabeling& labels) {
  if (labels.size() != g.edges.size())
    throw std::invalid_argument("verify: labeling length does not match edge count");

  VerificationReport report;
  report.vertex_sums = induced_sums(g, labels);

  // |labels| == q and |sums| == p by construction, so duplicate-free
  // containment in the alphabet is already a bijection.
  std::optional<Sum> edge_witness;
  report.edge_check = realizes_alphabet(
      labels, edge_alphabet(g.size()),
      [](size_t, Sum v) { return v; }, edge_witness);

  std::optional<Sum> vertex_witness;
  report.vertex_check = realizes_alphabet(
      report.vertex_sums, vertex_alphabet(g.n),
      [](size_t i, Sum) { return static_cast<Sum>(i) + 1; }, vertex_witness);

  report.passed =
      report.edge_check == CheckResult::ok && report.vertex_check == CheckResult::ok;
  report.witness = report.edge_check != CheckResult::ok ? edge_witness : vertex_witness;
  return report;
}

EdgeLabeling negated(const EdgeLabeling& labels) {
  EdgeLabeling out(labels.size());
  std::transform(labels.begin(), labels.end(), out.begin(), [](Label v) { return -v; });
  return out;
}

EdgeLabeling reversed(const GraphSpec& g, const EdgeLabeling& labels) {
  if (g.kind != GraphKind::path)
    throw std::invalid_argument("reversed: defined for path labelings only");
  if (labels.size() != g.edges.size())
    throw std::invalid_argument("reversed: labeling length does not match edge count");
  return EdgeLabeling(labels.rbegin(), labels.rend());
}

EdgeLabeling concat_with_zero(const EdgeLabeling& a, const EdgeLabeling& b) {
  auto has_zero = [](const EdgeLabeling& v) {
    return std::find(v.begin(), v.end(), 0) != v.end();
  };
  if (has_zero(a) || has_zero(b))
    throw std::invalid_argument("concat_with_zero: inputs must not contain 0");
  EdgeLabeling out;
  out.reserve(a.size() + b.size() + 1);
  out.insert(out.end(), a.begin(), a.end());
  out.push_back(0);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::pair<GraphSpec, EdgeLabeling> close_cycle_with_zero(const EdgeLabeling& path_labels) {
  int n = static_cast<int>(path_labels.size()) + 1;
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("close_cycle_with_zero: requires odd n >= 3");
  if (std::find(path_labels.begin(), path_labels.end(), 0) != path_labels.end())
    throw std::invalid_argument("close_cycle_with_zero: path labeling must not contain 0");
  EdgeLabeling labels = path_labels;
  labels.push_back(0);
  return {GraphSpec::cycle(n), std::move(labels)};
}

}  // namespace seg
