#include "seg/construct.hpp"

#include <array>

namespace seg {

std::string to_string(CaseId id) {
  switch (id) {
    case CaseId::odd_path: return "Odd";
    case CaseId::base6: return "Base6";
    case CaseId::base10: return "Base10";
    case CaseId::mod8_0: return "Mod8_0";
    case CaseId::mod8_6: return "Mod8_6";
    case CaseId::mod8_4: return "Mod8_4";
    case CaseId::mod16_2: return "Mod16_2";
    case CaseId::mod16_10: return "Mod16_10";
    case CaseId::unsupported: return "Unsupported";
  }
  return "?";
}

std::optional<CaseId> case_from_string(const std::string& s) {
  static constexpr std::array<CaseId, 9> all = {
      CaseId::odd_path, CaseId::base6,   CaseId::base10,
      CaseId::mod8_0,   CaseId::mod8_6,  CaseId::mod8_4,
      CaseId::mod16_2,  CaseId::mod16_10, CaseId::unsupported,
  };
  for (CaseId id : all)
    if (to_string(id) == s) return id;
  return std::nullopt;
}

UnsupportedPath::UnsupportedPath(int n_)
    : std::invalid_argument(
          n_ == 2 ? "P_2 is not super edge-graceful: its single edge is forced to "
                    "label 0, giving both endpoints sum 0, but the vertex alphabet "
                    "is {-1,1}"
                  : "P_4 is not super edge-graceful: the edge alphabet {-1,0,1} "
                    "cannot produce the endpoint sums 2 and -2 required by the "
                    "vertex alphabet {-2,-1,1,2}"),
      n(n_) {}

ConstructionPlan classify(int n) {
  if (n < 1) throw std::invalid_argument("classify: n must be >= 1");
  ConstructionPlan plan;
  if (n == 2 || n == 4) {
    plan.case_id = CaseId::unsupported;
    return plan;
  }
  if (n % 2 == 1) {
    plan.case_id = CaseId::odd_path;
    plan.segment_orders = {n};
    return plan;
  }
  if (n == 6) {
    plan.case_id = CaseId::base6;
    plan.segment_orders = {n};
    return plan;
  }
  if (n == 10) {
    plan.case_id = CaseId::base10;
    plan.segment_orders = {n};
    return plan;
  }
  switch (n % 8) {
    case 0:
      plan.case_id = CaseId::mod8_0;
      plan.k = n / 8;
      plan.segment_orders = {n / 2, n / 2};
      return plan;
    case 6:
      plan.case_id = CaseId::mod8_6;
      plan.k = (n - 6) / 8;
      plan.segment_orders = {n / 2, n / 2};
      return plan;
    case 4:
      plan.case_id = CaseId::mod8_4;
      plan.k = (n - 4) / 8;
      plan.segment_orders = {n / 2 + 1, n / 2 - 1};
      return plan;
    default:  // n == 2 (mod 8), split by mod 16
      if (n % 16 == 2) {
        plan.case_id = CaseId::mod16_2;
        plan.k = (n - 2) / 16;
      } else {
        plan.case_id = CaseId::mod16_10;
        plan.k = (n - 10) / 16;
      }
      plan.segment_orders = {n / 2 + 1, n / 2 - 1};
      return plan;
  }
}

EdgeLabeling zigzag_odd(int m) {
  if (m < 1) throw std::invalid_argument("zigzag_odd: m must be >= 1");
  EdgeLabeling out;
  out.reserve(2 * static_cast<size_t>(m));
  for (int i = 1; i <= m; ++i) {
    out.push_back(m + 1 - i);
    out.push_back(-i);
  }
  return out;
}

EdgeLabeling half_mod8_0(int k) {
  if (k < 1) throw std::invalid_argument("half_mod8_0: k must be >= 1");
  EdgeLabeling out;
  out.reserve(4 * static_cast<size_t>(k) - 1);
  for (int j = 1; j <= k - 1; ++j) {
    out.push_back(4 * k - j);
    out.push_back(-j);
  }
  out.push_back(3 * k);
  for (int j = 0; j <= k - 1; ++j) {
    out.push_back(k + j);
    out.push_back(-(3 * k - 1 - j));
  }
  return out;
}

EdgeLabeling half_mod8_6(int k) {
  if (k < 1) throw std::invalid_argument("half_mod8_6: k must be >= 1");
  EdgeLabeling out;
  out.reserve(4 * static_cast<size_t>(k) + 2);
  for (int j = 1; j <= k; ++j) {
    out.push_back(4 * k + 3 - j);
    out.push_back(-j);
  }
  out.push_back(3 * k + 2);
  for (int j = 1; j <= k; ++j) {
    out.push_back(k + j);
    out.push_back(-(3 * k + 2 - j));
  }
  out.push_back(2 * k + 1);
  return out;
}

std::pair<EdgeLabeling, EdgeLabeling> segments_mod8_4(int k) {
  if (k < 1) throw std::invalid_argument("segments_mod8_4: k must be >= 1");
  EdgeLabeling q1;
  q1.reserve(4 * static_cast<size_t>(k) + 2);
  for (int j = 1; j <= k; ++j) {
    q1.push_back(2 * k + 2 - j);
    q1.push_back(-(2 * k + 1 + j));
  }
  q1.push_back(k + 1);
  for (int j = 1; j <= k; ++j) {
    q1.push_back(3 * k + 2 - j);
    q1.push_back(-(k + j));
  }
  q1.push_back(-(2 * k + 1));

  EdgeLabeling q2;
  q2.reserve(4 * static_cast<size_t>(k));
  for (int j = 1; j <= k; ++j) {
    q2.push_back(4 * k + 2 - j);
    q2.push_back(-j);
  }
  for (int j = 1; j <= k; ++j) {
    q2.push_back(-(3 * k + 1 + j));
    q2.push_back(k + 1 - j);
  }
  return {std::move(q1), std::move(q2)};
}

namespace {

// Alternates positives and negatives starting with a positive, then emits
// whatever stream is left in its own order.
EdgeLabeling interleave(const EdgeLabeling& pos, const EdgeLabeling& neg) {
  EdgeLabeling out;
  out.reserve(pos.size() + neg.size());
  size_t i = 0, j = 0;
  while (i < pos.size() && j < neg.size()) {
    out.push_back(pos[i++]);
    out.push_back(neg[j++]);
  }
  out.insert(out.end(), pos.begin() + static_cast<std::ptrdiff_t>(i), pos.end());
  out.insert(out.end(), neg.begin() + static_cast<std::ptrdiff_t>(j), neg.end());
  return out;
}

}  // namespace

std::pair<EdgeLabeling, EdgeLabeling> segments_mod16_2(int k) {
  if (k < 1) throw std::invalid_argument("segments_mod16_2: k must be >= 1");
  EdgeLabeling q3;
  q3.reserve(8 * static_cast<size_t>(k) + 1);
  for (int j = 0; j <= 2 * k - 1; ++j) {
    q3.push_back(4 * k - j);
    q3.push_back(-(4 * k + 1 + j));
  }
  q3.push_back(2 * k - 1);
  for (int j = 1; j <= 2 * k - 1; ++j) {
    q3.push_back(6 * k + 1 - j);
    q3.push_back(-(2 * k + j));
  }
  q3.push_back(4 * k + 1);
  q3.push_back(-4 * k);

  EdgeLabeling q4;
  q4.reserve(8 * static_cast<size_t>(k) - 1);
  for (int j = 0; j <= 2 * k - 2; ++j) {
    q4.push_back(8 * k - j);
    q4.push_back(-(2 + j));
  }
  q4.push_back(6 * k + 1);
  EdgeLabeling pos{static_cast<Label>(2 * k)};
  for (int i = k - 1; i >= 1; --i) {
    pos.push_back(2 * i - 1);
    pos.push_back(2 * i);
  }
  EdgeLabeling neg;
  for (int i = 1; i <= k - 1; ++i) {
    neg.push_back(-(6 * k + 2 * i));
    neg.push_back(-(6 * k + 2 * i - 1));
  }
  neg.push_back(-8 * k);
  neg.push_back(-1);
  neg.push_back(-(8 * k - 1));
  EdgeLabeling tail = interleave(pos, neg);
  q4.insert(q4.end(), tail.begin(), tail.end());
  return {std::move(q3), std::move(q4)};
}

std::pair<EdgeLabeling, EdgeLabeling> segments_mod16_10(int k) {
  if (k < 1) throw std::invalid_argument("segments_mod16_10: k must be >= 1");
  EdgeLabeling q5;
  q5.reserve(8 * static_cast<size_t>(k) + 5);
  for (int j = 0; j <= 2 * k; ++j) {
    q5.push_back(4 * k + 2 - j);
    q5.push_back(-(4 * k + 3 + j));
  }
  q5.push_back(2 * k);
  for (int j = 0; j <= 2 * k; ++j) {
    q5.push_back(6 * k + 3 - j);
    q5.push_back(-(2 * k + 2 + j));
  }

  EdgeLabeling q6;
  q6.reserve(8 * static_cast<size_t>(k) + 3);
  for (int j = 0; j <= 2 * k - 1; ++j) {
    q6.push_back(8 * k + 4 - j);
    q6.push_back(-(2 + j));
  }
  q6.push_back(6 * k + 4);
  EdgeLabeling pos{static_cast<Label>(2 * k + 1)};
  for (int i = k - 1; i >= 1; --i) {
    pos.push_back(2 * i);
    pos.push_back(2 * i + 1);
  }
  pos.push_back(1);
  EdgeLabeling neg;
  for (int i = 1; i <= k; ++i) {
    neg.push_back(-(6 * k + 2 * i + 3));
    neg.push_back(-(6 * k + 2 * i + 2));
  }
  neg.push_back(-1);
  neg.push_back(-(8 * k + 4));
  EdgeLabeling tail = interleave(pos, neg);
  q6.insert(q6.end(), tail.begin(), tail.end());
  return {std::move(q5), std::move(q6)};
}

EdgeLabeling construct_path(int n) {
  ConstructionPlan plan = classify(n);
  switch (plan.case_id) {
    case CaseId::unsupported:
      throw UnsupportedPath(n);
    case CaseId::odd_path:
      if (n == 1) return {};  // P_1 is vacuously super edge-graceful
      return zigzag_odd((n - 1) / 2);
    case CaseId::base6:
      return {1, 2, 0, -2, -1};
    case CaseId::base10:
      return {4, 1, -4, 0, 3, -1, 2, -3, -2};
    case CaseId::mod8_0: {
      EdgeLabeling half = half_mod8_0(*plan.k);
      return concat_with_zero(half, negated(half));
    }
    case CaseId::mod8_6: {
      EdgeLabeling half = half_mod8_6(*plan.k);
      return concat_with_zero(half, negated(half));
    }
    case CaseId::mod8_4: {
      auto [q1, q2] = segments_mod8_4(*plan.k);
      return concat_with_zero(q1, q2);
    }
    case CaseId::mod16_2: {
      auto [q3, q4] = segments_mod16_2(*plan.k);
      return concat_with_zero(q3, q4);
    }
    case CaseId::mod16_10: {
      auto [q5, q6] = segments_mod16_10(*plan.k);
      return concat_with_zero(q5, q6);
    }
  }
  throw std::logic_error("construct_path: unreachable");
}

std::pair<GraphSpec, EdgeLabeling> construct_cycle(int n) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("construct_cycle: only odd n >= 3 is supported");
  return close_cycle_with_zero(construct_path(n));
}

}  // namespace seg
