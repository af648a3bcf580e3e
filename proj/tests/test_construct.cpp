#include <numeric>
#include <set>

#include "doctest.h"
#include "seg/construct.hpp"

using namespace seg;

namespace {

std::set<Label> as_set(const EdgeLabeling& l) { return {l.begin(), l.end()}; }

std::set<Label> alphabet_set(int q) {
  auto members = edge_alphabet(q).members();
  return {members.begin(), members.end()};
}

}  // namespace

TEST_CASE("classify picks the right case") {
  CHECK(classify(16).case_id == CaseId::mod8_0);
  CHECK(classify(16).k == 2);
  CHECK(classify(26).case_id == CaseId::mod16_10);
  CHECK(classify(26).k == 1);
  CHECK(classify(4).case_id == CaseId::unsupported);
  CHECK(classify(2).case_id == CaseId::unsupported);
  CHECK(classify(1).case_id == CaseId::odd_path);
  CHECK(classify(6).case_id == CaseId::base6);
  CHECK(classify(10).case_id == CaseId::base10);
  CHECK(classify(12).case_id == CaseId::mod8_4);
  CHECK(classify(14).case_id == CaseId::mod8_6);
  CHECK(classify(18).case_id == CaseId::mod16_2);
  CHECK(classify(18).k == 1);
  CHECK(classify(8).segment_orders == std::vector<int>{4, 4});
  CHECK(classify(18).segment_orders == std::vector<int>{10, 8});
  CHECK(classify(12).segment_orders == std::vector<int>{7, 5});
  CHECK_THROWS_AS(classify(0), std::invalid_argument);
}

TEST_CASE("classify partitions all n: plans are internally consistent") {
  for (int n = 1; n <= 2000; ++n) {
    ConstructionPlan plan = classify(n);
    if (plan.case_id == CaseId::unsupported) {
      CHECK((n == 2 || n == 4));
      continue;
    }
    int total = std::accumulate(plan.segment_orders.begin(), plan.segment_orders.end(), 0);
    CHECK(total == n);
    switch (plan.case_id) {
      case CaseId::odd_path:
        CHECK(n % 2 == 1);
        CHECK_FALSE(plan.k.has_value());
        break;
      case CaseId::base6:
        CHECK(n == 6);
        break;
      case CaseId::base10:
        CHECK(n == 10);
        break;
      case CaseId::mod8_0:
        CHECK(n == 8 * *plan.k);
        break;
      case CaseId::mod8_6:
        CHECK(n == 8 * *plan.k + 6);
        break;
      case CaseId::mod8_4:
        CHECK(n == 8 * *plan.k + 4);
        break;
      case CaseId::mod16_2:
        CHECK(n == 16 * *plan.k + 2);
        break;
      case CaseId::mod16_10:
        CHECK(n == 16 * *plan.k + 10);
        break;
      case CaseId::unsupported:
        break;
    }
    if (plan.k) CHECK(*plan.k >= 1);
  }
}

TEST_CASE("zigzag_odd closed form") {
  CHECK(zigzag_odd(1) == EdgeLabeling{1, -1});
  CHECK(zigzag_odd(2) == EdgeLabeling{2, -1, 1, -2});
  CHECK(zigzag_odd(4) == EdgeLabeling{4, -1, 3, -2, 2, -3, 1, -4});
  CHECK(induced_sums(GraphSpec::path(3), zigzag_odd(1)) == VertexSumMap{1, 0, -1});
  CHECK(induced_sums(GraphSpec::path(5), zigzag_odd(2)) == VertexSumMap{2, 1, 0, -1, -2});
  CHECK_THROWS_AS(zigzag_odd(0), std::invalid_argument);
}

TEST_CASE("zigzag sums descend from m to -m") {
  for (int m = 1; m <= 200; ++m) {
    EdgeLabeling l = zigzag_odd(m);
    REQUIRE(static_cast<int>(l.size()) == 2 * m);
    VertexSumMap sums = induced_sums(GraphSpec::path(2 * m + 1), l);
    for (int j = 1; j <= 2 * m + 1; ++j) CHECK(sums[static_cast<size_t>(j) - 1] == m + 1 - j);
    CHECK(verify(GraphSpec::path(2 * m + 1), l).passed);
  }
}

TEST_CASE("half_mod8_0 frozen expansions") {
  CHECK(half_mod8_0(1) == EdgeLabeling{3, 1, -2});
  CHECK(half_mod8_0(2) == EdgeLabeling{7, -1, 6, 2, -5, 3, -4});
  CHECK(half_mod8_0(3) == EdgeLabeling{11, -1, 10, -2, 9, 3, -8, 4, -7, 5, -6});
  CHECK_THROWS_AS(half_mod8_0(0), std::invalid_argument);
}

TEST_CASE("half_mod8_6 frozen expansions") {
  CHECK(half_mod8_6(1) == EdgeLabeling{6, -1, 5, 2, -4, 3});
  CHECK(half_mod8_6(2) == EdgeLabeling{10, -1, 9, -2, 8, 3, -7, 4, -6, 5});
  CHECK(half_mod8_6(3) == EdgeLabeling{14, -1, 13, -2, 12, -3, 11, 4, -10, 5, -9, 6, -8, 7});
  CHECK_THROWS_AS(half_mod8_6(0), std::invalid_argument);
}

TEST_CASE("segments_mod8_4 frozen expansions") {
  auto [q1a, q2a] = segments_mod8_4(1);
  CHECK(q1a == EdgeLabeling{3, -4, 2, 4, -2, -3});
  CHECK(q2a == EdgeLabeling{5, -1, -5, 1});
  auto [q1b, q2b] = segments_mod8_4(2);
  CHECK(q1b == EdgeLabeling{5, -6, 4, -7, 3, 7, -3, 6, -4, -5});
  CHECK(q2b == EdgeLabeling{9, -1, 8, -2, -8, 2, -9, 1});
  auto [q1c, q2c] = segments_mod8_4(3);
  CHECK(q1c == EdgeLabeling{7, -8, 6, -9, 5, -10, 4, 10, -4, 9, -5, 8, -6, -7});
  CHECK(q2c == EdgeLabeling{13, -1, 12, -2, 11, -3, -11, 3, -12, 2, -13, 1});
  CHECK_THROWS_AS(segments_mod8_4(0), std::invalid_argument);
}

TEST_CASE("segments_mod16_2 frozen expansions") {
  auto [q3a, q4a] = segments_mod16_2(1);
  CHECK(q3a == EdgeLabeling{4, -5, 3, -6, 1, 6, -3, 5, -4});
  CHECK(q4a == EdgeLabeling{8, -2, 7, 2, -8, -1, -7});
  auto [q3b, q4b] = segments_mod16_2(2);
  CHECK(q3b == EdgeLabeling{8, -9, 7, -10, 6, -11, 5, -12, 3, 12, -5, 11, -6, 10, -7, 9, -8});
  CHECK(q4b == EdgeLabeling{16, -2, 15, -3, 14, -4, 13, 4, -14, 1, -13, 2, -16, -1, -15});
  auto [q3c, q4c] = segments_mod16_2(3);
  CHECK(q4c == EdgeLabeling{24, -2, 23, -3, 22, -4, 21, -5, 20, -6, 19,
                            6,  -20, 3, -19, 4, -22, 1, -21, 2, -24, -1, -23});
  CHECK(static_cast<int>(q3c.size()) == 25);
  CHECK_THROWS_AS(segments_mod16_2(0), std::invalid_argument);
}

TEST_CASE("segments_mod16_10 frozen expansions") {
  auto [q5a, q6a] = segments_mod16_10(1);
  CHECK(q5a == EdgeLabeling{6, -7, 5, -8, 4, -9, 2, 9, -4, 8, -5, 7, -6});
  CHECK(q6a == EdgeLabeling{12, -2, 11, -3, 10, 3, -11, 1, -10, -1, -12});
  auto [q5b, q6b] = segments_mod16_10(2);
  CHECK(q5b == EdgeLabeling{10, -11, 9, -12, 8, -13, 7, -14, 6, -15, 4,
                            15, -6,  14, -7, 13, -8, 12, -9, 11, -10});
  CHECK(q6b == EdgeLabeling{20, -2, 19, -3, 18, -4, 17, -5, 16, 5, -17, 2, -16, 3, -19, 1, -18,
                            -1, -20});
  auto [q5c, q6c] = segments_mod16_10(3);
  CHECK(q6c == EdgeLabeling{28, -2, 27, -3, 26, -4, 25, -5, 24, -6, 23, -7, 22,
                            7,  -23, 4, -22, 5, -25, 2, -24, 3, -27, 1, -26, -1, -28});
  CHECK(static_cast<int>(q5c.size()) == 29);
  CHECK_THROWS_AS(segments_mod16_10(0), std::invalid_argument);
}

TEST_CASE("halves and their negations partition the edge alphabet") {
  for (int k = 1; k <= 50; ++k) {
    EdgeLabeling h0 = half_mod8_0(k);
    REQUIRE(static_cast<int>(h0.size()) == 4 * k - 1);
    std::set<Label> both = as_set(h0);
    for (Label v : h0) both.insert(-v);
    both.insert(0);
    CHECK(both == alphabet_set(8 * k - 1));
    CHECK(as_set(h0).size() == h0.size());

    EdgeLabeling h6 = half_mod8_6(k);
    REQUIRE(static_cast<int>(h6.size()) == 4 * k + 2);
    std::set<Label> both6 = as_set(h6);
    for (Label v : h6) both6.insert(-v);
    both6.insert(0);
    CHECK(both6 == alphabet_set(8 * k + 5));
    CHECK(as_set(h6).size() == h6.size());
  }
}

TEST_CASE("segment pairs are disjoint and complete the edge alphabet") {
  for (int k = 1; k <= 50; ++k) {
    {
      auto [q1, q2] = segments_mod8_4(k);
      REQUIRE(static_cast<int>(q1.size()) == 4 * k + 2);
      REQUIRE(static_cast<int>(q2.size()) == 4 * k);
      std::set<Label> s1 = as_set(q1), s2 = as_set(q2);
      CHECK(s1.size() == q1.size());
      CHECK(s2.size() == q2.size());
      std::set<Label> all = s1;
      all.insert(s2.begin(), s2.end());
      CHECK(all.size() == s1.size() + s2.size());
      all.insert(0);
      CHECK(all == alphabet_set(8 * k + 3));
    }
    {
      auto [q3, q4] = segments_mod16_2(k);
      REQUIRE(static_cast<int>(q3.size()) == 8 * k + 1);
      REQUIRE(static_cast<int>(q4.size()) == 8 * k - 1);
      std::set<Label> s3 = as_set(q3), s4 = as_set(q4);
      CHECK(s3.size() == q3.size());
      CHECK(s4.size() == q4.size());
      std::set<Label> all = s3;
      all.insert(s4.begin(), s4.end());
      CHECK(all.size() == s3.size() + s4.size());
      all.insert(0);
      CHECK(all == alphabet_set(16 * k + 1));
    }
    {
      auto [q5, q6] = segments_mod16_10(k);
      REQUIRE(static_cast<int>(q5.size()) == 8 * k + 5);
      REQUIRE(static_cast<int>(q6.size()) == 8 * k + 3);
      std::set<Label> s5 = as_set(q5), s6 = as_set(q6);
      CHECK(s5.size() == q5.size());
      CHECK(s6.size() == q6.size());
      std::set<Label> all = s5;
      all.insert(s6.begin(), s6.end());
      CHECK(all.size() == s5.size() + s6.size());
      all.insert(0);
      CHECK(all == alphabet_set(16 * k + 9));
    }
  }
}

TEST_CASE("construct_path emits the published base labelings") {
  CHECK(construct_path(6) == EdgeLabeling{1, 2, 0, -2, -1});
  CHECK(construct_path(10) == EdgeLabeling{4, 1, -4, 0, 3, -1, 2, -3, -2});
  CHECK(construct_path(8) == EdgeLabeling{3, 1, -2, 0, -3, -1, 2});
  CHECK(construct_path(12) == EdgeLabeling{3, -4, 2, 4, -2, -3, 0, 5, -1, -5, 1});
  CHECK(construct_path(1).empty());
}

TEST_CASE("construct_path rejects exactly n = 2 and n = 4") {
  CHECK_THROWS_AS(construct_path(2), UnsupportedPath);
  CHECK_THROWS_AS(construct_path(4), UnsupportedPath);
  try {
    construct_path(4);
  } catch (const UnsupportedPath& e) {
    CHECK(e.n == 4);
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
}

TEST_CASE("every constructed path labeling passes verify up to n = 2000") {
  for (int n = 1; n <= 2000; ++n) {
    if (n == 2 || n == 4) continue;
    EdgeLabeling l = construct_path(n);
    REQUIRE(static_cast<int>(l.size()) == n - 1);
    CHECK(verify(GraphSpec::path(n), l).passed);
  }
}

TEST_CASE("construct_cycle closes the path labeling with a 0 edge") {
  auto [c3, l3] = construct_cycle(3);
  CHECK(l3 == EdgeLabeling{1, -1, 0});
  CHECK(verify(c3, l3).passed);

  auto [c5, l5] = construct_cycle(5);
  CHECK(l5 == EdgeLabeling{2, -1, 1, -2, 0});
  CHECK(verify(c5, l5).passed);

  CHECK_THROWS_AS(construct_cycle(4), std::invalid_argument);
  CHECK_THROWS_AS(construct_cycle(1), std::invalid_argument);
}

TEST_CASE("every constructed odd cycle passes verify up to n = 1001") {
  for (int n = 3; n <= 1001; n += 2) {
    auto [g, l] = construct_cycle(n);
    CHECK(verify(g, l).passed);
  }
}

TEST_CASE("case names round-trip") {
  for (CaseId id : {CaseId::odd_path, CaseId::base6, CaseId::base10, CaseId::mod8_0,
                    CaseId::mod8_6, CaseId::mod8_4, CaseId::mod16_2, CaseId::mod16_10,
                    CaseId::unsupported}) {
    CHECK(case_from_string(to_string(id)) == id);
  }
  CHECK_FALSE(case_from_string("Mod7_3").has_value());
}
