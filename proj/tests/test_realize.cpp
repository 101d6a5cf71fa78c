#include <doctest.h>

#include <random>

#include "colsum/realize.hpp"
#include "test_util.hpp"

using namespace colsum;

namespace {

void check_lines(const BinaryMatrix& a, const std::vector<int>& r,
                 const std::vector<int>& c) {
  auto [rows, cols] = line_sums(a);
  CHECK(rows == r);
  CHECK(cols == c);
}

}  // namespace

TEST_CASE("both routes realize the running example") {
  const std::vector<int> r{3, 3, 2, 2}, c{3, 3, 3, 1};
  check_lines(realize_flow(r, c), r, c);
  check_lines(realize_greedy(r, c), r, c);
}

TEST_CASE("forced placements come out exactly") {
  const std::vector<int> r{1, 1}, c{2, 0};
  BinaryMatrix expected(2, 2);
  expected.set(0, 0, 1);
  expected.set(1, 0, 1);
  CHECK(realize_flow(r, c) == expected);
  CHECK(realize_greedy(r, c) == expected);
}

TEST_CASE("repeated calls return bit-identical matrices") {
  const std::vector<int> r{2, 2, 1}, c{2, 2, 1, 0};
  CHECK(realize_flow(r, c) == realize_flow(r, c));
  CHECK(realize_greedy(r, c) == realize_greedy(r, c));
}

TEST_CASE("infeasible pairs name the violated check") {
  SUBCASE("total mismatch") {
    CHECK_THROWS_WITH_AS(realize_flow({1, 1}, {2, 1}),
                         "no matrix with the requested line sums: totals "
                         "3 != 2",
                         InfeasibleError);
    try {
      realize_greedy({1, 1}, {3, 0});
      FAIL("expected InfeasibleError");
    } catch (const InfeasibleError& e) {
      CHECK(e.witness.kind == MajorizationWitness::Kind::total);
      CHECK(e.witness.lhs == 3);
      CHECK(e.witness.rhs == 2);
    }
  }
  SUBCASE("column demand above the row count") {
    // totals agree, but no column can collect 3 ones from 2 rows
    for (auto realize : {realize_flow, realize_greedy}) {
      try {
        realize({2, 2}, {3, 1});
        FAIL("expected InfeasibleError");
      } catch (const InfeasibleError& e) {
        CHECK(e.witness.kind == MajorizationWitness::Kind::prefix);
        CHECK(e.witness.k == 1);
        CHECK(e.witness.lhs == 3);
        CHECK(e.witness.rhs == 2);
      }
    }
  }
  SUBCASE("first violated prefix of the sorted demands") {
    for (auto realize : {realize_flow, realize_greedy}) {
      try {
        realize({3, 3, 2, 2}, {5, 3, 1, 1});
        FAIL("expected InfeasibleError");
      } catch (const InfeasibleError& e) {
        CHECK(e.witness.kind == MajorizationWitness::Kind::prefix);
        CHECK(e.witness.k == 1);
        CHECK(e.witness.lhs == 5);
        CHECK(e.witness.rhs == 4);
      }
    }
  }
}

TEST_CASE("malformed tuples are input errors, not infeasibilities") {
  CHECK_THROWS_AS(realize_flow({3}, {1, 1}), std::domain_error);   // r_i > n
  CHECK_THROWS_AS(realize_greedy({3}, {1, 1}), std::domain_error);
  CHECK_THROWS_AS(realize_flow({-1}, {0}), std::domain_error);
  CHECK_THROWS_AS(realize_flow({1, 1}, {3, -1}), std::domain_error);
  CHECK_THROWS_AS(realize_greedy({1, 1}, {3, -1}), std::domain_error);
  CHECK_THROWS_AS(realize_flow({}, {0}), std::domain_error);
  CHECK_THROWS_AS(realize_flow({0}, {}), std::domain_error);
}

TEST_CASE("degenerate pairs work") {
  check_lines(realize_flow({0, 0}, {0, 0, 0}), {0, 0}, {0, 0, 0});
  check_lines(realize_greedy({0, 0}, {0, 0, 0}), {0, 0}, {0, 0, 0});
  check_lines(realize_flow({3, 3}, {2, 2, 2}), {3, 3}, {2, 2, 2});
  check_lines(realize_greedy({3, 3}, {2, 2, 2}), {3, 3}, {2, 2, 2});
  check_lines(realize_flow({1}, {0, 1, 0}), {1}, {0, 1, 0});
}

TEST_CASE("success and failure match exhaustive existence") {
  std::mt19937 rng(20240813);
  int feasible_seen = 0, infeasible_seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 1 + trial % 4, n = 1 + (trial / 4) % 4;
    auto r = testutil::random_rows(rng, m, n);
    std::uniform_int_distribution<int> dist(0, m);
    std::vector<int> c(n);
    for (auto& v : c) v = dist(rng);

    const bool expected = testutil::ExistsOracle(r).check(c);
    for (auto realize : {realize_flow, realize_greedy}) {
      try {
        check_lines(realize(r, c), r, c);
        CHECK(expected);
        ++feasible_seen;
      } catch (const InfeasibleError&) {
        CHECK(!expected);
        ++infeasible_seen;
      }
    }
  }
  // the sample must exercise both outcomes to mean anything
  CHECK(feasible_seen > 50);
  CHECK(infeasible_seen > 50);
}
