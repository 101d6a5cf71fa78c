#include <doctest.h>

#include <random>

#include "colsum/oracle.hpp"
#include "test_util.hpp"

using namespace colsum;

TEST_CASE("matrix enumeration solves the running example") {
  Instance inst = Instance::shared(4, 4, testutil::kGoldenRows,
                                   testutil::kGoldenTable);
  OracleResult res = brute_matrices(inst);
  CHECK(res.objective == 0);
  CHECK(sort_descending(res.column_sums) ==
        std::vector<int>{3, 3, 3, 1});
  // one combination of column indices per row: C(4,3)^2 * C(4,2)^2
  CHECK(res.examined == 4 * 4 * 6 * 6);
}

TEST_CASE("matrix enumeration basics") {
  SUBCASE("zero objective on a zero table") {
    Instance inst = Instance::shared(3, 2, {1, 0, 2}, {0, 0, 0, 0});
    CHECK(brute_matrices(inst).objective == 0);
  }
  SUBCASE("squares") {
    Instance inst = Instance::shared(2, 2, {1, 1}, {0, 1, 4});
    OracleResult res = brute_matrices(inst);
    CHECK(res.objective == 2);
    CHECK(res.column_sums == std::vector<int>{1, 1});
    CHECK(res.examined == 4);
  }
  SUBCASE("single forced matrix") {
    Instance inst = Instance::shared(2, 2, {2, 2}, {5, 7, -3});
    OracleResult res = brute_matrices(inst);
    CHECK(res.objective == -6);
    CHECK(res.column_sums == std::vector<int>{2, 2});
    CHECK(res.examined == 1);
  }
  SUBCASE("the cell cap is enforced") {
    Instance big = Instance::shared(5, 5, {1, 1, 1, 1, 1},
                                    {0, 0, 0, 0, 0, 0});
    CHECK_THROWS_AS(brute_matrices(big), TooLargeError);
    Instance small = Instance::shared(2, 2, {1, 1}, {0, 0, 0});
    CHECK_THROWS_AS(brute_matrices(small, 3), TooLargeError);
  }
}

TEST_CASE("tuple enumeration solves the running example") {
  Instance inst = Instance::shared(4, 4, testutil::kGoldenRows,
                                   testutil::kGoldenTable);
  OracleResult res = brute_tuples(inst);
  CHECK(res.objective == 0);
  // lexicographically smallest among the optimal tuples
  CHECK(res.column_sums == std::vector<int>{1, 3, 3, 3});

  // examined = number of realizable column sum tuples, counted here by
  // the placement oracle instead of any conjugate arithmetic
  testutil::ExistsOracle exists(inst.r);
  std::int64_t realizable = 0;
  testutil::for_each_tuple(inst.n, inst.m, [&](const std::vector<int>& c) {
    if (exists.check(c)) ++realizable;
  });
  CHECK(res.examined == realizable);
}

TEST_CASE("tuple enumeration basics") {
  SUBCASE("a single column gets the whole total") {
    Instance inst = Instance::shared(3, 1, {1, 1, 0}, {7, 5, 2, 9});
    OracleResult res = brute_tuples(inst);
    CHECK(res.objective == 2);
    CHECK(res.column_sums == std::vector<int>{2});
    CHECK(res.examined == 1);
  }
  SUBCASE("per-column tables pick the cheap column") {
    Instance inst(2, 2, {1, 1}, {{0, 0, 0}, {0, 1, 2}});
    OracleResult res = brute_tuples(inst);
    CHECK(res.objective == 0);
    CHECK(res.column_sums == std::vector<int>{2, 0});
  }
  SUBCASE("the candidate cap is enforced") {
    Instance inst = Instance::shared(1, 2, {1}, {0, 0});
    CHECK_THROWS_AS(brute_tuples(inst, 3), TooLargeError);
    CHECK_NOTHROW(brute_tuples(inst, 4));
  }
}

TEST_CASE("the two enumerations agree") {
  std::mt19937 rng(20240814);
  for (int trial = 0; trial < 120; ++trial) {
    const int m = 1 + trial % 3, n = 1 + (trial / 3) % 3;
    std::vector<ValueTable> tables;
    for (int j = 0; j < n; ++j)
      tables.push_back(testutil::random_table(rng, m));
    Instance inst(m, n, testutil::random_rows(rng, m, n), tables);
    CHECK(brute_matrices(inst).objective ==
          brute_tuples(inst).objective);
  }
}

TEST_CASE("row order does not change the optimum") {
  std::mt19937 rng(20240815);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 2 + trial % 3, n = 2 + (trial / 3) % 3;
    auto r = testutil::random_rows(rng, m, n);
    auto table = testutil::random_table(rng, m);
    Instance inst = Instance::shared(m, n, r, table);
    std::shuffle(r.begin(), r.end(), rng);
    Instance shuffled = Instance::shared(m, n, r, table);
    CHECK(brute_matrices(inst).objective ==
          brute_matrices(shuffled).objective);
  }
}
