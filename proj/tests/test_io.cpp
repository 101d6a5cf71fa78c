#include <doctest.h>

#include <limits>
#include <random>

#include "colsum/io.hpp"
#include "test_util.hpp"

using namespace colsum;
using nlohmann::json;

TEST_CASE("polynomial tabulation") {
  SUBCASE("(x-1)^2 (x-3)^2 on 0..4") {
    CHECK(table_from_poly({9, -24, 22, -8, 1}, 4) ==
          ValueTable{9, 0, 1, 0, 9});
  }
  SUBCASE("constants and the empty polynomial") {
    CHECK(table_from_poly({7}, 2) == ValueTable{7, 7, 7});
    CHECK(table_from_poly({}, 2) == ValueTable{0, 0, 0});
    CHECK(table_from_poly({0, 1}, 3) == ValueTable{0, 1, 2, 3});
  }
  SUBCASE("overflow is reported") {
    const std::int64_t big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(table_from_poly({big, big}, 1), std::overflow_error);
  }
}

TEST_CASE("instance documents parse") {
  SUBCASE("shared polynomial") {
    Instance inst = parse_instance(json::parse(R"({
      "m": 4, "n": 4, "r": [3, 3, 2, 2],
      "functions": {"shared": {"poly": [9, -24, 22, -8, 1]}}
    })"));
    CHECK(inst.m == 4);
    CHECK(inst.r == testutil::kGoldenRows);
    CHECK(inst.uniform_tables());
    CHECK(inst.tables[0] == testutil::kGoldenTable);
  }
  SUBCASE("per-column tables") {
    Instance inst = parse_instance(json::parse(R"({
      "m": 1, "n": 2, "r": [1],
      "functions": {"per_column": [{"table": [0, 1]}, {"table": [0, 2]}]}
    })"));
    CHECK(!inst.uniform_tables());
    CHECK(inst.tables[1] == ValueTable{0, 2});
  }
}

TEST_CASE("instance documents reject malformed input") {
  auto bad = [](const char* text) {
    CHECK_THROWS_AS(parse_instance(json::parse(text)), std::domain_error);
  };
  bad(R"({"n": 1, "r": [0], "functions": {"shared": {"table": [0]}}})");
  bad(R"({"m": 0, "n": 1, "r": [], "functions": {"shared": {"table": [0]}}})");
  bad(R"({"m": 1.5, "n": 1, "r": [0], "functions": {"shared": {"table": [0, 0]}}})");
  bad(R"({"m": 1, "n": 1, "r": [0, 0], "functions": {"shared": {"table": [0, 0]}}})");
  bad(R"({"m": 1, "n": 1, "r": [2], "functions": {"shared": {"table": [0, 0]}}})");
  bad(R"({"m": 1, "n": 1, "r": [0], "functions": {}})");
  bad(R"({"m": 1, "n": 1, "r": [0], "functions": {"shared": {"table": [0, 0], "poly": [1]}}})");
  bad(R"({"m": 1, "n": 1, "r": [0], "functions": {"shared": {"table": [0, 0, 0]}}})");
  bad(R"({"m": 1, "n": 1, "r": [0], "functions": {"shared": {"table": [0, 0.5]}}})");
  bad(R"({"m": 1, "n": 2, "r": [0], "functions": {"per_column": [{"table": [0, 0]}]}})");
  bad(R"([1, 2, 3])");
}

TEST_CASE("instance serialization round-trips") {
  std::mt19937 rng(20240823);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 1 + trial % 4, n = 1 + (trial / 4) % 4;
    Instance inst = [&] {
      if (trial % 2 == 0)
        return Instance::shared(m, n, testutil::random_rows(rng, m, n),
                                testutil::random_table(rng, m));
      std::vector<ValueTable> tables;
      for (int j = 0; j < n; ++j)
        tables.push_back(testutil::random_table(rng, m));
      return Instance(m, n, testutil::random_rows(rng, m, n),
                      std::move(tables));
    }();
    CHECK((parse_instance(instance_to_json(inst)) == inst));
  }
}

TEST_CASE("solution documents round-trip") {
  SolutionDocument doc;
  doc.objective = -17;
  doc.column_sums = {3, 3, 3, 1};
  doc.matrix = matrix_from_rows(testutil::kGoldenMatrix);
  doc.algorithm = "uniform";
  doc.stats.states_created = 42;
  doc.stats.edges_relaxed = 99;
  doc.elapsed_ms = 1.25;
  CHECK((parse_solution(solution_to_json(doc)) == doc));

  SUBCASE("objective and matrix are optional") {
    doc.objective.reset();
    doc.matrix.reset();
    doc.algorithm = "flow";
    CHECK((parse_solution(solution_to_json(doc)) == doc));
  }
}

TEST_CASE("matrix rows convert both ways") {
  BinaryMatrix a = matrix_from_rows(testutil::kGoldenMatrix);
  CHECK(a.m == 4);
  CHECK(a.n == 4);
  CHECK(a.get(0, 3) == 0);
  CHECK(a.get(3, 3) == 1);
  CHECK(matrix_rows(a) == testutil::kGoldenMatrix);

  CHECK_THROWS_AS(matrix_from_rows({}), std::domain_error);
  CHECK_THROWS_AS(matrix_from_rows({""}), std::domain_error);
  CHECK_THROWS_AS(matrix_from_rows({"10", "1"}), std::domain_error);
  CHECK_THROWS_AS(matrix_from_rows({"12"}), std::domain_error);
}

TEST_CASE("pair and conjugate query documents") {
  PairDocument pair =
      parse_pair(json::parse(R"({"r": [1, 1], "c": [2, 0]})"));
  CHECK(pair.r == std::vector<int>{1, 1});
  CHECK(pair.c == std::vector<int>{2, 0});
  CHECK_THROWS_AS(parse_pair(json::parse(R"({"r": [1]})")),
                  std::domain_error);

  ConjugateQuery q =
      parse_conjugate_query(json::parse(R"({"r": [3, 3, 2, 2], "n": 4})"));
  CHECK(q.r == testutil::kGoldenRows);
  CHECK(q.n == 4);
  CHECK_THROWS_AS(parse_conjugate_query(json::parse(R"({"r": []})")),
                  std::domain_error);
}

TEST_CASE("the result verifier rejects corrupted documents") {
  Instance inst = Instance::shared(4, 4, testutil::kGoldenRows,
                                   testutil::kGoldenTable);
  SolutionDocument doc;
  doc.objective = 0;
  doc.column_sums = {3, 3, 3, 1};
  doc.matrix = matrix_from_rows(testutil::kGoldenMatrix);
  doc.algorithm = "uniform";
  CHECK_NOTHROW(verify_solution(inst, doc));

  SolutionDocument wrong_obj = doc;
  wrong_obj.objective = 1;
  CHECK_THROWS_AS(verify_solution(inst, wrong_obj), std::logic_error);

  SolutionDocument wrong_cols = doc;
  wrong_cols.column_sums = {3, 3, 1, 3};
  CHECK_THROWS_AS(verify_solution(inst, wrong_cols), std::logic_error);

  SolutionDocument wrong_bit = doc;
  wrong_bit.matrix->set(0, 0, 0);
  CHECK_THROWS_AS(verify_solution(inst, wrong_bit), std::logic_error);

  SolutionDocument no_matrix = doc;
  no_matrix.matrix.reset();
  CHECK_NOTHROW(verify_solution(inst, no_matrix));
}
