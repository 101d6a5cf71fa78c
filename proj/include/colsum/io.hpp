#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "colsum/core.hpp"
#include "colsum/solve.hpp"

namespace colsum {

// Result document as emitted by the command line tool.  objective is
// absent for pure realization results; matrix is absent when its emission
// was switched off.
struct SolutionDocument {
  std::optional<std::int64_t> objective;
  std::vector<int> column_sums;
  std::optional<BinaryMatrix> matrix;
  std::string algorithm;
  SolveStats stats;
  double elapsed_ms = 0.0;

  bool operator==(const SolutionDocument&) const = default;
};

// (row sums, column sums) pair for realization and feasibility queries.
struct PairDocument {
  std::vector<int> r, c;
};

struct ConjugateQuery {
  std::vector<int> r;
  int n = 0;
};

// Evaluate the polynomial a_0 + a_1 x + ... at x = 0..m with checked
// arithmetic (std::overflow_error past 64 bits).
ValueTable table_from_poly(const std::vector<std::int64_t>& coeffs, int m);

// Instance documents carry m, n, r and either one shared function or one
// function per column; each function is a value table or a polynomial.
// All parsers throw std::domain_error with a diagnostic on bad input.
Instance parse_instance(const nlohmann::json& j);
nlohmann::json instance_to_json(const Instance& inst);

SolutionDocument parse_solution(const nlohmann::json& j);
nlohmann::json solution_to_json(const SolutionDocument& doc);

PairDocument parse_pair(const nlohmann::json& j);
ConjugateQuery parse_conjugate_query(const nlohmann::json& j);

std::vector<std::string> matrix_rows(const BinaryMatrix& a);
BinaryMatrix matrix_from_rows(const std::vector<std::string>& rows);

// Check a result against its instance: the matrix must have line sums
// (r, column_sums) and the objective must re-evaluate to the same value.
// Throws std::logic_error on any mismatch -- emitting an unverified
// result is a bug, not an input error.
void verify_solution(const Instance& inst, const SolutionDocument& doc);

}  // namespace colsum
