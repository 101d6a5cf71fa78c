#pragma once

#include <cstdint>

#include "colsum/core.hpp"

namespace colsum {

// Ground-truth reference solvers.  Exponential by construction; each one
// refuses inputs past its cap (TooLargeError) instead of running forever.
struct OracleResult {
  std::int64_t objective = 0;
  std::vector<int> column_sums;
  std::int64_t examined = 0;  // matrices (or tuples) evaluated
};

inline constexpr std::int64_t kMatrixCellCap = 20;          // m*n
inline constexpr std::int64_t kTupleCandidateCap = 10'000'000;  // (m+1)^n

// Enumerate every 0/1 matrix with row sums r (rows enumerated as
// lexicographic column-index combinations) and minimize the objective.
// Ties resolve to the first matrix in enumeration order.
OracleResult brute_matrices(const Instance& inst,
                            std::int64_t max_cells = kMatrixCellCap);

// Enumerate column sum tuples c in {0..m}^n with the right total whose
// sorted form passes the Gale-Ryser check, and minimize the objective.
// Ties resolve to the lexicographically smallest tuple.
OracleResult brute_tuples(const Instance& inst,
                          std::int64_t max_candidates = kTupleCandidateCap);

}  // namespace colsum
