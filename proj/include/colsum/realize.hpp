#pragma once

#include "colsum/core.hpp"

namespace colsum {

// Build a 0/1 matrix with row sums r and column sums c, or throw
// InfeasibleError carrying the first violated Gale-Ryser check.  Both
// routes are deterministic: the same input always yields the same matrix.
//
// realize_flow routes demand through a bipartite max-flow network
// (source -> row i with capacity r_i, row -> column with capacity 1,
// column j -> sink with capacity c_j) and reads the matrix off the
// saturated middle arcs.
//
// realize_greedy processes rows by nonincreasing r_i (ties by row index)
// and gives each row its ones in the columns with the largest remaining
// demand (ties by column index).
//
// Preconditions: 0 <= r_i <= |c| (std::domain_error otherwise) and
// c_j >= 0; a c_j larger than the row count is reported as infeasible.
BinaryMatrix realize_flow(const std::vector<int>& r,
                          const std::vector<int>& c);

BinaryMatrix realize_greedy(const std::vector<int>& r,
                            const std::vector<int>& c);

}  // namespace colsum
