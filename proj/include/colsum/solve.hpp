#pragma once

#include <cstdint>
#include <optional>

#include "colsum/core.hpp"

namespace colsum {

// Work counters reported by the solvers: how many DP states were
// materialized (including the two virtual endpoints) and how many edge
// relaxation operations ran.
struct SolveStats {
  std::int64_t states_created = 0;
  std::int64_t edges_relaxed = 0;

  bool operator==(const SolveStats&) const = default;
};

struct Solution {
  std::int64_t objective = 0;
  std::vector<int> column_sums;  // as emitted by the solver (see below)
  BinaryMatrix matrix;           // line sums match (r, column_sums)
  SolveStats stats;
};

struct SolveLimits {
  // Maximum number of DP states solve_bounded may materialize.
  std::int64_t max_states = 100'000'000;
};

// Minimize sum_j f(c_j) when every column shares one value table
// (NotUniformError otherwise).  column_sums comes back nonincreasing;
// among optimal nonincreasing tuples the lexicographically largest is
// returned.  Shortest path over a layered DAG of (layer, last value,
// running sum) states -- value tables may be arbitrary integers, so
// relaxation runs in topological (layer) order.
Solution solve_uniform(const Instance& inst);

// Minimize sum_j f_j(c_j) with per-column tables when row sums are small:
// every r_i must be <= bound (BoundError otherwise; bound defaults to
// max r_i and may not exceed n).  States track the `bound` largest column
// sums chosen so far plus the running sum; the number materialized is
// capped by limits.max_states (StateBudgetError).  column_sums is in
// column order; among optimal tuples the lexicographically smallest is
// returned.
Solution solve_bounded(const Instance& inst,
                       std::optional<int> bound = std::nullopt,
                       const SolveLimits& limits = {});

}  // namespace colsum
