#include "colsum/oracle.hpp"

#include <algorithm>
#include <string>

namespace colsum {
namespace {

struct MatrixEnumerator {
  const Instance& inst;
  std::vector<int> colsum;
  OracleResult result;
  bool found = false;

  explicit MatrixEnumerator(const Instance& i)
      : inst(i), colsum(i.n, 0) {}

  void leaf() {
    std::int64_t obj = 0;
    for (int j = 0; j < inst.n; ++j)
      obj = checked_add(obj, inst.tables[j][colsum[j]]);
    ++result.examined;
    if (!found || obj < result.objective) {
      found = true;
      result.objective = obj;
      result.column_sums = colsum;
    }
  }

  // Place row i's ones as a combination of column indices, smallest
  // index tuples first.
  void place(int i, int start, int remaining) {
    if (remaining == 0) {
      row(i + 1);
      return;
    }
    for (int j = start; j <= inst.n - remaining; ++j) {
      ++colsum[j];
      place(i, j + 1, remaining - 1);
      --colsum[j];
    }
  }

  void row(int i) {
    if (i == inst.m) {
      leaf();
      return;
    }
    place(i, 0, inst.r[i]);
  }
};

struct TupleEnumerator {
  const Instance& inst;
  const ConjugateTuple d;
  std::vector<int> c;
  std::vector<int> top;  // chosen values so far, sorted nonincreasing
  OracleResult result;
  bool found = false;

  explicit TupleEnumerator(const Instance& i)
      : inst(i), d(conjugate(i.r, i.n)) {
    c.reserve(i.n);
    top.reserve(i.n);
  }

  void leaf() {
    if (!is_majorized(sort_descending(c), d)) return;
    std::int64_t obj = 0;
    for (int j = 0; j < inst.n; ++j)
      obj = checked_add(obj, inst.tables[j][c[j]]);
    ++result.examined;
    if (!found || obj < result.objective) {
      found = true;
      result.objective = obj;
      result.column_sums = c;
    }
  }

  void column(int j, std::int64_t s) {
    if (j == inst.n) {
      leaf();
      return;
    }
    const std::int64_t slack =
        static_cast<std::int64_t>(inst.n - j - 1) * inst.m;
    for (int v = 0; v <= inst.m; ++v) {
      const std::int64_t rem = d.total - s - v;
      if (rem < 0) break;
      if (rem > slack) continue;
      // Keep only branches whose largest values still fit under the
      // conjugate prefixes; adding values never shrinks a top-k sum.
      const auto pos = std::upper_bound(top.begin(), top.end(), v,
                                        std::greater<int>());
      const auto at = top.insert(pos, v);
      bool ok = true;
      std::int64_t running = 0;
      for (std::size_t i = 0; i < top.size(); ++i) {
        running += top[i];
        if (running > d.prefix[i]) {
          ok = false;
          break;
        }
      }
      if (ok) {
        c.push_back(v);
        column(j + 1, s + v);
        c.pop_back();
      }
      top.erase(at);
    }
  }
};

}  // namespace

OracleResult brute_matrices(const Instance& inst, std::int64_t max_cells) {
  if (static_cast<std::int64_t>(inst.m) * inst.n > max_cells)
    throw TooLargeError("matrix enumeration capped at " +
                        std::to_string(max_cells) + " cells");
  MatrixEnumerator e(inst);
  e.row(0);
  return e.result;
}

OracleResult brute_tuples(const Instance& inst,
                          std::int64_t max_candidates) {
  std::int64_t space = 1;
  for (int j = 0; j < inst.n; ++j) {
    space *= inst.m + 1;
    if (space > max_candidates)
      throw TooLargeError("tuple enumeration capped at " +
                          std::to_string(max_candidates) + " candidates");
  }
  TupleEnumerator e(inst);
  e.column(0, 0);
  return e.result;
}

}  // namespace colsum
