#include <algorithm>
#include <limits>
#include <vector>

#include "colsum/realize.hpp"
#include "colsum/solve.hpp"

namespace colsum {
namespace {

constexpr std::int64_t kUnreachable =
    std::numeric_limits<std::int64_t>::max();

// Path costs may use the full 64-bit range except the top value, which is
// reserved as the unreachable sentinel; a sum landing on it would alias.
std::int64_t cost_add(std::int64_t a, std::int64_t b) {
  const std::int64_t t = checked_add(a, b);
  if (t == kUnreachable)
    throw std::overflow_error("path cost exceeds the representable range");
  return t;
}

// One DP layer, indexed by the last value c of a nonincreasing prefix.
// For each c only the admissible window of running sums [lo(c), hi(c)] is
// stored (windows laid out back to back in cost), so a state costs O(1)
// memory and no per-state hashing.
struct Layer {
  std::vector<int> lo, hi;        // per c; empty window when lo > hi
  std::vector<std::size_t> off;   // start of c's window inside cost
  std::vector<std::int64_t> cost; // cost to finish the remaining layers

  std::int64_t get(int c, int s) const {
    if (s < lo[c] || s > hi[c]) return kUnreachable;
    return cost[off[c] + static_cast<std::size_t>(s - lo[c])];
  }

  std::int64_t cells() const {
    return static_cast<std::int64_t>(cost.size());
  }
};

// Admissible window for layer k (1-based), last value c, total layers n.
// A nonincreasing prefix of k values ending in c has sum at least k*c and
// at most c + (k-1)*d1; the prefix-sum cap is pref_k; and a completable
// state still needs total - s more, at most (n-k)*c.
Layer make_layer(int k, int n, int d1, int total,
                 const ConjugateTuple& d) {
  Layer layer;
  layer.lo.resize(d1 + 1);
  layer.hi.resize(d1 + 1);
  layer.off.resize(d1 + 1);
  const int pref_k = static_cast<int>(d.prefix[k - 1]);
  std::size_t at = 0;
  for (int c = 0; c <= d1; ++c) {
    int lo = std::max(k * c, total - (n - k) * c);
    int hi = std::min(pref_k, c + (k - 1) * d1);
    layer.lo[c] = lo;
    layer.hi[c] = hi;
    layer.off[c] = at;
    if (hi >= lo) at += static_cast<std::size_t>(hi - lo + 1);
  }
  layer.cost.resize(at);
  return layer;
}

}  // namespace

Solution solve_uniform(const Instance& inst) {
  if (!inst.uniform_tables())
    throw NotUniformError("solve_uniform needs one shared value table");
  const ValueTable& f = inst.tables[0];
  const int n = inst.n;
  const ConjugateTuple d = conjugate(inst.r, n);
  const int d1 = d.d[0];
  const int total = static_cast<int>(d.total);

  SolveStats stats;
  std::vector<Layer> layers(static_cast<std::size_t>(n) + 1);

  // Final layer: only full prefixes (sum == total) can finish, at cost 0.
  layers[n] = make_layer(n, n, d1, total, d);
  std::fill(layers[n].cost.begin(), layers[n].cost.end(), 0);
  stats.edges_relaxed += layers[n].cells();

  // Work backwards: the cost to finish from (k-1, c, s) is the best
  // f(c2) + cost(k, c2, s + c2) over next values c2 <= c.  Scanning c
  // upward while folding layer k's windows into runmin keeps the running
  // minimum over all c2 <= c per running sum, so each cell costs O(1).
  std::vector<std::int64_t> runmin;
  for (int k = n; k >= 2; --k) {
    const Layer& next = layers[k];
    Layer cur = make_layer(k - 1, n, d1, total, d);
    runmin.assign(static_cast<std::size_t>(total) + 1, kUnreachable);
    for (int c = 0; c <= d1; ++c) {
      const std::size_t base = next.off[c];
      for (int s2 = next.lo[c]; s2 <= next.hi[c]; ++s2) {
        std::int64_t w =
            next.cost[base + static_cast<std::size_t>(s2 - next.lo[c])];
        if (w == kUnreachable) continue;
        std::int64_t t = cost_add(f[c], w);
        std::int64_t& slot = runmin[s2 - c];
        if (t < slot) slot = t;
        ++stats.edges_relaxed;
      }
      const std::size_t out = cur.off[c];
      for (int s1 = cur.lo[c]; s1 <= cur.hi[c]; ++s1)
        cur.cost[out + static_cast<std::size_t>(s1 - cur.lo[c])] =
            runmin[s1];
    }
    layers[k - 1] = std::move(cur);
  }

  for (int k = 1; k <= n; ++k) stats.states_created += layers[k].cells();
  stats.states_created += 2;  // virtual start and finish states

  // First value: scanning c1 downward and keeping strict improvements
  // only makes the lexicographically largest optimum win ties.
  std::int64_t best = kUnreachable;
  int best_c1 = -1;
  for (int c1 = d1; c1 >= 0; --c1) {
    std::int64_t w = layers[1].get(c1, c1);
    if (w == kUnreachable) continue;
    std::int64_t t = cost_add(f[c1], w);
    ++stats.edges_relaxed;
    if (t < best) {
      best = t;
      best_c1 = c1;
    }
  }
  if (best_c1 < 0)
    throw std::logic_error("internal error: no feasible column sums");

  // Greedy walk along tight edges, largest next value first, reproduces
  // the lexicographically largest optimal tuple.
  std::vector<int> column_sums;
  column_sums.reserve(n);
  column_sums.push_back(best_c1);
  int c = best_c1, s = best_c1;
  std::int64_t remaining = layers[1].get(c, s);
  for (int k = 1; k < n; ++k) {
    int chosen = -1;
    for (int c2 = c; c2 >= 0; --c2) {
      std::int64_t w = layers[k + 1].get(c2, s + c2);
      if (w == kUnreachable) continue;
      if (cost_add(f[c2], w) == remaining) {
        chosen = c2;
        remaining = w;
        break;
      }
    }
    if (chosen < 0)
      throw std::logic_error("internal error: lost the optimal path");
    column_sums.push_back(chosen);
    c = chosen;
    s += chosen;
  }
  if (remaining != 0)
    throw std::logic_error("internal error: walk ended off the optimum");

  Solution sol;
  sol.objective = evaluate_objective(inst, column_sums);
  if (sol.objective != best)
    throw std::logic_error("internal error: objective mismatch");
  sol.column_sums = std::move(column_sums);
  sol.matrix = realize_greedy(inst.r, sol.column_sums);
  sol.stats = stats;
  return sol;
}

}  // namespace colsum
