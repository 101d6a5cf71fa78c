#include <algorithm>
#include <limits>
#include <unordered_map>
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

using Key = std::vector<std::uint32_t>;

struct KeyHash {
  std::size_t operator()(const Key& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (std::uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// One layer of materialized states.  A state is the multiset of the b
// largest column sums chosen so far (sorted nonincreasing) plus the
// running sum, packed as [top_0 .. top_{b-1}, s].
struct Layer {
  std::vector<Key> keys;
  std::unordered_map<Key, std::uint32_t, KeyHash> index;

  // Returns the state id, inserting the key on first sight.
  std::uint32_t intern(const Key& key, bool* inserted) {
    auto [it, fresh] =
        index.try_emplace(key, static_cast<std::uint32_t>(keys.size()));
    if (fresh) keys.push_back(key);
    *inserted = fresh;
    return it->second;
  }
};

struct Dp {
  int n, b, d1;
  std::int64_t total;
  const ConjugateTuple& d;

  // Step from a state at layer k_next - 1 by choosing value c for column
  // k_next.  False when the successor is inadmissible or provably cannot
  // reach a full tuple any more; otherwise *out is its key.
  bool step(const Key& key, int c, int k_next, Key* out) const {
    const std::int64_t s2 = static_cast<std::int64_t>(key[b]) + c;
    if (s2 > total) return false;
    if (total - s2 > static_cast<std::int64_t>(n - k_next) * d1)
      return false;
    out->resize(b + 1);
    int i = 0;
    while (i < b && static_cast<int>(key[i]) >= c) {
      (*out)[i] = key[i];
      ++i;
    }
    if (i < b) {
      (*out)[i] = static_cast<std::uint32_t>(c);
      for (int j = i + 1; j < b; ++j) (*out)[j] = key[j - 1];
    }
    (*out)[b] = static_cast<std::uint32_t>(s2);
    // Every prefix of the b largest values must respect the conjugate.
    std::int64_t running = 0;
    for (int j = 0; j < b; ++j) {
      running += (*out)[j];
      if (running > d.prefix[j]) return false;
    }
    return true;
  }
};

}  // namespace

Solution solve_bounded(const Instance& inst, std::optional<int> bound,
                       const SolveLimits& limits) {
  const int n = inst.n;
  int rmax = 0;
  for (int ri : inst.r) rmax = std::max(rmax, ri);
  const int b = bound.value_or(rmax);
  if (b < 0 || b > n)
    throw std::domain_error("bound must lie in [0, n]");
  if (rmax > b)
    throw BoundError("row sum " + std::to_string(rmax) +
                     " exceeds the bound " + std::to_string(b));

  const ConjugateTuple d = conjugate(inst.r, n);
  for (int j = b; j < n; ++j) {
    if (d.d[j] != 0)
      throw std::logic_error("internal error: conjugate exceeds the bound");
  }
  const int d1 = b > 0 ? d.d[0] : 0;
  const Dp dp{n, b, d1, d.total, d};

  SolveStats stats;
  std::int64_t materialized = 2;  // virtual start and finish states
  const auto charge = [&](std::int64_t count) {
    materialized += count;
    if (materialized > limits.max_states)
      throw StateBudgetError("state budget of " +
                             std::to_string(limits.max_states) +
                             " states exhausted");
  };

  // Forward reachability pass: materialize exactly the states some prefix
  // of choices can reach, layer by layer.
  std::vector<Layer> layers(static_cast<std::size_t>(n) + 1);
  Key key, next;
  for (int c1 = 0; c1 <= d1; ++c1) {
    key.assign(b + 1, 0);
    if (b > 0) key[0] = static_cast<std::uint32_t>(c1);
    key[b] = static_cast<std::uint32_t>(c1);
    if (static_cast<std::int64_t>(c1) > d.total) continue;
    if (d.total - c1 > static_cast<std::int64_t>(n - 1) * d1) continue;
    bool fresh;
    layers[1].intern(key, &fresh);
    if (fresh) charge(1);
  }
  for (int k = 2; k <= n; ++k) {
    for (std::size_t id = 0; id < layers[k - 1].keys.size(); ++id) {
      // intern() may grow keys, so take a copy of the source key
      key = layers[k - 1].keys[id];
      for (int c = 0; c <= d1; ++c) {
        if (!dp.step(key, c, k, &next)) continue;
        bool fresh;
        layers[k].intern(next, &fresh);
        if (fresh) charge(1);
      }
    }
  }

  // Backward pass: cost to finish the remaining columns from each state.
  std::vector<std::vector<std::int64_t>> cost(
      static_cast<std::size_t>(n) + 1);
  cost[n].resize(layers[n].keys.size());
  for (std::size_t id = 0; id < layers[n].keys.size(); ++id) {
    cost[n][id] =
        layers[n].keys[id][b] == static_cast<std::uint32_t>(d.total)
            ? 0
            : kUnreachable;
    ++stats.edges_relaxed;
  }
  for (int k = n - 1; k >= 1; --k) {
    const ValueTable& f = inst.tables[k];  // table of column k+1
    cost[k].resize(layers[k].keys.size());
    for (std::size_t id = 0; id < layers[k].keys.size(); ++id) {
      std::int64_t best = kUnreachable;
      for (int c = 0; c <= d1; ++c) {
        if (!dp.step(layers[k].keys[id], c, k + 1, &next)) continue;
        auto it = layers[k + 1].index.find(next);
        if (it == layers[k + 1].index.end())
          throw std::logic_error("internal error: missing successor state");
        ++stats.edges_relaxed;
        std::int64_t w = cost[k + 1][it->second];
        if (w == kUnreachable) continue;
        std::int64_t t = cost_add(f[c], w);
        if (t < best) best = t;
      }
      cost[k][id] = best;
    }
  }

  // First column: scanning c1 upward with strict improvements only makes
  // the lexicographically smallest optimum win ties.
  std::int64_t best = kUnreachable;
  int best_c1 = -1;
  std::uint32_t best_id = 0;
  for (int c1 = 0; c1 <= d1; ++c1) {
    key.assign(b + 1, 0);
    if (b > 0) key[0] = static_cast<std::uint32_t>(c1);
    key[b] = static_cast<std::uint32_t>(c1);
    auto it = layers[1].index.find(key);
    if (it == layers[1].index.end()) continue;
    std::int64_t w = cost[1][it->second];
    if (w == kUnreachable) continue;
    std::int64_t t = cost_add(inst.tables[0][c1], w);
    ++stats.edges_relaxed;
    if (t < best) {
      best = t;
      best_c1 = c1;
      best_id = it->second;
    }
  }
  if (best_c1 < 0)
    throw std::logic_error("internal error: no feasible column sums");

  std::vector<int> column_sums;
  column_sums.reserve(n);
  column_sums.push_back(best_c1);
  key = layers[1].keys[best_id];
  std::int64_t remaining = cost[1][best_id];
  for (int k = 1; k < n; ++k) {
    const ValueTable& f = inst.tables[k];
    int chosen = -1;
    for (int c = 0; c <= d1; ++c) {
      if (!dp.step(key, c, k + 1, &next)) continue;
      auto it = layers[k + 1].index.find(next);
      if (it == layers[k + 1].index.end()) continue;
      std::int64_t w = cost[k + 1][it->second];
      if (w == kUnreachable) continue;
      if (cost_add(f[c], w) == remaining) {
        chosen = c;
        remaining = w;
        key = layers[k + 1].keys[it->second];
        break;
      }
    }
    if (chosen < 0)
      throw std::logic_error("internal error: lost the optimal path");
    column_sums.push_back(chosen);
  }
  if (remaining != 0)
    throw std::logic_error("internal error: walk ended off the optimum");

  for (int k = 1; k <= n; ++k)
    stats.states_created += static_cast<std::int64_t>(layers[k].keys.size());
  stats.states_created += 2;

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
