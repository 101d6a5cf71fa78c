#include "colsum/realize.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

namespace colsum {
namespace {

std::string witness_message(const MajorizationWitness& w) {
  if (w.kind == MajorizationWitness::Kind::total)
    return "no matrix with the requested line sums: totals " +
           std::to_string(w.lhs) + " != " + std::to_string(w.rhs);
  return "no matrix with the requested line sums: prefix " +
         std::to_string(w.k) + ": " + std::to_string(w.lhs) + " > " +
         std::to_string(w.rhs);
}

// Shared input validation; throws on malformed tuples, returns the totals.
std::pair<std::int64_t, std::int64_t> validate_pair(
    const std::vector<int>& r, const std::vector<int>& c) {
  const int m = static_cast<int>(r.size());
  const int n = static_cast<int>(c.size());
  if (m < 1) throw std::domain_error("need at least one row sum");
  if (n < 1) throw std::domain_error("need at least one column sum");
  std::int64_t rtotal = 0, ctotal = 0;
  for (int i = 0; i < m; ++i) {
    if (r[i] < 0 || r[i] > n)
      throw std::domain_error("row sum " + std::to_string(r[i]) +
                              " outside [0, n]");
    rtotal += r[i];
  }
  for (int j = 0; j < n; ++j) {
    if (c[j] < 0)
      throw std::domain_error("column sum " + std::to_string(c[j]) +
                              " is negative");
    ctotal += c[j];
  }
  return {rtotal, ctotal};
}

// The construction route failed, so the Gale-Ryser condition must name a
// violated check; if it does not, the construction itself is buggy.
[[noreturn]] void throw_infeasible(const std::vector<int>& r,
                                   const std::vector<int>& c) {
  auto w = majorization_witness(sort_descending(c),
                                conjugate(r, static_cast<int>(c.size())));
  if (!w)
    throw std::logic_error(
        "internal error: realization failed on a feasible pair");
  throw InfeasibleError(witness_message(*w), *w);
}

[[noreturn]] void throw_total_mismatch(std::int64_t rtotal,
                                       std::int64_t ctotal, int n) {
  MajorizationWitness w{MajorizationWitness::Kind::total, n, ctotal, rtotal};
  throw InfeasibleError(witness_message(w), w);
}

// Dinic's blocking-flow algorithm on an explicit adjacency list.
struct FlowNetwork {
  struct Arc {
    int to;
    int cap;
    int rev;  // index of the reverse arc in graph[to]
  };

  std::vector<std::vector<Arc>> graph;
  std::vector<int> level, iter;

  explicit FlowNetwork(int nodes) : graph(nodes) {}

  void add_arc(int from, int to, int cap) {
    graph[from].push_back({to, cap, static_cast<int>(graph[to].size())});
    graph[to].push_back({from, 0, static_cast<int>(graph[from].size()) - 1});
  }

  bool bfs(int s, int t) {
    level.assign(graph.size(), -1);
    std::queue<int> q;
    level[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const Arc& a : graph[v]) {
        if (a.cap > 0 && level[a.to] < 0) {
          level[a.to] = level[v] + 1;
          q.push(a.to);
        }
      }
    }
    return level[t] >= 0;
  }

  int dfs(int v, int t, int f) {
    if (v == t) return f;
    for (int& i = iter[v]; i < static_cast<int>(graph[v].size()); ++i) {
      Arc& a = graph[v][i];
      if (a.cap > 0 && level[v] < level[a.to]) {
        int d = dfs(a.to, t, std::min(f, a.cap));
        if (d > 0) {
          a.cap -= d;
          graph[a.to][a.rev].cap += d;
          return d;
        }
      }
    }
    return 0;
  }

  std::int64_t max_flow(int s, int t) {
    std::int64_t flow = 0;
    while (bfs(s, t)) {
      iter.assign(graph.size(), 0);
      while (int f = dfs(s, t, std::numeric_limits<int>::max())) flow += f;
    }
    return flow;
  }
};

}  // namespace

BinaryMatrix realize_flow(const std::vector<int>& r,
                          const std::vector<int>& c) {
  const int m = static_cast<int>(r.size());
  const int n = static_cast<int>(c.size());
  auto [rtotal, ctotal] = validate_pair(r, c);
  if (rtotal != ctotal) throw_total_mismatch(rtotal, ctotal, n);

  // Nodes: 0 = source, 1..m = rows, m+1..m+n = columns, m+n+1 = sink.
  const int source = 0, sink = m + n + 1;
  FlowNetwork net(m + n + 2);
  for (int i = 0; i < m; ++i) net.add_arc(source, 1 + i, r[i]);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) net.add_arc(1 + i, m + 1 + j, 1);
  for (int j = 0; j < n; ++j) net.add_arc(m + 1 + j, sink, c[j]);

  if (net.max_flow(source, sink) != rtotal) throw_infeasible(r, c);

  // A row->column arc with exhausted capacity carries one unit of flow.
  BinaryMatrix a(m, n);
  for (int i = 0; i < m; ++i) {
    for (const FlowNetwork::Arc& arc : net.graph[1 + i]) {
      if (arc.to >= m + 1 && arc.to <= m + n && arc.cap == 0)
        a.set(i, arc.to - (m + 1), 1);
    }
  }
  return a;
}

BinaryMatrix realize_greedy(const std::vector<int>& r,
                            const std::vector<int>& c) {
  const int m = static_cast<int>(r.size());
  const int n = static_cast<int>(c.size());
  auto [rtotal, ctotal] = validate_pair(r, c);
  if (rtotal != ctotal) throw_total_mismatch(rtotal, ctotal, n);

  std::vector<int> row_order(m);
  std::iota(row_order.begin(), row_order.end(), 0);
  std::sort(row_order.begin(), row_order.end(), [&](int a, int b) {
    return r[a] != r[b] ? r[a] > r[b] : a < b;
  });

  std::vector<int> residual = c;
  std::vector<int> col_order(n);
  BinaryMatrix a(m, n);
  for (int i : row_order) {
    if (r[i] == 0) continue;
    std::iota(col_order.begin(), col_order.end(), 0);
    std::sort(col_order.begin(), col_order.end(), [&](int x, int y) {
      return residual[x] != residual[y] ? residual[x] > residual[y] : x < y;
    });
    // The r_i columns with the largest remaining demand each take one 1;
    // if even those have none left, no completion exists.
    if (residual[col_order[r[i] - 1]] <= 0) throw_infeasible(r, c);
    for (int k = 0; k < r[i]; ++k) {
      --residual[col_order[k]];
      a.set(i, col_order[k], 1);
    }
  }
  for (int j = 0; j < n; ++j) {
    if (residual[j] != 0)
      throw std::logic_error("internal error: demand left after placement");
  }
  return a;
}

}  // namespace colsum
