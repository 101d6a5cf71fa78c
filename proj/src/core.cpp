#include "colsum/core.hpp"

#include <algorithm>

namespace colsum {

Instance::Instance(int m_, int n_, std::vector<int> r_,
                   std::vector<ValueTable> tables_)
    : m(m_), n(n_), r(std::move(r_)), tables(std::move(tables_)) {
  if (m < 1) throw std::domain_error("m must be at least 1");
  if (n < 1) throw std::domain_error("n must be at least 1");
  if (static_cast<int>(r.size()) != m)
    throw std::domain_error("r must have exactly m entries");
  for (int i = 0; i < m; ++i) {
    if (r[i] < 0 || r[i] > n)
      throw std::domain_error("r[" + std::to_string(i) + "] = " +
                              std::to_string(r[i]) + " outside [0, n]");
  }
  if (static_cast<int>(tables.size()) != n)
    throw std::domain_error("expected one value table per column");
  for (int j = 0; j < n; ++j) {
    if (static_cast<int>(tables[j].size()) != m + 1)
      throw std::domain_error("value table " + std::to_string(j) +
                              " must have m+1 entries");
  }
}

Instance Instance::shared(int m, int n, std::vector<int> r,
                          ValueTable table) {
  std::vector<ValueTable> tables(static_cast<std::size_t>(std::max(n, 0)),
                                 table);
  return Instance(m, n, std::move(r), std::move(tables));
}

bool Instance::uniform_tables() const {
  for (int j = 1; j < n; ++j)
    if (tables[j] != tables[0]) return false;
  return true;
}

std::vector<int> sort_descending(std::vector<int> v) {
  std::stable_sort(v.begin(), v.end(), std::greater<int>());
  return v;
}

ConjugateTuple conjugate(const std::vector<int>& r, int n) {
  if (n < 1) throw std::domain_error("n must be at least 1");
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] < 0 || r[i] > n)
      throw std::domain_error("r[" + std::to_string(i) + "] = " +
                              std::to_string(r[i]) + " outside [0, n]");
  }
  // count[x] = |{i : r_i = x}|, then suffix-sum: d_j = |{i : r_i >= j}|.
  std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
  for (int x : r) ++count[x];
  ConjugateTuple out;
  out.d.resize(n);
  out.prefix.resize(n);
  int at_least = static_cast<int>(r.size()) - count[0];
  std::int64_t running = 0;
  for (int j = 1; j <= n; ++j) {
    out.d[j - 1] = at_least;
    running += at_least;
    out.prefix[j - 1] = running;
    at_least -= count[j];
  }
  out.total = running;
  return out;
}

std::optional<MajorizationWitness> majorization_witness(
    const std::vector<int>& c_sorted, const ConjugateTuple& d) {
  const int n = static_cast<int>(d.d.size());
  if (static_cast<int>(c_sorted.size()) != n)
    throw std::domain_error("tuple lengths differ");
  std::int64_t csum = 0;
  for (int k = 1; k <= n; ++k) {
    if (k < n && c_sorted[k] > c_sorted[k - 1])
      throw std::domain_error("column sums not sorted nonincreasing");
    csum += c_sorted[k - 1];
    if (k < n && csum > d.prefix[k - 1])
      return MajorizationWitness{MajorizationWitness::Kind::prefix, k, csum,
                                 d.prefix[k - 1]};
  }
  if (csum != d.total)
    return MajorizationWitness{MajorizationWitness::Kind::total, n, csum,
                               d.total};
  // Totals agree, so the last prefix check cannot fail on its own; the
  // earlier prefixes were all checked above.
  return std::nullopt;
}

bool is_majorized(const std::vector<int>& c_sorted,
                  const ConjugateTuple& d) {
  return !majorization_witness(c_sorted, d).has_value();
}

std::int64_t evaluate_objective(const Instance& inst,
                                const std::vector<int>& c) {
  if (static_cast<int>(c.size()) != inst.n)
    throw std::domain_error("column sum tuple must have n entries");
  std::int64_t sum = 0;
  for (int j = 0; j < inst.n; ++j) {
    if (c[j] < 0 || c[j] > inst.m)
      throw std::domain_error("column sum " + std::to_string(c[j]) +
                              " outside [0, m]");
    sum = checked_add(sum, inst.tables[j][c[j]]);
  }
  return sum;
}

std::pair<std::vector<int>, std::vector<int>> line_sums(
    const BinaryMatrix& a) {
  std::vector<int> rows(a.m, 0), cols(a.n, 0);
  for (int i = 0; i < a.m; ++i) {
    for (int j = 0; j < a.n; ++j) {
      if (a.get(i, j)) {
        ++rows[i];
        ++cols[j];
      }
    }
  }
  return {std::move(rows), std::move(cols)};
}

}  // namespace colsum
