#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace colsum {

// All objective arithmetic is checked 64-bit; overflow is reported via
// std::overflow_error, never silently wrapped.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("64-bit overflow in objective arithmetic");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("64-bit overflow in objective arithmetic");
  return out;
}

// Thrown when the solver would materialize more DP states than the
// configured budget allows.
class StateBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when a brute-force enumeration would exceed its size cap.
class TooLargeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Thrown by solve_uniform when the per-column value tables differ.
class NotUniformError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Thrown by solve_bounded when some row sum exceeds the declared bound.
class BoundError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// First violated Gale-Ryser check for a (row sums, column sums) pair:
// either some prefix of the sorted column sums exceeds the matching prefix
// of the conjugate tuple, or the totals disagree.
struct MajorizationWitness {
  enum class Kind { prefix, total };
  Kind kind = Kind::total;
  int k = 0;             // 1-based prefix index; == length for Kind::total
  std::int64_t lhs = 0;  // offending prefix sum (or total) of sorted c
  std::int64_t rhs = 0;  // matching prefix sum (or total) of d

  bool operator==(const MajorizationWitness&) const = default;
};

// Thrown when no binary matrix with the requested line sums exists.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(const std::string& msg, MajorizationWitness w)
      : std::runtime_error(msg), witness(w) {}

  MajorizationWitness witness;
};

// f: {0..m} -> Z, stored as values[x]; always m+1 entries.
using ValueTable = std::vector<std::int64_t>;

// Conjugate of a row sum tuple: d[j-1] = |{i : r_i >= j}| for j = 1..n,
// with cached prefix sums (prefix[k-1] = d_1 + ... + d_k) and total.
struct ConjugateTuple {
  std::vector<int> d;
  std::vector<std::int64_t> prefix;
  std::int64_t total = 0;

  bool operator==(const ConjugateTuple&) const = default;
};

// A problem instance: find a 0/1 matrix with row sums r minimizing the sum
// of tables[j][column sum j].  Construction validates every invariant.
struct Instance {
  int m = 0;
  int n = 0;
  std::vector<int> r;              // m entries, each in [0, n]
  std::vector<ValueTable> tables;  // n tables, each with m+1 entries

  Instance(int m, int n, std::vector<int> r, std::vector<ValueTable> tables);

  // Convenience: one table shared by every column.
  static Instance shared(int m, int n, std::vector<int> r, ValueTable table);

  bool uniform_tables() const;

  bool operator==(const Instance&) const = default;
};

// Dense 0/1 matrix, row-major.
struct BinaryMatrix {
  int m = 0;
  int n = 0;
  std::vector<std::uint8_t> bits;

  BinaryMatrix() = default;
  BinaryMatrix(int m_, int n_)
      : m(m_), n(n_), bits(static_cast<std::size_t>(m_) * n_, 0) {}

  std::uint8_t get(int i, int j) const {
    return bits[static_cast<std::size_t>(i) * n + j];
  }
  void set(int i, int j, std::uint8_t v) {
    bits[static_cast<std::size_t>(i) * n + j] = v;
  }

  bool operator==(const BinaryMatrix&) const = default;
};

// Stable descending sort (equal values keep their relative order).
std::vector<int> sort_descending(std::vector<int> v);

// Conjugate of r with respect to n columns.  Throws std::domain_error when
// n < 1 or some r_i lies outside [0, n].
ConjugateTuple conjugate(const std::vector<int>& r, int n);

// Gale-Ryser check: c_sorted must be nonincreasing and have d.d.size()
// entries (std::domain_error otherwise).  Returns the first violated
// check, or nullopt when c_sorted is dominated by d.
std::optional<MajorizationWitness> majorization_witness(
    const std::vector<int>& c_sorted, const ConjugateTuple& d);

bool is_majorized(const std::vector<int>& c_sorted, const ConjugateTuple& d);

// Sum of tables[j][c[j]] with checked arithmetic.  Throws
// std::domain_error when c has the wrong length or entries outside [0, m],
// std::overflow_error when the sum leaves 64 bits.
std::int64_t evaluate_objective(const Instance& inst,
                                const std::vector<int>& c);

// (row sums, column sums) of a 0/1 matrix.
std::pair<std::vector<int>, std::vector<int>> line_sums(
    const BinaryMatrix& a);

}  // namespace colsum
