#include "colsum/io.hpp"

#include <limits>

namespace colsum {
namespace {

using nlohmann::json;

const json& field(const json& j, const char* key) {
  if (!j.is_object())
    throw std::domain_error("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end())
    throw std::domain_error(std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t as_int64(const json& v, const char* what) {
  if (!v.is_number_integer())
    throw std::domain_error(std::string(what) + " must be an integer");
  return v.get<std::int64_t>();
}

int as_int(const json& v, const char* what) {
  std::int64_t x = as_int64(v, what);
  if (x < std::numeric_limits<int>::min() ||
      x > std::numeric_limits<int>::max())
    throw std::domain_error(std::string(what) + " out of range");
  return static_cast<int>(x);
}

std::vector<int> int_array(const json& v, const char* what) {
  if (!v.is_array())
    throw std::domain_error(std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(v.size());
  for (const json& e : v) out.push_back(as_int(e, what));
  return out;
}

std::vector<std::int64_t> int64_array(const json& v, const char* what) {
  if (!v.is_array())
    throw std::domain_error(std::string(what) + " must be an array");
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (const json& e : v) out.push_back(as_int64(e, what));
  return out;
}

// A function spec is {"table": [...]} or {"poly": [...]}, never both.
ValueTable parse_function(const json& j, int m) {
  if (!j.is_object())
    throw std::domain_error("function spec must be an object");
  const bool has_table = j.contains("table");
  const bool has_poly = j.contains("poly");
  if (has_table == has_poly)
    throw std::domain_error(
        "function spec needs exactly one of 'table' or 'poly'");
  if (has_table) {
    ValueTable t = int64_array(j.at("table"), "table entry");
    if (static_cast<int>(t.size()) != m + 1)
      throw std::domain_error("value table must have m+1 entries");
    return t;
  }
  return table_from_poly(int64_array(j.at("poly"), "poly coefficient"), m);
}

}  // namespace

ValueTable table_from_poly(const std::vector<std::int64_t>& coeffs, int m) {
  ValueTable out;
  out.reserve(static_cast<std::size_t>(m) + 1);
  for (int x = 0; x <= m; ++x) {
    std::int64_t acc = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;)
      acc = checked_add(checked_mul(acc, x), coeffs[k]);
    out.push_back(acc);
  }
  return out;
}

Instance parse_instance(const json& j) {
  const int m = as_int(field(j, "m"), "m");
  const int n = as_int(field(j, "n"), "n");
  if (m < 1 || n < 1)
    throw std::domain_error("m and n must be at least 1");
  std::vector<int> r = int_array(field(j, "r"), "row sum");

  const json& fns = field(j, "functions");
  const bool shared = fns.is_object() && fns.contains("shared");
  const bool per_column = fns.is_object() && fns.contains("per_column");
  if (shared == per_column)
    throw std::domain_error(
        "functions needs exactly one of 'shared' or 'per_column'");
  std::vector<ValueTable> tables;
  if (shared) {
    tables.assign(static_cast<std::size_t>(n),
                  parse_function(fns.at("shared"), m));
  } else {
    const json& list = fns.at("per_column");
    if (!list.is_array() || static_cast<int>(list.size()) != n)
      throw std::domain_error("per_column must list one function per column");
    tables.reserve(static_cast<std::size_t>(n));
    for (const json& e : list) tables.push_back(parse_function(e, m));
  }
  return Instance(m, n, std::move(r), std::move(tables));
}

nlohmann::json instance_to_json(const Instance& inst) {
  json j{{"m", inst.m}, {"n", inst.n}, {"r", inst.r}};
  if (inst.uniform_tables()) {
    j["functions"] = {{"shared", {{"table", inst.tables[0]}}}};
  } else {
    json list = json::array();
    for (const ValueTable& t : inst.tables)
      list.push_back({{"table", t}});
    j["functions"] = {{"per_column", std::move(list)}};
  }
  return j;
}

SolutionDocument parse_solution(const json& j) {
  SolutionDocument doc;
  if (j.contains("objective"))
    doc.objective = as_int64(j.at("objective"), "objective");
  doc.column_sums = int_array(field(j, "column_sums"), "column sum");
  if (j.contains("matrix")) {
    const json& rows = j.at("matrix");
    if (!rows.is_array())
      throw std::domain_error("matrix must be an array of row strings");
    std::vector<std::string> lines;
    lines.reserve(rows.size());
    for (const json& e : rows) {
      if (!e.is_string())
        throw std::domain_error("matrix rows must be strings");
      lines.push_back(e.get<std::string>());
    }
    doc.matrix = matrix_from_rows(lines);
  }
  if (!j.contains("algorithm") || !j.at("algorithm").is_string())
    throw std::domain_error("missing algorithm name");
  doc.algorithm = j.at("algorithm").get<std::string>();
  const json& stats = field(j, "stats");
  doc.stats.states_created =
      as_int64(field(stats, "states_created"), "states_created");
  doc.stats.edges_relaxed =
      as_int64(field(stats, "edges_relaxed"), "edges_relaxed");
  const json& ms = field(stats, "elapsed_ms");
  if (!ms.is_number())
    throw std::domain_error("elapsed_ms must be a number");
  doc.elapsed_ms = ms.get<double>();
  return doc;
}

nlohmann::json solution_to_json(const SolutionDocument& doc) {
  json j;
  if (doc.objective) j["objective"] = *doc.objective;
  j["column_sums"] = doc.column_sums;
  if (doc.matrix) j["matrix"] = matrix_rows(*doc.matrix);
  j["algorithm"] = doc.algorithm;
  j["stats"] = {{"states_created", doc.stats.states_created},
                {"edges_relaxed", doc.stats.edges_relaxed},
                {"elapsed_ms", doc.elapsed_ms}};
  return j;
}

PairDocument parse_pair(const json& j) {
  PairDocument doc;
  doc.r = int_array(field(j, "r"), "row sum");
  doc.c = int_array(field(j, "c"), "column sum");
  return doc;
}

ConjugateQuery parse_conjugate_query(const json& j) {
  ConjugateQuery q;
  q.r = int_array(field(j, "r"), "row sum");
  q.n = as_int(field(j, "n"), "n");
  return q;
}

std::vector<std::string> matrix_rows(const BinaryMatrix& a) {
  std::vector<std::string> rows;
  rows.reserve(static_cast<std::size_t>(a.m));
  for (int i = 0; i < a.m; ++i) {
    std::string row(static_cast<std::size_t>(a.n), '0');
    for (int j = 0; j < a.n; ++j)
      if (a.get(i, j)) row[j] = '1';
    rows.push_back(std::move(row));
  }
  return rows;
}

BinaryMatrix matrix_from_rows(const std::vector<std::string>& rows) {
  const int m = static_cast<int>(rows.size());
  if (m < 1) throw std::domain_error("matrix needs at least one row");
  const int n = static_cast<int>(rows[0].size());
  if (n < 1) throw std::domain_error("matrix needs at least one column");
  BinaryMatrix a(m, n);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw std::domain_error("matrix rows differ in length");
    for (int j = 0; j < n; ++j) {
      const char ch = rows[i][j];
      if (ch != '0' && ch != '1')
        throw std::domain_error("matrix rows may contain only 0 and 1");
      a.set(i, j, ch == '1');
    }
  }
  return a;
}

void verify_solution(const Instance& inst, const SolutionDocument& doc) {
  if (static_cast<int>(doc.column_sums.size()) != inst.n)
    throw std::logic_error("result check failed: column sum count");
  if (doc.matrix) {
    auto [rows, cols] = line_sums(*doc.matrix);
    if (rows != inst.r)
      throw std::logic_error("result check failed: matrix row sums");
    if (cols != doc.column_sums)
      throw std::logic_error("result check failed: matrix column sums");
  }
  if (doc.objective &&
      evaluate_objective(inst, doc.column_sums) != *doc.objective)
    throw std::logic_error("result check failed: objective value");
}

}  // namespace colsum
