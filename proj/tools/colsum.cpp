#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "colsum/core.hpp"
#include "colsum/io.hpp"
#include "colsum/oracle.hpp"
#include "colsum/realize.hpp"
#include "colsum/solve.hpp"

namespace {

using nlohmann::json;

// Exit codes: 0 success, 2 bad input or domain error, 3 state budget
// exhausted, 4 arithmetic overflow, 5 no matrix with the requested line
// sums. (1 is left to the CLI parser for usage errors.)
constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitOverflow = 4;
constexpr int kExitInfeasible = 5;

json read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return json::parse(text);
}

class Timer {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string witness_text(const colsum::MajorizationWitness& w) {
  if (w.kind == colsum::MajorizationWitness::Kind::total)
    return "totals " + std::to_string(w.lhs) + " != " +
           std::to_string(w.rhs);
  return "prefix " + std::to_string(w.k) + ": " + std::to_string(w.lhs) +
         " > " + std::to_string(w.rhs);
}

json witness_json(const colsum::MajorizationWitness& w) {
  return {{"kind", w.kind == colsum::MajorizationWitness::Kind::total
                       ? "total"
                       : "prefix"},
          {"k", w.k},
          {"lhs", w.lhs},
          {"rhs", w.rhs}};
}

void print_solution(const colsum::SolutionDocument& doc,
                    const std::string& format) {
  if (format == "json") {
    std::cout << colsum::solution_to_json(doc).dump() << "\n";
    return;
  }
  if (doc.objective)
    std::cout << "objective: " << *doc.objective << "\n";
  std::cout << "column sums: " << join(doc.column_sums) << "\n";
  if (doc.matrix) {
    std::cout << "matrix:\n";
    for (const std::string& row : colsum::matrix_rows(*doc.matrix))
      std::cout << row << "\n";
  }
  std::cout << "algorithm: " << doc.algorithm << "\n";
  std::cout << "states: " << doc.stats.states_created
            << "  edges: " << doc.stats.edges_relaxed << "  elapsed: "
            << doc.elapsed_ms << " ms\n";
}

struct SolveFlags {
  std::string input = "-";
  std::string algorithm = "auto";
  std::string output = "json";
  std::optional<int> bound;
  std::int64_t max_states = colsum::SolveLimits{}.max_states;
  bool emit_matrix = true;
};

int run_solve(const SolveFlags& flags) {
  const colsum::Instance inst = colsum::parse_instance(read_input(flags.input));

  std::string algorithm = flags.algorithm;
  if (algorithm == "auto")
    algorithm = inst.uniform_tables() ? "uniform" : "bounded";

  Timer timer;
  colsum::SolutionDocument doc;
  doc.algorithm = algorithm;
  if (algorithm == "uniform") {
    colsum::Solution sol = colsum::solve_uniform(inst);
    doc.objective = sol.objective;
    doc.column_sums = std::move(sol.column_sums);
    doc.matrix = std::move(sol.matrix);
    doc.stats = sol.stats;
  } else if (algorithm == "bounded") {
    colsum::SolveLimits limits{flags.max_states};
    colsum::Solution sol = colsum::solve_bounded(inst, flags.bound, limits);
    doc.objective = sol.objective;
    doc.column_sums = std::move(sol.column_sums);
    doc.matrix = std::move(sol.matrix);
    doc.stats = sol.stats;
  } else {
    colsum::OracleResult res = algorithm == "brute-matrix"
                                   ? colsum::brute_matrices(inst)
                                   : colsum::brute_tuples(inst);
    doc.objective = res.objective;
    doc.column_sums = std::move(res.column_sums);
    doc.matrix = colsum::realize_greedy(inst.r, doc.column_sums);
    doc.stats.states_created = res.examined;
  }
  doc.elapsed_ms = timer.elapsed_ms();

  colsum::verify_solution(inst, doc);
  if (!flags.emit_matrix) doc.matrix.reset();
  print_solution(doc, flags.output);
  return kExitOk;
}

struct RealizeFlags {
  std::string input = "-";
  std::string method = "flow";
  std::string output = "json";
  bool emit_matrix = true;
};

int run_realize(const RealizeFlags& flags) {
  const colsum::PairDocument pair = colsum::parse_pair(read_input(flags.input));

  Timer timer;
  colsum::SolutionDocument doc;
  doc.algorithm = flags.method;
  doc.column_sums = pair.c;
  doc.matrix = flags.method == "flow"
                   ? colsum::realize_flow(pair.r, pair.c)
                   : colsum::realize_greedy(pair.r, pair.c);
  doc.elapsed_ms = timer.elapsed_ms();

  // verify against the requested row sums (no objective to check)
  auto [rows, cols] = colsum::line_sums(*doc.matrix);
  if (rows != pair.r || cols != pair.c)
    throw std::logic_error("result check failed: matrix line sums");
  if (!flags.emit_matrix) doc.matrix.reset();
  print_solution(doc, flags.output);
  return kExitOk;
}

int run_conjugate(const std::string& input, const std::string& output) {
  const colsum::ConjugateQuery q =
      colsum::parse_conjugate_query(read_input(input));
  const colsum::ConjugateTuple d = colsum::conjugate(q.r, q.n);
  if (output == "json")
    std::cout << json{{"d", d.d}}.dump() << "\n";
  else
    std::cout << join(d.d) << "\n";
  return kExitOk;
}

int run_check(const std::string& input, const std::string& output) {
  const colsum::PairDocument pair = colsum::parse_pair(read_input(input));
  const colsum::ConjugateTuple d =
      colsum::conjugate(pair.r, static_cast<int>(pair.c.size()));
  for (int cj : pair.c) {
    if (cj < 0)
      throw std::domain_error("column sum " + std::to_string(cj) +
                              " is negative");
  }
  const auto w =
      colsum::majorization_witness(colsum::sort_descending(pair.c), d);
  if (output == "json") {
    json j{{"feasible", !w.has_value()}};
    if (w) j["witness"] = witness_json(*w);
    std::cout << j.dump() << "\n";
  } else if (w) {
    std::cout << "infeasible: " << witness_text(*w) << "\n";
  } else {
    std::cout << "feasible\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimize a separable objective over the column sums of a "
               "0/1 matrix with prescribed row sums"};
  app.require_subcommand(1);

  SolveFlags solve_flags;
  CLI::App* solve = app.add_subcommand(
      "solve", "Solve an instance document and print the result");
  solve->add_option("--input", solve_flags.input,
                    "Instance document path, or - for stdin");
  solve->add_option("--algorithm", solve_flags.algorithm,
                    "auto, uniform, bounded, brute-matrix or brute-tuple")
      ->check(CLI::IsMember(
          {"auto", "uniform", "bounded", "brute-matrix", "brute-tuple"}));
  solve->add_option("--bound", solve_flags.bound,
                    "Row sum bound for the bounded solver (default max r_i)");
  solve->add_option("--max-states", solve_flags.max_states,
                    "DP state budget for the bounded solver");
  solve->add_option("--emit-matrix", solve_flags.emit_matrix,
                    "Include the matrix in the result (true|false)");
  solve->add_option("--output", solve_flags.output, "json or pretty")
      ->check(CLI::IsMember({"json", "pretty"}));

  RealizeFlags realize_flags;
  CLI::App* realize = app.add_subcommand(
      "realize", "Build a 0/1 matrix with the given line sums");
  realize->add_option("--input", realize_flags.input,
                      "Pair document {r, c}, or - for stdin");
  realize->add_option("--method", realize_flags.method, "flow or greedy")
      ->check(CLI::IsMember({"flow", "greedy"}));
  realize->add_option("--emit-matrix", realize_flags.emit_matrix,
                      "Include the matrix in the result (true|false)");
  realize->add_option("--output", realize_flags.output, "json or pretty")
      ->check(CLI::IsMember({"json", "pretty"}));

  std::string conj_input = "-", conj_output = "pretty";
  CLI::App* conj = app.add_subcommand(
      "conjugate", "Print the conjugate of a row sum tuple");
  conj->add_option("--input", conj_input, "Query document {r, n}");
  conj->add_option("--output", conj_output, "json or pretty")
      ->check(CLI::IsMember({"json", "pretty"}));

  std::string check_input = "-", check_output = "pretty";
  CLI::App* check = app.add_subcommand(
      "check", "Decide whether line sums (r, c) are realizable");
  check->add_option("--input", check_input, "Pair document {r, c}");
  check->add_option("--output", check_output, "json or pretty")
      ->check(CLI::IsMember({"json", "pretty"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(solve_flags);
    if (realize->parsed()) return run_realize(realize_flags);
    if (conj->parsed()) return run_conjugate(conj_input, conj_output);
    return run_check(check_input, check_output);
  } catch (const colsum::StateBudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOverflow;
  } catch (const colsum::InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: invalid input document: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
