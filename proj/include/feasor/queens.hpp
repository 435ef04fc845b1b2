#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "feasor/algorithms.hpp"

namespace feasor {

enum class Formulation { F1 = 1, F2 = 2, F3 = 3, F4 = 4 };

Formulation formulation_from_int(int f);

/// (m,n)-queens instance: place m*n queens on an n x n board with exactly m
/// per row and column and at most m per diagonal.
struct QueensInstance {
    int n = 8;
    int m = 2;
    Formulation formulation = Formulation::F3;
};

/// Constraint sets of the chosen formulation over the row-major flattened
/// board. F1 appends the binary box to the four relaxed families; F2-F4 mix
/// relaxed and discrete row/column/diagonal families.
std::vector<ProjectableSet> build_constraints(const QueensInstance& inst);

/// True iff the board is 0/1 with row and column sums m and every diagonal
/// of length >= m+1 summing to at most m.
bool verify_solution(const QueensInstance& inst, const Vector& board);

/// Seeded i.i.d. Bernoulli(1/2) 0/1 board, flattened row-major.
Vector random_board(const QueensInstance& inst, std::uint64_t seed);

/// The random board replicated across the r product blocks.
Vector random_start(const QueensInstance& inst, std::uint64_t seed, std::size_t r);

struct QueensResult {
    SolveReport report;
    std::optional<Vector> board;  // present iff status == SolutionFound
};

/// Product-space DR from a seeded random start; the solution test rounds the
/// shadow point and checks all discrete constraints.
QueensResult solve_queens(const QueensInstance& inst, std::uint64_t seed, const StoppingPolicy& policy);

struct PathologyReport {
    bool x0_fixed_under_cyclic_projections = false;
    bool y0_fixed_under_cyclic_dr = false;
    bool y0_fixed_under_anchored_dr = false;
    bool x0_is_solution = true;
    bool y0_is_solution = true;
    Vector x0, y0;
};

/// Reproduces the known non-solution fixed points of the (2,3)-queens
/// Formulation 3 compositions under the library's tie rules.
PathologyReport reproduce_fixed_point_pathologies();

struct BenchmarkRow {
    int n = 0;
    int formulation = 0;
    int trial = 0;
    std::uint64_t seed = 0;
    bool solved = false;
    std::size_t iterations = 0;
    double seconds = 0.0;
};

struct BenchmarkAggregate {
    int n = 0;
    int formulation = 0;
    int solved_count = 0;
    int trials = 0;
    double avg_iterations_solved = 0.0;  // over solved instances only
    double avg_seconds_solved = 0.0;
};

std::uint64_t benchmark_seed(int n, Formulation f, int trial);

/// Runs solve_queens per (n, formulation, trial); trials may run concurrently
/// on `jobs` workers, output order is deterministic.
std::vector<BenchmarkRow> run_benchmark(const std::vector<int>& sizes,
                                        const std::vector<Formulation>& formulations, int trials,
                                        const StoppingPolicy& policy, int m = 2, unsigned jobs = 1);

std::vector<BenchmarkAggregate> aggregate_benchmark(const std::vector<BenchmarkRow>& rows);

/// n lines of 0/1 characters.
std::string format_board(const Vector& board, int n);

}  // namespace feasor
