#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "feasor/vector.hpp"

namespace feasor {

/// Self-map of the space driving a fixed-point iteration, with an optional
/// shadow map extracting the sequence that actually approaches the solution.
struct FixedPointOperator {
    std::string label;
    std::function<Vector(const Vector&)> step;
    std::function<Vector(const Vector&)> shadow;  // may be empty
};

struct StoppingPolicy {
    double step_tol = 1e-10;
    std::size_t max_iters = 1'000'000;
    double time_limit = 0.0;        // seconds; 0 = unlimited
    double divergence_radius = 0.0; // 0 = auto: 1e8 * max(1, ||x0||)
    std::size_t trace_stride = 1;   // iterate snapshots every k steps; 0 = off
    std::size_t check_stride = 1;   // solution-test frequency
};

enum class SolveStatus { Converged, MaxIterations, TimeLimit, Diverging, SolutionFound };

const char* to_string(SolveStatus s);

struct SolveReport {
    SolveStatus status = SolveStatus::MaxIterations;
    Vector final_iterate;
    std::optional<Vector> shadow;
    std::size_t iterations = 0;
    std::vector<double> residuals;               // ||x_{k+1} - x_k|| per step
    std::optional<Vector> displacement_estimate; // last recorded step
    std::vector<Vector> snapshots;               // x_k every trace_stride steps (x0 first)
    double seconds = 0.0;
};

/// Runs the fixed-point iteration x_{k+1} = T(x_k). Residuals are measured
/// on the governing sequence in the given inner product. If a solution test
/// is supplied it is evaluated on the shadow of the current iterate and a
/// passing test halts the run with status SolutionFound.
SolveReport iterate(const FixedPointOperator& T, const Vector& x0, const StoppingPolicy& policy = {},
                    const InnerProduct& ip = {},
                    const std::function<bool(const Vector&)>& solution_test = nullptr);

}  // namespace feasor
