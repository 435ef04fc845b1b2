#include "feasor/core.hpp"

#include <chrono>

namespace feasor {

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Converged: return "Converged";
        case SolveStatus::MaxIterations: return "MaxIterations";
        case SolveStatus::TimeLimit: return "TimeLimit";
        case SolveStatus::Diverging: return "Diverging";
        case SolveStatus::SolutionFound: return "SolutionFound";
    }
    return "?";
}

SolveReport iterate(const FixedPointOperator& T, const Vector& x0, const StoppingPolicy& policy,
                    const InnerProduct& ip, const std::function<bool(const Vector&)>& solution_test) {
    if (!is_finite(x0)) throw NumericalError("iterate: non-finite starting point");
    if (!(policy.step_tol > 0.0)) throw ParamError("iterate: step_tol must be positive");

    const double radius = policy.divergence_radius > 0.0
                              ? policy.divergence_radius
                              : 1e8 * std::max(1.0, ip.norm(x0));
    const auto t_start = std::chrono::steady_clock::now();
    auto elapsed = [&t_start] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    };

    SolveReport rep;
    Vector x = x0;
    if (policy.trace_stride > 0) rep.snapshots.push_back(x);

    for (std::size_t k = 1; k <= policy.max_iters; ++k) {
        Vector xn = T.step(x);
        if (!is_finite(xn)) throw NumericalError("iterate: non-finite iterate at step " + std::to_string(k));
        Vector step_vec = sub(xn, x);
        const double res = ip.norm(step_vec);
        rep.residuals.push_back(res);
        rep.displacement_estimate = std::move(step_vec);
        x = std::move(xn);
        rep.iterations = k;
        if (policy.trace_stride > 0 && k % policy.trace_stride == 0) rep.snapshots.push_back(x);

        if (solution_test && T.shadow && (policy.check_stride == 0 || k % policy.check_stride == 0)) {
            if (solution_test(T.shadow(x))) {
                rep.status = SolveStatus::SolutionFound;
                break;
            }
        }
        if (res <= policy.step_tol) {
            rep.status = SolveStatus::Converged;
            break;
        }
        if (ip.norm(x) > radius) {
            rep.status = SolveStatus::Diverging;
            break;
        }
        if (policy.time_limit > 0.0 && elapsed() > policy.time_limit) {
            rep.status = SolveStatus::TimeLimit;
            break;
        }
        rep.status = SolveStatus::MaxIterations;
    }

    rep.final_iterate = std::move(x);
    if (T.shadow) rep.shadow = T.shadow(rep.final_iterate);
    rep.seconds = elapsed();
    return rep;
}

}  // namespace feasor
