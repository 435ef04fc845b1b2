#pragma once

#include <array>
#include <string>
#include <vector>

#include "feasor/algorithms.hpp"

namespace feasor {

/// Discretized non-negative moment problem on [a,b]: find a density with
/// prescribed mean and variance, in the trapezoid-quadrature-weighted space.
struct MomentProblem {
    double a = 0.0, b = 1.0;
    double mu = 0.5;
    double var = 0.05;
    int N = 201;
    Vector grid;     // N uniform nodes on [a,b]
    Vector weights;  // trapezoid weights, strictly positive, summing to b-a

    static MomentProblem create(double a, double b, double mu, double var, int N);

    InnerProduct ip() const { return InnerProduct(weights); }

    /// Moment targets c_1 = 1, c_2 = mu, c_3 = var + mu^2.
    std::array<double, 3> targets() const { return {1.0, mu, var + mu * mu}; }
};

/// [G1, G2, G3, G4]: three weighted moment hyperplanes plus the nonnegativity cone.
std::vector<ProjectableSet> build_moment_sets(const MomentProblem& p);

/// Coefficients theta of the minimum-norm density in span{1, t, t^2}, from the
/// exact 3x3 Gram system of continuous moments. Throws NotValidAsReference if
/// the resulting quadratic is negative somewhere on [a,b].
std::array<double, 3> reference_min_norm_density(double a, double b, double mu, double var);

/// The reference quadratic sampled on the problem grid.
Vector sample_reference(const MomentProblem& p);

enum class MomentAlgorithm { CyclicProjections, CyclicDR, AnchoredDR, ProductDR, ProductAAMR };

MomentAlgorithm moment_algorithm_from_string(const std::string& tag);
const char* to_string(MomentAlgorithm a);

struct MomentRun {
    SolveReport report;  // in the space the algorithm ran in (base or product)
    Vector density;      // current density estimate in the base space
};

/// Runs the chosen algorithm over [G1..G4]; product algorithms lift the start
/// to the 4-fold product space.
MomentRun solve_moments(const MomentProblem& p, MomentAlgorithm alg, double alpha, double beta,
                        const Vector& x0, const StoppingPolicy& policy);

/// Starting densities of the case study: constant 1 and the two-level step.
Vector start_ones(const MomentProblem& p);
Vector start_step(const MomentProblem& p);

/// Residual ||T(xbar) - xbar|| of one product-AAMR step (diagonal reflected
/// first, q = 0) at the sampled known fixed-point quadruple.
double aamr_fixed_point_residual(const MomentProblem& p, double alpha = 0.95, double beta = 0.95);

/// The fixed-point quadruple sampled on the grid, one block per set.
Vector sample_aamr_fixed_point(const MomentProblem& p);

}  // namespace feasor
