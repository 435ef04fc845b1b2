#pragma once

#include <functional>
#include <string>
#include <vector>

#include "feasor/vector.hpp"

namespace feasor {

/// Absolute tolerance used by membership predicates on constraint residuals.
inline constexpr double kMembershipTol = 1e-8;

/// A named constraint set exposing a deterministic selection of its
/// (possibly multivalued) projector together with a membership test.
struct ProjectableSet {
    std::string name;
    std::size_t dim = 0;
    bool convex = false;
    std::function<Vector(const Vector&)> project;
    std::function<bool(const Vector&)> member;
};

/// R_C = 2 P_C - Id
Vector reflect(const ProjectableSet& S, const Vector& x);

// --- catalog -------------------------------------------------------------

/// {x : <a,x> = b} in the given inner product.
ProjectableSet make_hyperplane(Vector a, double b, InnerProduct ip = {});

/// {x : <a,x> <= b} in the given inner product.
ProjectableSet make_halfspace(Vector a, double b, InnerProduct ip = {});

/// Closed ball of radius r centered at the origin.
ProjectableSet make_ball(double r, std::size_t dim, InnerProduct ip = {});

/// Nonnegative orthant. The pointwise clamp is exact for any positive weights.
ProjectableSet make_orthant(std::size_t dim);

/// Affine set {x : Ax = b} with A of full row rank, via the dual form
/// x - A^T (A A^T)^{-1} (Ax - b); weighted spaces use A W^{-1} A^T.
ProjectableSet make_affine_rows(std::vector<Vector> rows, Vector b, InnerProduct ip = {});

/// S_p: {x in R^p : sum x_i = m} (unit weights use the equal-shift formula).
ProjectableSet make_sum_equals(std::size_t p, double m, InnerProduct ip = {});

/// H_p: {x in R^p : sum x_i <= m}.
ProjectableSet make_sum_at_most(std::size_t p, double m, InnerProduct ip = {});

/// Discrete set of 0/1 vectors with exactly m ones. The selection places the
/// ones at the m largest components, ties broken toward the largest index.
ProjectableSet make_binary_sum_equals(std::size_t p, std::size_t m);

/// Discrete set of 0/1 vectors with at most m ones: ones at components that
/// are among the m largest and exceed 0.5.
ProjectableSet make_binary_sum_at_most(std::size_t p, std::size_t m);

/// {0,1}^dim with the componentwise rounding selection (1 iff coordinate > 0.5).
ProjectableSet make_binary_box(std::size_t dim);

/// The whole space (projector = identity).
ProjectableSet make_whole_space(std::size_t dim);

// --- combinators ---------------------------------------------------------

/// y + C
ProjectableSet translate(const ProjectableSet& S, Vector y);

/// alpha * C, alpha != 0
ProjectableSet dilate(const ProjectableSet& S, double alpha);

/// C_1 x ... x C_r with the blockwise projector.
ProjectableSet product_set(std::vector<ProjectableSet> sets);

/// Diagonal subspace {(x,...,x)} of the r-fold product; projector replaces
/// each block with the blockwise mean.
ProjectableSet diagonal_set(std::size_t r, std::size_t base_dim);

/// Set whose coordinates decompose into disjoint index slices, each slice
/// constrained by its own set; the projector acts slice-wise.
ProjectableSet make_sliced_set(std::string name, std::size_t dim, bool convex,
                               std::vector<std::vector<std::size_t>> slices,
                               std::vector<ProjectableSet> slice_sets);

}  // namespace feasor
