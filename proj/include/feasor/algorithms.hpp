#pragma once

#include <utility>
#include <vector>

#include "feasor/core.hpp"
#include "feasor/sets.hpp"

namespace feasor {

/// Cyclic projections: x -> (P_{C_r} ... P_{C_1})(x), first listed applied first.
FixedPointOperator cyclic_projections(std::vector<ProjectableSet> sets);

/// Averaged projections: x -> (P_{C_1} + ... + P_{C_r})(x) / r.
FixedPointOperator averaged_projections(std::vector<ProjectableSet> sets);

/// Douglas-Rachford: x -> x + P_B(2 P_A(x) - x) - P_A(x); shadow P_A.
FixedPointOperator douglas_rachford(ProjectableSet A, ProjectableSet B);

/// Generalized DR: x -> (1-alpha) x + alpha R_B R_A(x), 0 < alpha < 1.
FixedPointOperator generalized_dr(ProjectableSet A, ProjectableSet B, double alpha);

/// RAAR: x -> (1-beta) P_A(x) + beta T_{A,B}(x), 0 < beta < 1.
FixedPointOperator raar(ProjectableSet A, ProjectableSet B, double beta);

/// Circumcenter of three points: the point of their affine hull equidistant
/// to all three. Degenerate inputs: all (nearly) equal -> that point; exactly
/// two distinct -> their midpoint; three distinct collinear points throw.
Vector circumcenter(const Vector& a, const Vector& b, const Vector& c, const InnerProduct& ip = {});

/// Circumcentered DR: x -> circumcenter(x, R_A(x), R_B R_A(x)); intended for
/// affine subspaces.
FixedPointOperator circumcentered_dr(ProjectableSet A, ProjectableSet B, InnerProduct ip = {});

/// AAMR: x -> (1-alpha) x + alpha (2 beta P_{B-q} - Id)(2 beta P_{A-q} - Id)(x),
/// 0 < alpha <= 1, 0 < beta <= 1 (beta = 1 is the DR reduction mode).
/// Shadow: x -> P_A(x + q).
FixedPointOperator aamr(ProjectableSet A, ProjectableSet B, double alpha, double beta, Vector q);

/// (Id + R_{C_r} ... R_{C_1}) / 2 -- the naive many-set extension; its fixed
/// points need not yield intersection points.
FixedPointOperator naive_multiset_dr(std::vector<ProjectableSet> sets);

/// Cyclic DR: T_{C_r,C_1} T_{C_{r-1},C_r} ... T_{C_1,C_2}, rightmost applied
/// first; shadow P_{C_1}.
FixedPointOperator cyclic_dr(std::vector<ProjectableSet> sets);

/// Cyclically anchored DR: T_{C_1,C_r} ... T_{C_1,C_2} with anchor C_1.
FixedPointOperator anchored_dr(ProjectableSet anchor, std::vector<ProjectableSet> others);

/// DR on the product-space reformulation of r sets over a common base space,
/// with the diagonal reflected first. The shadow maps the product iterate to
/// the blockwise mean in the base space.
FixedPointOperator product_dr(std::vector<ProjectableSet> sets);

/// AAMR on the product-space reformulation, diagonal set reflected first
/// (operator T_{D,C,alpha,beta} with q = 0). Shadow as in product_dr.
FixedPointOperator product_aamr(std::vector<ProjectableSet> sets, double alpha, double beta);

/// Replicate a base vector across r product blocks.
Vector lift(const Vector& x, std::size_t r);

/// Blockwise mean of a product vector (the diagonal projection, one block).
Vector unlift_shadow(const Vector& X, std::size_t r);

/// (a, P_B(a)) with a the shadow of the final DR iterate.
std::pair<Vector, Vector> best_approximation_pair(const SolveReport& report, const ProjectableSet& A,
                                                  const ProjectableSet& B);

}  // namespace feasor
