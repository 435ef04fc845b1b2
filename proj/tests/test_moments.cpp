#include <doctest.h>

#include <cmath>

#include "feasor/moments.hpp"

using namespace feasor;

namespace {

MomentProblem beta22(int N) { return MomentProblem::create(0.0, 1.0, 0.5, 0.05, N); }

double moment_residual(const MomentProblem& p, const Vector& x, int order) {
    Vector normal(p.grid.size());
    for (std::size_t k = 0; k < p.grid.size(); ++k) normal[k] = std::pow(p.grid[k], order);
    return std::abs(p.ip().dot(normal, x) - p.targets()[order]);
}

}  // namespace

TEST_CASE("problem construction: grid, weights, targets, validation") {
    auto p = beta22(201);
    CHECK(p.grid.size() == 201);
    CHECK(p.grid.front() == 0.0);
    CHECK(p.grid.back() == 1.0);
    double wsum = 0.0;
    for (double w : p.weights) {
        CHECK(w > 0.0);
        wsum += w;
    }
    CHECK(wsum == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p.targets()[0] == 1.0);
    CHECK(p.targets()[1] == 0.5);
    CHECK(p.targets()[2] == doctest::Approx(0.3).epsilon(1e-15));

    CHECK_THROWS_AS(MomentProblem::create(1.0, 0.0, 0.5, 0.05, 201), ConfigError);
    CHECK_THROWS_AS(MomentProblem::create(0.0, 1.0, 0.5, 0.0, 201), ConfigError);
    CHECK_THROWS_AS(MomentProblem::create(0.0, 1.0, 0.5, 0.05, 2), ConfigError);
}

TEST_CASE("constraint sets: names, projector consistency, clamping") {
    auto p = beta22(101);
    auto sets = build_moment_sets(p);
    REQUIRE(sets.size() == 4);
    CHECK(sets[0].name == "G1");
    CHECK(sets[3].name == "G4");

    // projecting anything onto G_i satisfies its moment equation immediately
    Vector x(p.grid.size(), 0.37);
    for (int i = 0; i < 3; ++i) {
        Vector proj = sets[i].project(x);
        CHECK(moment_residual(p, proj, i) <= 1e-12);
        CHECK(sets[i].member(proj));
    }
    Vector neg(p.grid.size(), -1.0);
    Vector clamped = sets[3].project(neg);
    for (double v : clamped) CHECK(v == 0.0);
}

TEST_CASE("the sampled reference density is near-fixed under each moment hyperplane") {
    for (int N : {101, 201, 401}) {
        auto p = beta22(N);
        auto sets = build_moment_sets(p);
        Vector ref = sample_reference(p);
        const double h2 = std::pow(1.0 / (N - 1), 2);
        for (int i = 0; i < 3; ++i) {
            // quadrature error of the trapezoid rule is O(h^2)
            CHECK(p.ip().dist(sets[i].project(ref), ref) <= 50.0 * h2);
        }
        // the reference dips below zero only by rounding noise at the endpoints
        CHECK(p.ip().dist(sets[3].project(ref), ref) <= 1e-14);
    }
}

TEST_CASE("reference quadratic coefficients from the exact Gram system") {
    auto theta = reference_min_norm_density(0.0, 1.0, 0.5, 0.05);
    CHECK(std::abs(theta[0]) <= 1e-10);
    CHECK(theta[1] == doctest::Approx(6.0).epsilon(1e-10));
    CHECK(theta[2] == doctest::Approx(-6.0).epsilon(1e-10));

    // uniform-distribution moments on [-1,2] are matched by the constant 1/3
    auto th2 = reference_min_norm_density(-1.0, 2.0, 0.5, 0.75);
    CHECK(th2[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(std::abs(th2[1]) <= 1e-12);
    CHECK(std::abs(th2[2]) <= 1e-12);
}

TEST_CASE("reference rejects parameters whose quadratic dips negative") {
    // tiny variance concentrates the mass; no nonnegative quadratic matches
    CHECK_THROWS_AS(reference_min_norm_density(0.0, 1.0, 0.5, 0.005), NotValidAsReference);
}

TEST_CASE("algorithm tags round-trip") {
    for (const char* tag : {"cyclic-projections", "cyclic-dr", "anchored-dr", "product-dr",
                            "product-aamr"}) {
        CHECK(std::string(to_string(moment_algorithm_from_string(tag))) == tag);
    }
    CHECK_THROWS_AS(moment_algorithm_from_string("newton"), ConfigError);
}

TEST_CASE("cyclic projections from the flat start approach the reference density") {
    auto p = beta22(101);
    StoppingPolicy pol;
    pol.step_tol = 1e-10;
    pol.max_iters = 10000;
    pol.trace_stride = 0;
    auto run = solve_moments(p, MomentAlgorithm::CyclicProjections, 0.95, 0.95, start_ones(p), pol);
    CHECK(p.ip().dist(run.density, sample_reference(p)) < 1e-2);
}

TEST_CASE("starting at the sampled reference converges within a few steps") {
    auto p = beta22(201);
    StoppingPolicy pol;
    pol.step_tol = 1e-6;
    pol.max_iters = 50;
    pol.trace_stride = 0;
    auto run = solve_moments(p, MomentAlgorithm::CyclicProjections, 0.95, 0.95, sample_reference(p), pol);
    CHECK(run.report.status == SolveStatus::Converged);
    CHECK(run.report.iterations <= 10);
}

TEST_CASE("every converged density is nonnegative and matches the moments") {
    auto p = beta22(101);
    StoppingPolicy pol;
    pol.step_tol = 1e-12;
    pol.max_iters = 400000;
    pol.trace_stride = 0;
    int converged = 0;
    for (auto alg : {MomentAlgorithm::CyclicProjections, MomentAlgorithm::CyclicDR,
                     MomentAlgorithm::AnchoredDR, MomentAlgorithm::ProductDR,
                     MomentAlgorithm::ProductAAMR}) {
        CAPTURE(to_string(alg));
        auto run = solve_moments(p, alg, 0.95, 0.95, start_ones(p), pol);
        if (run.report.status != SolveStatus::Converged) continue;
        ++converged;
        for (double v : run.density) CHECK(v >= -1e-6);
        for (int i = 0; i < 3; ++i) CHECK(moment_residual(p, run.density, i) <= 1e-6);
    }
    CHECK(converged >= 2);
}

TEST_CASE("grid refinement: limits at N and 2N-1 differ at second order") {
    StoppingPolicy pol;
    pol.step_tol = 1e-13;
    pol.max_iters = 200000;
    pol.trace_stride = 0;
    auto limit = [&](int N) {
        auto p = beta22(N);
        return solve_moments(p, MomentAlgorithm::CyclicProjections, 0.95, 0.95, start_ones(p), pol)
            .density;
    };
    Vector l51 = limit(51), l101 = limit(101), l201 = limit(201);
    auto coarse_diff = [](const Vector& coarse, const Vector& fine, int N) {
        // nodes of the N-grid are every other node of the (2N-1)-grid
        auto p = beta22(N);
        Vector restricted(coarse.size());
        for (std::size_t i = 0; i < restricted.size(); ++i) restricted[i] = fine[2 * i];
        return p.ip().dist(coarse, restricted);
    };
    const double d1 = coarse_diff(l51, l101, 51);
    const double d2 = coarse_diff(l101, l201, 101);
    // halving h divides the O(N^-2) gap by about 4; allow a factor-4 band
    CHECK(d1 / d2 >= 1.0);
    CHECK(d1 / d2 <= 16.0);
}

TEST_CASE("known fixed-point quadruple of the product modified-reflection operator") {
    auto p1001 = beta22(1001);
    Vector X = sample_aamr_fixed_point(p1001);
    REQUIRE(X.size() == 4 * 1001);
    // blockwise mean equals the sampled reference exactly (polynomial identity)
    Vector mean = unlift_shadow(X, 4);
    Vector ref = sample_reference(p1001);
    for (std::size_t i = 0; i < mean.size(); ++i) {
        CHECK(std::abs(mean[i] - ref[i]) <= 1e-12);
    }

    // one-step residual shrinks at the quadrature rate: log-log slope ~ -2
    const double r_small = aamr_fixed_point_residual(beta22(101));
    const double r_large = aamr_fixed_point_residual(p1001);
    CHECK(r_large <= 1e-3);
    const double slope = std::log(r_large / r_small) / std::log(1000.0 / 100.0);
    CHECK(slope == doctest::Approx(-2.0).epsilon(0.25));
}

TEST_CASE("starting densities of the case study") {
    auto p = beta22(11);
    Vector ones = start_ones(p);
    for (double v : ones) CHECK(v == 1.0);
    Vector step = start_step(p);
    CHECK(step.front() == 1.0);
    CHECK(step.back() == 0.25);
    CHECK(step[5] == 1.0);  // the midpoint belongs to the lower level
}
