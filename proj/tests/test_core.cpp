#include <doctest.h>

#include <cmath>
#include <random>

#include "feasor/algorithms.hpp"
#include "feasor/core.hpp"

using namespace feasor;

namespace {

Vector rand_vec(std::mt19937_64& rng, std::size_t d, double lo = -5.0, double hi = 5.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    Vector v(d);
    for (double& x : v) x = u(rng);
    return v;
}

}  // namespace

TEST_CASE("inner product: hand-computed values") {
    CHECK(inner({1, 2}, {3, 4}) == 11.0);
    CHECK(inner({1, 0}, {0, 1}) == 0.0);
    CHECK(inner({1, 1}, {1, 1}, InnerProduct({0.5, 1.5})) == 2.0);
}

TEST_CASE("inner product: symmetry and bilinearity on random inputs") {
    std::mt19937_64 rng(11);
    InnerProduct w({0.3, 1.0, 2.5, 0.7});
    for (int t = 0; t < 100; ++t) {
        Vector x = rand_vec(rng, 4), y = rand_vec(rng, 4), z = rand_vec(rng, 4);
        const double a = std::uniform_real_distribution<double>(-3, 3)(rng);
        CHECK(w.dot(x, y) == doctest::Approx(w.dot(y, x)).epsilon(1e-12));
        CHECK(w.dot(lin(a, x, 1.0, z), y) ==
              doctest::Approx(a * w.dot(x, y) + w.dot(z, y)).epsilon(1e-10));
        CHECK(w.dot(x, x) >= 0.0);
    }
}

TEST_CASE("inner product: error cases") {
    CHECK_THROWS_AS(inner({1, 2}, {1, 2, 3}), DimensionError);
    CHECK_THROWS_AS(InnerProduct({1.0, 0.0}), InvalidSetError);
    CHECK_THROWS_AS(InnerProduct({1.0, -2.0}), InvalidSetError);
    InnerProduct w({1.0, 2.0});
    CHECK_THROWS_AS(w.dot({1, 2, 3}, {1, 2, 3}), DimensionError);
}

TEST_CASE("iterate: identity operator converges immediately") {
    FixedPointOperator T{"id", [](const Vector& x) { return x; }, nullptr};
    auto rep = iterate(T, {3.0, -1.0});
    CHECK(rep.status == SolveStatus::Converged);
    CHECK(rep.iterations == 1);
    CHECK(rep.residuals.size() == 1);
    CHECK(rep.residuals[0] == 0.0);
    CHECK(rep.final_iterate == Vector{3.0, -1.0});
}

TEST_CASE("iterate: DR on the lines y=0 and y=x contracts at rate 1/sqrt(2)") {
    auto A = make_hyperplane({0, 1}, 0);
    auto B = make_hyperplane({-1, 1}, 0);
    auto T = douglas_rachford(A, B);
    StoppingPolicy pol;
    pol.step_tol = 1e-12;
    pol.trace_stride = 1;
    auto rep = iterate(T, {1.0, 0.0}, pol);
    CHECK(rep.status == SolveStatus::Converged);
    InnerProduct ip;
    REQUIRE(rep.snapshots.size() >= 41);
    for (int k = 0; k <= 40; ++k) {
        CHECK(ip.norm(rep.snapshots[k]) == doctest::Approx(std::pow(2.0, -k / 2.0)).epsilon(1e-12));
    }
    CHECK(ip.norm(rep.final_iterate) < 1e-10);
}

TEST_CASE("iterate: DR on parallel lines drifts with constant step (0,1)") {
    auto A = make_hyperplane({0, 1}, 0);
    auto B = make_hyperplane({0, 1}, 1);
    auto T = douglas_rachford(A, B);
    StoppingPolicy pol;
    pol.divergence_radius = 1e3;
    pol.trace_stride = 1;
    auto rep = iterate(T, {0.0, 0.0}, pol);
    CHECK(rep.status == SolveStatus::Diverging);
    REQUIRE(rep.displacement_estimate.has_value());
    CHECK(*rep.displacement_estimate == Vector{0.0, 1.0});
    // iterates are exactly (0, k); the shadow stays pinned at the origin
    for (std::size_t k = 0; k < rep.snapshots.size(); ++k) {
        CHECK(rep.snapshots[k] == Vector{0.0, static_cast<double>(k)});
        CHECK(T.shadow(rep.snapshots[k]) == Vector{0.0, 0.0});
    }
}

TEST_CASE("iterate: residuals replay exactly from the snapshot trace") {
    auto A = make_ball(1.0, 3);
    auto B = make_hyperplane({1, 1, 1}, 0.5);
    auto T = douglas_rachford(A, B);
    StoppingPolicy pol;
    pol.max_iters = 200;
    pol.trace_stride = 1;
    auto rep = iterate(T, {2.0, -1.0, 0.5}, pol);
    REQUIRE(rep.snapshots.size() == rep.iterations + 1);
    CHECK(rep.residuals.size() == rep.iterations);
    InnerProduct ip;
    for (std::size_t k = 0; k < rep.iterations; ++k) {
        CHECK(rep.residuals[k] == ip.dist(rep.snapshots[k + 1], rep.snapshots[k]));
    }
}

TEST_CASE("iterate: Fejer monotonicity toward a fixed point (consistent convex pair)") {
    auto A = make_hyperplane({0, 1}, 0);
    auto B = make_hyperplane({-1, 1}, 0);
    auto T = douglas_rachford(A, B);
    const Vector f{0.0, 0.0};  // intersection point, hence a DR fixed point
    StoppingPolicy pol;
    pol.trace_stride = 1;
    pol.max_iters = 500;
    std::mt19937_64 rng(7);
    InnerProduct ip;
    for (int t = 0; t < 20; ++t) {
        auto rep = iterate(T, rand_vec(rng, 2), pol);
        for (std::size_t k = 0; k + 1 < rep.snapshots.size(); ++k) {
            CHECK(ip.dist(rep.snapshots[k + 1], f) <= ip.dist(rep.snapshots[k], f) + 1e-9);
        }
    }
}

TEST_CASE("iterate: determinism of repeated runs") {
    auto A = make_ball(2.0, 4);
    auto B = make_hyperplane({1, 0, -1, 2}, 1.0);
    auto T = douglas_rachford(A, B);
    StoppingPolicy pol;
    pol.max_iters = 300;
    auto r1 = iterate(T, {1.5, -0.25, 3.0, 0.125}, pol);
    auto r2 = iterate(T, {1.5, -0.25, 3.0, 0.125}, pol);
    CHECK(r1.residuals == r2.residuals);
    CHECK(r1.final_iterate == r2.final_iterate);
    CHECK(r1.iterations == r2.iterations);
}

TEST_CASE("iterate: stopping-policy edge cases") {
    FixedPointOperator T{"shift", [](const Vector& x) { return add(x, {1.0}); }, nullptr};
    SUBCASE("max iterations") {
        StoppingPolicy pol;
        pol.max_iters = 7;
        pol.divergence_radius = 1e9;
        auto rep = iterate(T, {0.0}, pol);
        CHECK(rep.status == SolveStatus::MaxIterations);
        CHECK(rep.iterations == 7);
    }
    SUBCASE("divergence radius") {
        StoppingPolicy pol;
        pol.divergence_radius = 10.0;
        auto rep = iterate(T, {0.0}, pol);
        CHECK(rep.status == SolveStatus::Diverging);
        CHECK(rep.final_iterate[0] > 10.0);
    }
    SUBCASE("non-finite start rejected") {
        CHECK_THROWS_AS(iterate(T, {std::nan("")}), NumericalError);
    }
    SUBCASE("invalid tolerance rejected") {
        StoppingPolicy pol;
        pol.step_tol = 0.0;
        CHECK_THROWS_AS(iterate(T, {0.0}, pol), ParamError);
    }
}

TEST_CASE("iterate: solution test halts with SolutionFound on the shadow") {
    auto A = make_hyperplane({0, 1}, 0);
    auto B = make_hyperplane({-1, 1}, 0);
    auto T = douglas_rachford(A, B);
    auto near_origin = [](const Vector& s) {
        return std::abs(s[0]) < 1e-3 && std::abs(s[1]) < 1e-3;
    };
    auto rep = iterate(T, {1.0, 0.0}, {}, {}, near_origin);
    CHECK(rep.status == SolveStatus::SolutionFound);
    REQUIRE(rep.shadow.has_value());
    CHECK(near_origin(*rep.shadow));
}
