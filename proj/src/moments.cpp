#include "feasor/moments.hpp"

#include <cmath>

namespace feasor {
namespace {

/// Exact continuous moment of t^k over [a,b].
double power_moment(double a, double b, int k) {
    return (std::pow(b, k + 1) - std::pow(a, k + 1)) / (k + 1);
}

/// Solve a 3x3 linear system by Gaussian elimination with partial pivoting.
std::array<double, 3> solve3(std::array<std::array<double, 3>, 3> A, std::array<double, 3> rhs) {
    for (int c = 0; c < 3; ++c) {
        int piv = c;
        for (int r = c + 1; r < 3; ++r) {
            if (std::abs(A[r][c]) > std::abs(A[piv][c])) piv = r;
        }
        if (std::abs(A[piv][c]) < 1e-14) throw SingularSystemError("moment Gram system is singular");
        std::swap(A[c], A[piv]);
        std::swap(rhs[c], rhs[piv]);
        for (int r = c + 1; r < 3; ++r) {
            const double f = A[r][c] / A[c][c];
            for (int k = c; k < 3; ++k) A[r][k] -= f * A[c][k];
            rhs[r] -= f * rhs[c];
        }
    }
    std::array<double, 3> x{};
    for (int r = 2; r >= 0; --r) {
        double s = rhs[r];
        for (int k = r + 1; k < 3; ++k) s -= A[r][k] * x[k];
        x[r] = s / A[r][r];
    }
    return x;
}

Vector sample_quadratic(const Vector& grid, double c0, double c1, double c2) {
    Vector v(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid[i];
        v[i] = c0 + c1 * t + c2 * t * t;
    }
    return v;
}

}  // namespace

MomentProblem MomentProblem::create(double a, double b, double mu, double var, int N) {
    if (!(a < b)) throw ConfigError("moments: need a < b");
    if (!(var > 0.0)) throw ConfigError("moments: variance must be positive");
    if (N < 3) throw ConfigError("moments: need at least 3 grid nodes");
    MomentProblem p;
    p.a = a;
    p.b = b;
    p.mu = mu;
    p.var = var;
    p.N = N;
    p.grid.resize(N);
    p.weights.resize(N);
    const double h = (b - a) / (N - 1);
    for (int i = 0; i < N; ++i) {
        p.grid[i] = a + h * i;
        p.weights[i] = (i == 0 || i == N - 1) ? h / 2.0 : h;
    }
    return p;
}

std::vector<ProjectableSet> build_moment_sets(const MomentProblem& p) {
    const auto c = p.targets();
    const InnerProduct ip = p.ip();
    std::vector<ProjectableSet> sets;
    for (int i = 0; i < 3; ++i) {
        Vector normal(p.grid.size());
        for (std::size_t k = 0; k < p.grid.size(); ++k) normal[k] = std::pow(p.grid[k], i);
        auto G = make_hyperplane(std::move(normal), c[i], ip);
        G.name = "G" + std::to_string(i + 1);
        sets.push_back(std::move(G));
    }
    auto G4 = make_orthant(p.grid.size());
    G4.name = "G4";
    sets.push_back(std::move(G4));
    return sets;
}

std::array<double, 3> reference_min_norm_density(double a, double b, double mu, double var) {
    // Gram matrix <t^{j}, t^{k}> of the monomials 1, t, t^2 on [a,b]
    std::array<std::array<double, 3>, 3> G{};
    for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) G[j][k] = power_moment(a, b, j + k);
    }
    std::array<double, 3> c = {1.0, mu, var + mu * mu};
    auto theta = solve3(G, c);

    // the quadratic must be nonnegative on [a,b] to be a density
    auto value = [&theta](double t) { return theta[0] + theta[1] * t + theta[2] * t * t; };
    double min_val = std::min(value(a), value(b));
    if (theta[2] != 0.0) {
        const double tv = -theta[1] / (2.0 * theta[2]);
        if (tv > a && tv < b) min_val = std::min(min_val, value(tv));
    }
    if (min_val < -1e-10) {
        throw NotValidAsReference("minimum-norm quadratic is negative on [a,b]");
    }
    return theta;
}

Vector sample_reference(const MomentProblem& p) {
    auto theta = reference_min_norm_density(p.a, p.b, p.mu, p.var);
    return sample_quadratic(p.grid, theta[0], theta[1], theta[2]);
}

MomentAlgorithm moment_algorithm_from_string(const std::string& tag) {
    if (tag == "cyclic-projections") return MomentAlgorithm::CyclicProjections;
    if (tag == "cyclic-dr") return MomentAlgorithm::CyclicDR;
    if (tag == "anchored-dr") return MomentAlgorithm::AnchoredDR;
    if (tag == "product-dr") return MomentAlgorithm::ProductDR;
    if (tag == "product-aamr") return MomentAlgorithm::ProductAAMR;
    throw ConfigError("unknown moments algorithm: " + tag);
}

const char* to_string(MomentAlgorithm a) {
    switch (a) {
        case MomentAlgorithm::CyclicProjections: return "cyclic-projections";
        case MomentAlgorithm::CyclicDR: return "cyclic-dr";
        case MomentAlgorithm::AnchoredDR: return "anchored-dr";
        case MomentAlgorithm::ProductDR: return "product-dr";
        case MomentAlgorithm::ProductAAMR: return "product-aamr";
    }
    return "?";
}

MomentRun solve_moments(const MomentProblem& p, MomentAlgorithm alg, double alpha, double beta,
                        const Vector& x0, const StoppingPolicy& policy) {
    auto sets = build_moment_sets(p);
    const std::size_t r = sets.size();
    const InnerProduct base_ip = p.ip();

    FixedPointOperator T;
    Vector start = x0;
    InnerProduct run_ip = base_ip;
    switch (alg) {
        case MomentAlgorithm::CyclicProjections:
            T = cyclic_projections(sets);
            break;
        case MomentAlgorithm::CyclicDR:
            T = cyclic_dr(sets);
            break;
        case MomentAlgorithm::AnchoredDR:
            T = anchored_dr(sets.front(), {sets[1], sets[2], sets[3]});
            break;
        case MomentAlgorithm::ProductDR:
            T = product_dr(sets);
            start = lift(x0, r);
            run_ip = base_ip.tiled(r);
            break;
        case MomentAlgorithm::ProductAAMR:
            T = product_aamr(sets, alpha, beta);
            start = lift(x0, r);
            run_ip = base_ip.tiled(r);
            break;
    }

    MomentRun out;
    out.report = iterate(T, start, policy, run_ip);
    out.density = out.report.shadow ? *out.report.shadow : out.report.final_iterate;
    return out;
}

Vector start_ones(const MomentProblem& p) { return Vector(p.grid.size(), 1.0); }

Vector start_step(const MomentProblem& p) {
    // 1 on the lower half of the interval, 1/4 on the upper half
    const double mid = (p.a + p.b) / 2.0;
    Vector v(p.grid.size());
    for (std::size_t i = 0; i < p.grid.size(); ++i) v[i] = p.grid[i] <= mid ? 1.0 : 0.25;
    return v;
}

Vector sample_aamr_fixed_point(const MomentProblem& p) {
    // xbar1 = (27/5) t (1-t), xbar2 = (3/5) t (13-9t),
    // xbar3 = (3/5) t (9-13t), xbar4 = (27/5) t (1-t)
    Vector X;
    X.reserve(4 * p.grid.size());
    auto push = [&X, &p](double c0, double c1, double c2) {
        Vector b = sample_quadratic(p.grid, c0, c1, c2);
        X.insert(X.end(), b.begin(), b.end());
    };
    push(0.0, 27.0 / 5.0, -27.0 / 5.0);
    push(0.0, 39.0 / 5.0, -27.0 / 5.0);
    push(0.0, 27.0 / 5.0, -39.0 / 5.0);
    push(0.0, 27.0 / 5.0, -27.0 / 5.0);
    return X;
}

double aamr_fixed_point_residual(const MomentProblem& p, double alpha, double beta) {
    auto sets = build_moment_sets(p);
    auto T = product_aamr(sets, alpha, beta);
    Vector X = sample_aamr_fixed_point(p);
    const InnerProduct prod_ip = p.ip().tiled(sets.size());
    return prod_ip.dist(T.step(X), X);
}

}  // namespace feasor
