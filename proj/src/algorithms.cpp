#include "feasor/algorithms.hpp"

#include <cmath>
#include <memory>

namespace feasor {
namespace {

void require_nonempty(const std::vector<ProjectableSet>& sets, std::size_t at_least, const char* what) {
    if (sets.size() < at_least) {
        throw InvalidProblemError(std::string(what) + ": needs at least " + std::to_string(at_least) +
                                  " sets, got " + std::to_string(sets.size()));
    }
    const std::size_t d = sets.front().dim;
    for (const auto& s : sets) {
        if (s.dim != d) throw DimensionError(std::string(what) + ": sets have unequal dimensions");
    }
}

std::string joined_labels(const std::vector<ProjectableSet>& sets) {
    std::string out;
    for (std::size_t i = 0; i < sets.size(); ++i) out += (i ? "," : "") + sets[i].name;
    return out;
}

/// One application of T_{A,B} = (Id + R_B R_A)/2 in its P-form.
Vector dr_step(const ProjectableSet& A, const ProjectableSet& B, const Vector& x) {
    Vector pa = A.project(x);
    Vector pb = B.project(lin(2.0, pa, -1.0, x));
    Vector z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + pb[i] - pa[i];
    return z;
}

}  // namespace

FixedPointOperator cyclic_projections(std::vector<ProjectableSet> sets) {
    require_nonempty(sets, 1, "cyclic_projections");
    FixedPointOperator T;
    T.label = "cyclic-projections[" + joined_labels(sets) + "]";
    auto shared = std::make_shared<std::vector<ProjectableSet>>(std::move(sets));
    T.step = [shared](const Vector& x) {
        Vector y = x;
        for (const auto& s : *shared) y = s.project(y);
        return y;
    };
    T.shadow = [](const Vector& x) { return x; };
    return T;
}

FixedPointOperator averaged_projections(std::vector<ProjectableSet> sets) {
    require_nonempty(sets, 1, "averaged_projections");
    FixedPointOperator T;
    T.label = "averaged-projections[" + joined_labels(sets) + "]";
    auto shared = std::make_shared<std::vector<ProjectableSet>>(std::move(sets));
    T.step = [shared](const Vector& x) {
        Vector acc(x.size(), 0.0);
        for (const auto& s : *shared) {
            Vector p = s.project(x);
            for (std::size_t i = 0; i < x.size(); ++i) acc[i] += p[i];
        }
        return scale(1.0 / static_cast<double>(shared->size()), acc);
    };
    T.shadow = [](const Vector& x) { return x; };
    return T;
}

FixedPointOperator douglas_rachford(ProjectableSet A, ProjectableSet B) {
    if (A.dim != B.dim) throw DimensionError("douglas_rachford: dimension mismatch");
    FixedPointOperator T;
    T.label = "DR[" + A.name + "," + B.name + "]";
    auto a = std::make_shared<ProjectableSet>(std::move(A));
    auto b = std::make_shared<ProjectableSet>(std::move(B));
    T.step = [a, b](const Vector& x) { return dr_step(*a, *b, x); };
    T.shadow = [a](const Vector& x) { return a->project(x); };
    return T;
}

FixedPointOperator generalized_dr(ProjectableSet A, ProjectableSet B, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw ParamError("generalized_dr: alpha must lie in ]0,1[");
    if (A.dim != B.dim) throw DimensionError("generalized_dr: dimension mismatch");
    FixedPointOperator T;
    T.label = "GDR[" + A.name + "," + B.name + "]";
    auto a = std::make_shared<ProjectableSet>(std::move(A));
    auto b = std::make_shared<ProjectableSet>(std::move(B));
    T.step = [a, b, alpha](const Vector& x) {
        Vector rr = reflect(*b, reflect(*a, x));
        return lin(1.0 - alpha, x, alpha, rr);
    };
    T.shadow = [a](const Vector& x) { return a->project(x); };
    return T;
}

FixedPointOperator raar(ProjectableSet A, ProjectableSet B, double beta) {
    if (!(beta > 0.0 && beta < 1.0)) throw ParamError("raar: beta must lie in ]0,1[");
    if (A.dim != B.dim) throw DimensionError("raar: dimension mismatch");
    FixedPointOperator T;
    T.label = "RAAR[" + A.name + "," + B.name + "]";
    auto a = std::make_shared<ProjectableSet>(std::move(A));
    auto b = std::make_shared<ProjectableSet>(std::move(B));
    T.step = [a, b, beta](const Vector& x) {
        Vector pa = a->project(x);
        Vector t = dr_step(*a, *b, x);
        return lin(1.0 - beta, pa, beta, t);
    };
    T.shadow = [a](const Vector& x) { return a->project(x); };
    return T;
}

Vector circumcenter(const Vector& a, const Vector& b, const Vector& c, const InnerProduct& ip) {
    check_same_dim(a, b, "circumcenter");
    check_same_dim(a, c, "circumcenter");
    const double scale_n = std::max({1.0, ip.norm(a), ip.norm(b), ip.norm(c)});
    const double eq_tol = 1e-14 * scale_n;
    const bool ab = ip.dist(a, b) <= eq_tol;
    const bool ac = ip.dist(a, c) <= eq_tol;
    const bool bc = ip.dist(b, c) <= eq_tol;
    if (ab && ac) return a;
    if (ab) return lin(0.5, a, 0.5, c);
    if (ac || bc) return lin(0.5, a, 0.5, b);

    Vector u = sub(b, a);
    Vector v = sub(c, a);
    const double guu = ip.dot(u, u);
    const double gvv = ip.dot(v, v);
    const double guv = ip.dot(u, v);
    const double det = guu * gvv - guv * guv;
    const double scale2 = std::max(guu, gvv);
    // det = (2*area)^2; collinearity at relative area threshold 1e-12 * scale^2
    if (det <= 4e-24 * scale2 * scale2) {
        throw DegenerateTriangleError("circumcenter: three distinct collinear points");
    }
    const double s = (0.5 * guu * gvv - 0.5 * gvv * guv) / det;
    const double t = (0.5 * gvv * guu - 0.5 * guu * guv) / det;
    Vector z = a;
    for (std::size_t i = 0; i < z.size(); ++i) z[i] += s * u[i] + t * v[i];
    return z;
}

FixedPointOperator circumcentered_dr(ProjectableSet A, ProjectableSet B, InnerProduct ip) {
    if (A.dim != B.dim) throw DimensionError("circumcentered_dr: dimension mismatch");
    FixedPointOperator T;
    T.label = "CDR[" + A.name + "," + B.name + "]";
    auto a = std::make_shared<ProjectableSet>(std::move(A));
    auto b = std::make_shared<ProjectableSet>(std::move(B));
    T.step = [a, b, ip](const Vector& x) {
        Vector ra = reflect(*a, x);
        Vector rba = reflect(*b, ra);
        return circumcenter(x, ra, rba, ip);
    };
    T.shadow = [a](const Vector& x) { return a->project(x); };
    return T;
}

FixedPointOperator aamr(ProjectableSet A, ProjectableSet B, double alpha, double beta, Vector q) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw ParamError("aamr: alpha must lie in ]0,1]");
    if (!(beta > 0.0 && beta <= 1.0)) throw ParamError("aamr: beta must lie in ]0,1] (1 = DR reduction)");
    if (A.dim != B.dim || q.size() != A.dim) throw DimensionError("aamr: dimension mismatch");
    FixedPointOperator T;
    T.label = "AAMR[" + A.name + "," + B.name + "]";
    auto a = std::make_shared<ProjectableSet>(std::move(A));
    auto b = std::make_shared<ProjectableSet>(std::move(B));
    auto qp = std::make_shared<Vector>(std::move(q));
    T.step = [a, b, qp, alpha, beta](const Vector& x) {
        // modified reflector of the translated set: 2 beta P_{S-q} - Id
        Vector pa = sub(a->project(add(x, *qp)), *qp);
        Vector m1 = lin(2.0 * beta, pa, -1.0, x);
        Vector pb = sub(b->project(add(m1, *qp)), *qp);
        Vector m2 = lin(2.0 * beta, pb, -1.0, m1);
        return lin(1.0 - alpha, x, alpha, m2);
    };
    T.shadow = [a, qp](const Vector& x) { return a->project(add(x, *qp)); };
    return T;
}

FixedPointOperator naive_multiset_dr(std::vector<ProjectableSet> sets) {
    require_nonempty(sets, 2, "naive_multiset_dr");
    FixedPointOperator T;
    T.label = "naive-DR[" + joined_labels(sets) + "]";
    auto shared = std::make_shared<std::vector<ProjectableSet>>(std::move(sets));
    T.step = [shared](const Vector& x) {
        Vector y = x;
        for (const auto& s : *shared) y = reflect(s, y);
        return lin(0.5, x, 0.5, y);
    };
    T.shadow = [shared](const Vector& x) { return shared->front().project(x); };
    return T;
}

FixedPointOperator cyclic_dr(std::vector<ProjectableSet> sets) {
    require_nonempty(sets, 2, "cyclic_dr");
    FixedPointOperator T;
    T.label = "cyclic-DR[" + joined_labels(sets) + "]";
    auto shared = std::make_shared<std::vector<ProjectableSet>>(std::move(sets));
    T.step = [shared](const Vector& x) {
        const auto& ss = *shared;
        Vector y = x;
        for (std::size_t i = 0; i + 1 < ss.size(); ++i) y = dr_step(ss[i], ss[i + 1], y);
        return dr_step(ss.back(), ss.front(), y);
    };
    T.shadow = [shared](const Vector& x) { return shared->front().project(x); };
    return T;
}

FixedPointOperator anchored_dr(ProjectableSet anchor, std::vector<ProjectableSet> others) {
    if (others.empty()) throw InvalidProblemError("anchored_dr: needs at least one non-anchor set");
    for (const auto& s : others) {
        if (s.dim != anchor.dim) throw DimensionError("anchored_dr: dimension mismatch");
    }
    FixedPointOperator T;
    T.label = "anchored-DR[" + anchor.name + "|" + joined_labels(others) + "]";
    auto anc = std::make_shared<ProjectableSet>(std::move(anchor));
    auto shared = std::make_shared<std::vector<ProjectableSet>>(std::move(others));
    T.step = [anc, shared](const Vector& x) {
        Vector y = x;
        for (const auto& s : *shared) y = dr_step(*anc, s, y);
        return y;
    };
    T.shadow = [anc](const Vector& x) { return anc->project(x); };
    return T;
}

FixedPointOperator product_dr(std::vector<ProjectableSet> sets) {
    require_nonempty(sets, 2, "product_dr");
    const std::size_t r = sets.size();
    const std::size_t d = sets.front().dim;
    FixedPointOperator T;
    T.label = "product-DR[" + joined_labels(sets) + "]";
    auto shared = std::make_shared<std::vector<ProjectableSet>>(std::move(sets));
    T.step = [shared, r, d](const Vector& x) {
        if (x.size() != r * d) throw DimensionError("product_dr: wrong product dimension");
        Vector p = unlift_shadow(x, r);
        Vector z(r * d);
        Vector arg(d), refl(d);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t k = 0; k < d; ++k) arg[k] = 2.0 * p[k] - x[i * d + k];
            refl = reflect((*shared)[i], arg);
            for (std::size_t k = 0; k < d; ++k) z[i * d + k] = 0.5 * x[i * d + k] + 0.5 * refl[k];
        }
        return z;
    };
    T.shadow = [r](const Vector& x) { return unlift_shadow(x, r); };
    return T;
}

FixedPointOperator product_aamr(std::vector<ProjectableSet> sets, double alpha, double beta) {
    require_nonempty(sets, 2, "product_aamr");
    if (!(alpha > 0.0 && alpha <= 1.0)) throw ParamError("product_aamr: alpha must lie in ]0,1]");
    if (!(beta > 0.0 && beta <= 1.0)) throw ParamError("product_aamr: beta must lie in ]0,1]");
    const std::size_t r = sets.size();
    const std::size_t d = sets.front().dim;
    FixedPointOperator T;
    T.label = "product-AAMR[" + joined_labels(sets) + "]";
    auto shared = std::make_shared<std::vector<ProjectableSet>>(std::move(sets));
    T.step = [shared, r, d, alpha, beta](const Vector& x) {
        if (x.size() != r * d) throw DimensionError("product_aamr: wrong product dimension");
        // (2 beta P_D - Id) then (2 beta P_C - Id), q = 0
        Vector p = unlift_shadow(x, r);
        Vector m1(r * d);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t k = 0; k < d; ++k) m1[i * d + k] = 2.0 * beta * p[k] - x[i * d + k];
        }
        Vector z(r * d);
        Vector block(d), pb(d);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t k = 0; k < d; ++k) block[k] = m1[i * d + k];
            pb = (*shared)[i].project(block);
            for (std::size_t k = 0; k < d; ++k) {
                const double m2 = 2.0 * beta * pb[k] - m1[i * d + k];
                z[i * d + k] = (1.0 - alpha) * x[i * d + k] + alpha * m2;
            }
        }
        return z;
    };
    T.shadow = [r](const Vector& x) { return unlift_shadow(x, r); };
    return T;
}

Vector lift(const Vector& x, std::size_t r) {
    if (r == 0) throw DimensionError("lift: r must be positive");
    Vector z;
    z.reserve(x.size() * r);
    for (std::size_t i = 0; i < r; ++i) z.insert(z.end(), x.begin(), x.end());
    return z;
}

Vector unlift_shadow(const Vector& X, std::size_t r) {
    if (r == 0 || X.size() % r != 0) throw DimensionError("unlift_shadow: size not divisible by r");
    const std::size_t d = X.size() / r;
    Vector mean(d, 0.0);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < d; ++k) mean[k] += X[i * d + k];
    }
    for (double& v : mean) v /= static_cast<double>(r);
    return mean;
}

std::pair<Vector, Vector> best_approximation_pair(const SolveReport& report, const ProjectableSet& A,
                                                  const ProjectableSet& B) {
    (void)A;
    if (!report.shadow) throw MissingShadowError("best_approximation_pair: report carries no shadow");
    const Vector& a = *report.shadow;
    return {a, B.project(a)};
}

}  // namespace feasor
