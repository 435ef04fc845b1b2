#include "feasor/sets.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <utility>

namespace feasor {
namespace {

bool near_binary(double v) { return std::abs(v) <= kMembershipTol || std::abs(v - 1.0) <= kMembershipTol; }

double plain_sum(const Vector& x) {
    double s = 0.0;
    for (double v : x) s += v;
    return s;
}

/// Indices of the m largest components, largest index winning ties.
std::vector<std::size_t> top_m_indices(const Vector& x, std::size_t m) {
    std::vector<std::size_t> idx(x.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&x](std::size_t i, std::size_t j) {
        if (x[i] != x[j]) return x[i] > x[j];
        return i > j;
    });
    idx.resize(m);
    return idx;
}

/// Cholesky solve of the SPD system G z = rhs; throws on rank deficiency.
class SmallSpdSolver {
public:
    SmallSpdSolver(std::vector<Vector> g, std::size_t n) : l_(std::move(g)), n_(n) {
        double scale = 0.0;
        for (std::size_t i = 0; i < n_; ++i) scale = std::max(scale, std::abs(l_[i][i]));
        const double tol = std::max(scale, 1.0) * 1e-12;
        for (std::size_t j = 0; j < n_; ++j) {
            double d = l_[j][j];
            for (std::size_t k = 0; k < j; ++k) d -= l_[j][k] * l_[j][k];
            if (d <= tol) throw SingularSystemError("affine projector: A does not have full row rank");
            l_[j][j] = std::sqrt(d);
            for (std::size_t i = j + 1; i < n_; ++i) {
                double s = l_[i][j];
                for (std::size_t k = 0; k < j; ++k) s -= l_[i][k] * l_[j][k];
                l_[i][j] = s / l_[j][j];
            }
        }
    }

    Vector solve(Vector rhs) const {
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t k = 0; k < i; ++k) rhs[i] -= l_[i][k] * rhs[k];
            rhs[i] /= l_[i][i];
        }
        for (std::size_t i = n_; i-- > 0;) {
            for (std::size_t k = i + 1; k < n_; ++k) rhs[i] -= l_[k][i] * rhs[k];
            rhs[i] /= l_[i][i];
        }
        return rhs;
    }

private:
    std::vector<Vector> l_;
    std::size_t n_;
};

void check_nonzero_normal(const Vector& a) {
    for (double v : a) {
        if (v != 0.0) return;
    }
    throw InvalidSetError("zero normal vector");
}

}  // namespace

Vector reflect(const ProjectableSet& S, const Vector& x) {
    return lin(2.0, S.project(x), -1.0, x);
}

ProjectableSet make_hyperplane(Vector a, double b, InnerProduct ip) {
    check_nonzero_normal(a);
    const double aa = ip.dot(a, a);
    ProjectableSet S;
    S.name = "hyperplane";
    S.dim = a.size();
    S.convex = true;
    S.project = [a, b, aa, ip](const Vector& x) {
        const double t = (b - ip.dot(a, x)) / aa;
        return lin(1.0, x, t, a);
    };
    S.member = [a, b, ip](const Vector& x) { return std::abs(ip.dot(a, x) - b) <= kMembershipTol; };
    return S;
}

ProjectableSet make_halfspace(Vector a, double b, InnerProduct ip) {
    check_nonzero_normal(a);
    const double aa = ip.dot(a, a);
    ProjectableSet S;
    S.name = "halfspace";
    S.dim = a.size();
    S.convex = true;
    S.project = [a, b, aa, ip](const Vector& x) {
        const double t = std::min(0.0, b - ip.dot(a, x)) / aa;
        return lin(1.0, x, t, a);
    };
    S.member = [a, b, ip](const Vector& x) { return ip.dot(a, x) <= b + kMembershipTol; };
    return S;
}

ProjectableSet make_ball(double r, std::size_t dim, InnerProduct ip) {
    if (!(r > 0.0)) throw InvalidSetError("ball radius must be positive");
    ProjectableSet S;
    S.name = "ball";
    S.dim = dim;
    S.convex = true;
    S.project = [r, ip](const Vector& x) {
        const double n = ip.norm(x);
        return scale(r / std::max(n, r), x);
    };
    S.member = [r, ip](const Vector& x) { return ip.norm(x) <= r + kMembershipTol; };
    return S;
}

ProjectableSet make_orthant(std::size_t dim) {
    ProjectableSet S;
    S.name = "orthant";
    S.dim = dim;
    S.convex = true;
    S.project = [](const Vector& x) {
        Vector z(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) z[i] = std::max(0.0, x[i]);
        return z;
    };
    S.member = [](const Vector& x) {
        for (double v : x) {
            if (v < -kMembershipTol) return false;
        }
        return true;
    };
    return S;
}

ProjectableSet make_affine_rows(std::vector<Vector> rows, Vector b, InnerProduct ip) {
    if (rows.empty()) throw InvalidSetError("affine set needs at least one row");
    const std::size_t m = rows.size();
    const std::size_t n = rows.front().size();
    if (b.size() != m) throw DimensionError("affine set: rhs length != row count");
    for (const auto& r : rows) {
        if (r.size() != n) throw DimensionError("affine set: ragged rows");
    }
    // Gram matrix A W^{-1} A^T for the ambient (possibly weighted) norm.
    const Vector* w = ip.weights();
    if (w && w->size() != n) throw DimensionError("affine set: weight length mismatch");
    std::vector<Vector> gram(m, Vector(m, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const double inv_w = w ? 1.0 / (*w)[k] : 1.0;
                s += rows[i][k] * inv_w * rows[j][k];
            }
            gram[i][j] = gram[j][i] = s;
        }
    }
    auto solver = std::make_shared<SmallSpdSolver>(std::move(gram), m);

    ProjectableSet S;
    S.name = "affine";
    S.dim = n;
    S.convex = true;
    auto residual = [rows, b, n, m](const Vector& x) {
        Vector r(m);
        for (std::size_t i = 0; i < m; ++i) {
            double s = -b[i];
            for (std::size_t k = 0; k < n; ++k) s += rows[i][k] * x[k];
            r[i] = s;
        }
        return r;
    };
    S.project = [rows, solver, residual, n, m, ip](const Vector& x) {
        if (x.size() != n) throw DimensionError("affine project: wrong dimension");
        Vector lambda = solver->solve(residual(x));
        Vector z = x;
        const Vector* w = ip.weights();
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const double inv_w = w ? 1.0 / (*w)[k] : 1.0;
                z[k] -= inv_w * rows[i][k] * lambda[i];
            }
        }
        return z;
    };
    S.member = [residual](const Vector& x) {
        for (double v : residual(x)) {
            if (std::abs(v) > kMembershipTol) return false;
        }
        return true;
    };
    return S;
}

ProjectableSet make_sum_equals(std::size_t p, double m, InnerProduct ip) {
    if (p < 1) throw InvalidSetError("sum set needs p >= 1");
    if (ip.weighted()) {
        // {sum x_i = m} = {<a,x>_w = m} with a_i = 1/w_i
        Vector a(p);
        for (std::size_t i = 0; i < p; ++i) a[i] = 1.0 / (*ip.weights())[i];
        auto S = make_hyperplane(std::move(a), m, ip);
        S.name = "sum=" + std::to_string(m);
        return S;
    }
    ProjectableSet S;
    S.name = "sum=" + std::to_string(m);
    S.dim = p;
    S.convex = true;
    S.project = [p, m](const Vector& x) {
        const double shift = (m - plain_sum(x)) / static_cast<double>(p);
        Vector z(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + shift;
        return z;
    };
    S.member = [m](const Vector& x) { return std::abs(plain_sum(x) - m) <= kMembershipTol; };
    return S;
}

ProjectableSet make_sum_at_most(std::size_t p, double m, InnerProduct ip) {
    if (p < 1) throw InvalidSetError("sum set needs p >= 1");
    if (ip.weighted()) {
        Vector a(p);
        for (std::size_t i = 0; i < p; ++i) a[i] = 1.0 / (*ip.weights())[i];
        auto S = make_halfspace(std::move(a), m, ip);
        S.name = "sum<=" + std::to_string(m);
        return S;
    }
    ProjectableSet S;
    S.name = "sum<=" + std::to_string(m);
    S.dim = p;
    S.convex = true;
    S.project = [p, m](const Vector& x) {
        const double shift = std::min(0.0, m - plain_sum(x)) / static_cast<double>(p);
        Vector z(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + shift;
        return z;
    };
    S.member = [m](const Vector& x) { return plain_sum(x) <= m + kMembershipTol; };
    return S;
}

ProjectableSet make_binary_sum_equals(std::size_t p, std::size_t m) {
    if (m > p) throw InvalidSetError("binary sum set is empty for m > p");
    ProjectableSet S;
    S.name = "bin-sum=" + std::to_string(m);
    S.dim = p;
    S.convex = false;
    S.project = [m](const Vector& x) {
        Vector z(x.size(), 0.0);
        for (std::size_t i : top_m_indices(x, m)) z[i] = 1.0;
        return z;
    };
    S.member = [m](const Vector& x) {
        double s = 0.0;
        for (double v : x) {
            if (!near_binary(v)) return false;
            s += v;
        }
        return std::abs(s - static_cast<double>(m)) <= kMembershipTol;
    };
    return S;
}

ProjectableSet make_binary_sum_at_most(std::size_t p, std::size_t m) {
    if (p < 1) throw InvalidSetError("binary sum set needs p >= 1");
    const std::size_t mm = std::min(m, p);
    ProjectableSet S;
    S.name = "bin-sum<=" + std::to_string(m);
    S.dim = p;
    S.convex = false;
    S.project = [mm](const Vector& x) {
        Vector z(x.size(), 0.0);
        for (std::size_t i : top_m_indices(x, mm)) {
            if (x[i] > 0.5) z[i] = 1.0;
        }
        return z;
    };
    S.member = [m](const Vector& x) {
        double s = 0.0;
        for (double v : x) {
            if (!near_binary(v)) return false;
            s += v;
        }
        return s <= static_cast<double>(m) + kMembershipTol;
    };
    return S;
}

ProjectableSet make_binary_box(std::size_t dim) {
    ProjectableSet S;
    S.name = "binary-box";
    S.dim = dim;
    S.convex = false;
    S.project = [](const Vector& x) {
        Vector z(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] > 0.5 ? 1.0 : 0.0;
        return z;
    };
    S.member = [](const Vector& x) {
        for (double v : x) {
            if (!near_binary(v)) return false;
        }
        return true;
    };
    return S;
}

ProjectableSet make_whole_space(std::size_t dim) {
    ProjectableSet S;
    S.name = "whole-space";
    S.dim = dim;
    S.convex = true;
    S.project = [](const Vector& x) { return x; };
    S.member = [](const Vector&) { return true; };
    return S;
}

ProjectableSet translate(const ProjectableSet& S, Vector y) {
    if (y.size() != S.dim) throw DimensionError("translate: offset dimension mismatch");
    ProjectableSet T;
    T.name = S.name + "+y";
    T.dim = S.dim;
    T.convex = S.convex;
    auto proj = S.project;
    auto memb = S.member;
    T.project = [proj, y](const Vector& x) { return add(y, proj(sub(x, y))); };
    T.member = [memb, y](const Vector& x) { return memb(sub(x, y)); };
    return T;
}

ProjectableSet dilate(const ProjectableSet& S, double alpha) {
    if (alpha == 0.0) throw InvalidSetError("dilate: alpha must be nonzero");
    ProjectableSet T;
    T.name = S.name + "*a";
    T.dim = S.dim;
    T.convex = S.convex;
    auto proj = S.project;
    auto memb = S.member;
    T.project = [proj, alpha](const Vector& x) { return scale(alpha, proj(scale(1.0 / alpha, x))); };
    T.member = [memb, alpha](const Vector& x) { return memb(scale(1.0 / alpha, x)); };
    return T;
}

ProjectableSet product_set(std::vector<ProjectableSet> sets) {
    if (sets.empty()) throw InvalidProblemError("product of zero sets");
    std::size_t dim = 0;
    bool convex = true;
    std::string name = "prod(";
    for (std::size_t i = 0; i < sets.size(); ++i) {
        dim += sets[i].dim;
        convex = convex && sets[i].convex;
        name += (i ? "," : "") + sets[i].name;
    }
    name += ")";
    auto shared = std::make_shared<std::vector<ProjectableSet>>(std::move(sets));

    ProjectableSet S;
    S.name = std::move(name);
    S.dim = dim;
    S.convex = convex;
    S.project = [shared, dim](const Vector& x) {
        if (x.size() != dim) throw DimensionError("product project: wrong dimension");
        Vector z;
        z.reserve(dim);
        std::size_t off = 0;
        for (const auto& s : *shared) {
            Vector block(x.begin() + off, x.begin() + off + s.dim);
            Vector pb = s.project(block);
            z.insert(z.end(), pb.begin(), pb.end());
            off += s.dim;
        }
        return z;
    };
    S.member = [shared, dim](const Vector& x) {
        if (x.size() != dim) throw DimensionError("product member: wrong dimension");
        std::size_t off = 0;
        for (const auto& s : *shared) {
            Vector block(x.begin() + off, x.begin() + off + s.dim);
            if (!s.member(block)) return false;
            off += s.dim;
        }
        return true;
    };
    return S;
}

ProjectableSet diagonal_set(std::size_t r, std::size_t base_dim) {
    if (r < 1) throw InvalidProblemError("diagonal set needs r >= 1");
    const std::size_t dim = r * base_dim;
    ProjectableSet S;
    S.name = "diagonal";
    S.dim = dim;
    S.convex = true;
    S.project = [r, base_dim, dim](const Vector& x) {
        if (x.size() != dim) throw DimensionError("diagonal project: wrong dimension");
        Vector mean(base_dim, 0.0);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t k = 0; k < base_dim; ++k) mean[k] += x[i * base_dim + k];
        }
        for (double& v : mean) v /= static_cast<double>(r);
        Vector z(dim);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t k = 0; k < base_dim; ++k) z[i * base_dim + k] = mean[k];
        }
        return z;
    };
    S.member = [r, base_dim, dim](const Vector& x) {
        if (x.size() != dim) throw DimensionError("diagonal member: wrong dimension");
        for (std::size_t i = 1; i < r; ++i) {
            for (std::size_t k = 0; k < base_dim; ++k) {
                if (std::abs(x[i * base_dim + k] - x[k]) > kMembershipTol) return false;
            }
        }
        return true;
    };
    return S;
}

ProjectableSet make_sliced_set(std::string name, std::size_t dim, bool convex,
                               std::vector<std::vector<std::size_t>> slices,
                               std::vector<ProjectableSet> slice_sets) {
    if (slices.size() != slice_sets.size()) {
        throw InvalidProblemError("sliced set: slice/set count mismatch");
    }
    auto idx = std::make_shared<std::vector<std::vector<std::size_t>>>(std::move(slices));
    auto sets = std::make_shared<std::vector<ProjectableSet>>(std::move(slice_sets));

    ProjectableSet S;
    S.name = std::move(name);
    S.dim = dim;
    S.convex = convex;
    S.project = [idx, sets, dim](const Vector& x) {
        if (x.size() != dim) throw DimensionError("sliced project: wrong dimension");
        Vector z = x;
        for (std::size_t s = 0; s < idx->size(); ++s) {
            const auto& ii = (*idx)[s];
            Vector block(ii.size());
            for (std::size_t k = 0; k < ii.size(); ++k) block[k] = x[ii[k]];
            Vector pb = (*sets)[s].project(block);
            for (std::size_t k = 0; k < ii.size(); ++k) z[ii[k]] = pb[k];
        }
        return z;
    };
    S.member = [idx, sets, dim](const Vector& x) {
        if (x.size() != dim) throw DimensionError("sliced member: wrong dimension");
        for (std::size_t s = 0; s < idx->size(); ++s) {
            const auto& ii = (*idx)[s];
            Vector block(ii.size());
            for (std::size_t k = 0; k < ii.size(); ++k) block[k] = x[ii[k]];
            if (!(*sets)[s].member(block)) return false;
        }
        return true;
    };
    return S;
}

}  // namespace feasor
