#include "feasor/queens.hpp"

#include <atomic>
#include <cmath>
#include <random>
#include <thread>

namespace feasor {
namespace {

std::size_t cell(int n, int i, int j) { return static_cast<std::size_t>(i) * n + j; }

std::vector<std::vector<std::size_t>> row_slices(int n) {
    std::vector<std::vector<std::size_t>> out(n);
    for (int i = 0; i < n; ++i) {
        out[i].reserve(n);
        for (int j = 0; j < n; ++j) out[i].push_back(cell(n, i, j));
    }
    return out;
}

std::vector<std::vector<std::size_t>> col_slices(int n) {
    std::vector<std::vector<std::size_t>> out(n);
    for (int j = 0; j < n; ++j) {
        out[j].reserve(n);
        for (int i = 0; i < n; ++i) out[j].push_back(cell(n, i, j));
    }
    return out;
}

/// Forward diagonals (constant j-i) of length >= m+1, each exactly once.
std::vector<std::vector<std::size_t>> forward_diag_slices(int n, int m) {
    std::vector<std::vector<std::size_t>> out;
    for (int o = -(n - m - 1); o <= n - m - 1; ++o) {
        std::vector<std::size_t> d;
        for (int i = 0; i < n; ++i) {
            const int j = i + o;
            if (j >= 0 && j < n) d.push_back(cell(n, i, j));
        }
        out.push_back(std::move(d));
    }
    return out;
}

/// Backward diagonals (constant i+j) of length >= m+1.
std::vector<std::vector<std::size_t>> backward_diag_slices(int n, int m) {
    std::vector<std::vector<std::size_t>> out;
    for (int s = m; s <= 2 * n - 2 - m; ++s) {
        std::vector<std::size_t> d;
        for (int i = 0; i < n; ++i) {
            const int j = s - i;
            if (j >= 0 && j < n) d.push_back(cell(n, i, j));
        }
        out.push_back(std::move(d));
    }
    return out;
}

ProjectableSet sliced(const std::string& name, int n, bool discrete, bool equality,
                      std::vector<std::vector<std::size_t>> slices, int m) {
    std::vector<ProjectableSet> parts;
    parts.reserve(slices.size());
    for (const auto& s : slices) {
        const std::size_t p = s.size();
        if (equality) {
            parts.push_back(discrete ? make_binary_sum_equals(p, m)
                                     : make_sum_equals(p, static_cast<double>(m)));
        } else {
            parts.push_back(discrete ? make_binary_sum_at_most(p, m)
                                     : make_sum_at_most(p, static_cast<double>(m)));
        }
    }
    return make_sliced_set(name, static_cast<std::size_t>(n) * n, !discrete, std::move(slices),
                           std::move(parts));
}

// splitmix64, the usual seeding mixer
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Vector parse_board(std::initializer_list<std::initializer_list<int>> rows) {
    Vector v;
    for (const auto& r : rows) {
        for (int e : r) v.push_back(static_cast<double>(e));
    }
    return v;
}

}  // namespace

Formulation formulation_from_int(int f) {
    if (f < 1 || f > 4) throw ConfigError("formulation must be 1..4, got " + std::to_string(f));
    return static_cast<Formulation>(f);
}

std::vector<ProjectableSet> build_constraints(const QueensInstance& inst) {
    const int n = inst.n, m = inst.m;
    if (n < 3) throw ConfigError("queens: board size must be >= 3");
    if (m < 1 || m > n) throw ConfigError("queens: need 1 <= m <= n");

    auto rows = [&](bool hat) { return sliced(hat ? "C1^" : "C1", n, hat, true, row_slices(n), m); };
    auto cols = [&](bool hat) { return sliced(hat ? "C2^" : "C2", n, hat, true, col_slices(n), m); };
    auto fdiag = [&](bool hat) {
        return sliced(hat ? "C3^" : "C3", n, hat, false, forward_diag_slices(n, m), m);
    };
    auto bdiag = [&](bool hat) {
        return sliced(hat ? "C4^" : "C4", n, hat, false, backward_diag_slices(n, m), m);
    };

    switch (inst.formulation) {
        case Formulation::F1:
            return {rows(false), cols(false), fdiag(false), bdiag(false),
                    make_binary_box(static_cast<std::size_t>(n) * n)};
        case Formulation::F2:
            return {rows(false), cols(false), fdiag(true), bdiag(true)};
        case Formulation::F3:
            return {rows(true), cols(true), fdiag(false), bdiag(false)};
        case Formulation::F4:
            return {rows(true), cols(true), fdiag(true), bdiag(true)};
    }
    throw ConfigError("queens: invalid formulation tag");
}

bool verify_solution(const QueensInstance& inst, const Vector& board) {
    const int n = inst.n, m = inst.m;
    if (board.size() != static_cast<std::size_t>(n) * n) return false;
    for (double v : board) {
        if (v != 0.0 && v != 1.0) return false;
    }
    for (int i = 0; i < n; ++i) {
        int rs = 0, cs = 0;
        for (int j = 0; j < n; ++j) {
            rs += static_cast<int>(board[cell(n, i, j)]);
            cs += static_cast<int>(board[cell(n, j, i)]);
        }
        if (rs != m || cs != m) return false;
    }
    for (const auto& d : forward_diag_slices(n, m)) {
        int s = 0;
        for (std::size_t k : d) s += static_cast<int>(board[k]);
        if (s > m) return false;
    }
    for (const auto& d : backward_diag_slices(n, m)) {
        int s = 0;
        for (std::size_t k : d) s += static_cast<int>(board[k]);
        if (s > m) return false;
    }
    return true;
}

Vector random_board(const QueensInstance& inst, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Vector b(static_cast<std::size_t>(inst.n) * inst.n);
    for (double& v : b) v = (rng() >> 63) ? 1.0 : 0.0;
    return b;
}

Vector random_start(const QueensInstance& inst, std::uint64_t seed, std::size_t r) {
    return lift(random_board(inst, seed), r);
}

QueensResult solve_queens(const QueensInstance& inst, std::uint64_t seed, const StoppingPolicy& policy) {
    auto sets = build_constraints(inst);
    const std::size_t r = sets.size();
    auto box = make_binary_box(static_cast<std::size_t>(inst.n) * inst.n);
    auto T = product_dr(std::move(sets));
    Vector x0 = random_start(inst, seed, r);

    auto test = [&inst, &box](const Vector& shadow) {
        return verify_solution(inst, box.project(shadow));
    };
    QueensResult out;
    out.report = iterate(T, x0, policy, InnerProduct{}, test);
    if (out.report.status == SolveStatus::SolutionFound && out.report.shadow) {
        out.board = box.project(*out.report.shadow);
    }
    return out;
}

PathologyReport reproduce_fixed_point_pathologies() {
    QueensInstance inst{3, 2, Formulation::F3};
    auto sets = build_constraints(inst);  // [C1^, C2^, C3, C4]

    PathologyReport rep;
    rep.x0 = parse_board({{0, 1, 0}, {1, 1, 1}, {1, 0, 1}});
    rep.y0 = parse_board({{0, 1, 1}, {1, 1, 0}, {0, 1, 1}});

    Vector x = rep.x0;
    for (const auto& s : sets) x = s.project(x);
    rep.x0_fixed_under_cyclic_projections = (x == rep.x0);

    auto Tc = cyclic_dr(sets);
    rep.y0_fixed_under_cyclic_dr = (Tc.step(rep.y0) == rep.y0);

    auto Ta = anchored_dr(sets[0], {sets[1], sets[2], sets[3]});
    rep.y0_fixed_under_anchored_dr = (Ta.step(rep.y0) == rep.y0);

    rep.x0_is_solution = verify_solution(inst, rep.x0);
    rep.y0_is_solution = verify_solution(inst, rep.y0);
    return rep;
}

std::uint64_t benchmark_seed(int n, Formulation f, int trial) {
    std::uint64_t h = mix64(static_cast<std::uint64_t>(n));
    h = mix64(h ^ static_cast<std::uint64_t>(static_cast<int>(f)));
    h = mix64(h ^ static_cast<std::uint64_t>(trial));
    return h;
}

std::vector<BenchmarkRow> run_benchmark(const std::vector<int>& sizes,
                                        const std::vector<Formulation>& formulations, int trials,
                                        const StoppingPolicy& policy, int m, unsigned jobs) {
    if (trials < 1) throw ConfigError("benchmark: trials must be >= 1");
    struct Task {
        int n;
        Formulation f;
        int trial;
    };
    std::vector<Task> tasks;
    for (int n : sizes) {
        for (Formulation f : formulations) {
            for (int t = 0; t < trials; ++t) tasks.push_back({n, f, t});
        }
    }
    std::vector<BenchmarkRow> rows(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& tk = tasks[i];
            QueensInstance inst{tk.n, m, tk.f};
            const std::uint64_t seed = benchmark_seed(tk.n, tk.f, tk.trial);
            StoppingPolicy p = policy;
            p.trace_stride = 0;
            QueensResult res = solve_queens(inst, seed, p);
            rows[i] = {tk.n,
                       static_cast<int>(tk.f),
                       tk.trial,
                       seed,
                       res.report.status == SolveStatus::SolutionFound,
                       res.report.iterations,
                       res.report.seconds};
        }
    };
    const unsigned nw = std::max(1u, jobs);
    if (nw == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nw; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return rows;
}

std::vector<BenchmarkAggregate> aggregate_benchmark(const std::vector<BenchmarkRow>& rows) {
    std::vector<BenchmarkAggregate> out;
    auto find = [&out](int n, int f) -> BenchmarkAggregate& {
        for (auto& a : out) {
            if (a.n == n && a.formulation == f) return a;
        }
        out.push_back({n, f, 0, 0, 0.0, 0.0});
        return out.back();
    };
    for (const auto& r : rows) {
        auto& a = find(r.n, r.formulation);
        ++a.trials;
        if (r.solved) {
            ++a.solved_count;
            a.avg_iterations_solved += static_cast<double>(r.iterations);
            a.avg_seconds_solved += r.seconds;
        }
    }
    for (auto& a : out) {
        if (a.solved_count > 0) {
            a.avg_iterations_solved /= a.solved_count;
            a.avg_seconds_solved /= a.solved_count;
        }
    }
    return out;
}

std::string format_board(const Vector& board, int n) {
    std::string s;
    s.reserve(static_cast<std::size_t>(n) * (n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) s += board[cell(n, i, j)] > 0.5 ? '1' : '0';
        s += '\n';
    }
    return s;
}

}  // namespace feasor
