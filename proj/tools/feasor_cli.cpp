#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "feasor/io.hpp"
#include "feasor/moments.hpp"
#include "feasor/queens.hpp"

namespace {

using namespace feasor;

std::uint64_t effective_seed(std::uint64_t flag_seed) {
    if (const char* env = std::getenv("FEASOR_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return flag_seed;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        std::size_t next = csv.find(',', pos);
        if (next == std::string::npos) next = csv.size();
        out.push_back(std::stoi(csv.substr(pos, next - pos)));
        pos = next + 1;
    }
    if (out.empty()) throw ConfigError("empty list: " + csv);
    return out;
}

Vector parse_point(const std::string& csv) {
    Vector out;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        std::size_t next = csv.find(',', pos);
        if (next == std::string::npos) next = csv.size();
        out.push_back(std::stod(csv.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

void print_summary(const SolveReport& rep) {
    std::printf("status=%s iterations=%zu seconds=%.3f\n", to_string(rep.status), rep.iterations,
                rep.seconds);
}

struct CommonOpts {
    double tol = 1e-10;
    std::size_t max_iters = 1'000'000;
    double time_limit = 300.0;
    std::string output;
    std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--tol", o.tol, "step-norm stopping tolerance");
    cmd->add_option("--max-iters", o.max_iters, "iteration cap");
    cmd->add_option("--time-limit", o.time_limit, "wall-time limit in seconds (0 = unlimited)");
    cmd->add_option("-o,--output", o.output, "output file path");
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}));
}

int run_solve_queens(int n, int m, int formulation, std::uint64_t seed, const CommonOpts& o) {
    QueensInstance inst{n, m, formulation_from_int(formulation)};
    StoppingPolicy policy;
    policy.step_tol = o.tol;
    policy.max_iters = o.max_iters;
    policy.time_limit = o.time_limit;
    policy.trace_stride = 0;
    QueensResult res = solve_queens(inst, effective_seed(seed), policy);
    print_summary(res.report);
    if (res.board) std::fputs(format_board(*res.board, n).c_str(), stdout);
    if (!o.output.empty()) {
        const std::string meta = "solve-queens n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                 " formulation=" + std::to_string(formulation) +
                                 " seed=" + std::to_string(effective_seed(seed));
        io::write_file(o.output, o.format == "json" ? io::trace_json(res.report, meta)
                                                    : io::trace_csv(res.report));
    }
    return res.report.status == SolveStatus::SolutionFound ? 0 : 1;
}

int run_bench_queens(const std::string& sizes, const std::string& formulations, int trials, int m,
                     unsigned jobs, const CommonOpts& o) {
    std::vector<Formulation> forms;
    for (int f : parse_int_list(formulations)) forms.push_back(formulation_from_int(f));
    StoppingPolicy policy;
    policy.step_tol = o.tol;
    policy.max_iters = o.max_iters;
    policy.time_limit = o.time_limit;
    policy.trace_stride = 0;
    auto rows = run_benchmark(parse_int_list(sizes), forms, trials, policy, m,
                              jobs ? jobs : std::thread::hardware_concurrency());
    const std::string meta = "bench-queens sizes=" + sizes + " formulations=" + formulations +
                             " trials=" + std::to_string(trials) + " m=" + std::to_string(m);
    const std::string body =
        o.format == "json" ? io::benchmark_json(rows, meta) : io::benchmark_csv(rows);
    if (!o.output.empty()) {
        io::write_file(o.output, body);
    } else {
        std::fputs(body.c_str(), stdout);
    }
    for (const auto& a : aggregate_benchmark(rows)) {
        std::printf("# n=%d formulation=%d solved=%d/%d avg_iters=%.1f avg_seconds=%.3f\n", a.n,
                    a.formulation, a.solved_count, a.trials, a.avg_iterations_solved,
                    a.avg_seconds_solved);
    }
    return 0;
}

int run_solve_moments(double a, double b, double mu, double var, int grid,
                      const std::string& algorithm, double alpha, double beta,
                      const std::string& start, const CommonOpts& o, const std::string& trace_path) {
    auto problem = MomentProblem::create(a, b, mu, var, grid);
    auto alg = moment_algorithm_from_string(algorithm);
    Vector x0;
    if (start == "ones") {
        x0 = start_ones(problem);
    } else if (start == "step") {
        x0 = start_step(problem);
    } else {
        throw ConfigError("unknown start tag: " + start);
    }
    StoppingPolicy policy;
    policy.step_tol = o.tol;
    policy.max_iters = o.max_iters;
    policy.time_limit = o.time_limit;
    policy.trace_stride = 0;
    MomentRun run = solve_moments(problem, alg, alpha, beta, x0, policy);
    print_summary(run.report);
    const std::string meta = "solve-moments a=" + io::format_double(a) + " b=" + io::format_double(b) +
                             " mu=" + io::format_double(mu) + " var=" + io::format_double(var) +
                             " grid=" + std::to_string(grid) + " algorithm=" + algorithm +
                             " start=" + start;
    if (!o.output.empty()) {
        io::write_file(o.output, o.format == "json"
                                     ? io::density_json(problem.grid, run.density, meta)
                                     : io::density_csv(problem.grid, run.density));
    }
    if (!trace_path.empty()) {
        io::write_file(trace_path, o.format == "json" ? io::trace_json(run.report, meta)
                                                      : io::trace_csv(run.report));
    }
    return run.report.status == SolveStatus::Converged ||
                   run.report.status == SolveStatus::SolutionFound
               ? 0
               : 1;
}

int run_demo_2d(const std::string& algorithm, const std::string& scenario, const std::string& x0_csv,
                double alpha, double beta, const CommonOpts& o) {
    ProjectableSet A = make_hyperplane({0.0, 1.0}, 0.0);  // the x-axis
    A.name = "y=0";
    ProjectableSet B;
    if (scenario == "lines") {
        B = make_hyperplane({-1.0, 1.0}, 0.0);  // the line y=x
        B.name = "y=x";
    } else if (scenario == "parallel") {
        B = make_hyperplane({0.0, 1.0}, 1.0);  // the line y=1
        B.name = "y=1";
    } else {
        throw ConfigError("unknown scenario: " + scenario);
    }

    FixedPointOperator T;
    if (algorithm == "dr") {
        T = douglas_rachford(A, B);
    } else if (algorithm == "gdr") {
        T = generalized_dr(A, B, alpha);
    } else if (algorithm == "raar") {
        T = raar(A, B, beta);
    } else if (algorithm == "cdr") {
        T = circumcentered_dr(A, B);
    } else if (algorithm == "aamr") {
        T = aamr(A, B, alpha, beta, {0.0, 0.0});
    } else if (algorithm == "cyclic-projections") {
        T = cyclic_projections({A, B});
    } else {
        throw ConfigError("unknown demo algorithm: " + algorithm);
    }

    Vector x0 = parse_point(x0_csv);
    if (x0.size() != 2) throw ConfigError("demo-2d: x0 must have two coordinates");
    StoppingPolicy policy;
    policy.step_tol = o.tol;
    policy.max_iters = o.max_iters;
    policy.time_limit = o.time_limit;
    policy.trace_stride = 1;
    SolveReport rep = iterate(T, x0, policy);
    print_summary(rep);
    const std::string meta = "demo-2d algorithm=" + algorithm + " scenario=" + scenario +
                             " x0=" + x0_csv;
    const std::string body = o.format == "json" ? io::trace_json(rep, meta) : io::trace_csv(rep);
    if (!o.output.empty()) {
        io::write_file(o.output, body);
    } else {
        std::fputs(body.c_str(), stdout);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"feasor: projection-method feasibility solvers"};
    app.require_subcommand(1);

    // solve-queens
    auto* sq = app.add_subcommand("solve-queens", "solve one (m,n)-queens instance with product-space DR");
    int sq_n = 0, sq_m = 2, sq_form = 3;
    std::uint64_t sq_seed = 0;
    CommonOpts sq_o;
    sq->add_option("-n,--n", sq_n, "board size")->required();
    sq->add_option("-m,--m", sq_m, "queens per row/column");
    sq->add_option("-f,--formulation", sq_form, "constraint formulation 1..4");
    sq->add_option("--seed", sq_seed, "random-start seed (FEASOR_SEED overrides)");
    add_common(sq, sq_o);

    // bench-queens
    auto* bq = app.add_subcommand("bench-queens", "seeded benchmark over sizes and formulations");
    std::string bq_sizes = "10,20", bq_forms = "3";
    int bq_trials = 20, bq_m = 2;
    unsigned bq_jobs = 0;
    CommonOpts bq_o;
    bq->add_option("--sizes", bq_sizes, "comma-separated board sizes");
    bq->add_option("--formulations", bq_forms, "comma-separated formulations 1..4");
    bq->add_option("--trials", bq_trials, "random starts per configuration");
    bq->add_option("-m,--m", bq_m, "queens per row/column");
    bq->add_option("--jobs", bq_jobs, "worker threads (0 = all processors)");
    add_common(bq, bq_o);

    // solve-moments
    auto* sm = app.add_subcommand("solve-moments", "discretized non-negative moment problem");
    double sm_a = 0.0, sm_b = 1.0, sm_mu = 0.5, sm_var = 0.05, sm_alpha = 0.95, sm_beta = 0.95;
    int sm_grid = 201;
    std::string sm_alg = "cyclic-projections", sm_start = "ones", sm_trace;
    CommonOpts sm_o;
    sm->add_option("--a", sm_a, "interval left endpoint");
    sm->add_option("--b", sm_b, "interval right endpoint");
    sm->add_option("--mu", sm_mu, "target mean");
    sm->add_option("--var", sm_var, "target variance");
    sm->add_option("--grid", sm_grid, "number of grid nodes");
    sm->add_option("--algorithm", sm_alg, "cyclic-projections|cyclic-dr|anchored-dr|product-dr|product-aamr");
    sm->add_option("--alpha", sm_alpha, "AAMR averaging parameter");
    sm->add_option("--beta", sm_beta, "AAMR modification parameter");
    sm->add_option("--start", sm_start, "starting density: ones|step");
    sm->add_option("--trace", sm_trace, "also write the residual trace to this path");
    add_common(sm, sm_o);

    // demo-2d
    auto* d2 = app.add_subcommand("demo-2d", "trace a DR-family iteration on two lines in the plane");
    std::string d2_alg = "dr", d2_scenario = "lines", d2_x0 = "1,0";
    double d2_alpha = 0.5, d2_beta = 0.5;
    CommonOpts d2_o;
    d2_o.max_iters = 60;
    d2->add_option("--algorithm", d2_alg, "dr|gdr|raar|cdr|aamr|cyclic-projections");
    d2->add_option("--scenario", d2_scenario, "lines (y=0 and y=x) or parallel (y=0 and y=1)");
    d2->add_option("--x0", d2_x0, "starting point, e.g. 1,0");
    d2->add_option("--alpha", d2_alpha, "averaging parameter");
    d2->add_option("--beta", d2_beta, "relaxation parameter");
    add_common(d2, d2_o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sq->parsed()) return run_solve_queens(sq_n, sq_m, sq_form, sq_seed, sq_o);
        if (bq->parsed()) return run_bench_queens(bq_sizes, bq_forms, bq_trials, bq_m, bq_jobs, bq_o);
        if (sm->parsed())
            return run_solve_moments(sm_a, sm_b, sm_mu, sm_var, sm_grid, sm_alg, sm_alpha, sm_beta,
                                     sm_start, sm_o, sm_trace);
        if (d2->parsed()) return run_demo_2d(d2_alg, d2_scenario, d2_x0, d2_alpha, d2_beta, d2_o);
    } catch (const feasor::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const feasor::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const feasor::ParamError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
