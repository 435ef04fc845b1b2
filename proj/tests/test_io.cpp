#include <doctest.h>

#include <cstdlib>
#include <string>

#include <json.hpp>

#include "feasor/algorithms.hpp"
#include "feasor/io.hpp"

using namespace feasor;

TEST_CASE("format_double: shortest round-tripping representation") {
    CHECK(io::format_double(0.0) == "0");
    CHECK(io::format_double(1.0) == "1");
    CHECK(io::format_double(0.5) == "0.5");
    CHECK(io::format_double(-3.25) == "-3.25");
    for (double v : {0.1, 1.0 / 3.0, 2.0 / 7.0, 1e-300, 123456.789, 0.7071067811865476}) {
        const std::string s = io::format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
}

namespace {

SolveReport demo_report() {
    auto A = make_hyperplane({0, 1}, 0);
    auto B = make_hyperplane({-1, 1}, 0);
    StoppingPolicy pol;
    pol.max_iters = 3;
    pol.trace_stride = 1;
    return iterate(douglas_rachford(A, B), {1.0, 0.0}, pol);
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

}  // namespace

TEST_CASE("trace CSV: header, rectangular rows, coordinates when fully traced") {
    auto rep = demo_report();
    const std::string csv = io::trace_csv(rep);
    CHECK(csv.rfind("k,residual,coord_0,coord_1\n", 0) == 0);
    CHECK(count_lines(csv) == 5);  // header + x0..x3
    CHECK(csv.find("0,0,1,0\n") != std::string::npos);

    // without snapshots the coordinate columns disappear
    auto A = make_hyperplane({0, 1}, 0);
    StoppingPolicy pol;
    pol.max_iters = 2;
    pol.trace_stride = 0;
    auto bare = iterate(cyclic_projections({A}), {1.0, 2.0}, pol);
    const std::string csv2 = io::trace_csv(bare);
    CHECK(csv2.rfind("k,residual\n", 0) == 0);
    CHECK(count_lines(csv2) == static_cast<int>(bare.residuals.size()) + 2);
}

TEST_CASE("benchmark CSV: documented header and one line per row") {
    std::vector<BenchmarkRow> rows = {{10, 3, 0, 42, true, 17, 0.25},
                                      {10, 3, 1, 43, false, 1000, 1.5}};
    const std::string csv = io::benchmark_csv(rows);
    CHECK(csv.rfind("n,formulation,trial,seed,solved,iterations,seconds\n", 0) == 0);
    CHECK(count_lines(csv) == 3);
    CHECK(csv.find("10,3,0,42,1,17,0.25\n") != std::string::npos);
    CHECK(csv.find("10,3,1,43,0,1000,1.5\n") != std::string::npos);
}

TEST_CASE("density CSV: t,value rows") {
    const std::string csv = io::density_csv({0.0, 0.5, 1.0}, {1.0, 1.5, 1.0});
    CHECK(csv == "t,value\n0,1\n0.5,1.5\n1,1\n");
    CHECK_THROWS_AS(io::density_csv({0.0}, {1.0, 2.0}), DimensionError);
}

TEST_CASE("JSON mirrors carry rows plus a meta object") {
    auto rep = demo_report();
    auto j = nlohmann::json::parse(io::trace_json(rep, "demo config"));
    CHECK(j["meta"]["config"] == "demo config");
    CHECK(j["meta"]["library"] == "feasor");
    CHECK(j["rows"].size() == rep.iterations + 1);
    CHECK(j["rows"][0]["k"] == 0);
    CHECK(j["rows"][0]["x"].size() == 2);

    std::vector<BenchmarkRow> rows = {{10, 3, 0, 42, true, 17, 0.25}};
    auto jb = nlohmann::json::parse(io::benchmark_json(rows, "bench"));
    CHECK(jb["rows"][0]["n"] == 10);
    CHECK(jb["rows"][0]["solved"] == true);

    auto jd = nlohmann::json::parse(io::density_json({0.0, 1.0}, {2.0, 3.0}, "dens"));
    CHECK(jd["rows"][1]["t"] == 1.0);
    CHECK(jd["rows"][1]["value"] == 3.0);
}

TEST_CASE("write_file failure raises IoError") {
    CHECK_THROWS_AS(io::write_file("/nonexistent-dir/x/y.csv", "data"), IoError);
}
