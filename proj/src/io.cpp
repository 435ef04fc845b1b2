#include "feasor/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include <json.hpp>

namespace feasor::io {
namespace {

constexpr const char* kVersion = "0.1.0";

nlohmann::json meta_object(const std::string& meta_config) {
    nlohmann::json meta;
    meta["config"] = meta_config;
    meta["library"] = "feasor";
    meta["version"] = kVersion;
    return meta;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    // %.17g round-trips doubles; trim to the shortest representation that does
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

std::string trace_csv(const SolveReport& report) {
    const bool coords = report.snapshots.size() == report.iterations + 1;
    std::string out = "k,residual";
    if (coords && !report.snapshots.empty()) {
        for (std::size_t i = 0; i < report.snapshots.front().size(); ++i) {
            out += ",coord_" + std::to_string(i);
        }
    }
    out += "\n";
    const std::size_t rows = coords ? report.snapshots.size() : report.residuals.size() + 1;
    for (std::size_t k = 0; k < rows; ++k) {
        out += std::to_string(k);
        out += ",";
        out += format_double(k == 0 ? 0.0 : report.residuals[k - 1]);
        if (coords) {
            for (double c : report.snapshots[k]) {
                out += ",";
                out += format_double(c);
            }
        }
        out += "\n";
    }
    return out;
}

std::string benchmark_csv(const std::vector<BenchmarkRow>& rows) {
    std::string out = "n,formulation,trial,seed,solved,iterations,seconds\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n) + "," + std::to_string(r.formulation) + "," +
               std::to_string(r.trial) + "," + std::to_string(r.seed) + "," +
               (r.solved ? "1" : "0") + "," + std::to_string(r.iterations) + "," +
               format_double(r.seconds) + "\n";
    }
    return out;
}

std::string density_csv(const Vector& grid, const Vector& values) {
    check_same_dim(grid, values, "density_csv");
    std::string out = "t,value\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out += format_double(grid[i]) + "," + format_double(values[i]) + "\n";
    }
    return out;
}

std::string trace_json(const SolveReport& report, const std::string& meta_config) {
    nlohmann::json j;
    j["meta"] = meta_object(meta_config);
    j["status"] = to_string(report.status);
    j["iterations"] = report.iterations;
    j["seconds"] = report.seconds;
    auto rows = nlohmann::json::array();
    const bool coords = report.snapshots.size() == report.iterations + 1;
    const std::size_t n = coords ? report.snapshots.size() : report.residuals.size() + 1;
    for (std::size_t k = 0; k < n; ++k) {
        nlohmann::json row;
        row["k"] = k;
        row["residual"] = k == 0 ? 0.0 : report.residuals[k - 1];
        if (coords) row["x"] = report.snapshots[k];
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

std::string benchmark_json(const std::vector<BenchmarkRow>& rows, const std::string& meta_config) {
    nlohmann::json j;
    j["meta"] = meta_object(meta_config);
    auto arr = nlohmann::json::array();
    for (const auto& r : rows) {
        arr.push_back({{"n", r.n},
                       {"formulation", r.formulation},
                       {"trial", r.trial},
                       {"seed", r.seed},
                       {"solved", r.solved},
                       {"iterations", r.iterations},
                       {"seconds", r.seconds}});
    }
    j["rows"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::string density_json(const Vector& grid, const Vector& values, const std::string& meta_config) {
    check_same_dim(grid, values, "density_json");
    nlohmann::json j;
    j["meta"] = meta_object(meta_config);
    auto arr = nlohmann::json::array();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        arr.push_back({{"t", grid[i]}, {"value", values[i]}});
    }
    j["rows"] = std::move(arr);
    return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path);
    f << content;
    f.flush();
    if (!f) throw IoError("write failed: " + path);
}

}  // namespace feasor::io
