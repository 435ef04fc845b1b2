#pragma once

#include <string>
#include <vector>

#include "feasor/core.hpp"
#include "feasor/queens.hpp"

namespace feasor::io {

/// Shortest round-trippable decimal representation; deterministic for a
/// given value.
std::string format_double(double v);

/// `k,residual[,coord_0..coord_d]`; row k carries iterate x_k (residual of
/// row 0 is 0). Coordinates are included when the report recorded snapshots
/// every step.
std::string trace_csv(const SolveReport& report);

/// `n,formulation,trial,seed,solved,iterations,seconds`
std::string benchmark_csv(const std::vector<BenchmarkRow>& rows);

/// `t,value` for a sampled density.
std::string density_csv(const Vector& grid, const Vector& values);

/// JSON mirrors of the CSV tables: array of row objects plus a `meta` object
/// echoing the supplied config description.
std::string trace_json(const SolveReport& report, const std::string& meta_config);
std::string benchmark_json(const std::vector<BenchmarkRow>& rows, const std::string& meta_config);
std::string density_json(const Vector& grid, const Vector& values, const std::string& meta_config);

/// Writes content to path, throwing IoError on failure.
void write_file(const std::string& path, const std::string& content);

}  // namespace feasor::io
