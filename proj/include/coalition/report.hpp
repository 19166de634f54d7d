#pragma once

#include <string>

#include "coalition/pipeline.hpp"

namespace coalition::report {

// Pure string emitters. With include_timing=false the output depends only on
// the inputs and seed, so repeated runs are byte-identical.
std::string run_result_json(const pipeline::RunResult& result, bool include_timing = true);
std::string run_result_csv(const pipeline::RunResult& result, bool include_timing = true);
std::string bench_json(const pipeline::BenchReport& report, bool include_timing = true);
std::string bench_csv(const pipeline::BenchReport& report, bool include_timing = true);

// Canonical front as JSON: one point per line of members plus objectives.
std::string front_json(const analysis::Front& front);

void write_file(const std::string& path, const std::string& content);

}  // namespace coalition::report
