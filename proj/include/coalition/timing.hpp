#pragma once

#include <chrono>

namespace coalition {

// Wall-clock accounting for one optimizer run. repository_update_seconds
// covers archive/survivor maintenance per round: the feasibility checks of
// the evaluated candidates plus non-dominated selection and the merge into
// the archive. feasibility_check_seconds is the checks alone — a subset of
// the repository bucket, reported separately so their share is visible.
// Buckets accumulate over all rounds (initialization counts as one round);
// filtering is filled in by the pipeline, not the engines.
struct TimingBreakdown {
    double total_seconds = 0.0;
    double filtering_seconds = 0.0;
    double repository_update_seconds = 0.0;
    double feasibility_check_seconds = 0.0;
    int rounds = 0;
};

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace coalition
