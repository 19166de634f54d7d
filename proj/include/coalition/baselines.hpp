#pragma once

#include <cstdint>
#include <vector>

#include "coalition/analysis.hpp"
#include "coalition/evaluator.hpp"
#include "coalition/timing.hpp"

namespace coalition::baselines {

struct EvoParams {
    int population = 100;
    int generations = 100;
    int tournament = 2;          // binary tournament
    double crossover_prob = 0.9;
    double mutation_prob = 0.1;  // expected flips per child; per-bit rate is /n
    // Distribution indices carried for config compatibility; the binary
    // one-point / bit-flip operators used here take no such parameter.
    double crossover_eta = 20.0;
    double mutation_eta = 20.0;
    std::uint64_t seed = 0;
    FeasibilityWeights feasibility_weights;

    void validate() const;
};

// Deb's fast non-dominated sort under constrained_better: fronts of indices,
// rank 0 first.
std::vector<std::vector<std::size_t>> fast_nondominated_sort(
    const std::vector<Evaluated>& pop);

// Crowding distances for one front (indices into pop), aligned with `front`.
// Boundary points per objective get +inf; objectives with zero span are
// skipped.
std::vector<double> crowding_distance(const std::vector<Evaluated>& pop,
                                      const std::vector<std::size_t>& front);

struct EvoOutput {
    std::vector<Evaluated> front;  // final non-dominated set
    TimingBreakdown timing;
};

EvoOutput run_nsga2(const Scenario& scenario, const EvoParams& params);
EvoOutput run_spea2(const Scenario& scenario, const EvoParams& params);

}  // namespace coalition::baselines
