#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coalition/analysis.hpp"
#include "coalition/evaluator.hpp"
#include "coalition/model.hpp"
#include "coalition/timing.hpp"

namespace coalition::pipeline {

enum class Algorithm { Qmopso, Nsga2, Spea2, Brute };

std::string to_string(Algorithm a);
Algorithm parse_algorithm(const std::string& name);

// Parameters shared by every optimizer entry point. `iterations` doubles as
// the generation count for the evolutionary baselines; Brute ignores both
// population and iterations and is only valid for small fleets.
struct SolveParams {
    Algorithm algorithm = Algorithm::Qmopso;
    int population = 100;
    int iterations = 100;
    std::uint64_t seed = 0;
    bool flip_sampling = false;
    FeasibilityWeights feasibility_weights{};
    analysis::CriteriaWeights criteria_weights{};

    void validate() const;
};

struct SolveOutput {
    std::vector<Evaluated> entries;  // candidate set the algorithm reports
    TimingBreakdown timing;
};

// One optimizer run on a scenario as-is: no battery filter, no thresholds.
SolveOutput run_solver(const Scenario& scenario, const SolveParams& params);

struct RunConfig {
    // Scenario source: exactly one of scenario_path / n (used by run_pipeline;
    // a Session already owns its scenario and ignores these two).
    std::string scenario_path;
    int n = 0;
    GenerationRanges ranges{};

    SolveParams solver{};
    double filter_threshold = 40.0;  // battery level required to participate
    std::optional<double> max_time;  // override scenario thresholds when set
    std::optional<double> max_cost;
    std::optional<int> max_robots;

    void validate() const;
};

struct SolutionRecord {
    std::vector<int> members;  // original robot ids
    ObjectiveVector objectives;
    FeasibilityReport feasibility;
    bool within_thresholds = false;
    bool eligible = false;  // feasible and within thresholds
    std::optional<double> net_flow;  // Promethee flow, eligible entries only
};

struct RunResult {
    Algorithm algorithm = Algorithm::Qmopso;
    std::uint64_t seed = 0;
    std::size_t fleet_size = 0;
    std::size_t active_size = 0;  // idle robots that passed the battery filter
    double filter_threshold = 0.0;
    Thresholds thresholds;  // effective values after overrides
    std::vector<SolutionRecord> solutions;
    int selected = -1;  // index into solutions, -1 when no_feasible
    bool no_feasible = false;
    std::vector<int> busy_ids;  // robots deployed by this run
    TimingBreakdown timing;
};

// Owns a fleet across successive allocation rounds. Robots deployed by one
// run stay Busy and are excluded from later runs until released, so coalitions
// picked by consecutive runs are disjoint.
class Session {
  public:
    explicit Session(Scenario scenario);

    const Scenario& scenario() const { return scenario_; }
    RunResult run(const RunConfig& config);
    void release(const std::vector<int>& ids);  // Busy -> Idle
    void release_all();

  private:
    Scenario scenario_;
};

// Load-or-generate, run one allocation round, return the result.
RunResult run_pipeline(const RunConfig& config);

struct BenchConfig {
    std::vector<int> sizes{10, 100};
    int seeds = 10;  // independent scenarios per size
    std::vector<Algorithm> algorithms{Algorithm::Qmopso, Algorithm::Nsga2, Algorithm::Spea2};
    std::vector<int> populations{100};
    int iterations = 100;
    std::uint64_t base_seed = 1;
    GenerationRanges ranges{};
    FeasibilityWeights feasibility_weights{};
    analysis::CriteriaWeights criteria_weights{};

    void validate() const;
};

// One metric observation; seed_index < 0 marks a per-cell median row.
struct BenchRow {
    Algorithm algorithm = Algorithm::Qmopso;
    int n = 0;
    int population = 0;
    int seed_index = 0;
    std::string metric;
    double value = 0.0;
};

struct BenchReport {
    std::vector<BenchRow> rows;  // per-run rows followed by median rows, sorted
};

BenchReport run_benchmark(const BenchConfig& config);

}  // namespace coalition::pipeline
