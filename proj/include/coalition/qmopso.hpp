#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "coalition/analysis.hpp"
#include "coalition/evaluator.hpp"
#include "coalition/model.hpp"
#include "coalition/timing.hpp"

namespace coalition::qmopso {

struct QmopsoParams {
    int population = 100;
    int iterations = 100;
    double w = 0.25;   // inertia
    double c1 = 0.25;  // local-best pull
    double c2 = 0.5;   // global-best pull
    double alpha = 0.3;
    double beta = 0.7;  // alpha + beta == 1
    std::uint64_t seed = 0;
    // Ablation switch: invert the sampling inequality (bit set when the draw
    // falls below the velocity instead of above it).
    bool flip_sampling = false;
    FeasibilityWeights feasibility_weights;
    analysis::CriteriaWeights criteria_weights;

    void validate() const;
};

struct Particle {
    std::vector<double> velocity;  // per-bit probabilities in [0, 1]
    Coalition position;
    ObjectiveVector objectives;
    FeasibilityReport feasibility;
    Evaluated local_best;
};

// Unbounded archive of mutually non-dominated (under constrained_better)
// solutions. Never holds an empty coalition; identical positions stored once.
struct Repository {
    std::vector<Evaluated> entries;
};

// Single velocity component update:
//   v' = w*v + c1*(alpha*p_lb + beta*(1 - p_lb)) + c2*(alpha*p_gb + beta*(1 - p_gb))
// Deterministic; stays inside [0,1] whenever w + c1 + c2 <= 1.
double update_velocity_component(double v, bool local_best_bit, bool global_best_bit,
                                 const QmopsoParams& p);

std::vector<double> update_velocity(const Particle& particle, const Coalition& global_best,
                                    const QmopsoParams& p);

// Bit j set iff a fresh uniform draw exceeds velocity[j]; one draw per
// component. Velocity 0 forces the bit on, velocity 1 forces it off.
Coalition sample_position(const std::vector<double>& velocity, std::mt19937_64& rng,
                          bool flip = false);

// Uniform velocities, sampled positions, local best = own start.
std::vector<Particle> init_swarm(const QmopsoParams& p, const Evaluator& ev,
                                 std::mt19937_64& rng);

// Keep the stored best only if it is constrained_better than the current
// position; otherwise (worse or incomparable) replace it.
void update_local_best(Particle& particle);

// Merge candidates into the archive: drop candidates beaten by an entry,
// evict entries beaten by a candidate, store identical positions once.
Repository update_repository(Repository rep, const std::vector<Evaluated>& candidates);

// Promethee II top pick over the archive, ties by entry index.
const Evaluated& select_global_best(const Repository& rep,
                                    const analysis::CriteriaWeights& weights);

struct RunOutput {
    Repository repository;
    TimingBreakdown timing;
};

using IterationObserver = std::function<void(int iteration, const Repository&)>;

// Full optimization loop; iteration 0 is the initial population's repository.
// The observer (when set) fires after every repository update.
RunOutput run(const Scenario& scenario, const QmopsoParams& params,
              const IterationObserver& observer = {});

}  // namespace coalition::qmopso
