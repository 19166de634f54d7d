#pragma once

#include "coalition/csp.hpp"
#include "coalition/model.hpp"
#include "coalition/objectives.hpp"

namespace coalition {

// One candidate coalition with everything the comparisons need.
struct Evaluated {
    Coalition position;
    ObjectiveVector objectives;
    FeasibilityReport feasibility;
};

// Entries not constrained-beaten by any other, index order preserved, empty
// coalitions dropped.
std::vector<Evaluated> nondominated_subset(const std::vector<Evaluated>& evaluated);

// Scenario-bound evaluation pipeline shared by every optimizer, so all of
// them judge coalitions through identical code. Splits the work in two
// stages: stage 1 scans the members once and yields objectives plus
// capability totals; stage 2 turns the totals into a feasibility report,
// solving the locational CSP through the lazy TaskCsp. The split lets
// engines time constraint handling separately from objective evaluation.
class Evaluator {
  public:
    explicit Evaluator(const Scenario& s, FeasibilityWeights w = {});

    const Scenario& scenario() const { return *s_; }
    const FeasibilityWeights& weights() const { return w_; }

    struct Sample {
        ObjectiveVector objectives;
        CapabilityVector sensing;
        CapabilityVector actuating;
    };

    void measure(const Coalition& c, Sample& out) const;
    FeasibilityReport feasibility(const Coalition& c, const Sample& sample) const;
    Evaluated evaluate(const Coalition& c) const;

    // Incremental form of measure: begin, add each member, seal. measure() is
    // exactly the three composed; an optimizer that decides membership bit by
    // bit can accumulate the sample in the same pass instead of rescanning.
    void begin(Sample& out) const;
    void add_member(std::size_t robot, Sample& out) const;
    void seal(Sample& out) const;

  private:
    const Scenario* s_;
    FeasibilityWeights w_;
    std::vector<double> travel_;  // per robot: distance to target / speed
    std::vector<double> cost_;
    std::vector<double> sensing_flat_;    // row-major robot x kind
    std::vector<double> actuating_flat_;
    std::size_t r_ = 0, d_ = 0;
    CapabilityVector need_s_, need_a_;
    int total_requirements_ = 0;  // U: non-zero requirement components
    csp::TaskCsp task_csp_;
};

}  // namespace coalition
