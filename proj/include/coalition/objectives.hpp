#pragma once

#include "coalition/model.hpp"

namespace coalition {

// All three minimized. time is the worst member's travel time to the target;
// cost the summed deployment costs; size the member count. An empty coalition
// gets (+inf, 0, 0) and is barred from repositories and fronts.
struct ObjectiveVector {
    double time = 0.0;
    double cost = 0.0;
    double size = 0.0;

    bool operator==(const ObjectiveVector&) const = default;
};

ObjectiveVector evaluate_objectives(const Coalition& c, const Scenario& s);

// Strict Pareto dominance under minimization: no worse everywhere, strictly
// better somewhere. Irreflexive.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

// a no worse than b on every objective (equality allowed).
bool weakly_dominates(const ObjectiveVector& a, const ObjectiveVector& b, double eps = 0.0);

bool objectives_equal(const ObjectiveVector& a, const ObjectiveVector& b, double eps = 1e-9);

struct FeasibilityWeights {
    double w_treq = 0.5;  // weight of the capability-requirement term
    double w_c = 0.5;     // weight of the locational-constraint term

    void validate() const;  // both in [0,1], summing to 1
};

struct FeasibilityReport {
    double sat_treq = 1.0;  // u / U, 1 when U == 0
    double sat_c = 1.0;     // m / M, 1 when M == 0
    double degree = 1.0;    // sat_treq * w_treq + sat_c * w_c
    bool feasible = true;   // u == U and m == M (degree exactly 1)

    bool operator==(const FeasibilityReport&) const = default;
};

FeasibilityReport feasibility_degree(const Coalition& c, const Scenario& s,
                                     const FeasibilityWeights& w = {});

enum class Better { A, B, Neither };

// Constraint-handling comparison: two feasible solutions compare by Pareto
// dominance; a feasible one beats an infeasible one; two infeasible ones
// compare by degree, equal degrees are incomparable.
Better constrained_better(const ObjectiveVector& obj_a, const FeasibilityReport& feas_a,
                          const ObjectiveVector& obj_b, const FeasibilityReport& feas_b);

}  // namespace coalition
