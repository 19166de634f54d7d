#pragma once

#include <vector>

#include "coalition/evaluator.hpp"
#include "coalition/model.hpp"
#include "coalition/objectives.hpp"

namespace coalition::analysis {

struct FrontPoint {
    Coalition position;
    ObjectiveVector objectives;
};

// Mutually non-dominated points, objective-duplicates collapsed (first
// witness kept) and sorted by (time, cost, size) so every downstream
// consumer sees one canonical order.
struct Front {
    std::vector<FrontPoint> points;

    bool empty() const { return points.empty(); }
    std::size_t size() const { return points.size(); }
};

// Canonicalize a set of evaluated solutions into a Front: strictly dominated
// points dropped, objective-duplicates (within eps) collapsed, sorted.
Front make_front(const std::vector<Evaluated>& entries, double eps = 1e-9);

// Fraction of `front` points absent from `reference` (objective equality
// within eps). Throws std::invalid_argument when either side is empty.
double error_ratio(const Front& front, const Front& reference, double eps = 1e-9);

// Fraction of b's points weakly dominated by at least one point of a.
// SC(A, A) == 1. Throws when b is empty.
double set_coverage(const Front& a, const Front& b);

// Population standard deviation of nearest-neighbour Euclidean distances in
// raw objective space. Needs at least two points.
double spacing(const Front& front);

// Non-dominated, de-duplicated union of the given fronts.
Front reference_front(const std::vector<Front>& fronts, double eps = 1e-9);

// Exhaustive true front over every non-empty coalition (feasible ones only).
// Refuses fleets larger than 22 robots. An empty result means the task has no
// feasible coalition at all.
Front brute_force_front(const Scenario& s, const FeasibilityWeights& w = {});

// Same, but keeps the full evaluated entries (pipeline needs feasibility).
std::vector<Evaluated> brute_force_entries(const Scenario& s, const FeasibilityWeights& w = {});

struct CriteriaWeights {
    double time = 0.5;
    double cost = 0.25;
    double size = 0.25;

    void validate() const;  // positive, sum to 1
};

struct PrometheeResult {
    std::vector<std::size_t> order;  // indices into the input, best first
    std::vector<double> net_flow;    // aligned with the input
};

// Promethee II with the usual-criterion (step) preference on each minimized
// objective. Net flows are computed per criterion from strict less/greater
// counts — O(k log k), algebraically identical to the pairwise double loop.
// Ties in flow break by input index. A single alternative gets flow 0.
PrometheeResult promethee_rank(const std::vector<ObjectiveVector>& alternatives,
                               const CriteriaWeights& weights);

}  // namespace coalition::analysis
