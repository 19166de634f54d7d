#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "coalition/model.hpp"

namespace coalition::csp {

struct CspVariable {
    int id = 0;
    CapabilityRef kind;

    bool operator==(const CspVariable&) const = default;
};

// Binary relation between two variables, endpoints by variable id.
struct CspConstraint {
    ConstraintRelation relation = ConstraintRelation::SameRobot;
    int left = 0;
    int right = 0;

    bool operator==(const CspConstraint&) const = default;
};

struct CspInstance {
    std::vector<CspVariable> variables;
    std::vector<std::vector<int>> domains;  // robot ids, ascending, per variable
    std::vector<CspConstraint> constraints;
};

// Robot id assigned to each variable, index-aligned with variables.
using Assignment = std::vector<int>;

// One variable per distinct capability kind appearing in any locational
// constraint, ordered by (category, kind index); domains are the coalition
// members owning at least one unit of that kind, ascending by id.
CspInstance build_csp(const Task& task, const Coalition& coalition, const Scenario& scenario);

// First satisfying assignment in deterministic (variable, value) order, or
// nullopt. A task with zero locational constraints is trivially satisfiable.
std::optional<Assignment> solve_csp(const CspInstance& instance);

// (m, M): maximum simultaneously satisfiable constraints and the total count.
// Exact branch-and-bound; m == M iff solve_csp succeeds.
std::pair<int, int> max_satisfied_constraints(const CspInstance& instance);

// Same search bound to one (task, scenario) pair, with domains filtered
// lazily against the coalition bits. Avoids materializing per-coalition
// domains in the optimizer hot path; equivalent to build_csp +
// max_satisfied_constraints by construction (and by property test).
class TaskCsp {
  public:
    TaskCsp() = default;
    TaskCsp(const Task& task, const Scenario& scenario);

    std::pair<int, int> max_satisfied(const Coalition& coalition) const;
    int constraint_count() const { return static_cast<int>(constraints_.size()); }
    const std::vector<CspVariable>& variables() const { return variables_; }

  private:
    friend struct LazyDomains;
    std::vector<CspVariable> variables_;
    std::vector<CspConstraint> constraints_;
    std::vector<std::vector<int>> owners_;       // per variable: robots owning the kind
    std::vector<std::vector<std::uint8_t>> owner_flag_;  // per variable: id -> owns?
    std::vector<std::vector<int>> incident_;     // per variable: constraint indices
    std::vector<int> order_;                     // search order, precomputed once
};

}  // namespace coalition::csp
