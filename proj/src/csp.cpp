#include "coalition/csp.hpp"

#include <algorithm>
#include <map>

namespace coalition::csp {

namespace {

std::vector<CspVariable> derive_variables(const Task& task,
                                          std::vector<CspConstraint>& constraints_out) {
    std::map<CapabilityRef, int> ids;
    for (const auto& c : task.all_constraints()) {
        ids.emplace(c.left, 0);
        ids.emplace(c.right, 0);
    }
    std::vector<CspVariable> vars;
    int next = 0;
    for (auto& [kind, id] : ids) {
        id = next++;
        vars.push_back({id, kind});
    }
    constraints_out.clear();
    for (const auto& c : task.all_constraints())
        constraints_out.push_back({c.relation, ids.at(c.left), ids.at(c.right)});
    return vars;
}

bool robot_owns(const Robot& r, const CapabilityRef& kind) {
    const CapabilityVector& v =
        kind.category == CapabilityCategory::Sensing ? r.sensing : r.actuating;
    return static_cast<std::size_t>(kind.index) < v.size() &&
           v[static_cast<std::size_t>(kind.index)] >= 1.0;
}

std::vector<std::vector<int>> build_incident(int num_vars,
                                             const std::vector<CspConstraint>& cons) {
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(num_vars));
    for (std::size_t ci = 0; ci < cons.size(); ++ci) {
        incident[static_cast<std::size_t>(cons[ci].left)].push_back(static_cast<int>(ci));
        incident[static_cast<std::size_t>(cons[ci].right)].push_back(static_cast<int>(ci));
    }
    return incident;
}

// Visit constraint-graph neighbours consecutively (BFS per component,
// components by smallest variable id). An unsatisfiable edge then fails right
// where it appears instead of being rediscovered under every combination of
// unrelated variables in between.
std::vector<int> search_order(int num_vars, const std::vector<CspConstraint>& cons,
                              const std::vector<std::vector<int>>& incident) {
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(num_vars));
    std::vector<char> seen(static_cast<std::size_t>(num_vars), 0);
    for (int start = 0; start < num_vars; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        seen[static_cast<std::size_t>(start)] = 1;
        std::size_t head = order.size();
        order.push_back(start);
        while (head < order.size()) {
            const int v = order[head++];
            std::vector<int> next;
            for (int ci : incident[static_cast<std::size_t>(v)]) {
                const CspConstraint& c = cons[static_cast<std::size_t>(ci)];
                next.push_back(c.left == v ? c.right : c.left);
            }
            std::sort(next.begin(), next.end());
            for (int u : next)
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    order.push_back(u);
                }
        }
    }
    return order;
}

}  // namespace

// Reusable buffers so the per-coalition search allocates nothing. `forced`
// holds per-depth slices stack-style; see dfs.
struct SearchScratch {
    std::vector<int> assign;
    std::vector<int> forced;
};

namespace {

// Branch-and-bound max-sat over binary same/different constraints.
//
// Domain access is abstracted so the materialized CspInstance route and the
// lazy coalition-filtered route share one search. A variable with an empty
// domain is left unassigned and every constraint touching it counts as
// unsatisfied; unassigned is never branched for non-empty domains because any
// concrete value satisfies a superset of what unassigned satisfies.
//
// The constraint graph (incident lists, variable order) is precomputed by the
// caller: it depends only on the task, not the coalition, and this search
// runs once per evaluated coalition in the optimizer hot path.
template <typename Dom>
class MaxSat {
  public:
    MaxSat(const std::vector<CspConstraint>& cons, const std::vector<std::vector<int>>& incident,
           const std::vector<int>& order, const Dom& dom, SearchScratch& scratch,
           Assignment* best_assignment)
        : cons_(cons), incident_(incident), order_(order), dom_(dom),
          assign_(scratch.assign), forced_(scratch.forced), best_assign_(best_assignment) {
        assign_.assign(order.size(), kUndecided);
        forced_.clear();
    }

    // Returns m; when best_assignment was given it holds an assignment
    // achieving m, entries kSkipped for variables with empty domains.
    int run() {
        upper_ = 0;
        for (const auto& c : cons_)
            if (screen(c)) ++upper_;
        best_ = -1;
        dfs(0, 0, 0);
        return best_ < 0 ? 0 : best_;
    }

    static constexpr int kUndecided = -1;
    static constexpr int kSkipped = -2;

  private:
    // Exact per-constraint satisfiability in isolation; sharpens the global
    // upper bound so provably-unsatisfiable constraints stop the search early.
    bool screen(const CspConstraint& c) const {
        if (c.relation == ConstraintRelation::SameRobot) {
            bool found = false;
            dom_.for_each(c.left, [&](int r) {
                if (dom_.contains(c.right, r)) {
                    found = true;
                    return false;
                }
                return true;
            });
            return found;
        }
        int first_l = -1, first_r = -1;
        dom_.for_each(c.left, [&](int r) {
            first_l = r;
            return false;
        });
        if (first_l < 0) return false;
        dom_.for_each(c.right, [&](int r) {
            first_r = r;
            return false;
        });
        if (first_r < 0) return false;
        if (first_l != first_r) return true;
        bool second = false;
        dom_.for_each(c.left, [&](int r) {
            if (r != first_l) {
                second = true;
                return false;
            }
            return true;
        });
        if (second) return true;
        dom_.for_each(c.right, [&](int r) {
            if (r != first_r) {
                second = true;
                return false;
            }
            return true;
        });
        return second;
    }

    // Decide variable v (value or kSkipped), counting constraints whose other
    // endpoint is already decided. Returns (sat_delta, unsat_delta).
    std::pair<int, int> decide(int v, int value) {
        assign_[static_cast<std::size_t>(v)] = value;
        int sat = 0, unsat = 0;
        for (int ci : incident_[static_cast<std::size_t>(v)]) {
            const CspConstraint& c = cons_[static_cast<std::size_t>(ci)];
            const int other = c.left == v ? c.right : c.left;
            const int ov = assign_[static_cast<std::size_t>(other)];
            if (ov == kUndecided) continue;
            if (value == kSkipped || ov == kSkipped) {
                ++unsat;
            } else if (c.relation == ConstraintRelation::SameRobot) {
                (value == ov ? sat : unsat)++;
            } else {
                (value != ov ? sat : unsat)++;
            }
        }
        return {sat, unsat};
    }

    // Returns true when the search is finished (best reached the upper bound).
    bool dfs(std::size_t depth, int sat, int unsat) {
        const int total = static_cast<int>(cons_.size());
        if (total - unsat <= best_) return false;  // cannot improve
        if (depth == assign_.size()) {
            if (sat > best_) {
                best_ = sat;
                if (best_assign_) *best_assign_ = assign_;
            }
            return best_ >= upper_;
        }
        const int v = order_[depth];

        // Values satisfying a SameRobot constraint to an already-assigned
        // neighbour first: makes the satisfying dive immediate. Collected in a
        // stack-disciplined slice of the shared buffer (deeper calls append
        // after ours and restore the size on return).
        const std::size_t fbeg = forced_.size();
        for (int ci : incident_[static_cast<std::size_t>(v)]) {
            const CspConstraint& c = cons_[static_cast<std::size_t>(ci)];
            if (c.relation != ConstraintRelation::SameRobot) continue;
            const int other = c.left == v ? c.right : c.left;
            const int ov = assign_[static_cast<std::size_t>(other)];
            if (ov >= 0 && dom_.contains(v, ov)) forced_.push_back(ov);
        }
        std::sort(forced_.begin() + static_cast<std::ptrdiff_t>(fbeg), forced_.end());
        forced_.erase(std::unique(forced_.begin() + static_cast<std::ptrdiff_t>(fbeg),
                                  forced_.end()),
                      forced_.end());
        const std::size_t fend = forced_.size();

        bool any_value = false;
        bool done = false;
        auto try_value = [&](int r) {
            any_value = true;
            auto [ds, du] = decide(v, r);
            done = dfs(depth + 1, sat + ds, unsat + du);
            assign_[static_cast<std::size_t>(v)] = kUndecided;
            return !done;
        };
        auto in_forced = [&](int r) {
            return std::binary_search(forced_.begin() + static_cast<std::ptrdiff_t>(fbeg),
                                      forced_.begin() + static_cast<std::ptrdiff_t>(fend), r);
        };
        for (std::size_t fi = fbeg; fi < fend && !done; ++fi) try_value(forced_[fi]);
        if (!done)
            dom_.for_each(v, [&](int r) {
                if (in_forced(r)) return true;
                return try_value(r);
            });

        if (!done && !any_value) {
            auto [ds, du] = decide(v, kSkipped);
            done = dfs(depth + 1, sat + ds, unsat + du);
            assign_[static_cast<std::size_t>(v)] = kUndecided;
        }
        forced_.resize(fbeg);
        return done;
    }

    const std::vector<CspConstraint>& cons_;
    const std::vector<std::vector<int>>& incident_;
    const std::vector<int>& order_;
    const Dom& dom_;
    std::vector<int>& assign_;
    std::vector<int>& forced_;
    Assignment* best_assign_;
    int best_ = -1;
    int upper_ = 0;
};

struct SpanDomains {
    const std::vector<std::vector<int>>& domains;

    template <typename Fn>
    void for_each(int var, Fn&& fn) const {
        for (int r : domains[static_cast<std::size_t>(var)])
            if (!fn(r)) return;
    }
    bool contains(int var, int robot) const {
        const auto& d = domains[static_cast<std::size_t>(var)];
        return std::binary_search(d.begin(), d.end(), robot);
    }
};

int run_materialized(const CspInstance& instance, Assignment* best_assignment) {
    SpanDomains dom{instance.domains};
    const auto incident =
        build_incident(static_cast<int>(instance.variables.size()), instance.constraints);
    const auto order =
        search_order(static_cast<int>(instance.variables.size()), instance.constraints, incident);
    SearchScratch scratch;
    MaxSat<SpanDomains> search(instance.constraints, incident, order, dom, scratch,
                               best_assignment);
    return search.run();
}

}  // namespace

struct LazyDomains {
    const TaskCsp& self;
    const Coalition& coal;

    template <typename Fn>
    void for_each(int var, Fn&& fn) const {
        for (int r : self.owners_[static_cast<std::size_t>(var)])
            if (coal.bits[static_cast<std::size_t>(r)] && !fn(r)) return;
    }
    bool contains(int var, int robot) const {
        return coal.bits[static_cast<std::size_t>(robot)] &&
               self.owner_flag_[static_cast<std::size_t>(var)][static_cast<std::size_t>(robot)];
    }
};

CspInstance build_csp(const Task& task, const Coalition& coalition, const Scenario& scenario) {
    CspInstance inst;
    inst.variables = derive_variables(task, inst.constraints);
    inst.domains.resize(inst.variables.size());
    for (const auto& var : inst.variables) {
        auto& dom = inst.domains[static_cast<std::size_t>(var.id)];
        for (std::size_t i = 0; i < coalition.bits.size(); ++i)
            if (coalition.bits[i] && robot_owns(scenario.robots[i], var.kind))
                dom.push_back(static_cast<int>(i));
    }
    return inst;
}

std::optional<Assignment> solve_csp(const CspInstance& instance) {
    Assignment assign;
    const int m = run_materialized(instance, &assign);
    if (m != static_cast<int>(instance.constraints.size())) return std::nullopt;
    return assign;
}

std::pair<int, int> max_satisfied_constraints(const CspInstance& instance) {
    return {run_materialized(instance, nullptr), static_cast<int>(instance.constraints.size())};
}

TaskCsp::TaskCsp(const Task& task, const Scenario& scenario) {
    variables_ = derive_variables(task, constraints_);
    owners_.resize(variables_.size());
    owner_flag_.assign(variables_.size(),
                       std::vector<std::uint8_t>(scenario.robots.size(), 0));
    for (const auto& var : variables_) {
        auto& own = owners_[static_cast<std::size_t>(var.id)];
        auto& flag = owner_flag_[static_cast<std::size_t>(var.id)];
        for (const Robot& r : scenario.robots)
            if (robot_owns(r, var.kind)) {
                own.push_back(r.id);
                flag[static_cast<std::size_t>(r.id)] = 1;
            }
    }
    incident_ = build_incident(static_cast<int>(variables_.size()), constraints_);
    order_ = search_order(static_cast<int>(variables_.size()), constraints_, incident_);
}

std::pair<int, int> TaskCsp::max_satisfied(const Coalition& coalition) const {
    if (constraints_.empty()) return {0, 0};
    thread_local SearchScratch scratch;
    LazyDomains dom{*this, coalition};
    MaxSat<LazyDomains> search(constraints_, incident_, order_, dom, scratch, nullptr);
    return {search.run(), static_cast<int>(constraints_.size())};
}

}  // namespace coalition::csp
