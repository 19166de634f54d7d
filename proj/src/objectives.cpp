#include "coalition/objectives.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "coalition/csp.hpp"

namespace coalition {

ObjectiveVector evaluate_objectives(const Coalition& c, const Scenario& s) {
    ObjectiveVector o;
    o.time = -std::numeric_limits<double>::infinity();
    int count = 0;
    for (std::size_t i = 0; i < c.bits.size(); ++i) {
        if (!c.bits[i]) continue;
        const Robot& r = s.robots[i];
        o.time = std::max(o.time, distance(r.position, s.target) / r.speed);
        o.cost += r.deploy_cost;
        ++count;
    }
    if (count == 0) {
        o.time = std::numeric_limits<double>::infinity();
        o.cost = 0.0;
    }
    o.size = count;
    return o;
}

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    if (a.time > b.time || a.cost > b.cost || a.size > b.size) return false;
    return a.time < b.time || a.cost < b.cost || a.size < b.size;
}

bool weakly_dominates(const ObjectiveVector& a, const ObjectiveVector& b, double eps) {
    return a.time <= b.time + eps && a.cost <= b.cost + eps && a.size <= b.size + eps;
}

bool objectives_equal(const ObjectiveVector& a, const ObjectiveVector& b, double eps) {
    return std::abs(a.time - b.time) <= eps && std::abs(a.cost - b.cost) <= eps &&
           std::abs(a.size - b.size) <= eps;
}

void FeasibilityWeights::validate() const {
    if (w_treq < 0 || w_treq > 1 || w_c < 0 || w_c > 1 ||
        std::abs(w_treq + w_c - 1.0) > 1e-9)
        throw std::invalid_argument("feasibility weights must be in [0,1] and sum to 1");
}

FeasibilityReport feasibility_degree(const Coalition& c, const Scenario& s,
                                     const FeasibilityWeights& w) {
    w.validate();
    CapabilityVector have_s, have_a;
    coalition_capabilities(c, s, have_s, have_a);
    const CapabilityVector need_s = s.task.sensing_requirement();
    const CapabilityVector need_a = s.task.actuating_requirement();

    int u = 0, U = 0;
    auto count = [&](const CapabilityVector& need, const CapabilityVector& have) {
        for (std::size_t k = 0; k < need.size(); ++k) {
            if (need[k] <= 0) continue;  // only declared requirements count
            ++U;
            if (k < have.size() && have[k] >= need[k]) ++u;
        }
    };
    count(need_s, have_s);
    count(need_a, have_a);

    const auto [m, M] = csp::max_satisfied_constraints(csp::build_csp(s.task, c, s));

    FeasibilityReport rep;
    rep.sat_treq = U == 0 ? 1.0 : static_cast<double>(u) / U;
    rep.sat_c = M == 0 ? 1.0 : static_cast<double>(m) / M;
    rep.feasible = u == U && m == M;
    rep.degree = rep.feasible ? 1.0 : rep.sat_treq * w.w_treq + rep.sat_c * w.w_c;
    return rep;
}

Better constrained_better(const ObjectiveVector& obj_a, const FeasibilityReport& feas_a,
                          const ObjectiveVector& obj_b, const FeasibilityReport& feas_b) {
    if (feas_a.feasible && feas_b.feasible) {
        if (dominates(obj_a, obj_b)) return Better::A;
        if (dominates(obj_b, obj_a)) return Better::B;
        return Better::Neither;
    }
    if (feas_a.feasible) return Better::A;
    if (feas_b.feasible) return Better::B;
    if (feas_a.degree > feas_b.degree) return Better::A;
    if (feas_b.degree > feas_a.degree) return Better::B;
    return Better::Neither;
}

}  // namespace coalition
