#include "coalition/evaluator.hpp"

#include <cmath>
#include <limits>

namespace coalition {

Evaluator::Evaluator(const Scenario& s, FeasibilityWeights w)
    : s_(&s), w_(w), task_csp_(s.task, s) {
    w_.validate();
    r_ = static_cast<std::size_t>(s.sensing_kinds());
    d_ = static_cast<std::size_t>(s.actuating_kinds());
    const std::size_t n = s.robots.size();
    travel_.resize(n);
    cost_.resize(n);
    sensing_flat_.resize(n * r_);
    actuating_flat_.resize(n * d_);
    for (std::size_t i = 0; i < n; ++i) {
        const Robot& rb = s.robots[i];
        travel_[i] = distance(rb.position, s.target) / rb.speed;
        cost_[i] = rb.deploy_cost;
        for (std::size_t k = 0; k < r_; ++k) sensing_flat_[i * r_ + k] = rb.sensing[k];
        for (std::size_t k = 0; k < d_; ++k) actuating_flat_[i * d_ + k] = rb.actuating[k];
    }
    need_s_ = s.task.sensing_requirement();
    need_s_.resize(r_, 0.0);
    need_a_ = s.task.actuating_requirement();
    need_a_.resize(d_, 0.0);
    for (double q : need_s_)
        if (q > 0) ++total_requirements_;
    for (double q : need_a_)
        if (q > 0) ++total_requirements_;
}

void Evaluator::begin(Sample& out) const {
    out.sensing.assign(r_, 0.0);
    out.actuating.assign(d_, 0.0);
    out.objectives = {-std::numeric_limits<double>::infinity(), 0.0, 0.0};
}

void Evaluator::add_member(std::size_t robot, Sample& out) const {
    out.objectives.time = std::max(out.objectives.time, travel_[robot]);
    out.objectives.cost += cost_[robot];
    out.objectives.size += 1.0;
    const double* srow = &sensing_flat_[robot * r_];
    for (std::size_t k = 0; k < r_; ++k) out.sensing[k] += srow[k];
    const double* arow = &actuating_flat_[robot * d_];
    for (std::size_t k = 0; k < d_; ++k) out.actuating[k] += arow[k];
}

void Evaluator::seal(Sample& out) const {
    if (out.objectives.size == 0.0) {
        out.objectives.time = std::numeric_limits<double>::infinity();
        out.objectives.cost = 0.0;
    }
}

void Evaluator::measure(const Coalition& c, Sample& out) const {
    begin(out);
    for (std::size_t i = 0; i < c.bits.size(); ++i)
        if (c.bits[i]) add_member(i, out);
    seal(out);
}

FeasibilityReport Evaluator::feasibility(const Coalition& c, const Sample& sample) const {
    int u = 0;
    for (std::size_t k = 0; k < r_; ++k)
        if (need_s_[k] > 0 && sample.sensing[k] >= need_s_[k]) ++u;
    for (std::size_t k = 0; k < d_; ++k)
        if (need_a_[k] > 0 && sample.actuating[k] >= need_a_[k]) ++u;
    const auto [m, M] = task_csp_.max_satisfied(c);
    const int U = total_requirements_;

    FeasibilityReport rep;
    rep.sat_treq = U == 0 ? 1.0 : static_cast<double>(u) / U;
    rep.sat_c = M == 0 ? 1.0 : static_cast<double>(m) / M;
    rep.feasible = u == U && m == M;
    rep.degree = rep.feasible ? 1.0 : rep.sat_treq * w_.w_treq + rep.sat_c * w_.w_c;
    return rep;
}

Evaluated Evaluator::evaluate(const Coalition& c) const {
    Sample sample;
    measure(c, sample);
    Evaluated e;
    e.position = c;
    e.objectives = sample.objectives;
    e.feasibility = feasibility(c, sample);
    return e;
}

std::vector<Evaluated> nondominated_subset(const std::vector<Evaluated>& evaluated) {
    std::vector<Evaluated> out;
    for (std::size_t i = 0; i < evaluated.size(); ++i) {
        if (evaluated[i].position.empty_coalition()) continue;
        bool beaten = false;
        for (std::size_t j = 0; j < evaluated.size(); ++j) {
            if (j == i) continue;
            if (constrained_better(evaluated[j].objectives, evaluated[j].feasibility,
                                   evaluated[i].objectives,
                                   evaluated[i].feasibility) == Better::A) {
                beaten = true;
                break;
            }
        }
        if (!beaten) out.push_back(evaluated[i]);
    }
    return out;
}

}  // namespace coalition
