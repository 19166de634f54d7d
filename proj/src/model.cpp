#include "coalition/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "coalition/rng.hpp"

namespace coalition {

double distance(const Vec2& a, const Vec2& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

const char* to_string(RobotState s) {
    switch (s) {
        case RobotState::Idle: return "idle";
        case RobotState::Allocated: return "allocated";
        case RobotState::Busy: return "busy";
    }
    return "?";
}

void transition(Robot& robot, RobotState next) {
    const RobotState cur = robot.state;
    const bool ok = (cur == RobotState::Idle && next == RobotState::Allocated) ||
                    (cur == RobotState::Allocated && next == RobotState::Busy) ||
                    (cur == RobotState::Allocated && next == RobotState::Idle) ||
                    (cur == RobotState::Busy && next == RobotState::Idle);
    if (!ok)
        throw std::invalid_argument(std::string("illegal robot state transition ") +
                                    to_string(cur) + " -> " + to_string(next));
    robot.state = next;
}

std::string to_string(const CapabilityRef& ref) {
    return (ref.category == CapabilityCategory::Sensing ? "s" : "a") +
           std::to_string(ref.index + 1);
}

CapabilityRef parse_capability_ref(const std::string& text) {
    if (text.size() < 2 || (text[0] != 's' && text[0] != 'a'))
        throw std::invalid_argument("bad capability ref: " + text);
    CapabilityRef ref;
    ref.category = text[0] == 's' ? CapabilityCategory::Sensing : CapabilityCategory::Actuating;
    ref.index = std::stoi(text.substr(1)) - 1;
    if (ref.index < 0) throw std::invalid_argument("bad capability ref: " + text);
    return ref;
}

static void add_into(CapabilityVector& acc, const CapabilityVector& v) {
    if (acc.size() < v.size()) acc.resize(v.size(), 0.0);
    for (std::size_t i = 0; i < v.size(); ++i) acc[i] += v[i];
}

CapabilityVector Task::sensing_requirement() const {
    CapabilityVector acc;
    for (const auto& st : subtasks) add_into(acc, st.sensing_req);
    return acc;
}

CapabilityVector Task::actuating_requirement() const {
    CapabilityVector acc;
    for (const auto& st : subtasks) add_into(acc, st.actuating_req);
    return acc;
}

std::vector<LocationalConstraint> Task::all_constraints() const {
    std::vector<LocationalConstraint> out;
    for (const auto& st : subtasks)
        out.insert(out.end(), st.constraints.begin(), st.constraints.end());
    return out;
}

int Scenario::sensing_kinds() const {
    return robots.empty() ? static_cast<int>(task.sensing_requirement().size())
                          : static_cast<int>(robots.front().sensing.size());
}

int Scenario::actuating_kinds() const {
    return robots.empty() ? static_cast<int>(task.actuating_requirement().size())
                          : static_cast<int>(robots.front().actuating.size());
}

void validate_scenario(const Scenario& s) {
    const std::size_t r = s.robots.empty() ? 0 : s.robots.front().sensing.size();
    const std::size_t d = s.robots.empty() ? 0 : s.robots.front().actuating.size();
    for (std::size_t i = 0; i < s.robots.size(); ++i) {
        const Robot& rb = s.robots[i];
        if (rb.id != static_cast<int>(i))
            throw std::invalid_argument("robot ids must be dense 0..n-1");
        if (rb.sensing.size() != r || rb.actuating.size() != d)
            throw std::invalid_argument("ragged capability vectors");
        for (double q : rb.sensing)
            if (q < 0) throw std::invalid_argument("negative sensing quantity");
        for (double q : rb.actuating)
            if (q < 0) throw std::invalid_argument("negative actuating quantity");
        if (!(rb.speed > 0)) throw std::invalid_argument("speed must be positive");
        if (rb.deploy_cost < 0) throw std::invalid_argument("negative deploy cost");
    }
    for (const auto& st : s.task.subtasks) {
        if (st.sensing_req.size() > r || st.actuating_req.size() > d)
            throw std::invalid_argument("requirement vector wider than robot capabilities");
        for (const auto& c : st.constraints) {
            auto check = [&](const CapabilityRef& ref) {
                const int lim = ref.category == CapabilityCategory::Sensing
                                    ? static_cast<int>(r)
                                    : static_cast<int>(d);
                if (ref.index < 0 || ref.index >= lim)
                    throw std::invalid_argument("constraint references unknown capability kind");
            };
            check(c.left);
            check(c.right);
            if (c.left == c.right)
                throw std::invalid_argument("constraint endpoints must differ");
        }
    }
    if (!(s.task.thresholds.max_time > 0) || !(s.task.thresholds.max_cost > 0) ||
        s.task.thresholds.max_robots <= 0)
        throw std::invalid_argument("thresholds must be positive");
}

int Coalition::member_count() const {
    int c = 0;
    for (std::uint8_t b : bits) c += b;
    return c;
}

std::vector<int> Coalition::member_ids() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) out.push_back(static_cast<int>(i));
    return out;
}

Coalition coalition_from_members(std::size_t n, const std::vector<int>& members) {
    Coalition c(n);
    for (int m : members) c.set(static_cast<std::size_t>(m));
    return c;
}

void coalition_capabilities(const Coalition& c, const Scenario& s,
                            CapabilityVector& sensing_out, CapabilityVector& actuating_out) {
    sensing_out.assign(static_cast<std::size_t>(s.sensing_kinds()), 0.0);
    actuating_out.assign(static_cast<std::size_t>(s.actuating_kinds()), 0.0);
    for (std::size_t i = 0; i < c.bits.size(); ++i) {
        if (!c.bits[i]) continue;
        const Robot& rb = s.robots[i];
        for (std::size_t k = 0; k < sensing_out.size(); ++k) sensing_out[k] += rb.sensing[k];
        for (std::size_t k = 0; k < actuating_out.size(); ++k) actuating_out[k] += rb.actuating[k];
    }
}

bool meets_capability_requirements(const Coalition& c, const Scenario& s) {
    CapabilityVector have_s, have_a;
    coalition_capabilities(c, s, have_s, have_a);
    const CapabilityVector need_s = s.task.sensing_requirement();
    const CapabilityVector need_a = s.task.actuating_requirement();
    for (std::size_t k = 0; k < need_s.size(); ++k)
        if (have_s.size() <= k ? need_s[k] > 0 : have_s[k] < need_s[k]) return false;
    for (std::size_t k = 0; k < need_a.size(); ++k)
        if (have_a.size() <= k ? need_a[k] > 0 : have_a[k] < need_a[k]) return false;
    return true;
}

std::vector<Robot> filter_robots(const std::vector<Robot>& robots, double threshold) {
    std::vector<Robot> out;
    for (const Robot& r : robots)
        if (r.battery >= threshold) out.push_back(r);
    return out;
}

std::vector<int> filter_indices(const std::vector<Robot>& robots, double threshold) {
    std::vector<int> out;
    for (const Robot& r : robots)
        if (r.battery >= threshold) out.push_back(r.id);
    return out;
}

Scenario generate_scenario(std::uint64_t seed, int n, const GenerationRanges& g) {
    if (n < 1) throw std::invalid_argument("scenario needs at least one robot");
    std::mt19937_64 rng(seed);
    Scenario s;
    s.seed = seed;
    s.target = {uniform_range(rng, 0.0, g.area_size), uniform_range(rng, 0.0, g.area_size)};

    s.robots.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Robot& r = s.robots[static_cast<std::size_t>(i)];
        r.id = i;
        r.position = {uniform_range(rng, 0.0, g.area_size), uniform_range(rng, 0.0, g.area_size)};
        r.speed = uniform_range(rng, g.speed.first, g.speed.second);
        r.deploy_cost = uniform_range(rng, g.deploy_cost.first, g.deploy_cost.second);
        r.battery = uniform_range(rng, g.battery.first, g.battery.second);
        r.sensing.resize(static_cast<std::size_t>(g.sensing_kinds));
        for (auto& q : r.sensing) q = uniform_int(rng, 0, g.capability_max);
        r.actuating.resize(static_cast<std::size_t>(g.actuating_kinds));
        for (auto& q : r.actuating) q = uniform_int(rng, 0, g.capability_max);
    }

    // Per-kind aggregate requirement as a fraction of expected fleet supply,
    // split over sub-tasks by plain rounding (largest share to the first
    // sub-tasks) so no extra draws are spent.
    const double mean_supply = g.capability_max / 2.0 * n * g.eligible_fraction;
    const int p = g.subtask_count;
    s.task.subtasks.resize(static_cast<std::size_t>(p));
    for (auto& st : s.task.subtasks) {
        st.sensing_req.assign(static_cast<std::size_t>(g.sensing_kinds), 0.0);
        st.actuating_req.assign(static_cast<std::size_t>(g.actuating_kinds), 0.0);
    }
    auto split = [&](int kind, bool sensing) {
        const double f =
            uniform_range(rng, g.requirement_fraction.first, g.requirement_fraction.second);
        const int total = static_cast<int>(std::lround(f * mean_supply));
        const int base = total / p, extra = total % p;
        for (int j = 0; j < p; ++j) {
            const double share = base + (j < extra ? 1 : 0);
            auto& st = s.task.subtasks[static_cast<std::size_t>(j)];
            (sensing ? st.sensing_req : st.actuating_req)[static_cast<std::size_t>(kind)] = share;
        }
    };
    for (int k = 0; k < g.sensing_kinds; ++k) split(k, true);
    for (int k = 0; k < g.actuating_kinds; ++k) split(k, false);

    if (g.paired_constraints) {
        const int pairs = std::min(g.sensing_kinds, g.actuating_kinds);
        for (int i = 0; i < pairs; ++i) {
            LocationalConstraint c;
            c.relation = ConstraintRelation::SameRobot;
            c.left = {CapabilityCategory::Sensing, i};
            c.right = {CapabilityCategory::Actuating, i};
            s.task.subtasks[static_cast<std::size_t>(i % p)].constraints.push_back(c);
        }
    }

    const double diag = g.area_size * std::numbers::sqrt2;
    s.task.thresholds.max_time = diag / g.speed.first;
    s.task.thresholds.max_cost = g.deploy_cost.second * n;
    s.task.thresholds.max_robots = n;
    return s;
}

}  // namespace coalition
