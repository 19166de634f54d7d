#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace coalition {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
    bool operator==(const Vec2&) const = default;
};

double distance(const Vec2& a, const Vec2& b);

// Quantities of each sensing (or actuating) capability kind a robot carries,
// indexed by kind. Entry k is how many units of kind k are on board.
using CapabilityVector = std::vector<double>;

enum class RobotState { Idle, Allocated, Busy };

const char* to_string(RobotState s);

struct Robot {
    int id = 0;
    CapabilityVector sensing;
    CapabilityVector actuating;
    Vec2 position;
    double speed = 1.0;        // distance units per time unit
    double deploy_cost = 0.0;
    double battery = 100.0;    // percent remaining
    RobotState state = RobotState::Idle;

    bool operator==(const Robot&) const = default;
};

// Legal lifecycle: Idle -> Allocated -> Busy -> Idle, plus the release edge
// Allocated -> Idle for robots that entered an optimization round but were not
// picked. Anything else throws.
void transition(Robot& robot, RobotState next);

enum class CapabilityCategory { Sensing, Actuating };

// Names one capability kind, e.g. the second sensing kind. Locational
// constraints are expressed over these.
struct CapabilityRef {
    CapabilityCategory category = CapabilityCategory::Sensing;
    int index = 0;

    bool operator==(const CapabilityRef&) const = default;
    bool operator<(const CapabilityRef& o) const {
        if (category != o.category) return category < o.category;
        return index < o.index;
    }
};

std::string to_string(const CapabilityRef& ref);  // "s1", "a3", ...
CapabilityRef parse_capability_ref(const std::string& text);

enum class ConstraintRelation { SameRobot, DifferentRobot };

// "the robot covering s1 must be the robot covering a1", etc.
struct LocationalConstraint {
    ConstraintRelation relation = ConstraintRelation::SameRobot;
    CapabilityRef left;
    CapabilityRef right;

    bool operator==(const LocationalConstraint&) const = default;
};

struct SubTask {
    CapabilityVector sensing_req;
    CapabilityVector actuating_req;
    std::vector<LocationalConstraint> constraints;

    bool operator==(const SubTask&) const = default;
};

struct Thresholds {
    double max_time = 0.0;
    double max_cost = 0.0;
    int max_robots = 0;

    bool operator==(const Thresholds&) const = default;
};

struct Task {
    std::vector<SubTask> subtasks;
    Thresholds thresholds;

    bool operator==(const Task&) const = default;

    // Element-wise sums over sub-tasks.
    CapabilityVector sensing_requirement() const;
    CapabilityVector actuating_requirement() const;
    std::vector<LocationalConstraint> all_constraints() const;
};

struct Scenario {
    std::uint64_t seed = 0;
    Vec2 target;
    std::vector<Robot> robots;
    Task task;

    bool operator==(const Scenario&) const = default;
    int sensing_kinds() const;
    int actuating_kinds() const;
};

// Throws std::invalid_argument on malformed input: ids not dense [0,n),
// ragged capability vectors, negative quantities, non-positive speed.
void validate_scenario(const Scenario& s);

// Candidate coalition as a membership bit per robot (index-aligned with
// Scenario::robots). Doubles as the particle position encoding.
struct Coalition {
    std::vector<std::uint8_t> bits;

    Coalition() = default;
    explicit Coalition(std::size_t n) : bits(n, 0) {}

    std::size_t size() const { return bits.size(); }
    bool contains(std::size_t i) const { return bits[i] != 0; }
    void set(std::size_t i, bool on = true) { bits[i] = on ? 1 : 0; }
    int member_count() const;
    bool empty_coalition() const { return member_count() == 0; }
    std::vector<int> member_ids() const;

    bool operator==(const Coalition&) const = default;
};

Coalition coalition_from_members(std::size_t n, const std::vector<int>& members);

// Element-wise capability totals over the coalition members.
void coalition_capabilities(const Coalition& c, const Scenario& s,
                            CapabilityVector& sensing_out, CapabilityVector& actuating_out);

// True iff the coalition's totals cover every component of both aggregate
// requirement vectors (zero entries are vacuously covered).
bool meets_capability_requirements(const Coalition& c, const Scenario& s);

// Battery gate: keeps robots with battery >= threshold, original order
// preserved. Robots exactly at the threshold pass.
std::vector<Robot> filter_robots(const std::vector<Robot>& robots, double threshold);
std::vector<int> filter_indices(const std::vector<Robot>& robots, double threshold);

struct GenerationRanges {
    int sensing_kinds = 3;
    int actuating_kinds = 3;
    int subtask_count = 3;
    std::pair<double, double> battery{0.0, 100.0};
    std::pair<double, double> speed{1.0, 10.0};
    std::pair<double, double> deploy_cost{1.0, 100.0};
    double area_size = 1000.0;        // robots and target live in [0, area]^2
    int capability_max = 3;           // per-kind quantity drawn from {0..max}
    // Aggregate per-kind requirement = fraction of the expected supply of the
    // battery-eligible sub-fleet, fraction drawn uniformly from this interval.
    // Ties scenario difficulty to fleet size so feasible coalitions exist at
    // every n, even after the battery filter shrinks the fleet; around 0.5 the
    // smallest feasible random-mix coalitions take roughly half the eligible
    // robots, which keeps the search away from degenerate tiny coalitions.
    std::pair<double, double> requirement_fraction{0.45, 0.55};
    // Expected share of robots that pass the default battery filter; scales
    // the supply estimate the requirements are drawn against.
    double eligible_fraction = 0.6;
    // Emit SameRobot constraints pairing s_i with a_i for i < min(r, d).
    bool paired_constraints = true;
};

// Deterministic in (seed, n, ranges). Throws std::invalid_argument for n < 1.
Scenario generate_scenario(std::uint64_t seed, int n, const GenerationRanges& ranges = {});

}  // namespace coalition
