#include "coalition/scenario_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace coalition {

namespace {

using nlohmann::ordered_json;

std::string relation_name(ConstraintRelation r) {
    return r == ConstraintRelation::SameRobot ? "same" : "diff";
}

ConstraintRelation parse_relation(const std::string& s) {
    if (s == "same") return ConstraintRelation::SameRobot;
    if (s == "diff") return ConstraintRelation::DifferentRobot;
    throw std::runtime_error("unknown constraint relation: " + s);
}

std::string state_name(RobotState s) {
    switch (s) {
        case RobotState::Idle: return "idle";
        case RobotState::Allocated: return "allocated";
        case RobotState::Busy: return "busy";
    }
    throw std::runtime_error("unknown robot state");
}

RobotState parse_state(const std::string& s) {
    if (s == "idle") return RobotState::Idle;
    if (s == "allocated") return RobotState::Allocated;
    if (s == "busy") return RobotState::Busy;
    throw std::runtime_error("unknown robot state: " + s);
}

ordered_json constraint_to_json(const LocationalConstraint& c) {
    return ordered_json{{"relation", relation_name(c.relation)},
                        {"left", to_string(c.left)},
                        {"right", to_string(c.right)}};
}

LocationalConstraint constraint_from_json(const ordered_json& j) {
    return {parse_relation(j.at("relation").get<std::string>()),
            parse_capability_ref(j.at("left").get<std::string>()),
            parse_capability_ref(j.at("right").get<std::string>())};
}

}  // namespace

std::string scenario_to_string(const Scenario& scenario) {
    ordered_json j;
    j["seed"] = scenario.seed;
    j["target"] = {scenario.target.x, scenario.target.y};
    ordered_json robots = ordered_json::array();
    for (const Robot& r : scenario.robots) {
        robots.push_back(ordered_json{{"id", r.id},
                                      {"position", {r.position.x, r.position.y}},
                                      {"speed", r.speed},
                                      {"deploy_cost", r.deploy_cost},
                                      {"battery", r.battery},
                                      {"state", state_name(r.state)},
                                      {"sensing", r.sensing},
                                      {"actuating", r.actuating}});
    }
    j["robots"] = std::move(robots);
    ordered_json subtasks = ordered_json::array();
    for (const SubTask& st : scenario.task.subtasks) {
        ordered_json constraints = ordered_json::array();
        for (const LocationalConstraint& c : st.constraints)
            constraints.push_back(constraint_to_json(c));
        subtasks.push_back(ordered_json{{"sensing", st.sensing_req},
                                        {"actuating", st.actuating_req},
                                        {"constraints", std::move(constraints)}});
    }
    j["task"] = ordered_json{
        {"subtasks", std::move(subtasks)},
        {"thresholds", ordered_json{{"max_time", scenario.task.thresholds.max_time},
                                    {"max_cost", scenario.task.thresholds.max_cost},
                                    {"max_robots", scenario.task.thresholds.max_robots}}}};
    return j.dump(2) + "\n";
}

Scenario scenario_from_string(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    Scenario s;
    s.seed = j.at("seed").get<std::uint64_t>();
    s.target = {j.at("target").at(0).get<double>(), j.at("target").at(1).get<double>()};
    for (const ordered_json& jr : j.at("robots")) {
        Robot r;
        r.id = jr.at("id").get<int>();
        r.position = {jr.at("position").at(0).get<double>(),
                      jr.at("position").at(1).get<double>()};
        r.speed = jr.at("speed").get<double>();
        r.deploy_cost = jr.at("deploy_cost").get<double>();
        r.battery = jr.at("battery").get<double>();
        r.state = parse_state(jr.at("state").get<std::string>());
        r.sensing = jr.at("sensing").get<std::vector<double>>();
        r.actuating = jr.at("actuating").get<std::vector<double>>();
        s.robots.push_back(std::move(r));
    }
    const ordered_json& jt = j.at("task");
    for (const ordered_json& jst : jt.at("subtasks")) {
        SubTask st;
        st.sensing_req = jst.at("sensing").get<std::vector<double>>();
        st.actuating_req = jst.at("actuating").get<std::vector<double>>();
        for (const ordered_json& jc : jst.at("constraints"))
            st.constraints.push_back(constraint_from_json(jc));
        s.task.subtasks.push_back(std::move(st));
    }
    const ordered_json& jth = jt.at("thresholds");
    s.task.thresholds = {jth.at("max_time").get<double>(), jth.at("max_cost").get<double>(),
                         jth.at("max_robots").get<int>()};
    validate_scenario(s);
    return s;
}

void save_scenario(const Scenario& scenario, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << scenario_to_string(scenario);
    if (!out) throw std::runtime_error("write failed: " + path);
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return scenario_from_string(text);
}

}  // namespace coalition
