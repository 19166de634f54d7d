#include "coalition/pipeline.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "coalition/baselines.hpp"
#include "coalition/qmopso.hpp"
#include "coalition/rng.hpp"
#include "coalition/scenario_io.hpp"

namespace coalition::pipeline {

std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::Qmopso: return "qmopso";
        case Algorithm::Nsga2: return "nsga2";
        case Algorithm::Spea2: return "spea2";
        case Algorithm::Brute: return "brute";
    }
    throw std::invalid_argument("unknown algorithm");
}

Algorithm parse_algorithm(const std::string& name) {
    if (name == "qmopso") return Algorithm::Qmopso;
    if (name == "nsga2") return Algorithm::Nsga2;
    if (name == "spea2") return Algorithm::Spea2;
    if (name == "brute") return Algorithm::Brute;
    throw std::invalid_argument("unknown algorithm: " + name);
}

void SolveParams::validate() const {
    if (population < 1) throw std::invalid_argument("population must be positive");
    if (iterations < 0) throw std::invalid_argument("iterations must be non-negative");
    feasibility_weights.validate();
    criteria_weights.validate();
}

void RunConfig::validate() const {
    solver.validate();
    if (max_time && *max_time <= 0) throw std::invalid_argument("max_time must be positive");
    if (max_cost && *max_cost <= 0) throw std::invalid_argument("max_cost must be positive");
    if (max_robots && *max_robots <= 0) throw std::invalid_argument("max_robots must be positive");
}

void BenchConfig::validate() const {
    if (sizes.empty()) throw std::invalid_argument("no fleet sizes given");
    for (int n : sizes)
        if (n < 1) throw std::invalid_argument("fleet sizes must be positive");
    if (seeds < 1) throw std::invalid_argument("need at least one seed");
    if (algorithms.empty()) throw std::invalid_argument("no algorithms given");
    if (populations.empty()) throw std::invalid_argument("no population sizes given");
    for (int p : populations)
        if (p < 2) throw std::invalid_argument("population sizes must be at least 2");
    if (iterations < 0) throw std::invalid_argument("iterations must be non-negative");
    feasibility_weights.validate();
    criteria_weights.validate();
    const bool has_brute =
        std::find(algorithms.begin(), algorithms.end(), Algorithm::Brute) != algorithms.end();
    if (has_brute)
        for (int n : sizes)
            if (n > 22)
                throw std::invalid_argument("brute force is limited to fleets of at most 22");
}

SolveOutput run_solver(const Scenario& scenario, const SolveParams& params) {
    params.validate();
    switch (params.algorithm) {
        case Algorithm::Qmopso: {
            qmopso::QmopsoParams qp;
            qp.population = params.population;
            qp.iterations = params.iterations;
            qp.seed = params.seed;
            qp.flip_sampling = params.flip_sampling;
            qp.feasibility_weights = params.feasibility_weights;
            qp.criteria_weights = params.criteria_weights;
            qmopso::RunOutput out = qmopso::run(scenario, qp);
            return {std::move(out.repository.entries), out.timing};
        }
        case Algorithm::Nsga2:
        case Algorithm::Spea2: {
            baselines::EvoParams ep;
            ep.population = params.population;
            ep.generations = params.iterations;
            ep.seed = params.seed;
            ep.feasibility_weights = params.feasibility_weights;
            baselines::EvoOutput out = params.algorithm == Algorithm::Nsga2
                                           ? baselines::run_nsga2(scenario, ep)
                                           : baselines::run_spea2(scenario, ep);
            return {std::move(out.front), out.timing};
        }
        case Algorithm::Brute: {
            const Stopwatch sw;
            SolveOutput out;
            out.entries = analysis::brute_force_entries(scenario, params.feasibility_weights);
            out.timing.total_seconds = sw.seconds();
            out.timing.rounds = 1;
            return out;
        }
    }
    throw std::invalid_argument("unknown algorithm");
}

Session::Session(Scenario scenario) : scenario_(std::move(scenario)) {
    validate_scenario(scenario_);
}

RunResult Session::run(const RunConfig& config) {
    config.validate();
    const Stopwatch total;

    RunResult res;
    res.algorithm = config.solver.algorithm;
    res.seed = config.solver.seed;
    res.fleet_size = scenario_.robots.size();
    res.filter_threshold = config.filter_threshold;
    res.thresholds = scenario_.task.thresholds;
    if (config.max_time) res.thresholds.max_time = *config.max_time;
    if (config.max_cost) res.thresholds.max_cost = *config.max_cost;
    if (config.max_robots) res.thresholds.max_robots = *config.max_robots;

    const Stopwatch filter_sw;
    std::vector<int> active_ids;
    for (const Robot& r : scenario_.robots)
        if (r.state == RobotState::Idle && r.battery >= config.filter_threshold)
            active_ids.push_back(r.id);
    res.timing.filtering_seconds = filter_sw.seconds();
    res.active_size = active_ids.size();

    if (active_ids.empty()) {
        res.no_feasible = true;
        res.timing.total_seconds = total.seconds();
        return res;
    }

    for (int id : active_ids)
        transition(scenario_.robots[static_cast<std::size_t>(id)], RobotState::Allocated);

    // The optimizer sees only the allocated robots, re-densified to ids 0..k-1.
    Scenario sub;
    sub.seed = scenario_.seed;
    sub.target = scenario_.target;
    sub.task = scenario_.task;
    sub.robots.reserve(active_ids.size());
    for (std::size_t k = 0; k < active_ids.size(); ++k) {
        Robot r = scenario_.robots[static_cast<std::size_t>(active_ids[k])];
        r.id = static_cast<int>(k);
        sub.robots.push_back(std::move(r));
    }

    SolveParams sp = config.solver;
    sp.seed = derive_seed(config.solver.seed, 1);
    const SolveOutput sol = run_solver(sub, sp);
    res.timing.repository_update_seconds = sol.timing.repository_update_seconds;
    res.timing.feasibility_check_seconds = sol.timing.feasibility_check_seconds;
    res.timing.rounds = sol.timing.rounds;

    res.solutions.reserve(sol.entries.size());
    for (const Evaluated& e : sol.entries) {
        SolutionRecord rec;
        for (int sub_id : e.position.member_ids())
            rec.members.push_back(active_ids[static_cast<std::size_t>(sub_id)]);
        rec.objectives = e.objectives;
        rec.feasibility = e.feasibility;
        // Exceeding a threshold strictly disqualifies; sitting exactly on one
        // does not.
        rec.within_thresholds = e.objectives.time <= res.thresholds.max_time &&
                                e.objectives.cost <= res.thresholds.max_cost &&
                                e.objectives.size <= static_cast<double>(res.thresholds.max_robots);
        rec.eligible = rec.within_thresholds && e.feasibility.feasible;
        res.solutions.push_back(std::move(rec));
    }

    std::vector<std::size_t> eligible;
    for (std::size_t i = 0; i < res.solutions.size(); ++i)
        if (res.solutions[i].eligible) eligible.push_back(i);

    if (eligible.empty()) {
        res.no_feasible = true;
        for (int id : active_ids)
            transition(scenario_.robots[static_cast<std::size_t>(id)], RobotState::Idle);
        res.timing.total_seconds = total.seconds();
        return res;
    }

    std::vector<ObjectiveVector> objs;
    objs.reserve(eligible.size());
    for (std::size_t i : eligible) objs.push_back(res.solutions[i].objectives);
    const analysis::PrometheeResult ranked = analysis::promethee_rank(objs, config.solver.criteria_weights);
    for (std::size_t j = 0; j < eligible.size(); ++j)
        res.solutions[eligible[j]].net_flow = ranked.net_flow[j];
    res.selected = static_cast<int>(eligible[ranked.order.front()]);

    for (int id : res.solutions[static_cast<std::size_t>(res.selected)].members) {
        transition(scenario_.robots[static_cast<std::size_t>(id)], RobotState::Busy);
        res.busy_ids.push_back(id);
    }
    for (int id : active_ids) {
        Robot& r = scenario_.robots[static_cast<std::size_t>(id)];
        if (r.state == RobotState::Allocated) transition(r, RobotState::Idle);
    }

    res.timing.total_seconds = total.seconds();
    return res;
}

void Session::release(const std::vector<int>& ids) {
    for (int id : ids) {
        if (id < 0 || static_cast<std::size_t>(id) >= scenario_.robots.size())
            throw std::out_of_range("unknown robot id");
        transition(scenario_.robots[static_cast<std::size_t>(id)], RobotState::Idle);
    }
}

void Session::release_all() {
    for (Robot& r : scenario_.robots)
        if (r.state == RobotState::Busy) transition(r, RobotState::Idle);
}

RunResult run_pipeline(const RunConfig& config) {
    config.validate();
    const bool has_path = !config.scenario_path.empty();
    const bool has_n = config.n > 0;
    if (has_path == has_n)
        throw std::invalid_argument("provide exactly one of scenario file or fleet size");
    Scenario s = has_path ? load_scenario(config.scenario_path)
                          : generate_scenario(config.solver.seed, config.n, config.ranges);
    Session session(std::move(s));
    return session.run(config);
}

namespace {

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t k = v.size();
    return k % 2 ? v[k / 2] : 0.5 * (v[k / 2 - 1] + v[k / 2]);
}

}  // namespace

BenchReport run_benchmark(const BenchConfig& config) {
    config.validate();
    BenchReport rep;
    // (n, population, algorithm, metric) -> observed values, for median rows.
    std::map<std::tuple<int, int, std::string, std::string>, std::vector<double>> series;

    auto emit = [&](Algorithm a, int n, int pop, int seed_index, const std::string& metric,
                    double value) {
        rep.rows.push_back({a, n, pop, seed_index, metric, value});
        series[{n, pop, to_string(a), metric}].push_back(value);
    };

    for (int n : config.sizes) {
        for (int i = 0; i < config.seeds; ++i) {
            const std::uint64_t scen_seed =
                derive_seed(derive_seed(config.base_seed, static_cast<std::uint64_t>(n)),
                            static_cast<std::uint64_t>(i));
            const Scenario scenario = generate_scenario(scen_seed, n, config.ranges);
            std::optional<analysis::Front> exact;
            if (n <= 22) exact = analysis::brute_force_front(scenario, config.feasibility_weights);

            for (int pop : config.populations) {
                std::vector<analysis::Front> fronts(config.algorithms.size());
                std::vector<TimingBreakdown> timings(config.algorithms.size());
                for (std::size_t ai = 0; ai < config.algorithms.size(); ++ai) {
                    SolveParams sp;
                    sp.algorithm = config.algorithms[ai];
                    sp.population = pop;
                    sp.iterations = config.iterations;
                    sp.seed = derive_seed(scen_seed, 1000 + static_cast<std::uint64_t>(pop));
                    sp.feasibility_weights = config.feasibility_weights;
                    sp.criteria_weights = config.criteria_weights;
                    SolveOutput out = run_solver(scenario, sp);
                    fronts[ai] = analysis::make_front(out.entries);
                    timings[ai] = out.timing;
                }
                const analysis::Front reference = exact ? *exact : analysis::reference_front(fronts);

                for (std::size_t ai = 0; ai < config.algorithms.size(); ++ai) {
                    const Algorithm a = config.algorithms[ai];
                    emit(a, n, pop, i, "processing_time", timings[ai].total_seconds);
                    emit(a, n, pop, i, "front_size",
                         static_cast<double>(fronts[ai].size()));
                    if (!fronts[ai].empty() && !reference.empty())
                        emit(a, n, pop, i, "error_ratio", analysis::error_ratio(fronts[ai], reference));
                    if (fronts[ai].size() >= 2) emit(a, n, pop, i, "spacing", analysis::spacing(fronts[ai]));
                    for (std::size_t bi = 0; bi < config.algorithms.size(); ++bi) {
                        if (bi == ai) continue;
                        if (fronts[ai].empty() || fronts[bi].empty()) continue;
                        emit(a, n, pop, i, "coverage_over_" + to_string(config.algorithms[bi]),
                             analysis::set_coverage(fronts[ai], fronts[bi]));
                    }
                }
            }
        }
    }

    for (const auto& [key, values] : series) {
        const auto& [n, pop, algo_name, metric] = key;
        rep.rows.push_back({parse_algorithm(algo_name), n, pop, -1, metric, median_of(values)});
    }

    std::sort(rep.rows.begin(), rep.rows.end(), [](const BenchRow& a, const BenchRow& b) {
        const auto key = [](const BenchRow& r) {
            return std::make_tuple(r.n, r.population, to_string(r.algorithm), r.metric,
                                   r.seed_index < 0 ? std::numeric_limits<int>::max()
                                                    : r.seed_index);
        };
        return key(a) < key(b);
    });
    return rep;
}

}  // namespace coalition::pipeline
