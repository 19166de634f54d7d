#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coalition/analysis.hpp"
#include "coalition/model.hpp"
#include "coalition/pipeline.hpp"
#include "coalition/report.hpp"
#include "coalition/scenario_io.hpp"

namespace {

using namespace coalition;

void deliver(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        report::write_file(out_path, text);
}

Scenario scenario_from(const std::string& path, int n, std::uint64_t seed) {
    const bool has_path = !path.empty();
    if (has_path == (n > 0))
        throw std::invalid_argument("provide exactly one of --scenario and --n");
    return has_path ? load_scenario(path) : generate_scenario(seed, n, {});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coalition formation solver and benchmark"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "Generate a random scenario as JSON");
    int gen_n = 10;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("--n", gen_n, "Fleet size")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", gen_seed, "Generator seed");
    gen->add_option("--out", gen_out, "Output path (stdout when omitted)");

    auto* solve = app.add_subcommand("solve", "Run one allocation round");
    std::string sv_scenario;
    int sv_n = 0;
    std::uint64_t sv_seed = 0;
    std::string sv_algo = "qmopso";
    int sv_pop = 100;
    int sv_iters = 100;
    double sv_filter = 40.0;
    std::optional<double> sv_max_time, sv_max_cost;
    std::optional<int> sv_max_robots;
    std::vector<double> sv_weights, sv_feas_weights;
    bool sv_flip = false, sv_no_timing = false;
    std::string sv_out, sv_format = "json";
    solve->add_option("--scenario", sv_scenario, "Scenario JSON file");
    solve->add_option("--n", sv_n, "Generate a fleet of this size instead");
    solve->add_option("--seed", sv_seed, "Seed for generation and the solver");
    solve->add_option("--algorithm", sv_algo, "qmopso, nsga2, spea2 or brute");
    solve->add_option("--population", sv_pop, "Swarm or population size");
    solve->add_option("--iterations", sv_iters, "Iterations or generations");
    solve->add_option("--filter-threshold", sv_filter, "Battery level required to participate");
    solve->add_option("--max-time", sv_max_time, "Override the scenario time threshold");
    solve->add_option("--max-cost", sv_max_cost, "Override the scenario cost threshold");
    solve->add_option("--max-robots", sv_max_robots, "Override the scenario size threshold");
    solve->add_option("--weights", sv_weights, "Ranking weights: time,cost,size")
        ->delimiter(',')
        ->expected(3);
    solve
        ->add_option("--feasibility-weights", sv_feas_weights,
                     "Feasibility weights: requirements,constraints")
        ->delimiter(',')
        ->expected(2);
    solve->add_flag("--flip-sampling", sv_flip, "Invert the position sampling rule");
    solve->add_flag("--no-timing", sv_no_timing, "Omit timing fields from the output");
    solve->add_option("--out", sv_out, "Output path (stdout when omitted)");
    solve->add_option("--format", sv_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* bench = app.add_subcommand("bench", "Run the benchmark grid");
    std::vector<int> bn_sizes{10, 100};
    int bn_seeds = 10;
    std::vector<std::string> bn_algos{"qmopso", "nsga2", "spea2"};
    std::vector<int> bn_pops{100};
    int bn_iters = 100;
    std::uint64_t bn_base_seed = 1;
    bool bn_no_timing = false;
    std::string bn_out, bn_format = "csv";
    bench->add_option("--sizes", bn_sizes, "Fleet sizes")->delimiter(',');
    bench->add_option("--seeds", bn_seeds, "Scenarios per size");
    bench->add_option("--algorithms", bn_algos, "Algorithms to compare")->delimiter(',');
    bench->add_option("--populations", bn_pops, "Population sizes")->delimiter(',');
    bench->add_option("--iterations", bn_iters, "Iterations or generations");
    bench->add_option("--base-seed", bn_base_seed, "Base seed for the grid");
    bench->add_flag("--no-timing", bn_no_timing, "Omit processing-time rows");
    bench->add_option("--out", bn_out, "Output path (stdout when omitted)");
    bench->add_option("--format", bn_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* oracle = app.add_subcommand("oracle", "Exhaustive Pareto front for a small fleet");
    std::string or_scenario;
    int or_n = 0;
    std::uint64_t or_seed = 1;
    std::string or_out;
    oracle->add_option("--scenario", or_scenario, "Scenario JSON file");
    oracle->add_option("--n", or_n, "Generate a fleet of this size instead");
    oracle->add_option("--seed", or_seed, "Seed when generating");
    oracle->add_option("--out", or_out, "Output path (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            deliver(scenario_to_string(generate_scenario(gen_seed, gen_n, {})), gen_out);
            return 0;
        }
        if (solve->parsed()) {
            pipeline::RunConfig cfg;
            cfg.scenario_path = sv_scenario;
            cfg.n = sv_n;
            cfg.solver.algorithm = pipeline::parse_algorithm(sv_algo);
            cfg.solver.population = sv_pop;
            cfg.solver.iterations = sv_iters;
            cfg.solver.seed = sv_seed;
            cfg.solver.flip_sampling = sv_flip;
            if (!sv_weights.empty())
                cfg.solver.criteria_weights = {sv_weights[0], sv_weights[1], sv_weights[2]};
            if (!sv_feas_weights.empty())
                cfg.solver.feasibility_weights = {sv_feas_weights[0], sv_feas_weights[1]};
            cfg.filter_threshold = sv_filter;
            cfg.max_time = sv_max_time;
            cfg.max_cost = sv_max_cost;
            cfg.max_robots = sv_max_robots;
            const pipeline::RunResult res = pipeline::run_pipeline(cfg);
            deliver(sv_format == "json" ? report::run_result_json(res, !sv_no_timing)
                                        : report::run_result_csv(res, !sv_no_timing),
                    sv_out);
            return res.no_feasible ? 2 : 0;
        }
        if (bench->parsed()) {
            pipeline::BenchConfig cfg;
            cfg.sizes = bn_sizes;
            cfg.seeds = bn_seeds;
            cfg.algorithms.clear();
            for (const std::string& name : bn_algos)
                cfg.algorithms.push_back(pipeline::parse_algorithm(name));
            cfg.populations = bn_pops;
            cfg.iterations = bn_iters;
            cfg.base_seed = bn_base_seed;
            const pipeline::BenchReport rep = pipeline::run_benchmark(cfg);
            deliver(bn_format == "json" ? report::bench_json(rep, !bn_no_timing)
                                        : report::bench_csv(rep, !bn_no_timing),
                    bn_out);
            return 0;
        }
        if (oracle->parsed()) {
            const Scenario s = scenario_from(or_scenario, or_n, or_seed);
            deliver(report::front_json(analysis::brute_force_front(s)), or_out);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
