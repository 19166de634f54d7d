#include "coalition/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace coalition::report {

namespace {

using nlohmann::ordered_json;
using pipeline::BenchReport;
using pipeline::BenchRow;
using pipeline::RunResult;
using pipeline::SolutionRecord;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ordered_json timing_json(const TimingBreakdown& t) {
    return ordered_json{{"total_seconds", t.total_seconds},
                        {"filtering_seconds", t.filtering_seconds},
                        {"repository_update_seconds", t.repository_update_seconds},
                        {"feasibility_check_seconds", t.feasibility_check_seconds},
                        {"rounds", t.rounds}};
}

}  // namespace

std::string run_result_json(const RunResult& result, bool include_timing) {
    ordered_json j;
    j["schema"] = "run-result/1";
    j["algorithm"] = pipeline::to_string(result.algorithm);
    j["seed"] = result.seed;
    j["fleet_size"] = result.fleet_size;
    j["active_size"] = result.active_size;
    j["filter_threshold"] = result.filter_threshold;
    j["thresholds"] = ordered_json{{"max_time", result.thresholds.max_time},
                                   {"max_cost", result.thresholds.max_cost},
                                   {"max_robots", result.thresholds.max_robots}};
    j["no_feasible"] = result.no_feasible;
    if (result.selected >= 0)
        j["selected"] = result.selected;
    else
        j["selected"] = nullptr;
    j["busy_ids"] = result.busy_ids;
    ordered_json sols = ordered_json::array();
    for (const SolutionRecord& s : result.solutions) {
        ordered_json js{{"members", s.members},
                        {"time", s.objectives.time},
                        {"cost", s.objectives.cost},
                        {"size", s.objectives.size},
                        {"sat_treq", s.feasibility.sat_treq},
                        {"sat_c", s.feasibility.sat_c},
                        {"degree", s.feasibility.degree},
                        {"feasible", s.feasibility.feasible},
                        {"within_thresholds", s.within_thresholds},
                        {"eligible", s.eligible}};
        if (s.net_flow)
            js["net_flow"] = *s.net_flow;
        else
            js["net_flow"] = nullptr;
        sols.push_back(std::move(js));
    }
    j["solutions"] = std::move(sols);
    if (include_timing) j["timing"] = timing_json(result.timing);
    return j.dump(2) + "\n";
}

std::string run_result_csv(const RunResult& result, bool include_timing) {
    std::string out = "# schema: run-result/1\n";
    out += "# algorithm=" + pipeline::to_string(result.algorithm) +
           " seed=" + std::to_string(result.seed) +
           " fleet=" + std::to_string(result.fleet_size) +
           " active=" + std::to_string(result.active_size) +
           " no_feasible=" + (result.no_feasible ? std::string("1") : std::string("0")) +
           " selected=" + std::to_string(result.selected) + "\n";
    out += "index,selected,eligible,within_thresholds,feasible,degree,time,cost,size,net_flow,members\n";
    for (std::size_t i = 0; i < result.solutions.size(); ++i) {
        const SolutionRecord& s = result.solutions[i];
        out += std::to_string(i);
        out += static_cast<int>(i) == result.selected ? ",1" : ",0";
        out += s.eligible ? ",1" : ",0";
        out += s.within_thresholds ? ",1" : ",0";
        out += s.feasibility.feasible ? ",1" : ",0";
        out += "," + num(s.feasibility.degree);
        out += "," + num(s.objectives.time);
        out += "," + num(s.objectives.cost);
        out += "," + num(s.objectives.size);
        out += ",";
        if (s.net_flow) out += num(*s.net_flow);
        out += ",";
        for (std::size_t k = 0; k < s.members.size(); ++k) {
            if (k) out += ' ';
            out += std::to_string(s.members[k]);
        }
        out += "\n";
    }
    if (include_timing) {
        const TimingBreakdown& t = result.timing;
        out += "# timing total_seconds=" + num(t.total_seconds) +
               " filtering_seconds=" + num(t.filtering_seconds) +
               " repository_update_seconds=" + num(t.repository_update_seconds) +
               " feasibility_check_seconds=" + num(t.feasibility_check_seconds) +
               " rounds=" + std::to_string(t.rounds) + "\n";
    }
    return out;
}

std::string bench_json(const BenchReport& report, bool include_timing) {
    ordered_json rows = ordered_json::array();
    for (const BenchRow& r : report.rows) {
        if (!include_timing && r.metric == "processing_time") continue;
        ordered_json jr;
        jr["algorithm"] = pipeline::to_string(r.algorithm);
        jr["n"] = r.n;
        jr["population"] = r.population;
        if (r.seed_index < 0)
            jr["seed"] = "median";
        else
            jr["seed"] = r.seed_index;
        jr["metric"] = r.metric;
        jr["value"] = r.value;
        rows.push_back(std::move(jr));
    }
    ordered_json j;
    j["schema"] = "bench/1";
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

std::string bench_csv(const BenchReport& report, bool include_timing) {
    std::string out = "# schema: bench/1\n";
    out += "algorithm,n,population,seed,metric,value\n";
    for (const BenchRow& r : report.rows) {
        if (!include_timing && r.metric == "processing_time") continue;
        out += pipeline::to_string(r.algorithm);
        out += "," + std::to_string(r.n);
        out += "," + std::to_string(r.population);
        out += r.seed_index < 0 ? ",median" : "," + std::to_string(r.seed_index);
        out += "," + r.metric;
        out += "," + num(r.value) + "\n";
    }
    return out;
}

std::string front_json(const analysis::Front& front) {
    ordered_json points = ordered_json::array();
    for (const analysis::FrontPoint& p : front.points) {
        points.push_back(ordered_json{{"members", p.position.member_ids()},
                                      {"time", p.objectives.time},
                                      {"cost", p.objectives.cost},
                                      {"size", p.objectives.size}});
    }
    ordered_json j;
    j["schema"] = "front/1";
    j["points"] = std::move(points);
    return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace coalition::report
