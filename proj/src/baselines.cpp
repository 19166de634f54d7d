#include "coalition/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "coalition/rng.hpp"

namespace coalition::baselines {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double objective(const Evaluated& e, int crit) {
    return crit == 0 ? e.objectives.time : crit == 1 ? e.objectives.cost : e.objectives.size;
}

double obj_dist(const Evaluated& a, const Evaluated& b) {
    const double dt = a.objectives.time - b.objectives.time;
    const double dc = a.objectives.cost - b.objectives.cost;
    const double ds = a.objectives.size - b.objectives.size;
    return std::sqrt(dt * dt + dc * dc + ds * ds);
}

// Stage-1 objectives untimed; stage-2 feasibility goes to the feasibility
// bucket and, being survivor-selection input, into the repository bucket —
// the same accounting as the PSO engine.
void evaluate_all(const Evaluator& ev, std::vector<Evaluated>& inds, TimingBreakdown& tb) {
    std::vector<Evaluator::Sample> samples(inds.size());
    for (std::size_t i = 0; i < inds.size(); ++i) {
        ev.measure(inds[i].position, samples[i]);
        inds[i].objectives = samples[i].objectives;
    }
    const Stopwatch sw;
    for (std::size_t i = 0; i < inds.size(); ++i)
        inds[i].feasibility = ev.feasibility(inds[i].position, samples[i]);
    const double checks = sw.seconds();
    tb.feasibility_check_seconds += checks;
    tb.repository_update_seconds += checks;
}

std::vector<Evaluated> random_population(const Evaluator& ev, int population,
                                         std::mt19937_64& rng, TimingBreakdown& tb) {
    const std::size_t n = ev.scenario().robots.size();
    std::vector<Evaluated> pop(static_cast<std::size_t>(population));
    for (Evaluated& ind : pop) {
        ind.position = Coalition(n);
        for (std::size_t j = 0; j < n; ++j) ind.position.bits[j] = uniform01(rng) < 0.5 ? 1 : 0;
    }
    evaluate_all(ev, pop, tb);
    return pop;
}

void mutate(Coalition& c, double per_bit_rate, std::mt19937_64& rng) {
    for (std::size_t j = 0; j < c.bits.size(); ++j)
        if (uniform01(rng) < per_bit_rate) c.bits[j] ^= 1;
}

// One-point crossover with probability crossover_prob, else plain copies.
std::pair<Coalition, Coalition> cross(const Coalition& a, const Coalition& b,
                                      const EvoParams& p, std::mt19937_64& rng) {
    const std::size_t n = a.bits.size();
    std::pair<Coalition, Coalition> kids{a, b};
    if (n >= 2 && uniform01(rng) < p.crossover_prob) {
        const std::size_t cut =
            static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(n) - 1));
        for (std::size_t j = cut; j < n; ++j) {
            kids.first.bits[j] = b.bits[j];
            kids.second.bits[j] = a.bits[j];
        }
    }
    return kids;
}

// pool holds indices of the mating candidates; better(a, b) compares them.
template <typename BetterIdx>
std::vector<std::size_t> select_pool(std::size_t count, std::size_t from, int tournament,
                                     std::mt19937_64& rng, const BetterIdx& better) {
    std::vector<std::size_t> pool;
    pool.reserve(count);
    for (std::size_t t = 0; t < count; ++t) {
        std::size_t win = uniform_index(rng, from);
        for (int k = 1; k < tournament; ++k) {
            const std::size_t ch = uniform_index(rng, from);
            if (better(ch, win)) win = ch;
        }
        pool.push_back(win);
    }
    return pool;
}

std::vector<Evaluated> breed(const std::vector<Evaluated>& parents,
                             const std::vector<std::size_t>& pool, const EvoParams& p,
                             std::mt19937_64& rng) {
    const std::size_t n = parents.front().position.bits.size();
    const double per_bit = p.mutation_prob / static_cast<double>(n);
    std::vector<Evaluated> offspring;
    offspring.reserve(static_cast<std::size_t>(p.population));
    while (offspring.size() < static_cast<std::size_t>(p.population)) {
        const Coalition& pa = parents[pool[uniform_index(rng, pool.size())]].position;
        const Coalition& pb = parents[pool[uniform_index(rng, pool.size())]].position;
        auto [c1, c2] = cross(pa, pb, p, rng);
        mutate(c1, per_bit, rng);
        mutate(c2, per_bit, rng);
        offspring.push_back({std::move(c1), {}, {}});
        if (offspring.size() < static_cast<std::size_t>(p.population))
            offspring.push_back({std::move(c2), {}, {}});
    }
    return offspring;
}

}  // namespace

void EvoParams::validate() const {
    if (population < 2) throw std::invalid_argument("population must be at least 2");
    if (generations < 0) throw std::invalid_argument("generations must be non-negative");
    if (tournament < 1) throw std::invalid_argument("tournament size must be positive");
    if (crossover_prob < 0 || crossover_prob > 1 || mutation_prob < 0)
        throw std::invalid_argument("bad variation probabilities");
    feasibility_weights.validate();
}

std::vector<std::vector<std::size_t>> fast_nondominated_sort(const std::vector<Evaluated>& pop) {
    const std::size_t n = pop.size();
    std::vector<std::vector<std::size_t>> dominated(n);
    std::vector<int> count(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Better res = constrained_better(pop[i].objectives, pop[i].feasibility,
                                                  pop[j].objectives, pop[j].feasibility);
            if (res == Better::A) {
                dominated[i].push_back(j);
                ++count[j];
            } else if (res == Better::B) {
                dominated[j].push_back(i);
                ++count[i];
            }
        }
    std::vector<std::vector<std::size_t>> fronts;
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i)
        if (count[i] == 0) current.push_back(i);
    while (!current.empty()) {
        fronts.push_back(current);
        std::vector<std::size_t> next;
        for (std::size_t i : current)
            for (std::size_t j : dominated[i])
                if (--count[j] == 0) next.push_back(j);
        std::sort(next.begin(), next.end());
        current = std::move(next);
    }
    return fronts;
}

std::vector<double> crowding_distance(const std::vector<Evaluated>& pop,
                                      const std::vector<std::size_t>& front) {
    const std::size_t f = front.size();
    std::vector<double> dist(f, 0.0);
    if (f == 0) return dist;
    std::vector<std::size_t> idx(f);
    for (int crit = 0; crit < 3; ++crit) {
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return objective(pop[front[a]], crit) < objective(pop[front[b]], crit);
        });
        const double span =
            objective(pop[front[idx.back()]], crit) - objective(pop[front[idx.front()]], crit);
        if (span <= 0) continue;
        dist[idx.front()] = kInf;
        dist[idx.back()] = kInf;
        for (std::size_t k = 1; k + 1 < f; ++k)
            if (dist[idx[k]] != kInf)
                dist[idx[k]] += (objective(pop[front[idx[k + 1]]], crit) -
                                 objective(pop[front[idx[k - 1]]], crit)) /
                                span;
    }
    return dist;
}

EvoOutput run_nsga2(const Scenario& scenario, const EvoParams& params) {
    params.validate();
    const Stopwatch total;
    std::mt19937_64 rng(params.seed);
    const Evaluator ev(scenario, params.feasibility_weights);

    EvoOutput out;
    TimingBreakdown& tb = out.timing;

    std::vector<Evaluated> pop =
        random_population(ev, params.population, rng, tb);

    std::vector<int> rank(pop.size(), 0);
    std::vector<double> crowd(pop.size(), 0.0);
    auto rank_current = [&](const std::vector<Evaluated>& p) {
        rank.assign(p.size(), 0);
        crowd.assign(p.size(), 0.0);
        const auto fronts = fast_nondominated_sort(p);
        for (std::size_t fi = 0; fi < fronts.size(); ++fi) {
            const auto cd = crowding_distance(p, fronts[fi]);
            for (std::size_t k = 0; k < fronts[fi].size(); ++k) {
                rank[fronts[fi][k]] = static_cast<int>(fi);
                crowd[fronts[fi][k]] = cd[k];
            }
        }
    };
    {
        const Stopwatch sw;
        rank_current(pop);
        tb.repository_update_seconds += sw.seconds();
        ++tb.rounds;
    }

    auto better_idx = [&](std::size_t a, std::size_t b) {
        if (rank[a] != rank[b]) return rank[a] < rank[b];
        if (crowd[a] != crowd[b]) return crowd[a] > crowd[b];
        return a < b;
    };

    for (int gen = 1; gen <= params.generations; ++gen) {
        const auto pool = select_pool(static_cast<std::size_t>(params.population / 2), pop.size(),
                                      params.tournament, rng, better_idx);
        std::vector<Evaluated> offspring = breed(pop, pool, params, rng);
        evaluate_all(ev, offspring, tb);

        std::vector<Evaluated> merged = pop;
        merged.insert(merged.end(), std::make_move_iterator(offspring.begin()),
                      std::make_move_iterator(offspring.end()));

        const Stopwatch sw;
        const auto fronts = fast_nondominated_sort(merged);
        std::vector<Evaluated> next;
        std::vector<int> next_rank;
        std::vector<double> next_crowd;
        next.reserve(static_cast<std::size_t>(params.population));
        for (std::size_t fi = 0;
             fi < fronts.size() && next.size() < static_cast<std::size_t>(params.population);
             ++fi) {
            const auto cd = crowding_distance(merged, fronts[fi]);
            std::vector<std::size_t> order(fronts[fi].size());
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                if (cd[a] != cd[b]) return cd[a] > cd[b];
                return fronts[fi][a] < fronts[fi][b];
            });
            for (std::size_t k : order) {
                if (next.size() == static_cast<std::size_t>(params.population)) break;
                next.push_back(merged[fronts[fi][k]]);
                next_rank.push_back(static_cast<int>(fi));
                next_crowd.push_back(cd[k]);
            }
        }
        pop = std::move(next);
        rank = std::move(next_rank);
        crowd = std::move(next_crowd);
        tb.repository_update_seconds += sw.seconds();
        ++tb.rounds;
    }

    out.front = nondominated_subset(pop);
    tb.total_seconds = total.seconds();
    return out;
}

namespace {

struct Spea2Fitness {
    std::vector<double> fitness;
    std::vector<char> nondominated;
};

Spea2Fitness spea2_fitness(const std::vector<Evaluated>& u) {
    const std::size_t n = u.size();
    std::vector<double> strength(n, 0.0);
    std::vector<std::vector<std::size_t>> dominators(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Better res = constrained_better(u[i].objectives, u[i].feasibility,
                                                  u[j].objectives, u[j].feasibility);
            if (res == Better::A) {
                strength[i] += 1;
                dominators[j].push_back(i);
            } else if (res == Better::B) {
                strength[j] += 1;
                dominators[i].push_back(j);
            }
        }
    Spea2Fitness out;
    out.fitness.resize(n);
    out.nondominated.resize(n);
    const std::size_t k = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    std::vector<double> row;
    for (std::size_t i = 0; i < n; ++i) {
        double raw = 0.0;
        for (std::size_t j : dominators[i]) raw += strength[j];
        row.clear();
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) row.push_back(obj_dist(u[i], u[j]));
        double sigma = 0.0;
        if (!row.empty()) {
            const std::size_t kth = std::min(k > 0 ? k - 1 : 0, row.size() - 1);
            std::nth_element(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(kth),
                             row.end());
            sigma = row[kth];
        }
        out.fitness[i] = raw + 1.0 / (sigma + 2.0);
        out.nondominated[i] = dominators[i].empty() ? 1 : 0;
    }
    return out;
}

// Iteratively drop the member with the lexicographically smallest distance
// vector to the rest, skipping already-removed members lazily.
std::vector<std::size_t> truncate_nd(const std::vector<Evaluated>& u,
                                     std::vector<std::size_t> members, std::size_t cap) {
    const std::size_t m = members.size();
    std::vector<std::vector<std::pair<double, std::size_t>>> neigh(m);
    for (std::size_t a = 0; a < m; ++a) {
        neigh[a].reserve(m - 1);
        for (std::size_t b = 0; b < m; ++b)
            if (b != a) neigh[a].push_back({obj_dist(u[members[a]], u[members[b]]), b});
        std::sort(neigh[a].begin(), neigh[a].end());
    }
    std::vector<char> dead(m, 0);
    std::size_t alive = m;
    auto less_than = [&](std::size_t a, std::size_t b) {
        std::size_t ia = 0, ib = 0;
        while (true) {
            while (ia < neigh[a].size() && dead[neigh[a][ia].second]) ++ia;
            while (ib < neigh[b].size() && dead[neigh[b][ib].second]) ++ib;
            if (ia >= neigh[a].size() || ib >= neigh[b].size()) return false;
            if (neigh[a][ia].first != neigh[b][ib].first)
                return neigh[a][ia].first < neigh[b][ib].first;
            ++ia;
            ++ib;
        }
    };
    while (alive > cap) {
        std::size_t victim = m;
        for (std::size_t a = 0; a < m; ++a) {
            if (dead[a]) continue;
            if (victim == m || less_than(a, victim)) victim = a;
        }
        dead[victim] = 1;
        --alive;
    }
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < m; ++a)
        if (!dead[a]) out.push_back(members[a]);
    return out;
}

}  // namespace

EvoOutput run_spea2(const Scenario& scenario, const EvoParams& params) {
    params.validate();
    const Stopwatch total;
    std::mt19937_64 rng(params.seed);
    const Evaluator ev(scenario, params.feasibility_weights);
    const std::size_t cap = static_cast<std::size_t>(params.population);  // archive size

    EvoOutput out;
    TimingBreakdown& tb = out.timing;

    std::vector<Evaluated> pop =
        random_population(ev, params.population, rng, tb);
    std::vector<Evaluated> archive;
    std::vector<double> archive_fitness;

    for (int gen = 0;; ++gen) {
        std::vector<Evaluated> u = pop;
        u.insert(u.end(), archive.begin(), archive.end());

        const Stopwatch sw;
        const Spea2Fitness fit = spea2_fitness(u);
        std::vector<std::size_t> nd, rest;
        for (std::size_t i = 0; i < u.size(); ++i)
            (fit.nondominated[i] ? nd : rest).push_back(i);
        if (nd.size() > cap) {
            nd = truncate_nd(u, std::move(nd), cap);
        } else if (nd.size() < cap) {
            std::stable_sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) {
                if (fit.fitness[a] != fit.fitness[b]) return fit.fitness[a] < fit.fitness[b];
                return a < b;
            });
            for (std::size_t i : rest) {
                if (nd.size() == cap) break;
                nd.push_back(i);
            }
        }
        std::vector<Evaluated> next_archive;
        std::vector<double> next_fitness;
        next_archive.reserve(nd.size());
        for (std::size_t i : nd) {
            next_archive.push_back(u[i]);
            next_fitness.push_back(fit.fitness[i]);
        }
        archive = std::move(next_archive);
        archive_fitness = std::move(next_fitness);
        tb.repository_update_seconds += sw.seconds();
        ++tb.rounds;

        if (gen == params.generations) break;

        auto better_idx = [&](std::size_t a, std::size_t b) {
            if (archive_fitness[a] != archive_fitness[b])
                return archive_fitness[a] < archive_fitness[b];
            return a < b;
        };
        const auto pool = select_pool(static_cast<std::size_t>(params.population / 2),
                                      archive.size(), params.tournament, rng, better_idx);
        pop = breed(archive, pool, params, rng);
        evaluate_all(ev, pop, tb);
    }

    out.front = nondominated_subset(archive);
    tb.total_seconds = total.seconds();
    return out;
}

}  // namespace coalition::baselines
