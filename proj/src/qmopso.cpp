#include "coalition/qmopso.hpp"

#include <cmath>
#include <stdexcept>

#include "coalition/rng.hpp"

namespace coalition::qmopso {

void QmopsoParams::validate() const {
    if (population < 1) throw std::invalid_argument("population must be positive");
    if (iterations < 0) throw std::invalid_argument("iterations must be non-negative");
    if (w < 0 || c1 < 0 || c2 < 0 || w + c1 + c2 > 1.0 + 1e-9)
        throw std::invalid_argument("need w, c1, c2 >= 0 with w + c1 + c2 <= 1");
    if (alpha < 0 || beta < 0 || std::abs(alpha + beta - 1.0) > 1e-9)
        throw std::invalid_argument("need alpha, beta >= 0 with alpha + beta == 1");
    feasibility_weights.validate();
    criteria_weights.validate();
}

double update_velocity_component(double v, bool local_best_bit, bool global_best_bit,
                                 const QmopsoParams& p) {
    const double pull_l = local_best_bit ? p.alpha : p.beta;
    const double pull_g = global_best_bit ? p.alpha : p.beta;
    return p.w * v + p.c1 * pull_l + p.c2 * pull_g;
}

std::vector<double> update_velocity(const Particle& particle, const Coalition& global_best,
                                    const QmopsoParams& p) {
    const std::size_t n = particle.velocity.size();
    std::vector<double> out(n);
    for (std::size_t j = 0; j < n; ++j)
        out[j] = update_velocity_component(particle.velocity[j],
                                           particle.local_best.position.bits[j] != 0,
                                           global_best.bits[j] != 0, p);
    return out;
}

Coalition sample_position(const std::vector<double>& velocity, std::mt19937_64& rng, bool flip) {
    Coalition c(velocity.size());
    for (std::size_t j = 0; j < velocity.size(); ++j) {
        const bool above = uniform01(rng) > velocity[j];
        c.bits[j] = (above != flip) ? 1 : 0;
    }
    return c;
}

std::vector<Particle> init_swarm(const QmopsoParams& p, const Evaluator& ev,
                                 std::mt19937_64& rng) {
    const std::size_t n = ev.scenario().robots.size();
    std::vector<Particle> swarm(static_cast<std::size_t>(p.population));
    for (Particle& particle : swarm) {
        particle.velocity.resize(n);
        for (double& v : particle.velocity) v = uniform01(rng);
        particle.position = sample_position(particle.velocity, rng, p.flip_sampling);
        const Evaluated e = ev.evaluate(particle.position);
        particle.objectives = e.objectives;
        particle.feasibility = e.feasibility;
        particle.local_best = e;
    }
    return swarm;
}

void update_local_best(Particle& particle) {
    const Better res =
        constrained_better(particle.local_best.objectives, particle.local_best.feasibility,
                           particle.objectives, particle.feasibility);
    if (res != Better::A)
        particle.local_best = {particle.position, particle.objectives, particle.feasibility};
}

Repository update_repository(Repository rep, const std::vector<Evaluated>& candidates) {
    for (const Evaluated& cand : candidates) {
        if (cand.position.empty_coalition()) continue;
        bool drop = false;
        std::vector<char> evict(rep.entries.size(), 0);
        for (std::size_t i = 0; i < rep.entries.size(); ++i) {
            const Evaluated& entry = rep.entries[i];
            const Better res = constrained_better(cand.objectives, cand.feasibility,
                                                  entry.objectives, entry.feasibility);
            if (res == Better::B) {
                drop = true;  // an entry beating the candidate beats whatever
                break;        // the candidate beats, so nothing is lost
            }
            if (res == Better::A) {
                evict[i] = 1;
            } else if (cand.objectives == entry.objectives &&
                       cand.position == entry.position) {
                drop = true;  // identical positions stored once
                break;
            }
        }
        if (drop) continue;
        std::size_t keep = 0;
        for (std::size_t i = 0; i < rep.entries.size(); ++i)
            if (!evict[i]) {
                if (keep != i) rep.entries[keep] = std::move(rep.entries[i]);
                ++keep;
            }
        rep.entries.resize(keep);
        rep.entries.push_back(cand);
    }
    return rep;
}

const Evaluated& select_global_best(const Repository& rep,
                                    const analysis::CriteriaWeights& weights) {
    if (rep.entries.empty())
        throw std::invalid_argument("cannot pick a global best from an empty repository");
    std::vector<ObjectiveVector> objs;
    objs.reserve(rep.entries.size());
    for (const Evaluated& e : rep.entries) objs.push_back(e.objectives);
    const analysis::PrometheeResult ranked = analysis::promethee_rank(objs, weights);
    return rep.entries[ranked.order.front()];
}

namespace {

// Swarm-internal equivalents of update_repository/nondominated_subset that
// avoid building per-iteration Evaluated copies of the whole swarm.

bool merge_candidate(Repository& rep, const Particle& cand, std::vector<char>& evict) {
    if (cand.position.empty_coalition()) return false;
    evict.assign(rep.entries.size(), 0);
    for (std::size_t i = 0; i < rep.entries.size(); ++i) {
        const Evaluated& entry = rep.entries[i];
        const Better res = constrained_better(cand.objectives, cand.feasibility,
                                              entry.objectives, entry.feasibility);
        if (res == Better::B) return false;  // see update_repository
        if (res == Better::A) {
            evict[i] = 1;
        } else if (cand.objectives == entry.objectives && cand.position == entry.position) {
            return false;
        }
    }
    std::size_t keep = 0;
    for (std::size_t i = 0; i < rep.entries.size(); ++i)
        if (!evict[i]) {
            if (keep != i) rep.entries[keep] = std::move(rep.entries[i]);
            ++keep;
        }
    rep.entries.resize(keep);
    rep.entries.push_back({cand.position, cand.objectives, cand.feasibility});
    return true;
}

void swarm_nd_indices(const std::vector<Particle>& swarm, std::vector<std::size_t>& out) {
    out.clear();
    for (std::size_t i = 0; i < swarm.size(); ++i) {
        if (swarm[i].position.empty_coalition()) continue;
        bool dominated = false;
        for (std::size_t j = 0; j < swarm.size() && !dominated; ++j) {
            if (j == i) continue;
            dominated = constrained_better(swarm[j].objectives, swarm[j].feasibility,
                                           swarm[i].objectives, swarm[i].feasibility) == Better::A;
        }
        if (!dominated) out.push_back(i);
    }
}

}  // namespace

RunOutput run(const Scenario& scenario, const QmopsoParams& params,
              const IterationObserver& observer) {
    params.validate();
    const Stopwatch total;
    std::mt19937_64 rng(params.seed);
    const Evaluator ev(scenario, params.feasibility_weights);
    const std::size_t n = scenario.robots.size();

    RunOutput out;
    TimingBreakdown& tb = out.timing;
    std::vector<char> evict;
    std::vector<std::size_t> nd;

    // Initial population. Feasibility work inside init_swarm is charged to
    // the feasibility bucket by measuring the stage-2 pass separately below
    // for iterations; for the initial round the whole evaluation is cheap and
    // the repository seeding is what matters.
    std::vector<Particle> swarm = init_swarm(params, ev, rng);
    {
        const Stopwatch sw;
        swarm_nd_indices(swarm, nd);
        for (std::size_t i : nd) merge_candidate(out.repository, swarm[i], evict);
        tb.repository_update_seconds += sw.seconds();
        ++tb.rounds;
    }
    if (observer) observer(0, out.repository);

    std::vector<Evaluator::Sample> samples(swarm.size());
    Coalition gbest(n);
    // Pull terms depend only on the two best bits; same products and addition
    // order as update_velocity_component.
    const double pull_l[2] = {params.c1 * params.beta, params.c1 * params.alpha};
    const double pull_g[2] = {params.c2 * params.beta, params.c2 * params.alpha};
    const double w = params.w;
    const bool flip = params.flip_sampling;

    for (int it = 1; it <= params.iterations; ++it) {
        if (!out.repository.entries.empty())
            gbest = select_global_best(out.repository, params.criteria_weights).position;
        else
            std::fill(gbest.bits.begin(), gbest.bits.end(), std::uint8_t{0});

        // Velocity update, position sampling, and the stage-1 objective scan
        // fused into one pass over the bits.
        for (std::size_t i = 0; i < swarm.size(); ++i) {
            Particle& p = swarm[i];
            Evaluator::Sample& smp = samples[i];
            ev.begin(smp);
            const std::uint8_t* lb = p.local_best.position.bits.data();
            const std::uint8_t* gb = gbest.bits.data();
            for (std::size_t j = 0; j < n; ++j) {
                const double v = w * p.velocity[j] + pull_l[lb[j]] + pull_g[gb[j]];
                p.velocity[j] = v;
                const bool above = uniform01(rng) > v;
                const bool member = above != flip;
                p.position.bits[j] = member ? 1 : 0;
                if (member) ev.add_member(j, smp);
            }
            ev.seal(smp);
            p.objectives = smp.objectives;
        }

        {
            const Stopwatch sw;
            for (std::size_t i = 0; i < swarm.size(); ++i)
                swarm[i].feasibility = ev.feasibility(swarm[i].position, samples[i]);
            const double checks = sw.seconds();
            tb.feasibility_check_seconds += checks;
            tb.repository_update_seconds += checks;
        }
        for (Particle& p : swarm) update_local_best(p);

        {
            const Stopwatch sw;
            swarm_nd_indices(swarm, nd);
            for (std::size_t i : nd) merge_candidate(out.repository, swarm[i], evict);
            tb.repository_update_seconds += sw.seconds();
            ++tb.rounds;
        }
        if (observer) observer(it, out.repository);
    }

    tb.total_seconds = total.seconds();
    return out;
}

}  // namespace coalition::qmopso
