#include "coalition/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace coalition::analysis {

namespace {

bool obj_less(const ObjectiveVector& a, const ObjectiveVector& b) {
    if (a.time != b.time) return a.time < b.time;
    if (a.cost != b.cost) return a.cost < b.cost;
    return a.size < b.size;
}

double sq(double x) { return x * x; }

double euclid(const ObjectiveVector& a, const ObjectiveVector& b) {
    return std::sqrt(sq(a.time - b.time) + sq(a.cost - b.cost) + sq(a.size - b.size));
}

}  // namespace

Front make_front(const std::vector<Evaluated>& entries, double eps) {
    std::vector<const Evaluated*> keep;
    for (const Evaluated& e : entries) {
        if (e.position.empty_coalition()) continue;
        bool dominated = false;
        for (const Evaluated& other : entries) {
            if (&other == &e) continue;
            if (dominates(other.objectives, e.objectives)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) keep.push_back(&e);
    }
    std::stable_sort(keep.begin(), keep.end(),
                     [](const Evaluated* a, const Evaluated* b) {
                         return obj_less(a->objectives, b->objectives);
                     });
    Front f;
    for (const Evaluated* e : keep) {
        if (!f.points.empty() && objectives_equal(f.points.back().objectives, e->objectives, eps))
            continue;
        f.points.push_back({e->position, e->objectives});
    }
    return f;
}

double error_ratio(const Front& front, const Front& reference, double eps) {
    if (front.empty() || reference.empty())
        throw std::invalid_argument("error_ratio needs non-empty fronts");
    std::size_t misses = 0;
    std::size_t lo = 0;
    for (const FrontPoint& p : front.points) {
        while (lo < reference.points.size() &&
               reference.points[lo].objectives.time < p.objectives.time - eps)
            ++lo;
        bool present = false;
        for (std::size_t j = lo; j < reference.points.size(); ++j) {
            const ObjectiveVector& r = reference.points[j].objectives;
            if (r.time > p.objectives.time + eps) break;
            if (objectives_equal(r, p.objectives, eps)) {
                present = true;
                break;
            }
        }
        if (!present) ++misses;
    }
    return static_cast<double>(misses) / static_cast<double>(front.size());
}

double set_coverage(const Front& a, const Front& b) {
    if (b.empty()) throw std::invalid_argument("set_coverage needs a non-empty covered front");
    std::size_t covered = 0;
    for (const FrontPoint& pb : b.points) {
        for (const FrontPoint& pa : a.points) {
            if (weakly_dominates(pa.objectives, pb.objectives)) {
                ++covered;
                break;
            }
        }
    }
    return static_cast<double>(covered) / static_cast<double>(b.size());
}

double spacing(const Front& front) {
    const std::size_t k = front.size();
    if (k < 2) throw std::invalid_argument("spacing needs at least two points");
    std::vector<double> nn(k, std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            const double d = euclid(front.points[i].objectives, front.points[j].objectives);
            nn[i] = std::min(nn[i], d);
            nn[j] = std::min(nn[j], d);
        }
    const double mean = std::accumulate(nn.begin(), nn.end(), 0.0) / static_cast<double>(k);
    double var = 0.0;
    for (double d : nn) var += sq(d - mean);
    return std::sqrt(var / static_cast<double>(k));
}

Front reference_front(const std::vector<Front>& fronts, double eps) {
    std::vector<Evaluated> all;
    for (const Front& f : fronts)
        for (const FrontPoint& p : f.points) all.push_back({p.position, p.objectives, {}});
    return make_front(all, eps);
}

std::vector<Evaluated> brute_force_entries(const Scenario& s, const FeasibilityWeights& w) {
    const std::size_t n = s.robots.size();
    if (n > 22) throw std::invalid_argument("brute force front limited to 22 robots");
    Evaluator ev(s, w);
    std::vector<Evaluated> archive;
    Coalition c(n);
    for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
        for (std::size_t i = 0; i < n; ++i) c.bits[i] = (mask >> i) & 1;
        Evaluated e = ev.evaluate(c);
        if (!e.feasibility.feasible) continue;
        bool dominated = false;
        for (const Evaluated& a : archive)
            if (weakly_dominates(a.objectives, e.objectives)) {
                dominated = true;
                break;
            }
        if (dominated) continue;
        std::erase_if(archive, [&](const Evaluated& a) {
            return dominates(e.objectives, a.objectives);
        });
        archive.push_back(std::move(e));
    }
    return archive;
}

Front brute_force_front(const Scenario& s, const FeasibilityWeights& w) {
    return make_front(brute_force_entries(s, w));
}

void CriteriaWeights::validate() const {
    if (!(time > 0) || !(cost > 0) || !(size > 0) ||
        std::abs(time + cost + size - 1.0) > 1e-9)
        throw std::invalid_argument("criteria weights must be positive and sum to 1");
}

PrometheeResult promethee_rank(const std::vector<ObjectiveVector>& alternatives,
                               const CriteriaWeights& weights) {
    weights.validate();
    const std::size_t k = alternatives.size();
    if (k == 0) throw std::invalid_argument("promethee_rank needs alternatives");
    PrometheeResult res;
    res.net_flow.assign(k, 0.0);
    res.order.resize(k);
    std::iota(res.order.begin(), res.order.end(), std::size_t{0});
    if (k > 1) {
        // With the step preference, sum_b P_c(a,b) counts the alternatives
        // strictly worse than a on criterion c, and sum_b P_c(b,a) those
        // strictly better — order statistics of the per-criterion values.
        const double wts[3] = {weights.time, weights.cost, weights.size};
        std::vector<double> vals(k);
        for (int crit = 0; crit < 3; ++crit) {
            for (std::size_t i = 0; i < k; ++i)
                vals[i] = crit == 0   ? alternatives[i].time
                          : crit == 1 ? alternatives[i].cost
                                      : alternatives[i].size;
            std::vector<double> sorted = vals;
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t i = 0; i < k; ++i) {
                const auto lo = std::lower_bound(sorted.begin(), sorted.end(), vals[i]);
                const auto hi = std::upper_bound(lo, sorted.end(), vals[i]);
                const double less = static_cast<double>(lo - sorted.begin());
                const double greater = static_cast<double>(sorted.end() - hi);
                res.net_flow[i] += wts[crit] * (greater - less);
            }
        }
        const double denom = static_cast<double>(k - 1);
        for (double& f : res.net_flow) f /= denom;
        std::stable_sort(res.order.begin(), res.order.end(), [&](std::size_t a, std::size_t b) {
            if (res.net_flow[a] != res.net_flow[b]) return res.net_flow[a] > res.net_flow[b];
            return a < b;
        });
    }
    return res;
}

}  // namespace coalition::analysis
