#include "ugsim/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include <omp.h>

#include "ugsim/error.hpp"

namespace ugsim {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double truncate_to(double value, double scale) {
    return std::floor(value * scale + 1e-6) / scale;
}

int thread_count(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

struct NetworkBundle {
    Network net;
    std::optional<CentralityRanking> degree;
    std::optional<CentralityRanking> eigen;
    std::string error;
};

std::vector<NetworkBundle> build_networks(const NetworkSpec& spec, bool need_degree,
                                          bool need_eigen, int jobs) {
    std::vector<NetworkBundle> out(spec.seeds.size());
    const auto count = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(dynamic) num_threads(thread_count(jobs))
    for (std::int64_t k = 0; k < count; ++k) {
        auto& b = out[k];
        try {
            b.net = generate(spec.params(spec.seeds[k]));
            if (need_degree)
                b.degree = degree_centrality(b.net);
            if (need_eigen)
                b.eigen = eigenvector_centrality(b.net).ranking;
        } catch (const std::exception& e) {
            b.error = e.what();
        }
    }
    return out;
}

std::string describe_point(const GridPoint& p) {
    if (!p.interference)
        return "scheme=NONE";
    const auto& c = *p.interference;
    return "scheme=" + std::string(to_string(c.scheme)) + " target=" +
           std::string(to_string(c.target)) + " threshold=" + std::to_string(c.threshold) +
           " theta=" + std::to_string(c.theta);
}

RunResult as_result(const RunRecord& r) {
    RunResult out;
    out.window_freq = r.freqs;
    out.fairness = r.fairness;
    out.total_cost = r.total_cost;
    out.endowment_events = r.endowment_events;
    return out;
}

auto coordinate_key(const Coordinates& c) {
    const bool on = c.point.interference.has_value();
    const auto& i = on ? *c.point.interference : InterferenceConfig{};
    return std::make_tuple(static_cast<int>(c.model), on, on ? static_cast<int>(i.scheme) : -1,
                           on ? static_cast<int>(i.target) : -1, on ? i.threshold : 0.0,
                           on ? i.theta : 0.0, c.game.l, c.game.h, c.noise, c.generations,
                           c.window);
}

} // namespace

std::uint64_t replicate_seed(std::uint64_t master_seed, std::uint64_t network_seed,
                             std::uint64_t replicate_index) {
    std::uint64_t h = splitmix64(master_seed);
    h = splitmix64(h ^ network_seed);
    return splitmix64(h ^ replicate_index);
}

std::vector<double> default_thetas() {
    return {10.00, 17.78, 23.71, 31.62, 42.16, 56.23, 74.98};
}

std::vector<double> default_thresholds() {
    std::vector<double> out;
    for (int k = 1; k <= 10; ++k)
        out.push_back(k / 10.0);
    return out;
}

std::vector<double> default_ni_thresholds() {
    std::vector<double> out;
    for (int k = 0; k <= 24; ++k) {
        const double v = truncate_to(std::pow(10.0, -3.0 + 0.125 * k), 1000.0);
        const double clean = std::round(v * 1000.0) / 1000.0;
        if (out.empty() || out.back() != clean)
            out.push_back(clean);
    }
    return out;
}

void SweepSpec::validate() const {
    if (network.seeds.empty())
        throw ParameterError("sweep needs at least one network seed");
    if (replicates == 0)
        throw ParameterError("sweep needs at least one replicate");
    game.validate();
    sim.validate();
    auto check_thresholds = [](const std::vector<double>& v, const char* name) {
        for (double t : v)
            if (!(t >= 0.0 && t <= 1.0))
                throw ParameterError(std::string(name) + " must lie in [0, 1]");
    };
    check_thresholds(thresholds, "thresholds");
    check_thresholds(ni_thresholds, "ni_thresholds");
    for (double t : thetas)
        if (!(t >= 0.0) || !std::isfinite(t))
            throw ParameterError("thetas must be finite and non-negative");
    if (grid().empty())
        throw ParameterError("sweep grid is empty");
}

std::vector<GridPoint> SweepSpec::grid() const {
    std::vector<GridPoint> out;
    if (include_baseline)
        out.push_back({});
    for (Scheme scheme : schemes) {
        const bool ni = scheme == Scheme::NI_DEG || scheme == Scheme::NI_EIG;
        const auto& ts = ni ? ni_thresholds : thresholds;
        for (TargetSet target : targets)
            for (double t : ts)
                for (double theta : thetas)
                    out.push_back({InterferenceConfig{scheme, target, t, theta}});
    }
    return out;
}

SweepOutput run_sweep(const SweepSpec& spec, int jobs) {
    spec.validate();
    const auto grid = spec.grid();
    bool need_degree = false, need_eigen = false;
    for (const auto& p : grid)
        if (p.interference) {
            need_degree |= p.interference->scheme == Scheme::NI_DEG;
            need_eigen |= p.interference->scheme == Scheme::NI_EIG;
        }
    const auto networks = build_networks(spec.network, need_degree, need_eigen, jobs);

    const std::size_t seeds = spec.network.seeds.size();
    const std::size_t per_point = seeds * spec.replicates;
    const std::size_t units = grid.size() * per_point;

    std::vector<std::optional<RunRecord>> slots(units);
    std::vector<std::string> errors(units);

#pragma omp parallel for schedule(dynamic) num_threads(thread_count(jobs))
    for (std::int64_t u = 0; u < static_cast<std::int64_t>(units); ++u) {
        const std::size_t point = static_cast<std::size_t>(u) / per_point;
        const std::size_t seed_idx = (static_cast<std::size_t>(u) % per_point) / spec.replicates;
        const std::size_t rep = static_cast<std::size_t>(u) % spec.replicates;
        const auto& bundle = networks[seed_idx];
        if (!bundle.error.empty()) {
            errors[u] = "network generation failed: " + bundle.error;
            continue;
        }
        try {
            const auto& gp = grid[point];
            const std::uint64_t network_seed = spec.network.seeds[seed_idx];
            SimConfig cfg = spec.sim;
            cfg.rng_seed = replicate_seed(spec.master_seed, network_seed, rep);
            cfg.record_full = false;
            cfg.policy = ExecPolicy::Serial;
            const CentralityRanking* ranking = nullptr;
            if (gp.interference && gp.interference->scheme == Scheme::NI_DEG)
                ranking = &*bundle.degree;
            if (gp.interference && gp.interference->scheme == Scheme::NI_EIG)
                ranking = &*bundle.eigen;
            const RunResult r =
                run_simulation(bundle.net, spec.game, gp.interference, cfg, ranking);
            RunRecord rec;
            rec.coords = {spec.network.model, gp,           spec.game,
                          spec.sim.noise,     spec.sim.generations, spec.sim.window};
            rec.network_seed = network_seed;
            rec.replicate_seed = cfg.rng_seed;
            rec.freqs = r.window_freq;
            rec.fairness = r.fairness;
            rec.total_cost = r.total_cost;
            rec.endowment_events = r.endowment_events;
            slots[u] = std::move(rec);
        } catch (const std::exception& e) {
            errors[u] = e.what();
        }
    }

    SweepOutput out;
    for (std::size_t u = 0; u < units; ++u) {
        if (slots[u]) {
            out.runs.push_back(std::move(*slots[u]));
        } else {
            const std::size_t point = u / per_point;
            const std::size_t seed_idx = (u % per_point) / spec.replicates;
            out.failures.push_back(
                {describe_point(grid[point]) +
                     " network_seed=" + std::to_string(spec.network.seeds[seed_idx]) +
                     " replicate=" + std::to_string(u % spec.replicates),
                 errors[u]});
        }
    }
    out.aggregates = aggregate_runs(out.runs);
    return out;
}

std::vector<AggregateRecord> aggregate_runs(std::span<const RunRecord> runs) {
    using Key = decltype(coordinate_key(std::declval<Coordinates>()));
    std::map<Key, std::size_t> index;
    std::vector<AggregateRecord> out;
    std::vector<std::vector<RunResult>> groups;
    for (const auto& r : runs) {
        auto [it, inserted] = index.try_emplace(coordinate_key(r.coords), out.size());
        if (inserted) {
            out.push_back({r.coords, {}});
            groups.emplace_back();
        }
        groups[it->second].push_back(as_result(r));
    }
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k].agg = aggregate(groups[k]);
    return out;
}

std::vector<ParetoPoint> pareto_front(std::span<const std::pair<double, double>> points) {
    std::vector<std::size_t> idx(points.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (points[a].first != points[b].first)
            return points[a].first < points[b].first;
        if (points[a].second != points[b].second)
            return points[a].second < points[b].second;
        return a < b;
    });

    // A point survives iff its cost is <= the cheapest cost among points with
    // strictly smaller unfair share.
    std::vector<ParetoPoint> front;
    double best_before = std::numeric_limits<double>::infinity();
    std::size_t k = 0;
    while (k < idx.size()) {
        std::size_t end = k;
        double group_min = std::numeric_limits<double>::infinity();
        while (end < idx.size() && points[idx[end]].first == points[idx[k]].first) {
            group_min = std::min(group_min, points[idx[end]].second);
            ++end;
        }
        for (std::size_t q = k; q < end; ++q) {
            const auto& p = points[idx[q]];
            if (!(p.second > best_before))
                front.push_back({p.first, p.second, idx[q]});
        }
        best_before = std::min(best_before, group_min);
        k = end;
    }
    return front;
}

std::vector<ParetoPoint> pareto_front(std::span<const AggregateRecord> records) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(records.size());
    for (const auto& r : records)
        pts.emplace_back(1.0 - r.agg.mean_fairness, r.agg.mean_cost);
    return pareto_front(pts);
}

std::vector<BestRow> best_per_fairness(std::span<const AggregateRecord> records,
                                       std::span<const double> levels) {
    std::vector<BestRow> out;
    for (double level : levels)
        for (Scheme scheme : {Scheme::POP, Scheme::NEB, Scheme::NI_DEG, Scheme::NI_EIG}) {
            const AggregateRecord* best = nullptr;
            for (const auto& r : records) {
                const auto& i = r.coords.point.interference;
                if (!i || i->scheme != scheme)
                    continue;
                if (r.agg.mean_fairness < level || !(r.agg.mean_cost > 0.0))
                    continue;
                if (best == nullptr || r.agg.mean_cost < best->agg.mean_cost)
                    best = &r;
            }
            if (best != nullptr)
                out.push_back({scheme, level, *best});
        }
    return out;
}

std::vector<BaselinePoint> baseline_scan(const BaselineSpec& spec, int jobs) {
    spec.sim.validate();
    if (spec.network.seeds.empty() || spec.replicates == 0)
        throw ParameterError("baseline scan needs network seeds and replicates");
    for (double v : spec.l_grid)
        if (!(v >= 0.0 && v <= 1.0))
            throw ParameterError("l grid values must lie in [0, 1]");
    for (double v : spec.h_grid)
        if (!(v >= 0.0 && v <= 1.0))
            throw ParameterError("h grid values must lie in [0, 1]");

    std::vector<BaselinePoint> points;
    for (double l : spec.l_grid)
        for (double h : spec.h_grid)
            points.push_back({l, h, l < h, {}});
    std::vector<std::size_t> defined;
    for (std::size_t k = 0; k < points.size(); ++k)
        if (points[k].defined)
            defined.push_back(k);

    const auto networks = build_networks(spec.network, false, false, jobs);
    for (const auto& b : networks)
        if (!b.error.empty())
            throw ParameterError("network generation failed: " + b.error);

    const std::size_t per_point = spec.network.seeds.size() * spec.replicates;
    const std::size_t units = defined.size() * per_point;
    std::vector<RunResult> results(units);
    std::vector<std::string> errors(units);

#pragma omp parallel for schedule(dynamic) num_threads(thread_count(jobs))
    for (std::int64_t u = 0; u < static_cast<std::int64_t>(units); ++u) {
        const auto& p = points[defined[static_cast<std::size_t>(u) / per_point]];
        const std::size_t seed_idx = (static_cast<std::size_t>(u) % per_point) / spec.replicates;
        const std::size_t rep = static_cast<std::size_t>(u) % spec.replicates;
        try {
            SimConfig cfg = spec.sim;
            cfg.rng_seed = replicate_seed(spec.master_seed, spec.network.seeds[seed_idx], rep);
            cfg.record_full = false;
            cfg.policy = ExecPolicy::Serial;
            results[u] = run_simulation(networks[seed_idx].net, GameParams{p.l, p.h},
                                        std::nullopt, cfg);
        } catch (const std::exception& e) {
            errors[u] = e.what();
        }
    }
    for (const auto& e : errors)
        if (!e.empty())
            throw std::runtime_error("baseline run failed: " + e);

    for (std::size_t d = 0; d < defined.size(); ++d)
        points[defined[d]].agg =
            aggregate(std::span<const RunResult>(results).subspan(d * per_point, per_point));
    return points;
}

} // namespace ugsim
