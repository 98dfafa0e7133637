#include "lowdisc/optimizer.hpp"

#include <chrono>
#include <cmath>
#include <numeric>

#include "lowdisc/rng.hpp"

namespace lowdisc::opt {

void adam_project_step(PointSet& P, AdamState& st, DiscrepancyKind kind,
                       const AdamConfig& cfg) {
    std::vector<double> g = l2::l2_grad(P, kind, {cfg.tau});
    for (std::size_t s = 0; s < g.size(); ++s)
        if (!std::isfinite(g[s])) throw NonFiniteGradient(s / P.d, s % P.d);

    st.t += 1;
    double bc1 = 1.0 - std::pow(cfg.beta1, double(st.t));
    double bc2 = 1.0 - std::pow(cfg.beta2, double(st.t));
    for (std::size_t s = 0; s < g.size(); ++s) {
        st.m[s] = cfg.beta1 * st.m[s] + (1.0 - cfg.beta1) * g[s];
        st.v[s] = cfg.beta2 * st.v[s] + (1.0 - cfg.beta2) * g[s] * g[s];
        double mh = st.m[s] / bc1;
        double vh = st.v[s] / bc2;
        double x = P.coords[s] - cfg.alpha * mh / (std::sqrt(vh) + cfg.epsilon);
        if (x < 0.0) { x = 0.0; ++st.clamp_events; }
        else if (x > 1.0) { x = 1.0; ++st.clamp_events; }
        P.coords[s] = x;
    }
}

namespace {

double metric_value(const PointSet& P, DiscrepancyKind metric) {
    if (metric == DiscrepancyKind::LInfStar) return linf::linf_star(P);
    return l2::evaluate(P, metric).root;
}

}  // namespace

OptimizeReport optimize(const PointSet& P0, DiscrepancyKind kind, const AdamConfig& cfg,
                        const std::optional<TrackSpec>& track) {
    auto t0 = std::chrono::steady_clock::now();
    PointSet P = P0;
    AdamState st = AdamState::zeros(P.n, P.d);

    OptimizeReport rep;
    rep.trajectory.reserve(cfg.steps + 1);
    rep.trajectory.push_back(l2::evaluate(P, kind).squared);
    rep.final_set = P;
    rep.best_set = P;
    rep.best_iteration = 0;
    if (track) {
        rep.tracked = true;
        rep.best_metric = metric_value(P, track->metric);
        rep.tracked_values.emplace_back(0, rep.best_metric);
    }

    for (std::size_t s = 1; s <= cfg.steps; ++s) {
        try {
            adam_project_step(P, st, kind, cfg);
        } catch (const NonFiniteGradient& e) {
            rep.aborted = true;
            rep.aborted_at = s;
            rep.abort_reason = e.what();
            break;
        }
        rep.trajectory.push_back(l2::evaluate(P, kind).squared);
        if (track && (s % track->every == 0 || s == cfg.steps)) {
            double mv = metric_value(P, track->metric);
            rep.tracked_values.emplace_back(s, mv);
            if (mv < rep.best_metric) {
                rep.best_metric = mv;
                rep.best_set = P;
                rep.best_iteration = s;
            }
        }
    }

    rep.final_set = std::move(P);
    rep.clamp_events = st.clamp_events;
    rep.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    return rep;
}

PointSet random_restart(const PointSet& P, double fraction, std::uint64_t seed) {
    PointSet out = P;
    std::size_t slots = P.n * P.d;
    std::size_t redraw = std::size_t(std::ceil(fraction * double(slots)));
    if (redraw > slots) redraw = slots;
    SplitMix64 rng(seed);
    // partial Fisher-Yates picks `redraw` distinct slots
    std::vector<std::size_t> idx(slots);
    std::iota(idx.begin(), idx.end(), 0);
    for (std::size_t r = 0; r < redraw; ++r) {
        std::size_t j = r + std::size_t(rng.next_below(std::uint64_t(slots - r)));
        std::swap(idx[r], idx[j]);
        out.coords[idx[r]] = rng.next_double();
    }
    return out;
}

RestartReport optimize_with_restarts(const PointSet& P0, DiscrepancyKind kind,
                                     const AdamConfig& cfg, std::size_t restarts,
                                     double fraction, std::uint64_t seed,
                                     const std::optional<TrackSpec>& track) {
    RestartReport out;
    out.best = optimize(P0, kind, cfg, track);
    out.best_run = 0;
    out.finals.push_back(out.best.trajectory.back());

    PointSet cur = out.best.final_set;
    for (std::size_t r = 1; r <= restarts; ++r) {
        PointSet Pr = random_restart(cur, fraction, seed + r);
        OptimizeReport rep = optimize(Pr, kind, cfg, track);
        out.finals.push_back(rep.trajectory.back());
        cur = rep.final_set;
        if (rep.trajectory.back() < out.best.trajectory.back()) {
            out.best = std::move(rep);
            out.best_run = r;
        }
    }
    return out;
}

}  // namespace lowdisc::opt
