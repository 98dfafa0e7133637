#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "lowdisc/l2.hpp"
#include "lowdisc/linf.hpp"
#include "lowdisc/point_set.hpp"

namespace lowdisc::opt {

struct AdamConfig {
    double alpha = 1e-4;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    std::size_t steps = 200;
    double tau = 1e-15;
};

// Moment state across steps. t counts completed steps; bias correction uses
// t starting at 1, with m = v = 0 before the first step.
struct AdamState {
    std::vector<double> m, v;
    std::size_t t = 0;
    std::uint64_t clamp_events = 0;

    static AdamState zeros(std::size_t n, std::size_t d) {
        return {std::vector<double>(n * d, 0.0), std::vector<double>(n * d, 0.0), 0, 0};
    }
};

// One ADAM step with projection onto [0,1]^{n x d}. Updates P and st in
// place; counts clamped coordinates. Throws NonFiniteGradient on divergence.
void adam_project_step(PointSet& P, AdamState& st, DiscrepancyKind kind,
                       const AdamConfig& cfg);

// Secondary metric recorded along the descent; best_set is the evaluated
// iterate minimizing it (P0 and the final iterate are always evaluated).
struct TrackSpec {
    DiscrepancyKind metric = DiscrepancyKind::LInfStar;
    std::size_t every = 1;
};

struct OptimizeReport {
    std::vector<double> trajectory;  // exact squared loss, entry 0 is the input set
    PointSet final_set;
    bool tracked = false;
    std::vector<std::pair<std::size_t, double>> tracked_values;  // (iteration, metric)
    PointSet best_set;
    double best_metric = std::numeric_limits<double>::quiet_NaN();
    std::size_t best_iteration = 0;
    std::uint64_t clamp_events = 0;
    double wall_ms = 0.0;
    bool aborted = false;         // non-finite gradient; report holds the partial run
    std::size_t aborted_at = 0;
    std::string abort_reason;
};

// Projected ADAM descent on the smoothed loss of `kind` (an L2 kind).
// The trajectory records the exact evaluator, so ADAM oscillation is visible;
// min over trajectory <= trajectory[0] always holds.
OptimizeReport optimize(const PointSet& P0, DiscrepancyKind kind, const AdamConfig& cfg,
                        const std::optional<TrackSpec>& track = std::nullopt);

// Redraws ceil(fraction * n * d) distinct coordinate slots uniformly on [0,1).
PointSet random_restart(const PointSet& P, double fraction, std::uint64_t seed);

// Initial run plus `restarts` perturb-and-rerun rounds, each restarting from
// the previous final set. Returns the report of the best run by final loss
// (finals lists every run's final squared loss, in order).
struct RestartReport {
    OptimizeReport best;
    std::size_t best_run = 0;
    std::vector<double> finals;
};
RestartReport optimize_with_restarts(const PointSet& P0, DiscrepancyKind kind,
                                     const AdamConfig& cfg, std::size_t restarts,
                                     double fraction, std::uint64_t seed,
                                     const std::optional<TrackSpec>& track = std::nullopt);

}  // namespace lowdisc::opt
