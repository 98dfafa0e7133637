#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "harness.hpp"
#include "lowdisc/generators.hpp"
#include "lowdisc/l2.hpp"
#include "lowdisc/linf.hpp"
#include "lowdisc/optimizer.hpp"
#include "lowdisc/parallel.hpp"
#include "lowdisc/rng.hpp"
#include "reference_data.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace lowdisc;

namespace {

// exit codes: 0 ok, 1 reproduce comparison failed, 2 usage/bad input,
// 3 enumeration budget exceeded, 4 numerical abort
constexpr int kOk = 0, kCompareFailed = 1, kUsage = 2, kBudget = 3, kNumerical = 4;

void write_json(const json& j, const fs::path& path) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot write " + path.string());
    f << j.dump(2) << '\n';
}

struct GenerateArgs {
    std::string generator;
    std::size_t n = 0, d = 2;
    unsigned k = 0;
    std::uint64_t seed = 1, skip = 0;
    double alpha = std::sqrt(2.0);
    std::string sobol_table;
    std::string out;
};

int run_generate(const GenerateArgs& a) {
    PointSet P;
    json meta;
    meta["tool"] = "lowdisc";
    meta["command"] = "generate";
    meta["generator"] = a.generator;

    if (a.generator == "fibonacci") {
        P = gen::fibonacci_set(a.n);
        meta["n"] = a.n;
    } else if (a.generator == "kronecker") {
        P = gen::kronecker_lattice(a.n, a.alpha);
        meta["n"] = a.n;
        meta["alpha"] = a.alpha;
    } else if (a.generator == "fibonacci-lattice") {
        P = gen::fibonacci_integration_lattice(a.k);
        meta["k"] = a.k;
        meta["n"] = P.n;
    } else if (a.generator == "random") {
        P = gen::random_set(a.n, a.d, a.seed);
        meta["n"] = a.n;
        meta["d"] = a.d;
        meta["seed"] = a.seed;
        meta["rng"] = kRngIdentity;
    } else if (a.generator == "sobol") {
        gen::SobolParams sp;
        sp.d = a.d;
        sp.skip = a.skip;
        gen::SobolTable loaded;
        if (!a.sobol_table.empty()) {
            loaded = gen::load_sobol_table(a.sobol_table);
            sp.table = &loaded;
        }
        P = gen::sobol_set(a.n, sp);
        meta["n"] = a.n;
        meta["d"] = a.d;
        meta["skip"] = a.skip;
        meta["sobol_table_id"] =
            a.sobol_table.empty() ? gen::sobol_default_table().id : loaded.id;
    } else {
        std::cerr << "unknown generator: " << a.generator << '\n';
        return kUsage;
    }

    save_point_set(P, a.out);
    meta["points"] = P.n;
    meta["dimension"] = P.d;
    meta["output"] = a.out;
    write_json(meta, a.out + ".meta.json");
    return kOk;
}

struct EvaluateArgs {
    std::string file;
    std::vector<std::string> kinds;
    std::uint64_t budget = std::uint64_t(1) << 31;
};

int run_evaluate(const EvaluateArgs& a) {
    PointSet P = load_point_set(a.file);
    std::vector<std::string> kinds = a.kinds;
    if (kinds.empty()) kinds = {"l2-star", "linf-star"};

    json out;
    out["file"] = a.file;
    out["n"] = P.n;
    out["d"] = P.d;
    json results;
    for (const std::string& name : kinds) {
        std::optional<DiscrepancyKind> k = kind_from_name(name);
        if (!k) {
            std::cerr << "unknown kind: " << name << '\n';
            return kUsage;
        }
        if (*k == DiscrepancyKind::LInfStar) {
            json r;
            if (P.d == 2) {
                r["value"] = linf::linf_star_2d(P);
                r["method"] = "sweep-2d";
            } else {
                linf::Options o;
                o.budget = a.budget;
                linf::EnumStats st;
                r["value"] = linf::linf_star_exact(P, o, &st);
                r["method"] = "enumeration";
                r["boxes_total"] = st.boxes_total;
                r["pruned_fraction"] = st.pruned_fraction;
            }
            results[name] = std::move(r);
        } else {
            l2::L2Value v = l2::evaluate(P, *k);
            results[name] = {{"squared", v.squared}, {"root", v.root}};
        }
    }
    out["results"] = std::move(results);
    std::cout << out.dump(2) << '\n';
    return kOk;
}

struct OptimizeArgs {
    std::string file;
    std::string kind = "l2-star";
    std::size_t steps = 200;
    double alpha = -1.0;  // unset = per-n rule; an explicit 0 is a legal no-op rate
    double tau = 1e-15;
    bool track_linf = false;
    std::size_t track_every = 0;  // 0 = per-d rule
    std::size_t restarts = 0;
    double restart_fraction = 0.1;
    std::uint64_t seed = 1;
    std::string out;
    std::string best_out;
    std::string trajectory;
    std::string meta;
};

int run_optimize(const OptimizeArgs& a) {
    PointSet P0 = load_point_set(a.file);
    std::optional<DiscrepancyKind> kind = kind_from_name(a.kind);
    if (!kind || *kind == DiscrepancyKind::LInfStar) {
        std::cerr << "optimize needs an L2 kind (l2-star, l2-periodic, l2-extreme)\n";
        return kUsage;
    }

    opt::AdamConfig cfg;
    cfg.steps = a.steps;
    cfg.tau = a.tau;
    cfg.alpha = a.alpha >= 0.0 ? a.alpha : (P0.n < 100 ? 5e-4 : 1e-4);

    std::optional<opt::TrackSpec> track;
    if (a.track_linf) {
        std::size_t every = a.track_every ? a.track_every : (P0.d == 2 ? 1 : 10);
        track = opt::TrackSpec{DiscrepancyKind::LInfStar, every};
    }

    opt::OptimizeReport rep;
    json restarts_meta;
    if (a.restarts > 0) {
        opt::RestartReport rr = opt::optimize_with_restarts(
            P0, *kind, cfg, a.restarts, a.restart_fraction, a.seed, track);
        rep = std::move(rr.best);
        restarts_meta["count"] = a.restarts;
        restarts_meta["fraction"] = a.restart_fraction;
        restarts_meta["seed"] = a.seed;
        restarts_meta["rng"] = kRngIdentity;
        restarts_meta["best_run"] = rr.best_run;
        restarts_meta["finals_squared"] = rr.finals;
    } else {
        rep = opt::optimize(P0, *kind, cfg, track);
    }

    save_point_set(rep.final_set, a.out);
    if (!a.best_out.empty() && rep.tracked) save_point_set(rep.best_set, a.best_out);

    fs::path traj = a.trajectory.empty() ? fs::path(a.out + ".trajectory.csv")
                                         : fs::path(a.trajectory);
    {
        std::ofstream f(traj);
        if (!f) throw IoError("cannot write " + traj.string());
        f << "iteration,loss_squared,loss_root,tracked_metric_if_any\n";
        std::size_t ti = 0;
        for (std::size_t it = 0; it < rep.trajectory.size(); ++it) {
            double sq = rep.trajectory[it];
            f << it << ',' << harness::format_float(sq) << ','
              << harness::format_float(l2::make_l2_value(sq).root) << ',';
            if (rep.tracked && ti < rep.tracked_values.size() &&
                rep.tracked_values[ti].first == it) {
                f << harness::format_float(rep.tracked_values[ti].second);
                ++ti;
            }
            f << '\n';
        }
    }

    json meta;
    meta["tool"] = "lowdisc";
    meta["command"] = "optimize";
    meta["input"] = a.file;
    meta["output"] = a.out;
    meta["n"] = P0.n;
    meta["d"] = P0.d;
    meta["config"] = {{"kind", kind_name(*kind)}, {"steps", cfg.steps},
                      {"alpha", cfg.alpha},       {"beta1", cfg.beta1},
                      {"beta2", cfg.beta2},       {"epsilon", cfg.epsilon},
                      {"tau", cfg.tau}};
    if (track)
        meta["track"] = {{"metric", kind_name(track->metric)}, {"every", track->every}};
    if (!restarts_meta.is_null()) meta["restarts"] = restarts_meta;
    meta["initial"] = {{"loss_squared", rep.trajectory.front()},
                       {"loss_root", l2::make_l2_value(rep.trajectory.front()).root}};
    meta["final"] = {{"loss_squared", rep.trajectory.back()},
                     {"loss_root", l2::make_l2_value(rep.trajectory.back()).root}};
    if (rep.tracked) {
        meta["best"] = {{"iteration", rep.best_iteration},
                        {"metric", kind_name(DiscrepancyKind::LInfStar)},
                        {"value", rep.best_metric}};
        if (!a.best_out.empty()) meta["best_output"] = a.best_out;
    }
    meta["trajectory_csv"] = traj.string();
    meta["clamp_events"] = rep.clamp_events;
    meta["wall_ms"] = rep.wall_ms;
    meta["threads"] = num_threads();
    meta["aborted"] = rep.aborted;
    if (rep.aborted) {
        meta["aborted_at"] = rep.aborted_at;
        meta["abort_reason"] = rep.abort_reason;
    }
    fs::path mpath = a.meta.empty() ? fs::path(a.out + ".meta.json") : fs::path(a.meta);
    write_json(meta, mpath);

    if (rep.aborted) {
        std::cerr << "numerical abort at iteration " << rep.aborted_at << ": "
                  << rep.abort_reason << " (partial results written)\n";
        return kNumerical;
    }
    return kOk;
}

struct ReproduceArgs {
    std::string id;
    harness::Options opts;
};

int run_reproduce(const ReproduceArgs& a) {
    if (!harness::known_id(a.id)) {
        std::cerr << "unknown id: " << a.id << "\nknown ids:";
        for (const std::string& s : harness::known_ids()) std::cerr << ' ' << s;
        std::cerr << '\n';
        return kUsage;
    }
    harness::TableResult t = harness::reproduce(a.id, a.opts);
    std::size_t documented = 0, skipped = 0;
    for (const harness::Cell& c : t.cells) {
        if (c.status == "documented") ++documented;
        if (c.status == "skipped") ++skipped;
        if (c.status == "info") continue;
        std::printf("%-10s %-8s %-14s %-10s", t.id.c_str(), c.row.c_str(),
                    c.col.c_str(), c.status.c_str());
        if (!std::isnan(c.value)) std::printf(" value=%.6g", c.value);
        if (!std::isnan(c.reference)) std::printf(" ref=%.6g", c.reference);
        if (!c.note.empty()) std::printf("  (%s)", c.note.c_str());
        std::printf("\n");
    }
    std::printf("%s: %zu checked, %zu deviations, %zu documented, %zu skipped\n",
                t.id.c_str(), t.checked, t.failed, documented, skipped);
    std::printf("wrote %s and %s\n", t.wide_csv.string().c_str(),
                t.cells_csv.string().c_str());
    return t.failed ? kCompareFailed : kOk;
}

int run_baseline_dump(bool fast) {
    std::vector<harness::BaselineOut> cells = harness::compute_sobol_baselines(fast);
    for (const harness::BaselineOut& c : cells)
        std::printf("        {\"%s\", \"%s\", \"%s\", %s},\n", c.table.c_str(),
                    c.row.c_str(), c.col.c_str(),
                    harness::format_float(c.value).c_str());
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"low-discrepancy point sets: generate, evaluate, optimize, reproduce"};
    app.require_subcommand(1);
    int rc = kOk;

    GenerateArgs ga;
    CLI::App* cgen = app.add_subcommand("generate", "write a point-set file");
    cgen->add_option("generator", ga.generator,
                     "fibonacci | kronecker | fibonacci-lattice | random | sobol")
        ->required();
    cgen->add_option("--n", ga.n, "number of points");
    cgen->add_option("--d", ga.d, "dimension (random, sobol)");
    cgen->add_option("--k", ga.k, "Fibonacci index (fibonacci-lattice; n = F_k)");
    cgen->add_option("--seed", ga.seed, "seed (random)");
    cgen->add_option("--skip", ga.skip, "leading elements to drop (sobol)");
    cgen->add_option("--alpha", ga.alpha, "slope (kronecker), default sqrt(2)");
    cgen->add_option("--sobol-table", ga.sobol_table,
                     "direction-number file (Joe-Kuo text format)");
    cgen->add_option("-o,--out", ga.out, "output file")->required();
    cgen->callback([&] { rc = run_generate(ga); });

    EvaluateArgs ea;
    CLI::App* ceval = app.add_subcommand("evaluate", "print a JSON discrepancy report");
    ceval->add_option("file", ea.file, "point-set file")->required();
    ceval->add_option("--kind", ea.kinds,
                      "l2-star | l2-periodic | l2-extreme | linf-star (repeatable; "
                      "default l2-star and linf-star)");
    ceval->add_option("--budget", ea.budget, "L_inf enumeration budget (boxes)");
    ceval->callback([&] { rc = run_evaluate(ea); });

    OptimizeArgs oa;
    CLI::App* copt = app.add_subcommand("optimize", "projected ADAM descent on an L2 kind");
    copt->add_option("file", oa.file, "initial point-set file");
    copt->add_option("--init-file", oa.file, "initial point-set file (alias)");
    copt->add_option("--kind", oa.kind, "l2-star | l2-periodic | l2-extreme");
    copt->add_option("--steps", oa.steps, "iterations (default 200)")
        ->check(CLI::PositiveNumber);
    copt->add_option("--alpha", oa.alpha,
                     "learning rate (default: 5e-4 when n < 100, else 1e-4)")
        ->check(CLI::NonNegativeNumber);
    copt->add_option("--tau", oa.tau, "smoothing constant (default 1e-15)");
    copt->add_flag("--track-linf", oa.track_linf,
                   "record L_inf along the descent and keep the best iterate");
    copt->add_option("--track-every", oa.track_every,
                     "tracking interval (default: 1 when d = 2, else 10)");
    copt->add_option("--restarts", oa.restarts, "perturb-and-rerun rounds");
    copt->add_option("--restart-fraction", oa.restart_fraction,
                     "fraction of coordinates redrawn per restart (default 0.1)");
    copt->add_option("--seed", oa.seed, "restart seed");
    copt->add_option("-o,--out", oa.out, "optimized set file")->required();
    copt->add_option("--best-out", oa.best_out, "best-tracked set file");
    copt->add_option("--trajectory", oa.trajectory,
                     "trajectory CSV (default <out>.trajectory.csv)");
    copt->add_option("--meta", oa.meta, "metadata JSON (default <out>.meta.json)");
    copt->callback([&] {
        if (oa.file.empty())
            throw CLI::RequiredError("file (positional) or --init-file");
        rc = run_optimize(oa);
    });

    ReproduceArgs ra;
    CLI::App* crep = app.add_subcommand(
        "reproduce", "recompute a benchmark table/figure and compare");
    crep->add_option("id", ra.id, "table1 | table2 | table3 | table5 | table6 | "
                                  "table7 | table-periodic | table-extreme | "
                                  "fig1 | fig3 | fig5")
        ->required();
    std::string outdir = ".";
    crep->add_option("--outdir", outdir, "output directory (default .)");
    crep->add_flag("--full", ra.opts.full, "full published sweeps (long-running)");
    crep->add_option("--n", ra.opts.fig_n, "trajectory size for fig3 (default 60)");
    crep->add_option("--budget", ra.opts.budget, "L_inf enumeration budget");
    crep->add_option("--steps", ra.opts.steps, "descent iterations (default 200)");
    crep->add_option("--seed", ra.opts.seed, "seed for the random-set study");
    crep->callback([&] {
        ra.opts.outdir = outdir;
        rc = run_reproduce(ra);
    });

    bool dump_fast = false;
    CLI::App* cdump = app.add_subcommand(
        "baseline-dump", "recompute Sobol-seeded baseline cells (maintenance)");
    cdump->add_flag("--fast", dump_fast, "cheap subset only");
    cdump->callback([&] { rc = run_baseline_dump(dump_fast); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? kOk : kUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << e.what() << '\n';
        return kBudget;
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
    }
    return rc;
}
