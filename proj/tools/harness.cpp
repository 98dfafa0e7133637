#include "harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>

#include "lowdisc/generators.hpp"
#include "lowdisc/l2.hpp"
#include "lowdisc/linf.hpp"
#include "lowdisc/optimizer.hpp"
#include "reference_data.hpp"

namespace lowdisc::harness {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

opt::AdamConfig descent_config(std::size_t n, std::size_t steps) {
    opt::AdamConfig cfg;
    cfg.steps = steps;
    cfg.alpha = n < 100 ? 5e-4 : 1e-4;
    return cfg;
}

double linf_or_nan(const PointSet& P, std::uint64_t budget) {
    if (P.d == 2) return linf::linf_star_2d(P);
    linf::Options o;
    o.budget = budget;
    try {
        return linf::linf_star_exact(P, o);
    } catch (const BudgetExceeded&) {
        return kNaN;
    }
}

// d = 2 star pipeline with per-iteration L_inf tracking
struct StarRun {
    double init_l2, init_linf, final_l2, final_linf, best_linf;
};

StarRun star_run_2d(const PointSet& P0, std::size_t steps) {
    opt::TrackSpec tr{DiscrepancyKind::LInfStar, 1};
    opt::OptimizeReport rep =
        opt::optimize(P0, DiscrepancyKind::L2Star, descent_config(P0.n, steps), tr);
    StarRun r;
    r.init_l2 = l2::make_l2_value(rep.trajectory.front()).root;
    r.init_linf = rep.tracked_values.front().second;
    r.final_l2 = l2::make_l2_value(rep.trajectory.back()).root;
    r.final_linf = rep.tracked_values.back().second;
    r.best_linf = rep.best_metric;
    return r;
}

// d >= 3 star pipeline; L_inf values are NaN past the enumeration budget
struct HdRun {
    double init_linf, final_linf;
};

HdRun star_run_hd(const PointSet& P0, std::size_t steps, std::uint64_t budget) {
    HdRun r;
    r.init_linf = linf_or_nan(P0, budget);
    if (std::isnan(r.init_linf)) {
        r.final_linf = kNaN;  // metric unavailable, the descent is not run
        return r;
    }
    opt::OptimizeReport rep = opt::optimize(P0, DiscrepancyKind::L2Star,
                                            descent_config(P0.n, steps));
    r.final_linf = linf_or_nan(rep.final_set, budget);
    return r;
}

struct KindRun {
    double init_root, final_root;
};

KindRun l2_run(const PointSet& P0, DiscrepancyKind kind, std::size_t steps) {
    opt::OptimizeReport rep = opt::optimize(P0, kind, descent_config(P0.n, steps));
    return {l2::make_l2_value(rep.trajectory.front()).root,
            l2::make_l2_value(rep.trajectory.back()).root};
}

Cell make_checked(std::string row, std::string col, double v,
                  std::optional<double> refv, double rel_tol) {
    Cell c{std::move(row), std::move(col), v, "computed", "ok", kNaN, ""};
    if (!refv) {
        c.status = "info";
        return c;
    }
    c.reference = *refv;
    if (!(std::abs(v - *refv) <= rel_tol * std::abs(*refv))) c.status = "deviation";
    return c;
}

Cell make_info(std::string row, std::string col, double v, std::string note = "") {
    return {std::move(row), std::move(col), v, "computed", "info", kNaN,
            std::move(note)};
}

Cell make_paper(const std::string& table, std::string row, std::string col) {
    std::optional<double> v = ref::paper_value(table, row, col);
    return {std::move(row), std::move(col), v ? *v : kNaN, "paper", "info", kNaN,
            "published constant, not recomputed"};
}

Cell make_skipped(std::string row, std::string col, std::string note) {
    return {std::move(row), std::move(col), kNaN, "computed", "skipped", kNaN,
            std::move(note)};
}

// Sobol'-seeded cell: must match the committed baseline to 1e-12; compared
// to the published value only informationally, since the published run used
// a different direction-number variant.
Cell make_sobol(const std::string& table, std::string row, std::string col, double v) {
    Cell c{row, col, v, "computed", "ok", kNaN, ""};
    std::optional<double> base = ref::baseline_value(table, row, col);
    if (base) {
        if (!(std::abs(v - *base) <= 1e-12)) {
            c.status = "deviation";
            c.note = "committed baseline mismatch (expected " + format_float(*base) + ")";
            return c;
        }
    } else {
        c.status = "deviation";
        c.note = "no committed baseline for this cell";
        return c;
    }
    std::optional<double> pv = ref::paper_value(table, row, col);
    if (pv) {
        c.reference = *pv;
        if (!(std::abs(v - *pv) <= 0.10 * std::abs(*pv))) {
            std::optional<std::string_view> why = ref::deviation_note(table, row, col);
            c.status = why ? "documented" : "deviation";
            c.note = why ? std::string(*why)
                         : "off the published value by more than 10 percent "
                           "with no documented cause";
        }
    }
    return c;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

const Cell* find_cell(const TableResult& t, const std::string& row,
                      const std::string& col) {
    for (const Cell& c : t.cells)
        if (c.row == row && c.col == col) return &c;
    return nullptr;
}

void write_wide(const TableResult& t, const std::filesystem::path& p,
                const std::string& row_header) {
    std::ofstream f(p);
    if (!f) throw IoError("cannot write " + p.string());
    f << row_header;
    for (const std::string& c : t.cols) f << ',' << csv_field(c);
    f << '\n';
    for (const std::string& r : t.rows) {
        f << csv_field(r);
        for (const std::string& c : t.cols) {
            f << ',';
            const Cell* cell = find_cell(t, r, c);
            if (cell && !std::isnan(cell->value)) f << format_float(cell->value);
        }
        f << '\n';
    }
}

void write_cells(const TableResult& t, const std::filesystem::path& p) {
    std::ofstream f(p);
    if (!f) throw IoError("cannot write " + p.string());
    f << "table,row,col,value,source,status,reference,abs_diff,rel_diff,note\n";
    for (const Cell& c : t.cells) {
        f << csv_field(t.id) << ',' << csv_field(c.row) << ',' << csv_field(c.col)
          << ',';
        if (!std::isnan(c.value)) f << format_float(c.value);
        f << ',' << c.source << ',' << c.status << ',';
        if (!std::isnan(c.reference)) f << format_float(c.reference);
        f << ',';
        if (!std::isnan(c.value) && !std::isnan(c.reference)) {
            double ad = std::abs(c.value - c.reference);
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3e", ad);
            f << buf << ',';
            std::snprintf(buf, sizeof buf, "%.3e", ad / std::abs(c.reference));
            f << buf;
        } else {
            f << ',';
        }
        f << ',' << csv_field(c.note) << '\n';
    }
}

TableResult finish(TableResult t, const Options& opts,
                   const std::string& row_header = "row") {
    for (const Cell& c : t.cells) {
        if (c.status == "ok" || c.status == "deviation" || c.status == "documented")
            ++t.checked;
        if (c.status == "deviation") ++t.failed;
    }
    std::filesystem::create_directories(opts.outdir);
    t.wide_csv = opts.outdir / (t.id + ".csv");
    t.cells_csv = opts.outdir / (t.id + ".cells.csv");
    write_wide(t, t.wide_csv, row_header);
    write_cells(t, t.cells_csv);
    return t;
}

const char* kSubsetNote =
    "third-party published set; rerun with `optimize --init-file` on the "
    "published coordinates to fill this cell";

TableResult do_table1(const Options& opts) {
    TableResult t;
    t.id = "table1";
    t.rows = {"fibonacci", "sqrt2-lattice", "sobol"};
    t.cols = {"l2-init", "l2-pgd", "linf-init", "linf-pgd"};
    for (const std::string& r : t.rows) {
        PointSet P0 = r == "fibonacci" ? gen::fibonacci_set(260)
                      : r == "sqrt2-lattice"
                          ? gen::kronecker_lattice(260, std::sqrt(2.0))
                          : gen::sobol_set(260, {});
        StarRun run = star_run_2d(P0, opts.steps);
        if (r == "sobol") {
            t.cells.push_back(make_sobol(t.id, r, "l2-init", run.init_l2));
            t.cells.push_back(make_sobol(t.id, r, "l2-pgd", run.final_l2));
            t.cells.push_back(make_sobol(t.id, r, "linf-init", run.init_linf));
            t.cells.push_back(make_sobol(t.id, r, "linf-pgd", run.final_linf));
        } else {
            t.cells.push_back(make_checked(r, "l2-init", run.init_l2,
                                           ref::paper_value(t.id, r, "l2-init"), 0.005));
            t.cells.push_back(make_checked(r, "l2-pgd", run.final_l2,
                                           ref::paper_value(t.id, r, "l2-pgd"), 0.10));
            t.cells.push_back(make_checked(r, "linf-init", run.init_linf,
                                           ref::paper_value(t.id, r, "linf-init"), 0.005));
            t.cells.push_back(make_checked(r, "linf-pgd", run.final_linf,
                                           ref::paper_value(t.id, r, "linf-pgd"), 0.10));
        }
    }
    return finish(std::move(t), opts);
}

TableResult do_table3(const Options& opts) {
    TableResult t;
    t.id = "table3";
    t.rows = {"20", "100", "180", "260", "420"};
    t.cols = {"pgd-returned", "pgd-best", "mpmc", "nlp"};
    for (const std::string& r : t.rows) {
        std::size_t n = std::stoul(r);
        StarRun run = star_run_2d(gen::fibonacci_set(n), opts.steps);
        Cell ret = make_checked(r, "pgd-returned", run.final_linf,
                                ref::paper_value(t.id, r, "pgd-returned"), 0.10);
        Cell best = make_checked(r, "pgd-best", run.best_linf,
                                 ref::paper_value(t.id, r, "pgd-best"), 0.10);
        if (run.best_linf > run.final_linf) {
            best.status = "deviation";
            best.note = "tracking contract broken: best above returned";
        }
        t.cells.push_back(std::move(ret));
        t.cells.push_back(std::move(best));
        t.cells.push_back(make_paper(t.id, r, "mpmc"));
        t.cells.push_back(make_paper(t.id, r, "nlp"));
    }
    return finish(std::move(t), opts);
}

TableResult do_table_hd(const std::string& id, std::size_t d,
                        const std::vector<std::string>& rows,
                        const std::vector<std::string>& cols, const Options& opts) {
    TableResult t;
    t.id = id;
    t.rows = rows;
    t.cols = cols;
    for (const std::string& r : t.rows) {
        std::size_t n = std::stoul(r);
        gen::SobolParams sp;
        sp.d = d;
        PointSet S = gen::sobol_set(n, sp);
        HdRun run = star_run_hd(S, opts.steps, opts.budget);
        if (std::isnan(run.init_linf)) {
            std::string note = "exact L_inf enumeration over budget (" +
                               std::to_string(linf::estimate_boxes(S)) + " boxes)";
            t.cells.push_back(make_skipped(r, "sobol", note));
            t.cells.push_back(make_skipped(r, "pgd-sobol", note));
        } else {
            t.cells.push_back(make_sobol(t.id, r, "sobol", run.init_linf));
            if (std::isnan(run.final_linf))
                t.cells.push_back(make_skipped(
                    r, "pgd-sobol", "exact L_inf enumeration over budget on the final set"));
            else
                t.cells.push_back(make_sobol(t.id, r, "pgd-sobol", run.final_linf));
        }
        t.cells.push_back(make_skipped(r, "pgd-l2subset", kSubsetNote));
        t.cells.push_back(make_paper(t.id, r, "l2subset"));
    }
    return finish(std::move(t), opts);
}

TableResult do_table_kind(const std::string& id, DiscrepancyKind kind,
                          const Options& opts) {
    TableResult t;
    t.id = id;
    t.rows = {"16", "32", "64", "128", "256"};
    t.cols = {"pgd-sobol", "pgd-fibo", "mpmc", "sobol", "fibo"};
    for (const std::string& r : t.rows) {
        std::size_t n = std::stoul(r);
        KindRun fib = l2_run(gen::fibonacci_set(n), kind, opts.steps);
        KindRun sob = l2_run(gen::sobol_set(n, {}), kind, opts.steps);
        t.cells.push_back(make_sobol(t.id, r, "pgd-sobol", sob.final_root));
        Cell pf = make_checked(r, "pgd-fibo", fib.final_root,
                               ref::paper_value(t.id, r, "pgd-fibo"), 0.10);
        if (fib.final_root > fib.init_root + 1e-12) {
            pf.status = "deviation";
            pf.note = "descent degraded the initial set";
        }
        t.cells.push_back(std::move(pf));
        t.cells.push_back(make_paper(t.id, r, "mpmc"));
        t.cells.push_back(make_sobol(t.id, r, "sobol", sob.init_root));
        t.cells.push_back(make_checked(r, "fibo", fib.init_root,
                                       ref::paper_value(t.id, r, "fibo"), 0.005));
    }
    return finish(std::move(t), opts);
}

std::vector<std::string> sweep_rows(bool full) {
    std::vector<std::string> rows;
    if (full) {
        for (std::size_t n = 20; n <= 1020; n += 20) rows.push_back(std::to_string(n));
    } else {
        rows = {"20", "100", "260", "520"};
    }
    return rows;
}

TableResult do_fig_sweep(const std::string& id, const Options& opts) {
    TableResult t;
    t.id = id;
    t.rows = sweep_rows(opts.full);
    bool linf = id == "fig1";
    t.cols = linf ? std::vector<std::string>{"linf-init", "linf-pgd"}
                  : std::vector<std::string>{"l2-init", "l2-pgd"};
    std::string note =
        opts.full ? "" : "reduced grid; pass --full for the published sweep";
    for (const std::string& r : t.rows) {
        std::size_t n = std::stoul(r);
        StarRun run = star_run_2d(gen::fibonacci_set(n), opts.steps);
        if (linf) {
            t.cells.push_back(make_info(r, "linf-init", run.init_linf, note));
            t.cells.push_back(make_info(r, "linf-pgd", run.final_linf, note));
        } else {
            t.cells.push_back(make_info(r, "l2-init", run.init_l2, note));
            t.cells.push_back(make_info(r, "l2-pgd", run.final_l2, note));
        }
    }
    return finish(std::move(t), opts, "n");
}

TableResult do_fig3(const Options& opts) {
    TableResult t;
    t.id = "fig3";
    t.cols = {"loss_squared", "loss_root", "tracked-linf"};
    std::size_t n = opts.fig_n;
    opt::TrackSpec tr{DiscrepancyKind::LInfStar, 1};
    opt::OptimizeReport rep = opt::optimize(gen::fibonacci_set(n),
                                            DiscrepancyKind::L2Star,
                                            descent_config(n, opts.steps), tr);
    bool finite = true;
    for (double v : rep.trajectory) finite = finite && std::isfinite(v);
    for (std::size_t it = 0; it < rep.trajectory.size(); ++it) {
        std::string r = std::to_string(it);
        t.rows.push_back(r);
        double sq = rep.trajectory[it];
        bool last = it + 1 == rep.trajectory.size();
        if (last) {
            Cell c = make_info(r, "loss_squared", sq,
                               "monotone-envelope check: final <= initial and "
                               "every iterate finite");
            c.reference = rep.trajectory.front();
            c.status = (finite && sq <= rep.trajectory.front()) ? "ok" : "deviation";
            t.cells.push_back(std::move(c));
        } else {
            t.cells.push_back(make_info(r, "loss_squared", sq));
        }
        t.cells.push_back(make_info(r, "loss_root", l2::make_l2_value(sq).root));
        t.cells.push_back(make_info(r, "tracked-linf", rep.tracked_values[it].second));
    }
    return finish(std::move(t), opts, "iteration");
}

TableResult do_table2(const Options& opts) {
    TableResult t;
    t.id = "table2";
    t.cols = {"median", "mean", "min", "max"};
    std::size_t sets = opts.full ? 200 : 20;

    auto stats = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        double mean = 0.0;
        for (double x : v) mean += x;
        mean /= double(v.size());
        double med = v.size() % 2 ? v[v.size() / 2]
                                  : 0.5 * (v[v.size() / 2 - 1] + v[v.size() / 2]);
        return std::array<double, 4>{med, mean, v.front(), v.back()};
    };

    std::vector<double> init_l2, post_l2, post_linf;
    for (std::size_t s = 0; s < sets; ++s) {
        PointSet P0 = gen::random_set(260, 2, opts.seed + s);
        init_l2.push_back(l2::l2_star_sq(P0).root);
        if (opts.full) {
            StarRun run = star_run_2d(P0, opts.steps);
            post_l2.push_back(run.final_l2);
            post_linf.push_back(run.final_linf);
        }
    }

    std::string theory_note =
        "closed-form expectation sqrt((1/n)(2^-d - 3^-d)) = 0.02311 for "
        "n=260, d=2 contradicts the quoted initial-set statistics "
        "(0.007789 mean / 0.004529 min); quoted values kept for reference, "
        "sample follows the expectation";
    std::array<double, 4> is = stats(init_l2);
    t.rows.push_back("l2-init");
    const char* cols4[4] = {"median", "mean", "min", "max"};
    for (int k = 0; k < 4; ++k) {
        Cell c = make_info("l2-init", cols4[k], is[k]);
        if (k == 1) {
            c.reference = ref::kQuotedRandomInitMean;
            c.status = "documented";
            c.note = theory_note;
        } else if (k == 2) {
            c.reference = ref::kQuotedRandomInitMin;
            c.status = "documented";
            c.note = theory_note;
        }
        t.cells.push_back(std::move(c));
    }
    if (opts.full) {
        std::array<double, 4> pl = stats(post_l2);
        std::array<double, 4> pi = stats(post_linf);
        t.rows.push_back("l2-star");
        t.rows.push_back("linf-star");
        for (int k = 0; k < 4; ++k)
            t.cells.push_back(make_checked("l2-star", cols4[k], pl[k],
                                           ref::paper_value(t.id, "l2-star", cols4[k]),
                                           0.10));
        for (int k = 0; k < 4; ++k)
            t.cells.push_back(make_checked("linf-star", cols4[k], pi[k],
                                           ref::paper_value(t.id, "linf-star", cols4[k]),
                                           0.10));
    }
    return finish(std::move(t), opts, "statistic");
}

}  // namespace

const std::vector<std::string>& known_ids() {
    static const std::vector<std::string> ids = {
        "table1", "table2",     "table3",         "table5",        "table6",
        "table7", "table-periodic", "table-extreme", "fig1", "fig3", "fig5"};
    return ids;
}

bool known_id(const std::string& id) {
    const auto& ids = known_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

TableResult reproduce(const std::string& id, const Options& opts) {
    if (id == "table1") return do_table1(opts);
    if (id == "table2") return do_table2(opts);
    if (id == "table3") return do_table3(opts);
    if (id == "table5")
        return do_table_hd(id, 3, {"50", "100", "150", "200", "250", "500"},
                           {"pgd-sobol", "sobol", "pgd-l2subset", "l2subset"}, opts);
    if (id == "table6")
        return do_table_hd(id, 4, {"50", "100", "150", "200", "250", "500"},
                           {"pgd-sobol", "sobol", "pgd-l2subset", "l2subset"}, opts);
    if (id == "table7")
        return do_table_hd(id, 5, {"50", "100", "150", "200", "500"},
                           {"pgd-sobol", "pgd-l2subset", "l2subset", "sobol"}, opts);
    if (id == "table-periodic")
        return do_table_kind(id, DiscrepancyKind::L2Periodic, opts);
    if (id == "table-extreme")
        return do_table_kind(id, DiscrepancyKind::L2Extreme, opts);
    if (id == "fig1" || id == "fig5") return do_fig_sweep(id, opts);
    if (id == "fig3") return do_fig3(opts);
    throw Error("unknown reproduce id: " + id);
}

std::vector<BaselineOut> compute_sobol_baselines(bool fast_subset) {
    std::vector<BaselineOut> out;
    Options opts;  // descent defaults, default budget

    {
        StarRun run = star_run_2d(gen::sobol_set(260, {}), opts.steps);
        out.push_back({"table1", "sobol", "l2-init", run.init_l2});
        out.push_back({"table1", "sobol", "linf-init", run.init_linf});
        out.push_back({"table1", "sobol", "l2-pgd", run.final_l2});
        out.push_back({"table1", "sobol", "linf-pgd", run.final_linf});
    }

    auto hd_cells = [&](const char* table, std::size_t d,
                        const std::vector<std::size_t>& ns, bool descend) {
        for (std::size_t n : ns) {
            gen::SobolParams sp;
            sp.d = d;
            PointSet S = gen::sobol_set(n, sp);
            double init = linf_or_nan(S, opts.budget);
            if (std::isnan(init)) continue;
            out.push_back({table, std::to_string(n), "sobol", init});
            if (!descend) continue;
            opt::OptimizeReport rep = opt::optimize(S, DiscrepancyKind::L2Star,
                                                    descent_config(n, opts.steps));
            double fin = linf_or_nan(rep.final_set, opts.budget);
            if (!std::isnan(fin))
                out.push_back({table, std::to_string(n), "pgd-sobol", fin});
        }
    };

    auto kind_cells = [&](const char* table, DiscrepancyKind kind,
                          const std::vector<std::size_t>& descend_ns) {
        for (std::size_t n : {16, 32, 64, 128, 256}) {
            PointSet S = gen::sobol_set(std::size_t(n), {});
            out.push_back({table, std::to_string(n), "sobol",
                           l2::evaluate(S, kind).root});
            if (std::find(descend_ns.begin(), descend_ns.end(), std::size_t(n)) ==
                descend_ns.end())
                continue;
            KindRun run = l2_run(S, kind, opts.steps);
            out.push_back({table, std::to_string(n), "pgd-sobol", run.final_root});
        }
    };

    if (fast_subset) {
        hd_cells("table5", 3, {50}, true);
        hd_cells("table5", 3, {100}, false);
        kind_cells("table-periodic", DiscrepancyKind::L2Periodic, {16});
        kind_cells("table-extreme", DiscrepancyKind::L2Extreme, {16});
        return out;
    }

    hd_cells("table5", 3, {50, 100, 150, 200, 250, 500}, true);
    hd_cells("table6", 4, {50, 100, 150, 200, 250, 500}, true);
    hd_cells("table7", 5, {50, 100, 150, 200, 500}, true);
    kind_cells("table-periodic", DiscrepancyKind::L2Periodic, {16, 32, 64, 128, 256});
    kind_cells("table-extreme", DiscrepancyKind::L2Extreme, {16, 32, 64, 128, 256});
    return out;
}

std::string format_float(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace lowdisc::harness
