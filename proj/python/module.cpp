#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <optional>

#include "lowdisc/generators.hpp"
#include "lowdisc/l2.hpp"
#include "lowdisc/linf.hpp"
#include "lowdisc/optimizer.hpp"
#include "lowdisc/point_set.hpp"

namespace py = pybind11;
using namespace lowdisc;

namespace {

using Rows = std::vector<std::vector<double>>;

Rows to_rows(const PointSet& P) {
    Rows rows(P.n, std::vector<double>(P.d));
    for (std::size_t i = 0; i < P.n; ++i)
        for (std::size_t k = 0; k < P.d; ++k) rows[i][k] = P.x(i, k);
    return rows;
}

DiscrepancyKind parse_kind(const std::string& name) {
    std::optional<DiscrepancyKind> k = kind_from_name(name);
    if (!k) throw py::value_error("unknown kind: " + name);
    return *k;
}

}  // namespace

PYBIND11_MODULE(_lowdisc, m) {
    m.doc() = "low-discrepancy point sets: generators, L2/L-inf discrepancy, "
              "projected gradient descent";

    // translators run newest-first: the base goes first so the derived
    // BudgetExceeded translator wins for its own type
    py::register_exception<Error>(m, "LowdiscError");
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded");

    m.def("fibonacci_set",
          [](std::size_t n) { return to_rows(gen::fibonacci_set(n)); }, py::arg("n"));
    m.def("kronecker_lattice",
          [](std::size_t n, double alpha) {
              return to_rows(gen::kronecker_lattice(n, alpha));
          },
          py::arg("n"), py::arg("alpha") = std::sqrt(2.0));
    m.def("fibonacci_integration_lattice",
          [](unsigned k) { return to_rows(gen::fibonacci_integration_lattice(k)); },
          py::arg("k"));
    m.def("random_set",
          [](std::size_t n, std::size_t d, std::uint64_t seed) {
              return to_rows(gen::random_set(n, d, seed));
          },
          py::arg("n"), py::arg("d"), py::arg("seed") = 1);
    m.def("sobol_set",
          [](std::size_t n, std::size_t d, std::uint64_t skip) {
              gen::SobolParams sp;
              sp.d = d;
              sp.skip = skip;
              return to_rows(gen::sobol_set(n, sp));
          },
          py::arg("n"), py::arg("d") = 2, py::arg("skip") = 0);

    m.def("evaluate",
          [](const Rows& rows, const std::string& kind) {
              l2::L2Value v = l2::evaluate(make_point_set(rows), parse_kind(kind));
              py::dict out;
              out["squared"] = v.squared;
              out["root"] = v.root;
              return out;
          },
          py::arg("points"), py::arg("kind") = "l2-star",
          "squared and root L2 discrepancy of the given kind");
    m.def("linf_star",
          [](const Rows& rows, std::uint64_t budget) {
              linf::Options o;
              o.budget = budget;
              return linf::linf_star(make_point_set(rows), o);
          },
          py::arg("points"), py::arg("budget") = std::uint64_t(1) << 31,
          "exact L-infinity star discrepancy (raises BudgetExceeded when the "
          "corner grid is too large)");
    m.def("l2_grad",
          [](const Rows& rows, const std::string& kind, double tau) {
              PointSet P = make_point_set(rows);
              std::vector<double> g = l2::l2_grad(P, parse_kind(kind), {tau});
              Rows out(P.n, std::vector<double>(P.d));
              for (std::size_t i = 0; i < P.n; ++i)
                  for (std::size_t k = 0; k < P.d; ++k) out[i][k] = g[i * P.d + k];
              return out;
          },
          py::arg("points"), py::arg("kind") = "l2-star", py::arg("tau") = 1e-15);
    m.def("quadrature_oracle",
          [](const Rows& rows, const std::string& kind, std::size_t msize) {
              return l2::quadrature_oracle(make_point_set(rows), parse_kind(kind),
                                           msize);
          },
          py::arg("points"), py::arg("kind") = "l2-star", py::arg("m") = 512);

    m.def("optimize",
          [](const Rows& rows, const std::string& kind, std::size_t steps,
             std::optional<double> alpha, double tau, bool track_linf,
             std::size_t restarts, double fraction, std::uint64_t seed) {
              PointSet P0 = make_point_set(rows);
              opt::AdamConfig cfg;
              cfg.steps = steps;
              cfg.tau = tau;
              cfg.alpha = alpha ? *alpha : (P0.n < 100 ? 5e-4 : 1e-4);
              std::optional<opt::TrackSpec> track;
              if (track_linf)
                  track = opt::TrackSpec{DiscrepancyKind::LInfStar,
                                         P0.d == 2 ? std::size_t(1) : std::size_t(10)};
              opt::OptimizeReport rep;
              if (restarts > 0)
                  rep = opt::optimize_with_restarts(P0, parse_kind(kind), cfg,
                                                    restarts, fraction, seed, track)
                            .best;
              else
                  rep = opt::optimize(P0, parse_kind(kind), cfg, track);
              py::dict out;
              out["final"] = to_rows(rep.final_set);
              out["trajectory"] = rep.trajectory;
              out["clamp_events"] = rep.clamp_events;
              out["wall_ms"] = rep.wall_ms;
              out["aborted"] = rep.aborted;
              if (rep.aborted) out["abort_reason"] = rep.abort_reason;
              if (rep.tracked) {
                  out["best"] = to_rows(rep.best_set);
                  out["best_metric"] = rep.best_metric;
                  out["best_iteration"] = rep.best_iteration;
              }
              return out;
          },
          py::arg("points"), py::arg("kind") = "l2-star", py::arg("steps") = 200,
          py::arg("alpha") = py::none(), py::arg("tau") = 1e-15,
          py::arg("track_linf") = false, py::arg("restarts") = 0,
          py::arg("fraction") = 0.1, py::arg("seed") = 1,
          "projected ADAM descent; alpha defaults to 5e-4 for n < 100, else 1e-4");
}
