#include "lowdisc/l2.hpp"

#include <algorithm>
#include <cmath>

#include "lowdisc/parallel.hpp"
#include "lowdisc/summation.hpp"

namespace lowdisc::l2 {

namespace {

double pow_int(double base, std::size_t e) {
    double r = 1.0;
    while (e--) r *= base;
    return r;
}

// rest[k] = prod_{l != k} f[l], prefix/suffix, division free (factors may be 0)
void rest_products(const double* f, double* pre, double* rest, std::size_t d) {
    double acc = 1.0;
    for (std::size_t k = 0; k < d; ++k) {
        pre[k] = acc;
        acc *= f[k];
    }
    acc = 1.0;
    for (std::size_t k = d; k-- > 0;) {
        rest[k] = pre[k] * acc;
        acc *= f[k];
    }
}

// sum_{i,j} prod_k pf(x_ik, x_jk). Per-row Kahan in fixed j order, then a
// fixed pairwise tree over rows: bitwise identical at any thread count.
template <class PairF>
double pair_double_sum(const PointSet& P, PairF pf) {
    std::vector<double> rows(P.n);
    parallel_for(P.n, [&](std::size_t i) {
        const double* xi = &P.coords[i * P.d];
        KahanSum s;
        for (std::size_t j = 0; j < P.n; ++j) {
            const double* xj = &P.coords[j * P.d];
            double p = 1.0;
            for (std::size_t k = 0; k < P.d; ++k) p *= pf(xi[k], xj[k]);
            s.add(p);
        }
        rows[i] = s.value();
    });
    return pairwise_sum(rows);
}

// single-point sum: sum_i prod_k sf(x_ik)
template <class SingleF>
double single_sum(const PointSet& P, SingleF sf) {
    KahanSum s;
    for (std::size_t i = 0; i < P.n; ++i) {
        double p = 1.0;
        for (std::size_t k = 0; k < P.d; ++k) p *= sf(P.x(i, k));
        s.add(p);
    }
    return s.value();
}

}  // namespace

L2Value l2_star_sq(const PointSet& P) {
    double n = double(P.n);
    double t1 = 1.0 / pow_int(3.0, P.d);
    double t2 = std::ldexp(1.0, 1 - int(P.d)) / n *
                single_sum(P, [](double x) { return 1.0 - x * x; });
    double t3 = pair_double_sum(P, [](double a, double b) {
                    return 1.0 - std::max(a, b);
                }) / (n * n);
    return make_l2_value(t1 - t2 + t3);
}

L2Value l2_periodic_sq(const PointSet& P) {
    double n = double(P.n);
    double t = pair_double_sum(P, [](double a, double b) {
                   double del = a - b;
                   return 0.5 - std::abs(del) + del * del;
               }) / (n * n);
    return make_l2_value(-1.0 / pow_int(3.0, P.d) + t);
}

L2Value l2_extreme_sq(const PointSet& P) {
    double n = double(P.n);
    double t1 = 1.0 / pow_int(12.0, P.d);
    double t2 = 2.0 / n * single_sum(P, [](double x) { return x * (1.0 - x) * 0.5; });
    double t3 = pair_double_sum(P, [](double a, double b) {
                    return std::min(a, b) * (1.0 - std::max(a, b));
                }) / (n * n);
    return make_l2_value(t1 - t2 + t3);
}

L2Value evaluate(const PointSet& P, DiscrepancyKind kind) {
    switch (kind) {
        case DiscrepancyKind::L2Star: return l2_star_sq(P);
        case DiscrepancyKind::L2Periodic: return l2_periodic_sq(P);
        case DiscrepancyKind::L2Extreme: return l2_extreme_sq(P);
        default: throw KindUnsupported("linf-star has no squared L2 form");
    }
}

double l2_loss_smoothed(const PointSet& P, DiscrepancyKind kind, SmoothingParams s) {
    double n = double(P.n);
    double tau = s.tau;
    switch (kind) {
        case DiscrepancyKind::L2Star: {
            double t1 = 1.0 / pow_int(3.0, P.d);
            double t2 = std::ldexp(1.0, 1 - int(P.d)) / n *
                        single_sum(P, [](double x) { return 1.0 - x * x; });
            double t3 = pair_double_sum(P, [tau](double a, double b) {
                            return 1.0 - smax(a, b, tau);
                        }) / (n * n);
            return t1 - t2 + t3;
        }
        case DiscrepancyKind::L2Periodic: {
            double t = pair_double_sum(P, [tau](double a, double b) {
                           double del = a - b;
                           return 0.5 - sabs(del, tau) + del * del;
                       }) / (n * n);
            return -1.0 / pow_int(3.0, P.d) + t;
        }
        case DiscrepancyKind::L2Extreme: {
            double t1 = 1.0 / pow_int(12.0, P.d);
            double t2 = 2.0 / n *
                        single_sum(P, [](double x) { return x * (1.0 - x) * 0.5; });
            double t3 = pair_double_sum(P, [tau](double a, double b) {
                            return smin(a, b, tau) * (1.0 - smax(a, b, tau));
                        }) / (n * n);
            return t1 - t2 + t3;
        }
        default: throw KindUnsupported("linf-star has no smoothed L2 loss");
    }
}

namespace {

// Adds coef * sum_j d1_k(x_i, x_j) * prod_{l != k} f_l(x_i, x_j) to each
// g[i*d+k]. df fills per-coordinate factor and its derivative in the first
// argument. Rows are disjoint, so the parallel loop stays deterministic.
template <class DPairF>
void accumulate_pair_grad(const PointSet& P, double coef, DPairF df,
                          std::vector<double>& g) {
    std::size_t d = P.d;
    parallel_for(P.n, [&](std::size_t i) {
        std::vector<double> f(d), d1(d), pre(d), rest(d);
        const double* xi = &P.coords[i * d];
        double* gi = &g[i * d];
        for (std::size_t j = 0; j < P.n; ++j) {
            const double* xj = &P.coords[j * d];
            for (std::size_t k = 0; k < d; ++k) df(xi[k], xj[k], f[k], d1[k]);
            rest_products(f.data(), pre.data(), rest.data(), d);
            for (std::size_t k = 0; k < d; ++k) gi[k] += coef * d1[k] * rest[k];
        }
    });
}

}  // namespace

std::vector<double> l2_grad(const PointSet& P, DiscrepancyKind kind, SmoothingParams s) {
    double n = double(P.n);
    double tau = s.tau;
    std::size_t d = P.d;
    std::vector<double> g(P.n * d, 0.0);

    switch (kind) {
        case DiscrepancyKind::L2Star: {
            // single term: -(2^{1-d}/n) sum_i prod_k (1 - x^2)
            double c2 = std::ldexp(1.0, 1 - int(d)) / n;
            std::vector<double> f(d), pre(d), rest(d);
            for (std::size_t i = 0; i < P.n; ++i) {
                const double* xi = &P.coords[i * d];
                for (std::size_t k = 0; k < d; ++k) f[k] = 1.0 - xi[k] * xi[k];
                rest_products(f.data(), pre.data(), rest.data(), d);
                for (std::size_t k = 0; k < d; ++k)
                    g[i * d + k] = c2 * 2.0 * xi[k] * rest[k];
            }
            // pair term enters twice per unordered pair; the symmetric factor
            // makes sum over ordered pairs equal 2 * sum_j of the d/da part
            accumulate_pair_grad(
                P, -2.0 / (n * n),
                [tau](double a, double b, double& fv, double& dv) {
                    double del = a - b;
                    double r = std::sqrt(del * del + tau);
                    fv = 1.0 - 0.5 * (a + b + r);
                    dv = 0.5 * (1.0 + del / r);  // d smax / da
                },
                g);
            break;
        }
        case DiscrepancyKind::L2Periodic: {
            accumulate_pair_grad(
                P, 2.0 / (n * n),
                [tau](double a, double b, double& fv, double& dv) {
                    double del = a - b;
                    double r = std::sqrt(del * del + tau);
                    fv = 0.5 - r + del * del;
                    dv = -del / r + 2.0 * del;
                },
                g);
            break;
        }
        case DiscrepancyKind::L2Extreme: {
            double c2 = 2.0 / n;
            std::vector<double> f(d), pre(d), rest(d);
            for (std::size_t i = 0; i < P.n; ++i) {
                const double* xi = &P.coords[i * d];
                for (std::size_t k = 0; k < d; ++k) f[k] = xi[k] * (1.0 - xi[k]) * 0.5;
                rest_products(f.data(), pre.data(), rest.data(), d);
                for (std::size_t k = 0; k < d; ++k)
                    g[i * d + k] = -c2 * (0.5 - xi[k]) * rest[k];
            }
            accumulate_pair_grad(
                P, 2.0 / (n * n),
                [tau](double a, double b, double& fv, double& dv) {
                    double del = a - b;
                    double r = std::sqrt(del * del + tau);
                    double sn = 0.5 * (a + b - r);
                    double sx = 0.5 * (a + b + r);
                    double srat = del / r;
                    fv = sn * (1.0 - sx);
                    dv = 0.5 * (1.0 - srat) * (1.0 - sx) - sn * 0.5 * (1.0 + srat);
                },
                g);
            break;
        }
        default: throw KindUnsupported("linf-star has no smoothed gradient");
    }
    return g;
}

}  // namespace lowdisc::l2
