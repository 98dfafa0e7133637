#pragma once

#include <cmath>
#include <vector>

#include "lowdisc/point_set.hpp"

namespace lowdisc::l2 {

struct SmoothingParams {
    double tau = 1e-15;  // must stay > 0
};

// Every closed form below computes the *squared* discrepancy; reported and
// benchmarked numbers use the root. squared may dip a hair below zero from
// rounding on near-optimal sets, hence the floor in root.
struct L2Value {
    double squared;
    double root;
};

inline L2Value make_l2_value(double squared) {
    return {squared, std::sqrt(squared > 0 ? squared : 0.0)};
}

// Smooth surrogates: smax >= max, smin <= min, sabs >= |x|, each within
// sqrt(tau)/2, and smin + smax == a + b exactly.
inline double smax(double a, double b, double tau) {
    double dd = a - b;
    return 0.5 * (a + b + std::sqrt(dd * dd + tau));
}
inline double smin(double a, double b, double tau) {
    double dd = a - b;
    return 0.5 * (a + b - std::sqrt(dd * dd + tau));
}
inline double sabs(double x, double tau) { return std::sqrt(x * x + tau); }

// Warnock closed form:
//   1/3^d - (2^{1-d}/n) sum_i prod_k (1 - x_ik^2)
//        + (1/n^2) sum_{i,j} prod_k (1 - max(x_ik, x_jk))
L2Value l2_star_sq(const PointSet& P);

// Periodic (torus) form, translation invariant:
//   -1/3^d + (1/n^2) sum_{i,j} prod_k (1/2 - |x_ik - x_jk| + (x_ik - x_jk)^2)
L2Value l2_periodic_sq(const PointSet& P);

// Extreme (unanchored boxes) form:
//   1/12^d - (2/n) sum_i prod_k x_ik(1-x_ik)/2
//         + (1/n^2) sum_{i,j} prod_k min(x_ik,x_jk)(1 - max(x_ik,x_jk))
L2Value l2_extreme_sq(const PointSet& P);

// Dispatch helper; throws KindUnsupported for LInfStar.
L2Value evaluate(const PointSet& P, DiscrepancyKind kind);

// The squared form with max -> smax, min -> smin, |.| -> sabs. Differentiable
// everywhere; within n^2 sqrt(tau) of the exact squared value.
double l2_loss_smoothed(const PointSet& P, DiscrepancyKind kind, SmoothingParams s);

// Analytic gradient of l2_loss_smoothed, n*d row-major. O(d n^2) using
// prefix/suffix products per coordinate (no divisions, so coordinates at 0
// and 1 are safe).
std::vector<double> l2_grad(const PointSet& P, DiscrepancyKind kind, SmoothingParams s);

// Integrates the defining integral directly. 1-D/2-D: exact cell-wise
// integration over the grid induced by the point coordinates, for all three
// kinds. >= 3-D: midpoint rule on an m^d grid (L2Star only), error O(1/m).
// Throws TooExpensive when the cell/grid budget would be exceeded.
double quadrature_oracle(const PointSet& P, DiscrepancyKind kind, std::size_t m = 512);

}  // namespace lowdisc::l2
