#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "lowdisc/l2.hpp"
#include "lowdisc/summation.hpp"

// Independent quadrature evaluation of the squared L2 discrepancies,
// integrating (A(box)/n - vol(box))^2 over the box parameter domain.
//
// For d <= 2 the integral is computed exactly: per axis, the parameter
// domain splits into regions on which the point-membership set is constant,
// so the integrand is a polynomial in the box side length and integrates in
// closed form. Regions carry I_j = integral of len^j (j = 0,1,2) plus the
// membership bitmask; axes tensorize because len factorizes.
//
// For d >= 3 only the anchored (star) case is offered, via a midpoint rule.

namespace lowdisc::l2 {

namespace {

struct Region {
    double i0, i1, i2;
    std::uint64_t mask;
};

std::vector<double> axis_column(const PointSet& P, std::size_t k) {
    std::vector<double> col(P.n);
    for (std::size_t i = 0; i < P.n; ++i) col[i] = P.x(i, k);
    return col;
}

std::vector<double> axis_grid(const std::vector<double>& col) {
    std::vector<double> g = col;
    g.push_back(0.0);
    g.push_back(1.0);
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

std::uint64_t mask_le(const std::vector<double>& col, double v) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < col.size(); ++i)
        if (col[i] <= v) m |= std::uint64_t(1) << i;
    return m;
}

std::uint64_t mask_ge(const std::vector<double>& col, double v) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < col.size(); ++i)
        if (col[i] >= v) m |= std::uint64_t(1) << i;
    return m;
}

// anchored boxes [0,q): one region per grid cell, len = q
std::vector<Region> star_regions(const std::vector<double>& col) {
    auto g = axis_grid(col);
    std::vector<Region> out;
    for (std::size_t c = 0; c + 1 < g.size(); ++c) {
        double a = g[c], b = g[c + 1];
        out.push_back({b - a, (b * b - a * a) / 2.0,
                       (b * b * b - a * a * a) / 3.0, mask_le(col, a)});
    }
    return out;
}

// twice-antiderivative of u^j, for rectangle integrals of (q - p + s)^j
double gj(double u, int j) { return std::pow(u, j + 2) / double((j + 1) * (j + 2)); }

double rect_ij(double pa, double pb, double qa, double qb, double s, int j) {
    return gj(qb - pa + s, j) - gj(qa - pa + s, j) - gj(qb - pb + s, j) +
           gj(qa - pb + s, j);
}

// triangle 0 <= p <= q <= w of (q - p)^j
double upper_tj(double w, int j) { return std::pow(w, j + 2) / double((j + 1) * (j + 2)); }

// boxes [p,q] with p <= q, len = q - p
std::vector<Region> extreme_regions(const std::vector<double>& col) {
    auto g = axis_grid(col);
    std::size_t cells = g.size() - 1;
    std::vector<Region> out;
    for (std::size_t c = 0; c < cells; ++c) {
        double w = g[c + 1] - g[c];
        out.push_back({upper_tj(w, 0), upper_tj(w, 1), upper_tj(w, 2), 0});
    }
    for (std::size_t cp = 0; cp < cells; ++cp)
        for (std::size_t cq = cp + 1; cq < cells; ++cq) {
            std::uint64_t m = mask_ge(col, g[cp + 1]) & mask_le(col, g[cq]);
            out.push_back({rect_ij(g[cp], g[cp + 1], g[cq], g[cq + 1], 0.0, 0),
                           rect_ij(g[cp], g[cp + 1], g[cq], g[cq + 1], 0.0, 1),
                           rect_ij(g[cp], g[cp + 1], g[cq], g[cq + 1], 0.0, 2), m});
        }
    return out;
}

// wrapped boxes [p,q) mod 1, len = q - p mod 1; p, q independent in [0,1)
std::vector<Region> periodic_regions(const std::vector<double>& col) {
    auto g = axis_grid(col);
    std::size_t cells = g.size() - 1;
    std::uint64_t all = col.size() == 64 ? ~std::uint64_t(0)
                                         : (std::uint64_t(1) << col.size()) - 1;
    std::vector<Region> out;
    for (std::size_t c = 0; c < cells; ++c) {
        double w = g[c + 1] - g[c];
        out.push_back({upper_tj(w, 0), upper_tj(w, 1), upper_tj(w, 2), 0});
        // q < p wraps: len = q - p + 1 and the box misses only (q,p),
        // which lies inside the open cell and so contains no points
        out.push_back({w * w / 2.0, w * w / 2.0 - w * w * w / 6.0,
                       w * w / 2.0 - w * w * w / 3.0 + w * w * w * w / 12.0, all});
    }
    for (std::size_t cp = 0; cp < cells; ++cp)
        for (std::size_t cq = 0; cq < cells; ++cq) {
            if (cp == cq) continue;
            double s = cp > cq ? 1.0 : 0.0;
            std::uint64_t m =
                cp < cq ? (mask_ge(col, g[cp + 1]) & mask_le(col, g[cq]))
                        : (mask_le(col, g[cq]) | mask_ge(col, g[cp + 1]));
            out.push_back({rect_ij(g[cp], g[cp + 1], g[cq], g[cq + 1], s, 0),
                           rect_ij(g[cp], g[cp + 1], g[cq], g[cq + 1], s, 1),
                           rect_ij(g[cp], g[cp + 1], g[cq], g[cq + 1], s, 2), m});
        }
    return out;
}

double assemble_1d(std::size_t n, const std::vector<Region>& rx) {
    KahanSum s;
    double dn = double(n);
    for (const Region& r : rx) {
        double c = double(std::popcount(r.mask));
        s.add(c * c / (dn * dn) * r.i0 - 2.0 * c / dn * r.i1 + r.i2);
    }
    return s.value();
}

double assemble_2d(std::size_t n, const std::vector<Region>& rx,
                   const std::vector<Region>& ry) {
    KahanSum s;
    double dn = double(n);
    for (const Region& a : rx)
        for (const Region& b : ry) {
            double c = double(std::popcount(a.mask & b.mask));
            s.add(c * c / (dn * dn) * a.i0 * b.i0 - 2.0 * c / dn * a.i1 * b.i1 +
                  a.i2 * b.i2);
        }
    return s.value();
}

double midpoint_star(const PointSet& P, std::size_t m) {
    double cells_d = std::pow(double(m), double(P.d));
    if (!(cells_d * double(P.n) <= 2.5e8))
        throw TooExpensive("midpoint grid exceeds evaluation budget");
    std::uint64_t cells = 1;
    for (std::size_t k = 0; k < P.d; ++k) cells *= m;
    std::vector<double> q(P.d);
    KahanSum s;
    for (std::uint64_t idx = 0; idx < cells; ++idx) {
        std::uint64_t t = idx;
        double vol = 1.0;
        for (std::size_t k = 0; k < P.d; ++k) {
            q[k] = (double(t % m) + 0.5) / double(m);
            vol *= q[k];
            t /= m;
        }
        std::size_t cnt = 0;
        for (std::size_t i = 0; i < P.n; ++i) {
            bool in = true;
            for (std::size_t k = 0; k < P.d; ++k)
                if (!(P.x(i, k) < q[k])) { in = false; break; }
            cnt += in;
        }
        double dev = double(cnt) / double(P.n) - vol;
        s.add(dev * dev);
    }
    return s.value() / double(cells);
}

}  // namespace

double quadrature_oracle(const PointSet& P, DiscrepancyKind kind, std::size_t m) {
    if (kind == DiscrepancyKind::LInfStar)
        throw KindUnsupported("quadrature oracle covers squared L2 kinds only");
    if (P.d > 2) {
        if (kind != DiscrepancyKind::L2Star)
            throw TooExpensive("exact cell integration is implemented for d <= 2");
        return midpoint_star(P, m);
    }
    if (P.n > 64) throw TooExpensive("exact cell integration uses 64-bit membership masks");

    auto regions_for = [&](std::size_t k) {
        auto col = axis_column(P, k);
        switch (kind) {
            case DiscrepancyKind::L2Star: return star_regions(col);
            case DiscrepancyKind::L2Periodic: return periodic_regions(col);
            default: return extreme_regions(col);
        }
    };
    if (P.d == 1) return assemble_1d(P.n, regions_for(0));
    return assemble_2d(P.n, regions_for(0), regions_for(1));
}

}  // namespace lowdisc::l2
