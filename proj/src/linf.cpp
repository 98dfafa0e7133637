#include "lowdisc/linf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lowdisc/errors.hpp"

namespace lowdisc::linf {

GridSlice GridSlice::build(const PointSet& P) {
    GridSlice g;
    g.gamma.resize(P.d);
    g.rank.resize(P.d);
    for (std::size_t k = 0; k < P.d; ++k) {
        std::vector<double>& gk = g.gamma[k];
        gk.resize(P.n);
        for (std::size_t i = 0; i < P.n; ++i) gk[i] = P.x(i, k);
        std::sort(gk.begin(), gk.end());
        gk.erase(std::unique(gk.begin(), gk.end()), gk.end());
        if (gk.empty() || gk.back() != 1.0) gk.push_back(1.0);
        g.rank[k].resize(P.n);
        for (std::size_t i = 0; i < P.n; ++i)
            g.rank[k][i] = std::size_t(
                std::lower_bound(gk.begin(), gk.end(), P.x(i, k)) - gk.begin());
    }
    return g;
}

std::uint64_t estimate_boxes(const PointSet& P) {
    GridSlice g = GridSlice::build(P);
    std::uint64_t acc = 1;
    for (std::size_t k = 0; k < P.d; ++k) {
        std::uint64_t s = g.gamma[k].size();
        if (acc > ~std::uint64_t(0) / s) return ~std::uint64_t(0);
        acc *= s;
    }
    return acc;
}

namespace {

// Axis processing order: widest critical grid first, ties by index. The
// volume is multiplied in this order; the naive oracle repeats it so the
// two values compare bit for bit.
std::vector<std::size_t> axis_order(const GridSlice& g) {
    std::vector<std::size_t> perm(g.gamma.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return g.gamma[a].size() > g.gamma[b].size();
    });
    return perm;
}

struct Enumerator {
    const GridSlice& g;
    std::vector<std::size_t> perm;
    std::size_t d, n;
    bool prune;
    double best = 0.0;
    std::uint64_t visited = 0;
    // min_rem[t] = prod over depths >= t of the smallest grid value; a lower
    // bound on the volume factor any completion below depth t still gains
    std::vector<double> min_rem;

    Enumerator(const GridSlice& gs, std::size_t n_, bool prune_)
        : g(gs), perm(axis_order(gs)), d(gs.gamma.size()), n(n_), prune(prune_) {
        min_rem.assign(d + 1, 1.0);
        for (std::size_t t = d; t-- > 0;)
            min_rem[t] = min_rem[t + 1] * g.gamma[perm[t]].front();
    }

    const std::vector<double>& gam(std::size_t t) const { return g.gamma[perm[t]]; }
    std::size_t rnk(std::size_t t, std::size_t i) const { return g.rank[perm[t]][i]; }

    // cand: indices inside the closed prefix box; open[i] marks membership
    // in the open prefix box (strict on every processed axis)
    void descend(std::size_t t, double vp, const std::vector<std::size_t>& cand,
                 const std::vector<char>& open) {
        const std::vector<double>& gt = gam(t);
        if (t + 1 == d) {
            leaf_sweep(t, vp, cand, open);
            return;
        }
        std::vector<std::size_t> sub;
        std::vector<char> subOpen;
        for (std::size_t r = 0; r < gt.size(); ++r) {
            double q = gt[r];
            sub.clear();
            subOpen.clear();
            for (std::size_t c = 0; c < cand.size(); ++c) {
                std::size_t rr = rnk(t, cand[c]);
                if (rr > r) continue;
                sub.push_back(cand[c]);
                subOpen.push_back(open[c] && rr < r);
            }
            double vq = vp * q;
            if (prune) {
                double up = std::max(vq, double(sub.size()) / double(n) -
                                             vq * min_rem[t + 1]);
                if (up <= best) continue;
            }
            descend(t + 1, vq, sub, subOpen);
        }
    }

    // last axis: one pass over its grid with running open/closed counts
    void leaf_sweep(std::size_t t, double vp, const std::vector<std::size_t>& cand,
                    const std::vector<char>& open) {
        const std::vector<double>& gt = gam(t);
        std::vector<std::uint32_t> cntC(gt.size(), 0), cntO(gt.size(), 0);
        for (std::size_t c = 0; c < cand.size(); ++c) {
            std::size_t rr = rnk(t, cand[c]);
            ++cntC[rr];
            if (open[c]) ++cntO[rr];
        }
        double closedCum = 0.0, openCum = 0.0;
        for (std::size_t r = 0; r < gt.size(); ++r) {
            double vq = vp * gt[r];
            closedCum += cntC[r];
            double dev = std::max(vq - openCum / double(n), closedCum / double(n) - vq);
            if (dev > best) best = dev;
            openCum += cntO[r];
        }
        visited += gt.size();
    }
};

}  // namespace

double linf_star_exact(const PointSet& P, const Options& opts, EnumStats* stats) {
    GridSlice g = GridSlice::build(P);
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < P.d; ++k) {
        std::uint64_t s = g.gamma[k].size();
        total = (total > ~std::uint64_t(0) / s) ? ~std::uint64_t(0) : total * s;
    }
    if (total > opts.budget) throw BudgetExceeded(total);

    Enumerator e(g, P.n, opts.prune);
    std::vector<std::size_t> cand(P.n);
    std::iota(cand.begin(), cand.end(), 0);
    std::vector<char> open(P.n, 1);
    e.descend(0, 1.0, cand, open);
    if (stats) {
        stats->boxes_total = total;
        stats->boxes_visited = e.visited;
        stats->pruned_fraction =
            total ? 1.0 - double(e.visited) / double(total) : 0.0;
    }
    return e.best;
}

double linf_star_2d(const PointSet& P) {
    if (P.d != 2) throw WrongDimension("the sweep requires d == 2");
    GridSlice g = GridSlice::build(P);
    const std::vector<double>& gx = g.gamma[0];
    const std::vector<double>& gy = g.gamma[1];
    std::size_t nx = gx.size(), ny = gy.size();

    // points bucketed by x-rank; per column, y-rank histograms of the points
    // inside the closed (x <= qx) and open (x < qx) half-planes
    std::vector<std::vector<std::uint32_t>> at_x(nx);
    for (std::size_t i = 0; i < P.n; ++i)
        at_x[g.rank[0][i]].push_back(std::uint32_t(g.rank[1][i]));
    std::vector<std::uint32_t> cntC(ny, 0), cntO(ny, 0);

    double best = 0.0;
    double n = double(P.n);
    for (std::size_t ix = 0; ix < nx; ++ix) {
        for (std::uint32_t ry : at_x[ix]) ++cntC[ry];
        double qx = gx[ix];
        double closedCum = 0.0, openCum = 0.0;
        for (std::size_t iy = 0; iy < ny; ++iy) {
            double vol = qx * gy[iy];
            closedCum += cntC[iy];
            double dev = std::max(vol - openCum / n, closedCum / n - vol);
            if (dev > best) best = dev;
            openCum += cntO[iy];
        }
        for (std::uint32_t ry : at_x[ix]) ++cntO[ry];
    }
    return best;
}

double linf_star_naive(const PointSet& P) {
    GridSlice g = GridSlice::build(P);
    std::vector<std::size_t> perm = axis_order(g);
    std::vector<std::size_t> idx(P.d, 0);
    double best = 0.0;
    double n = double(P.n);
    for (;;) {
        double vol = 1.0;
        for (std::size_t t = 0; t < P.d; ++t) vol *= g.gamma[perm[t]][idx[t]];
        std::size_t openCnt = 0, closedCnt = 0;
        for (std::size_t i = 0; i < P.n; ++i) {
            bool op = true, cl = true;
            for (std::size_t t = 0; t < P.d; ++t) {
                std::size_t r = g.rank[perm[t]][i];
                if (r >= idx[t]) op = false;
                if (r > idx[t]) { cl = false; break; }
            }
            openCnt += op && cl;
            closedCnt += cl;
        }
        best = std::max(best, std::max(vol - double(openCnt) / n,
                                       double(closedCnt) / n - vol));
        std::size_t t = P.d;
        while (t-- > 0) {
            if (++idx[t] < g.gamma[perm[t]].size()) break;
            idx[t] = 0;
            if (t == 0) return best;
        }
    }
}

double linf_star(const PointSet& P, const Options& opts) {
    if (P.d == 2) return linf_star_2d(P);
    return linf_star_exact(P, opts);
}

}  // namespace lowdisc::linf
