#pragma once

// Reference local regression: explicit design matrix, weighted normal
// equations in long double, Gaussian elimination with full pivoting.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

struct Point {
    double x;
    double y;
};

inline std::size_t span_count(std::size_t n, double span, int degree) {
    std::size_t q = 1;
    while (static_cast<double>(q) < span * static_cast<double>(n) - 1e-9) ++q;
    q = std::max<std::size_t>(q, static_cast<std::size_t>(degree) + 2);
    return std::min(q, n);
}

inline std::vector<long double> solve_full_pivot(std::vector<std::vector<long double>> a,
                                                 std::vector<long double> b) {
    const std::size_t n = b.size();
    std::vector<std::size_t> col(n);
    std::iota(col.begin(), col.end(), 0);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pr = k, pc = k;
        long double best = 0;
        for (std::size_t i = k; i < n; ++i) {
            for (std::size_t j = k; j < n; ++j) {
                if (std::fabs(a[i][j]) > best) {
                    best = std::fabs(a[i][j]);
                    pr = i;
                    pc = j;
                }
            }
        }
        if (best == 0) throw std::runtime_error("oracle: singular system");
        std::swap(a[k], a[pr]);
        std::swap(b[k], b[pr]);
        for (auto& row : a) std::swap(row[k], row[pc]);
        std::swap(col[k], col[pc]);
        for (std::size_t i = k + 1; i < n; ++i) {
            const long double f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    std::vector<long double> z(n);
    for (std::size_t i = n; i-- > 0;) {
        long double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * z[j];
        z[i] = s / a[i][i];
    }
    std::vector<long double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[col[i]] = z[i];
    return x;
}

inline double local_value(std::vector<Point> pts, double span, int degree, double x0) {
    std::stable_sort(pts.begin(), pts.end(), [](auto& a, auto& b) { return a.x < b.x; });
    std::size_t q = span_count(pts.size(), span, degree);

    struct Cand {
        double d;
        double x;
        std::size_t i;
    };
    std::vector<Cand> c;
    for (std::size_t i = 0; i < pts.size(); ++i) c.push_back({std::fabs(pts[i].x - x0), pts[i].x, i});
    std::sort(c.begin(), c.end(), [](const Cand& a, const Cand& b) {
        if (a.d != b.d) return a.d < b.d;
        if (a.x != b.x) return a.x < b.x;
        return a.i < b.i;
    });
    // Smallest radius reaching q points with degree + 1 distinct x strictly inside.
    const std::size_t need = static_cast<std::size_t>(degree) + 1;
    std::size_t keep = q;
    for (std::size_t m = q; m <= c.size(); ++m) {
        std::vector<double> xs;
        for (const auto& cand : c) {
            if (cand.d >= c[m - 1].d) continue;
            if (std::find(xs.begin(), xs.end(), cand.x) == xs.end()) xs.push_back(cand.x);
        }
        if (xs.size() >= need) {
            keep = m;
            break;
        }
    }
    c.resize(keep);
    q = keep;
    const double h = c.back().d;

    std::vector<long double> w(q);
    bool any = false;
    for (std::size_t k = 0; k < q; ++k) {
        if (h == 0) {
            w[k] = 1;
        } else {
            const long double u = c[k].d / h;
            w[k] = u < 1 ? std::pow(1 - u * u * u, 3) : 0;
        }
        any = any || w[k] > 0;
    }
    if (!any) std::fill(w.begin(), w.end(), 1.0L);

    std::vector<double> xs;
    for (std::size_t k = 0; k < q; ++k) {
        bool seen = false;
        for (double x : xs) seen = seen || x == c[k].x;
        if (w[k] > 0 && !seen) xs.push_back(c[k].x);
    }
    const std::size_t p = std::min(static_cast<std::size_t>(degree) + 1, xs.size());
    std::vector<std::vector<long double>> xtwx(p, std::vector<long double>(p, 0));
    std::vector<long double> xtwy(p, 0);
    for (std::size_t k = 0; k < q; ++k) {
        std::vector<long double> row(p);
        for (std::size_t j = 0; j < p; ++j) row[j] = std::pow((long double)(c[k].x - x0), (int)j);
        for (std::size_t i = 0; i < p; ++i) {
            for (std::size_t j = 0; j < p; ++j) xtwx[i][j] += w[k] * row[i] * row[j];
            xtwy[i] += w[k] * row[i] * pts[c[k].i].y;
        }
    }
    return static_cast<double>(solve_full_pivot(xtwx, xtwy)[0]);
}

inline std::vector<double> grid(const std::vector<Point>& pts, std::size_t m) {
    double lo = pts.front().x, hi = pts.front().x;
    for (const auto& p : pts) {
        lo = std::min(lo, p.x);
        hi = std::max(hi, p.x);
    }
    std::vector<double> g(m);
    for (std::size_t i = 0; i < m; ++i) g[i] = lo + (hi - lo) * double(i) / double(m - 1);
    return g;
}

}  // namespace oracle
